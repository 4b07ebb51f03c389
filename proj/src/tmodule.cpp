#include "tmodext/tmodule.hpp"

namespace tmodext {

TModule::TModule(std::string name, SkewMatrix t)
    : name_(std::move(name)), t_(std::move(t)) {
  TMODEXT_CHECK(t_.rows() == t_.cols(), "t-matrix must be square");
}

KMatrix TModule::nilpotent_part() const {
  KMatrix n = constant_term();
  RationalCoeff th = RationalCoeff::theta(field());
  for (size_t i = 0; i < n.rows(); ++i) n.at(i, i) = n.at(i, i) - th;
  return n;
}

std::optional<KMatrix> TModule::leading_inverse() const {
  if (deg() < 0) return std::nullopt;
  return leading().try_inverse();
}

void TModule::validate() const {
  if (dim() == 0) throw HypothesisError(name_ + ": empty t-matrix");
  if (deg() < 1)
    throw HypothesisError(name_ + ": t-matrix must involve the operator");
  KMatrix n = nilpotent_part();
  KMatrix p = n;
  for (size_t k = 1; k < dim() && !p.is_zero(); ++k) p = p * n;
  if (!p.is_zero())
    throw HypothesisError(
        name_ + ": constant term is not theta*I plus a nilpotent matrix");
}

TModule TModule::adjoint() const {
  return TModule(name_ + "*", t_.adjoint());
}

SkewMatrix TModule::at(const std::vector<Fq>& a) const {
  SkewMatrix acc(field(), side(), dim(), dim());
  for (size_t k = a.size(); k-- > 0;) {
    acc = acc * t_;
    if (!a[k].is_zero()) {
      RationalCoeff c = RationalCoeff::of(Poly::constant(a[k]));
      for (size_t i = 0; i < dim(); ++i)
        acc.at(i, i) = acc.at(i, i) + SkewPoly::constant(c, side());
    }
  }
  return acc;
}

SkewMatrix TModule::t_power(uint64_t k) const {
  SkewMatrix acc = SkewMatrix::identity(field(), side(), dim());
  for (uint64_t i = 0; i < k; ++i) acc = acc * t_;
  return acc;
}

bool is_morphism(const SkewMatrix& f, const TModule& source,
                 const TModule& target) {
  TMODEXT_CHECK(f.cols() == source.dim() && f.rows() == target.dim(),
                "morphism shape mismatch");
  return f * source.t() == target.t() * f;
}

TModule direct_sum(const TModule& a, const TModule& b) {
  TMODEXT_CHECK(a.field() == b.field() && a.side() == b.side(),
                "direct sum over mismatched rings");
  size_t n = a.dim() + b.dim();
  SkewMatrix t(a.field(), a.side(), n, n);
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) t.at(i, j) = a.t().at(i, j);
  for (size_t i = 0; i < b.dim(); ++i)
    for (size_t j = 0; j < b.dim(); ++j)
      t.at(a.dim() + i, a.dim() + j) = b.t().at(i, j);
  return TModule(a.name() + "+" + b.name(), std::move(t));
}

TModule assemble_extension(const TModule& phi, const TModule& psi,
                           const SkewMatrix& delta_t, const std::string& name) {
  TMODEXT_CHECK(phi.field() == psi.field() && phi.side() == psi.side(),
                "extension over mismatched rings");
  TMODEXT_CHECK(delta_t.rows() == psi.dim() && delta_t.cols() == phi.dim(),
                "extension block shape mismatch");
  size_t d = phi.dim(), n = d + psi.dim();
  SkewMatrix t(phi.field(), phi.side(), n, n);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) t.at(i, j) = phi.t().at(i, j);
  for (size_t i = 0; i < psi.dim(); ++i) {
    for (size_t j = 0; j < psi.dim(); ++j)
      t.at(d + i, d + j) = psi.t().at(i, j);
    for (size_t j = 0; j < d; ++j) t.at(d + i, j) = delta_t.at(i, j);
  }
  return TModule(name, std::move(t));
}

bool is_lower_triangular(const SkewMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = i + 1; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return false;
    const SkewPoly& d = m.at(i, i);
    if (d.deg() < 1 || d.coeff(d.deg()).is_zero()) return false;
  }
  return true;
}

}  // namespace tmodext
