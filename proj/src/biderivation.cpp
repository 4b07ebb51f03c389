#include "tmodext/biderivation.hpp"

namespace tmodext {

SkewMatrix inner_biderivation(const SkewMatrix& u, const TModule& phi,
                              const TModule& psi) {
  TMODEXT_CHECK(u.rows() == psi.dim() && u.cols() == phi.dim(),
                "inner biderivation shape mismatch");
  return u * phi.t() - psi.t() * u;
}

SkewMatrix biderivation_at(const SkewMatrix& delta_t, const TModule& phi,
                           const TModule& psi, const std::vector<Fq>& a) {
  TMODEXT_CHECK(delta_t.rows() == psi.dim() && delta_t.cols() == phi.dim(),
                "biderivation shape mismatch");
  const FieldParams& f = phi.field();
  Side side = phi.side();
  SkewMatrix acc(f, side, psi.dim(), phi.dim());
  SkewMatrix dk = acc;                                      // delta(t^0) = 0
  SkewMatrix phip = SkewMatrix::identity(f, side, phi.dim());
  for (size_t k = 0; k < a.size(); ++k) {
    if (k > 0) {
      dk = psi.t() * dk + delta_t * phip;
      phip = phip * phi.t();
    }
    if (!a[k].is_zero()) acc = acc + scaled_matrix(dk, a[k]);
  }
  return acc;
}

SkewMatrix t_action(const SkewMatrix& delta_t, const TModule& psi) {
  return psi.t() * delta_t;
}

bool has_no_constant_term(const SkewMatrix& delta_t) {
  return delta_t.coeff_matrix(0).is_zero();
}

SkewMatrix scaled_matrix(const SkewMatrix& m, const Fq& c) {
  RationalCoeff s = RationalCoeff::of(Poly::constant(c));
  SkewMatrix r(m.field(), m.side(), m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      r.at(i, j) = m.at(i, j).scaled_left(s);
  return r;
}

}  // namespace tmodext
