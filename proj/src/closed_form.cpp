#include "tmodext/closed_form.hpp"

#include <algorithm>
#include <sstream>

namespace tmodext {

namespace {

RationalCoeff gen_c(const FieldParams& f) {
  return RationalCoeff::variable(f, Var{Symbols::gen(), 0});
}

int64_t ipow(int64_t base, int64_t exp) {
  int64_t out = 1;
  for (int64_t i = 0; i < exp; ++i) out *= base;
  return out;
}

// The d-polynomials as scalars linear in the generator: u[k] is the value of
// d_{r+l, n+k} at the generator, so a twist of u[k] stands for the matching
// operator shift of the polynomial.
std::vector<RationalCoeff> d_scalars(const DrinfeldPair& p, int64_t l,
                                     DRecursion rec) {
  const FieldParams& f = p.phi.field();
  const RationalCoeff c = gen_c(f);
  std::vector<RationalCoeff> u(static_cast<size_t>(l) + 1, RationalCoeff(f));
  for (int64_t k = l; k >= 0; --k) {
    RationalCoeff num =
        p.b[p.m - l + k] * c.twisted(static_cast<int32_t>(p.m - l + k));
    for (int64_t i = k + 1; i <= l; ++i)
      num = num - p.a[p.n + k - i].twisted(static_cast<int32_t>(i)) * u[i];
    if (rec == DRecursion::Feedback)
      for (int64_t i = k + p.r; i <= l; ++i)
        num = num +
              p.b[p.n + k - i] * u[i].twisted(static_cast<int32_t>(p.n + k - i));
    u[k] = num * p.a[p.n].twisted(static_cast<int32_t>(k)).inv();
  }
  return u;
}

// Coordinate rho of the column r+l, as a scalar linear in the generator.
// Columns below r take l < 0 and an empty u, leaving only the first two
// terms: theta on the diagonal and the psi tail underneath it.
RationalCoeff column_entry(const DrinfeldPair& p, int64_t col, int64_t l,
                           const std::vector<RationalCoeff>& u, int64_t rho) {
  const FieldParams& f = p.phi.field();
  const RationalCoeff c = gen_c(f);
  const RationalCoeff th = RationalCoeff::theta(f);
  RationalCoeff s(f);
  if (rho == col) s = s + th * c;
  const int64_t tail = rho - col;
  if (1 <= tail && tail <= p.m)
    s = s + p.b[tail] * c.twisted(static_cast<int32_t>(tail));
  if (1 <= rho && rho <= l)
    s = s + (th - th.twisted(static_cast<int32_t>(rho))) * u[rho];
  for (int64_t k = 0; k <= std::min(l, rho - 1); ++k)
    s = s - p.a[rho - k].twisted(static_cast<int32_t>(k)) * u[k];
  for (int64_t k = std::max<int64_t>(0, rho - p.m); k <= std::min(l, rho - 1);
       ++k)
    s = s + p.b[rho - k] * u[k].twisted(static_cast<int32_t>(rho - k));
  return s;
}

bool nonneg(const RationalCoeff::Valuation& v) { return v.infinite || v.v >= 0; }

}  // namespace

DrinfeldPair DrinfeldPair::from(const TModule& phi, const TModule& psi) {
  if (phi.dim() != 1 || psi.dim() != 1)
    throw HypothesisError("closed form requires Drinfeld modules (dimension 1)");
  if (phi.side() != Side::Tau || psi.side() != Side::Tau)
    throw HypothesisError("closed form requires modules over K{T}");
  if (!(phi.field() == psi.field()))
    throw HypothesisError("closed form requires a common coefficient field");
  phi.validate();
  psi.validate();
  DrinfeldPair p{phi, psi, {}, {}, phi.deg(), psi.deg(), 0};
  if (p.n <= p.m)
    throw HypothesisError("closed form requires deg(phi_t) > deg(psi_t)");
  p.r = p.n - p.m;
  const FieldParams& f = phi.field();
  p.a.assign(static_cast<size_t>(p.n) + 1, RationalCoeff(f));
  p.b.assign(static_cast<size_t>(p.m) + 1, RationalCoeff(f));
  for (int64_t i = 1; i <= p.n; ++i) p.a[i] = phi.t().at(0, 0).coeff(i);
  for (int64_t j = 1; j <= p.m; ++j) p.b[j] = psi.t().at(0, 0).coeff(j);
  return p;
}

DPolynomialTable d_polys(const DrinfeldPair& pair, int64_t l, DRecursion rec) {
  if (l < 0 || l > pair.m - 1)
    throw HypothesisError("d-polynomial index l must lie in 0..m-1");
  std::vector<RationalCoeff> u = d_scalars(pair, l, rec);
  DPolynomialTable table{l, {}};
  table.d.reserve(u.size());
  for (const RationalCoeff& uk : u) {
    SkewPoly d = substitute_generator(uk, Side::Tau);
    TMODEXT_CHECK(d.constant_coeff().is_zero(),
                  "d-polynomial with a constant term");
    table.d.push_back(std::move(d));
  }
  return table;
}

ExtResult pi_matrix(const DrinfeldPair& pair) {
  const FieldParams& f = pair.phi.field();
  const size_t n = static_cast<size_t>(pair.n);
  ExtResult res{pair.phi,
                pair.psi,
                "closed-form",
                false,
                DegreeBounds{{pair.n}},
                {},
                SkewMatrix(f, Side::Tau, n, n),
                {}};
  res.ordering = generator_ordering(1, res.bounds);
  const DRecursion rec =
      pair.m > pair.r ? DRecursion::Feedback : DRecursion::NoFeedback;
  for (int64_t col = 0; col < pair.n; ++col) {
    const int64_t l = col - pair.r;
    std::vector<RationalCoeff> u;
    if (l >= 0) u = d_scalars(pair, l, rec);
    for (int64_t rho = 0; rho < pair.n; ++rho)
      res.pi.at(rho, col) =
          substitute_generator(column_entry(pair, col, l, u, rho), Side::Tau);
  }
  TMODEXT_CHECK(res.pi.coeff_matrix(0) ==
                    KMatrix::identity(f, n).scaled(RationalCoeff::theta(f)),
                "closed-form constant term is not theta*I");
  return res;
}

int64_t rank_formula(const DrinfeldPair& pair) {
  return pair.m <= pair.r ? 2 * pair.m : 3 * pair.m;
}

IntegralityReport check_integrality(const DrinfeldPair& pair) {
  IntegralityReport rep;
  rep.psi_integral = true;
  for (int64_t j = 1; j <= pair.m; ++j)
    rep.psi_integral = rep.psi_integral && nonneg(pair.b[j].valuation_inf());
  rep.phi_tail_integral = true;
  for (int64_t i = 1; i <= pair.n - 1; ++i)
    rep.phi_tail_integral =
        rep.phi_tail_integral && nonneg(pair.a[i].valuation_inf());
  const int64_t van = pair.a[pair.n].valuation_inf().v;
  const int64_t q = static_cast<int64_t>(pair.phi.field().q());
  bool minimal = true;
  {
    const auto vb1 = pair.b[1].valuation_inf();
    if (!vb1.infinite) minimal = minimal && van < vb1.v;
  }
  for (int64_t i = 1; i <= pair.m - 1; ++i) {
    const auto vai = pair.a[pair.n - i].valuation_inf();
    if (!vai.infinite) minimal = minimal && van < ipow(q, i) * vai.v;
    const auto vbi = pair.b[pair.m + 1 - i].valuation_inf();
    if (!vbi.infinite) minimal = minimal && van * ipow(q, pair.m - i) < vbi.v;
  }
  rep.leading_minimal = minimal;
  rep.conditions_hold =
      rep.psi_integral && rep.phi_tail_integral && rep.leading_minimal;
  if (!rep.conditions_hold) return rep;

  const SkewMatrix& pi = pi_matrix(pair).pi;
  rep.pi_integral = true;
  for (size_t i = 0; i < pi.rows(); ++i)
    for (size_t j = 0; j < pi.cols(); ++j) {
      const SkewPoly& e = pi.at(i, j);
      for (int64_t k = 1; k <= e.deg(); ++k) {
        const RationalCoeff coeff = e.coeff(k);
        if (coeff.is_zero()) continue;
        ++rep.coefficients_checked;
        const auto v = coeff.valuation_inf();
        if (!nonneg(v) && rep.pi_integral) {
          rep.pi_integral = false;
          std::ostringstream os;
          os << "pi[" << i + 1 << "," << j + 1 << "] coefficient of T^" << k
             << " has valuation " << v.v;
          rep.counterexample = os.str();
        }
      }
    }
  return rep;
}

}  // namespace tmodext
