#pragma once

#include <string>
#include <vector>

#include "tmodext/ext.hpp"

namespace tmodext {

// A pair of Drinfeld modules over K{T}, phi_t = theta + sum a_i T^i of
// degree n and psi_t = theta + sum b_j T^j of degree m, with m < n.
struct DrinfeldPair {
  TModule phi, psi;
  std::vector<RationalCoeff> a;  // a[1..n]; a[0] stays zero
  std::vector<RationalCoeff> b;  // b[1..m]; b[0] stays zero
  int64_t n = 0, m = 0, r = 0;   // r = n - m > 0

  static DrinfeldPair from(const TModule& phi, const TModule& psi);
};

// The plain downward recursion, and the variant with the extra feedback sum
// over b_{n+k-i} that becomes nonempty once m exceeds r.
enum class DRecursion { NoFeedback, Feedback };

// Auxiliary polynomials of the reduced column r+l: d[k] stands for the pair
// (r+l, n+k) with k = 0..l.  No entry has a constant term.
struct DPolynomialTable {
  int64_t l = 0;
  std::vector<SkewPoly> d;
};

// Requires 0 <= l <= m-1.
DPolynomialTable d_polys(const DrinfeldPair& pair, int64_t l, DRecursion rec);

// The module structure matrix on the n extension-class coordinates e_i = T^i,
// assembled directly from the column formulas; method "closed-form".
// Agrees with extension_invertible on the same pair.
ExtResult pi_matrix(const DrinfeldPair& pair);

// 2m when m <= r, 3m when m > r.
int64_t rank_formula(const DrinfeldPair& pair);

// Report on the integrality conditions and their consequence.  With the
// valuation at infinity normalized by v(1/theta) = 1, the conditions ask for
// integral psi coefficients, integral phi coefficients below the top, and
//   v(a_n) < min{v(b_1), q^i v(a_{n-i}), v(b_{m+1-i}) / q^{m-i}}
// over i = 1..m-1.  When they hold, every coefficient of pi beyond the
// theta diagonal has valuation >= 0; pi_integral records that scan.
struct IntegralityReport {
  bool psi_integral = false;
  bool phi_tail_integral = false;
  bool leading_minimal = false;
  bool conditions_hold = false;
  bool pi_integral = false;  // scanned only when the conditions hold
  int64_t coefficients_checked = 0;
  std::string counterexample;  // first offending coefficient, if any
};

// Requires coefficients with defined valuations (rational in theta alone).
IntegralityReport check_integrality(const DrinfeldPair& pair);

}  // namespace tmodext
