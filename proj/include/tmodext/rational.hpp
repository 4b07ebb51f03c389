#ifndef TMODEXT_RATIONAL_HPP
#define TMODEXT_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tmodext/field.hpp"
#include "tmodext/symbols.hpp"

namespace tmodext {

// One twisted indeterminate x^(k).  Every (symbol, twist) pair is an
// independent generator of the coefficient field.
struct Var {
  uint32_t sym = 0;
  int32_t twist = 0;
  bool operator==(const Var&) const = default;
};

// Order by symbol name, then twist index.  Total and stable across runs.
int var_cmp(const Var& a, const Var& b);

// Power product of twisted indeterminates; factors ascending in var_cmp with
// positive exponents.  The empty product is 1.
class Monomial {
 public:
  using Factor = std::pair<Var, int64_t>;

  Monomial() = default;
  static Monomial var(const Var& v, int64_t exp = 1);

  const std::vector<Factor>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  int64_t degree() const;
  int64_t degree_of(const Var& v) const;
  int64_t degree_in_sym(uint32_t sym) const;  // total over all twists
  bool contains_sym(uint32_t sym) const;

  Monomial twisted(int32_t k) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  static std::optional<Monomial> try_div(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  // Graded lex: total degree first, ties broken on the first variable (in
  // var_cmp order) whose exponents differ, larger exponent winning.
  // Returns <0, 0, >0.
  static int cmp(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial& o) const { return f_ == o.f_; }

 private:
  std::vector<Factor> f_;
};

// Sparse multivariate polynomial over F_q; terms stored leading-first.
class Poly {
 public:
  using Term = std::pair<Monomial, Fq>;

  explicit Poly(const FieldParams& f) : f_(f) {}
  static Poly constant(const Fq& c);
  static Poly from_int(const FieldParams& f, int64_t n);
  static Poly variable(const FieldParams& f, const Var& v);
  static Poly term(const Fq& c, const Monomial& m);

  const FieldParams& field() const { return f_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  Fq constant_value() const;  // requires is_constant
  const Monomial& lead_mono() const;
  const Fq& lead_coeff() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Fq& c) const;
  Poly pow(uint64_t n) const;
  bool operator==(const Poly& o) const { return f_ == o.f_ && t_ == o.t_; }

  Poly twisted(int32_t k) const;
  bool contains_sym(uint32_t sym) const;
  int64_t degree_of(const Var& v) const;  // max exponent, -1 when absent... 0 poly -> -1
  std::vector<Var> vars() const;          // sorted ascending, distinct

  // Build from (possibly unsorted, repeated) terms.
  static Poly collect(const FieldParams& f, std::vector<Term> terms);

 private:
  FieldParams f_;
  std::vector<Term> t_;
};

Poly poly_gcd(const Poly& a, const Poly& b);        // monic
Poly divide_exact(const Poly& a, const Poly& b);    // throws if inexact

// Canonical fraction num/den: den nonzero and monic (leading coefficient 1),
// gcd(num, den) = 1, zero is 0/1.
class RationalCoeff {
 public:
  explicit RationalCoeff(const FieldParams& f)
      : n_(Poly(f)), d_(Poly::from_int(f, 1)) {}
  static RationalCoeff of(Poly p);
  static RationalCoeff from_int(const FieldParams& f, int64_t n);
  static RationalCoeff frac(Poly num, Poly den);  // throws on zero den
  static RationalCoeff variable(const FieldParams& f, const Var& v);
  static RationalCoeff theta(const FieldParams& f);

  const Poly& num() const { return n_; }
  const Poly& den() const { return d_; }
  const FieldParams& field() const { return n_.field(); }
  bool is_zero() const { return n_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return n_.is_constant() && d_.is_constant(); }
  bool contains_sym(uint32_t sym) const {
    return n_.contains_sym(sym) || d_.contains_sym(sym);
  }

  RationalCoeff operator+(const RationalCoeff& o) const;
  RationalCoeff operator-(const RationalCoeff& o) const;
  RationalCoeff operator*(const RationalCoeff& o) const;
  RationalCoeff operator/(const RationalCoeff& o) const;  // throws on zero
  RationalCoeff operator-() const;
  RationalCoeff inv() const;
  bool operator==(const RationalCoeff& o) const { return n_ == o.n_ && d_ == o.d_; }
  bool operator!=(const RationalCoeff& o) const { return !(*this == o); }

  RationalCoeff twisted(int32_t k) const;

  // Rewrite every x^(k) as x^(q^k); requires k >= 0 everywhere and a
  // denominator that stays nonzero.
  RationalCoeff specialized() const;

  struct Valuation {
    bool infinite = false;
    int64_t v = 0;
  };
  // v(x) = deg_theta(den) - deg_theta(num); requires x univariate in theta.
  Valuation valuation_inf() const;

 private:
  RationalCoeff(Poly n, Poly d) : n_(std::move(n)), d_(std::move(d)) {}
  void normalize();
  Poly n_, d_;
};

}  // namespace tmodext

#endif
