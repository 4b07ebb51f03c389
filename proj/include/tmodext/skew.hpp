#pragma once

#include <cstdint>
#include <vector>

#include "tmodext/rational.hpp"

namespace tmodext {

// Twisted polynomial rings K{T} and K{S} over the coefficient field:
// T u = u^(1) T and S u = u^(-1) S.
enum class Side : uint8_t { Tau, Sigma };

inline int twist_sign(Side s) { return s == Side::Tau ? 1 : -1; }

inline constexpr int64_t kNegInfDeg = INT64_MIN;

class SkewPoly {
 public:
  SkewPoly(const FieldParams& f, Side side) : f_(f), side_(side) {}

  static SkewPoly zero(const FieldParams& f, Side side) { return {f, side}; }
  static SkewPoly one(const FieldParams& f, Side side);
  static SkewPoly constant(RationalCoeff c, Side side);
  // c times the k-th power of the twist operator
  static SkewPoly monomial(RationalCoeff c, int64_t k, Side side);

  const FieldParams& field() const { return f_; }
  Side side() const { return side_; }
  bool is_zero() const { return c_.empty(); }
  int64_t deg() const {
    return c_.empty() ? kNegInfDeg : static_cast<int64_t>(c_.size()) - 1;
  }
  RationalCoeff coeff(int64_t k) const;
  void set_coeff(int64_t k, RationalCoeff c);
  bool is_constant() const { return c_.size() <= 1; }
  RationalCoeff constant_coeff() const { return coeff(0); }

  SkewPoly operator+(const SkewPoly& o) const;
  SkewPoly operator-() const;
  SkewPoly operator-(const SkewPoly& o) const;
  SkewPoly operator*(const SkewPoly& o) const;
  SkewPoly scaled_left(const RationalCoeff& c) const;

  bool operator==(const SkewPoly& o) const;
  bool operator!=(const SkewPoly& o) const { return !(*this == o); }

  // coefficientwise twist by k
  SkewPoly twisted(int32_t k) const;

  // Sum a_i T^i  ->  sum a_i^(-i) S^i  (and back with the inverse twists).
  // An anti-automorphism: adjoint(f*g) == adjoint(g)*adjoint(f).
  SkewPoly adjoint() const;

  // Evaluate as an additive operator: f(x) = sum a_i x^(s*i).
  RationalCoeff apply(const RationalCoeff& x) const;

  bool entries_contain_sym(uint32_t sym) const;

 private:
  void trim();

  FieldParams f_;
  Side side_;
  std::vector<RationalCoeff> c_;  // c_[k] multiplies the k-th operator power
};

}  // namespace tmodext
