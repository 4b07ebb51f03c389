#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tmodext/skew.hpp"

namespace tmodext {

// Dense matrix over the coefficient field. Indices are 0-based.
class KMatrix {
 public:
  KMatrix(const FieldParams& f, size_t rows, size_t cols)
      : f_(f), r_(rows), c_(cols), e_(rows * cols, RationalCoeff(f)) {}

  static KMatrix identity(const FieldParams& f, size_t n);

  const FieldParams& field() const { return f_; }
  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  const RationalCoeff& at(size_t i, size_t j) const { return e_[i * c_ + j]; }
  RationalCoeff& at(size_t i, size_t j) { return e_[i * c_ + j]; }

  bool is_zero() const;
  bool is_identity() const;

  KMatrix operator+(const KMatrix& o) const;
  KMatrix operator-(const KMatrix& o) const;
  KMatrix operator*(const KMatrix& o) const;
  KMatrix scaled(const RationalCoeff& c) const;
  KMatrix transposed() const;
  KMatrix twisted(int32_t k) const;
  bool operator==(const KMatrix& o) const;
  bool operator!=(const KMatrix& o) const { return !(*this == o); }

  // Gauss-Jordan over the exact field; nullopt when singular.
  std::optional<KMatrix> try_inverse() const;

 private:
  FieldParams f_;
  size_t r_, c_;
  std::vector<RationalCoeff> e_;
};

// Dense matrix over K{T} or K{S}.
class SkewMatrix {
 public:
  SkewMatrix(const FieldParams& f, Side side, size_t rows, size_t cols)
      : f_(f),
        side_(side),
        r_(rows),
        c_(cols),
        e_(rows * cols, SkewPoly(f, side)) {}

  static SkewMatrix identity(const FieldParams& f, Side side, size_t n);
  static SkewMatrix from_scalar(const KMatrix& m, Side side);

  const FieldParams& field() const { return f_; }
  Side side() const { return side_; }
  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  const SkewPoly& at(size_t i, size_t j) const { return e_[i * c_ + j]; }
  SkewPoly& at(size_t i, size_t j) { return e_[i * c_ + j]; }

  bool is_zero() const;
  // max entry degree; kNegInfDeg when the matrix is zero
  int64_t max_deg() const;
  // entrywise operator-power-k coefficients
  KMatrix coeff_matrix(int64_t k) const;

  SkewMatrix operator+(const SkewMatrix& o) const;
  SkewMatrix operator-(const SkewMatrix& o) const;
  SkewMatrix operator*(const SkewMatrix& o) const;
  SkewMatrix transposed() const;

  // entrywise adjoint then transpose; reverses multiplication order
  SkewMatrix adjoint() const;

  bool operator==(const SkewMatrix& o) const;
  bool operator!=(const SkewMatrix& o) const { return !(*this == o); }

 private:
  FieldParams f_;
  Side side_;
  size_t r_, c_;
  std::vector<SkewPoly> e_;
};

}  // namespace tmodext
