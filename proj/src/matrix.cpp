#include "tmodext/matrix.hpp"

namespace tmodext {

KMatrix KMatrix::identity(const FieldParams& f, size_t n) {
  KMatrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = RationalCoeff::from_int(f, 1);
  return m;
}

bool KMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool KMatrix::is_identity() const {
  if (r_ != c_) return false;
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

KMatrix KMatrix::operator+(const KMatrix& o) const {
  TMODEXT_CHECK(r_ == o.r_ && c_ == o.c_, "matrix shape mismatch");
  KMatrix m(f_, r_, c_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

KMatrix KMatrix::operator-(const KMatrix& o) const {
  TMODEXT_CHECK(r_ == o.r_ && c_ == o.c_, "matrix shape mismatch");
  KMatrix m(f_, r_, c_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
  return m;
}

KMatrix KMatrix::operator*(const KMatrix& o) const {
  TMODEXT_CHECK(c_ == o.r_, "matrix shape mismatch");
  KMatrix m(f_, r_, o.c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t k = 0; k < c_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < o.c_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
      }
    }
  return m;
}

KMatrix KMatrix::scaled(const RationalCoeff& c) const {
  KMatrix m(f_, r_, c_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * c;
  return m;
}

KMatrix KMatrix::transposed() const {
  KMatrix m(f_, c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

KMatrix KMatrix::twisted(int32_t k) const {
  KMatrix m(f_, r_, c_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i].twisted(k);
  return m;
}

bool KMatrix::operator==(const KMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_ || !(f_ == o.f_)) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

std::optional<KMatrix> KMatrix::try_inverse() const {
  TMODEXT_CHECK(r_ == c_, "inverse of a non-square matrix");
  KMatrix a = *this;
  KMatrix inv = identity(f_, r_);
  for (size_t col = 0; col < c_; ++col) {
    size_t piv = col;
    while (piv < r_ && a.at(piv, col).is_zero()) ++piv;
    if (piv == r_) return std::nullopt;
    if (piv != col) {
      for (size_t j = 0; j < c_; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    RationalCoeff s = a.at(col, col).inv();
    for (size_t j = 0; j < c_; ++j) {
      a.at(col, j) = a.at(col, j) * s;
      inv.at(col, j) = inv.at(col, j) * s;
    }
    for (size_t i = 0; i < r_; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      RationalCoeff m = a.at(i, col);
      for (size_t j = 0; j < c_; ++j) {
        a.at(i, j) = a.at(i, j) - m * a.at(col, j);
        inv.at(i, j) = inv.at(i, j) - m * inv.at(col, j);
      }
    }
  }
  return inv;
}

SkewMatrix SkewMatrix::identity(const FieldParams& f, Side side, size_t n) {
  SkewMatrix m(f, side, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = SkewPoly::one(f, side);
  return m;
}

SkewMatrix SkewMatrix::from_scalar(const KMatrix& s, Side side) {
  SkewMatrix m(s.field(), side, s.rows(), s.cols());
  for (size_t i = 0; i < s.rows(); ++i)
    for (size_t j = 0; j < s.cols(); ++j)
      m.at(i, j) = SkewPoly::constant(s.at(i, j), side);
  return m;
}

bool SkewMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

int64_t SkewMatrix::max_deg() const {
  int64_t d = kNegInfDeg;
  for (const auto& x : e_) d = std::max(d, x.deg());
  return d;
}

KMatrix SkewMatrix::coeff_matrix(int64_t k) const {
  KMatrix m(f_, r_, c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) m.at(i, j) = at(i, j).coeff(k);
  return m;
}

SkewMatrix SkewMatrix::operator+(const SkewMatrix& o) const {
  TMODEXT_CHECK(r_ == o.r_ && c_ == o.c_ && side_ == o.side_,
                "matrix shape mismatch");
  SkewMatrix m(f_, side_, r_, c_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

SkewMatrix SkewMatrix::operator-(const SkewMatrix& o) const {
  TMODEXT_CHECK(r_ == o.r_ && c_ == o.c_ && side_ == o.side_,
                "matrix shape mismatch");
  SkewMatrix m(f_, side_, r_, c_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
  return m;
}

SkewMatrix SkewMatrix::operator*(const SkewMatrix& o) const {
  TMODEXT_CHECK(c_ == o.r_ && side_ == o.side_, "matrix shape mismatch");
  SkewMatrix m(f_, side_, r_, o.c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t k = 0; k < c_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < o.c_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
      }
    }
  return m;
}

SkewMatrix SkewMatrix::transposed() const {
  SkewMatrix m(f_, side_, c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

SkewMatrix SkewMatrix::adjoint() const {
  Side other = side_ == Side::Tau ? Side::Sigma : Side::Tau;
  SkewMatrix m(f_, other, c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j).adjoint();
  return m;
}

bool SkewMatrix::operator==(const SkewMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_ || side_ != o.side_ || !(f_ == o.f_))
    return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

}  // namespace tmodext
