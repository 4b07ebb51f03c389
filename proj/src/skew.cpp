#include "tmodext/skew.hpp"

namespace tmodext {

SkewPoly SkewPoly::one(const FieldParams& f, Side side) {
  return constant(RationalCoeff::from_int(f, 1), side);
}

SkewPoly SkewPoly::constant(RationalCoeff c, Side side) {
  return monomial(std::move(c), 0, side);
}

SkewPoly SkewPoly::monomial(RationalCoeff c, int64_t k, Side side) {
  TMODEXT_CHECK(k >= 0, "negative operator power");
  SkewPoly p(c.field(), side);
  if (!c.is_zero()) {
    p.c_.assign(static_cast<size_t>(k) + 1, RationalCoeff(c.field()));
    p.c_.back() = std::move(c);
  }
  return p;
}

RationalCoeff SkewPoly::coeff(int64_t k) const {
  if (k < 0 || k >= static_cast<int64_t>(c_.size())) return RationalCoeff(f_);
  return c_[static_cast<size_t>(k)];
}

void SkewPoly::set_coeff(int64_t k, RationalCoeff c) {
  TMODEXT_CHECK(k >= 0, "negative operator power");
  if (static_cast<size_t>(k) >= c_.size()) {
    if (c.is_zero()) return;
    c_.resize(static_cast<size_t>(k) + 1, RationalCoeff(f_));
  }
  c_[static_cast<size_t>(k)] = std::move(c);
  trim();
}

void SkewPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
  TMODEXT_CHECK(f_ == o.f_ && side_ == o.side_, "skew ring mismatch");
  SkewPoly r(f_, side_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), RationalCoeff(f_));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
  r.trim();
  return r;
}

SkewPoly SkewPoly::operator-() const {
  SkewPoly r(f_, side_);
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const { return *this + (-o); }

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
  TMODEXT_CHECK(f_ == o.f_ && side_ == o.side_, "skew ring mismatch");
  SkewPoly r(f_, side_);
  if (is_zero() || o.is_zero()) return r;
  int s = twist_sign(side_);
  r.c_.assign(c_.size() + o.c_.size() - 1, RationalCoeff(f_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] =
          r.c_[i + j] + c_[i] * o.c_[j].twisted(s * static_cast<int32_t>(i));
    }
  }
  r.trim();
  return r;
}

SkewPoly SkewPoly::scaled_left(const RationalCoeff& c) const {
  SkewPoly r(f_, side_);
  if (c.is_zero()) return r;
  r.c_.reserve(c_.size());
  for (const auto& a : c_) r.c_.push_back(c * a);
  r.trim();
  return r;
}

bool SkewPoly::operator==(const SkewPoly& o) const {
  if (!(f_ == o.f_) || side_ != o.side_ || c_.size() != o.c_.size())
    return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

SkewPoly SkewPoly::twisted(int32_t k) const {
  SkewPoly r(f_, side_);
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(c.twisted(k));
  return r;
}

SkewPoly SkewPoly::adjoint() const {
  Side other = side_ == Side::Tau ? Side::Sigma : Side::Tau;
  int s = twist_sign(side_);
  SkewPoly r(f_, other);
  r.c_.reserve(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    r.c_.push_back(c_[i].twisted(-s * static_cast<int32_t>(i)));
  r.trim();
  return r;
}

RationalCoeff SkewPoly::apply(const RationalCoeff& x) const {
  RationalCoeff acc(f_);
  int s = twist_sign(side_);
  for (size_t i = 0; i < c_.size(); ++i)
    acc = acc + c_[i] * x.twisted(s * static_cast<int32_t>(i));
  return acc;
}

bool SkewPoly::entries_contain_sym(uint32_t sym) const {
  for (const auto& c : c_)
    if (c.contains_sym(sym)) return true;
  return false;
}

}  // namespace tmodext
