#ifndef TMODEXT_FIELD_HPP
#define TMODEXT_FIELD_HPP

#include <cstdint>
#include <vector>

#include "tmodext/errors.hpp"

namespace tmodext {

// Description of F_q, q = p^e.  For e > 1 the field is F_p[x]/(modulus) with a
// monic irreducible modulus of degree e; its digit vector is packed base p into
// a single word, which bounds p^(e+1) < 2^64 (checked at construction).
struct FieldParams {
  uint64_t p = 0;
  uint32_t e = 1;
  uint64_t modulus = 0;  // packed digits, unused when e == 1

  static FieldParams prime_field(uint64_t p);
  // modulus_digits: ascending coefficients, size e+1, leading digit 1.
  static FieldParams extension(uint64_t p, uint32_t e,
                               const std::vector<uint64_t>& modulus_digits);

  bool operator==(const FieldParams&) const = default;
  uint64_t q() const;  // p^e
  bool valid() const { return p != 0; }
};

// Element of F_q, stored as base-p digits packed into one word.  Every value
// produced by the expression grammar lies in the prime subfield, but the full
// extension arithmetic is supported.  The twist x -> x^q fixes every element.
class Fq {
 public:
  Fq() = default;  // unusable sentinel; field().valid() is false
  static Fq zero(const FieldParams& f) { return Fq(f, 0); }
  static Fq one(const FieldParams& f) { return Fq(f, f.p > 1 ? 1 : 0); }
  static Fq from_int(const FieldParams& f, int64_t n);
  // ascending base-p digits, at most e of them
  static Fq from_digits(const FieldParams& f, const std::vector<uint64_t>& ds);

  const FieldParams& field() const { return f_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  uint64_t packed() const { return v_; }

  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator*(const Fq& o) const;
  Fq operator-() const;
  Fq inv() const;  // throws InternalError on zero
  Fq pow(int64_t n) const;

  bool operator==(const Fq& o) const { return v_ == o.v_; }
  bool operator!=(const Fq& o) const { return v_ != o.v_; }

  // True when all digits above the constant one vanish.
  bool in_prime_subfield() const;
  int64_t to_int() const;  // requires in_prime_subfield
  std::vector<uint64_t> digits() const;

 private:
  Fq(const FieldParams& f, uint64_t v) : f_(f), v_(v) {}
  FieldParams f_;
  uint64_t v_ = 0;

  friend class FqOps;
};

}  // namespace tmodext

#endif
