#include "tmodext/field.hpp"

#include <array>
#include <limits>

namespace tmodext {
namespace {

constexpr uint32_t kMaxExt = 63;

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// p^k, throwing when the result leaves uint64 range.
uint64_t checked_pow(uint64_t p, uint32_t k) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < k; ++i) {
    if (r > std::numeric_limits<uint64_t>::max() / p)
      throw HypothesisError("field parameters overflow: p^e too large");
    r *= p;
  }
  return r;
}

using Digits = std::array<uint64_t, kMaxExt + 1>;

void unpack(uint64_t v, uint64_t p, uint32_t n, Digits& d) {
  for (uint32_t i = 0; i < n; ++i) {
    d[i] = v % p;
    v /= p;
  }
}

uint64_t pack(const Digits& d, uint64_t p, uint32_t n) {
  uint64_t v = 0;
  for (uint32_t i = n; i-- > 0;) v = v * p + d[i];
  return v;
}

// ---- univariate arithmetic over F_p on digit vectors (for e > 1) ----

int deg_of(const std::vector<uint64_t>& a) {
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return static_cast<int>(i);
  return -1;
}

uint64_t inv_mod_p(uint64_t a, uint64_t p) {
  // extended Euclid on integers
  int64_t t = 0, nt = 1;
  int64_t r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a % p);
  while (nr != 0) {
    int64_t qq = r / nr;
    int64_t tmp = t - qq * nt;
    t = nt;
    nt = tmp;
    tmp = r - qq * nr;
    r = nr;
    nr = tmp;
  }
  TMODEXT_CHECK(r == 1, "division by zero in F_p");
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

std::vector<uint64_t> poly_mod(std::vector<uint64_t> a,
                               const std::vector<uint64_t>& m, uint64_t p) {
  int dm = deg_of(m);
  uint64_t lead_inv = inv_mod_p(m[dm], p);
  for (int i = deg_of(a); i >= dm; i = deg_of(a)) {
    uint64_t c = (a[i] * lead_inv) % p;
    for (int j = 0; j <= dm; ++j) {
      uint64_t sub = (c * m[j]) % p;
      a[i - dm + j] = (a[i - dm + j] + p - sub) % p;
    }
  }
  a.resize(dm > 0 ? dm : 1, 0);
  return a;
}

std::vector<uint64_t> poly_mulmod(const std::vector<uint64_t>& a,
                                  const std::vector<uint64_t>& b,
                                  const std::vector<uint64_t>& m, uint64_t p) {
  std::vector<uint64_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), m, p);
}

std::vector<uint64_t> poly_powmod(std::vector<uint64_t> base, uint64_t n,
                                  const std::vector<uint64_t>& m, uint64_t p) {
  std::vector<uint64_t> r{1};
  while (n > 0) {
    if (n & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    n >>= 1;
  }
  return r;
}

std::vector<uint64_t> poly_gcd_fp(std::vector<uint64_t> a,
                                  std::vector<uint64_t> b, uint64_t p) {
  while (deg_of(b) >= 0) {
    a = poly_mod(std::move(a), b, p);
    // normalize to keep representations short
    a.resize(std::max(deg_of(a) + 1, 1), 0);
    std::swap(a, b);
  }
  return a;
}

// Rabin test: f (monic, degree e) is irreducible over F_p iff
// x^(p^e) == x mod f and gcd(x^(p^(e/l)) - x, f) = 1 for prime l | e.
bool is_irreducible(const std::vector<uint64_t>& f, uint64_t p, uint32_t e) {
  std::vector<uint64_t> x{0, 1};
  auto sub_x = [&](std::vector<uint64_t> g) {
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    return g;
  };
  std::vector<uint32_t> prime_divs;
  uint32_t n = e;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      prime_divs.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) prime_divs.push_back(n);
  for (uint32_t l : prime_divs) {
    auto h = sub_x(poly_powmod(x, checked_pow(p, e / l), f, p));
    auto g = poly_gcd_fp(f, h, p);
    if (deg_of(g) != 0) return false;
  }
  auto top = sub_x(poly_powmod(x, checked_pow(p, e), f, p));
  return deg_of(top) < 0;
}

}  // namespace

FieldParams FieldParams::prime_field(uint64_t p) {
  if (!is_prime(p)) throw HypothesisError("field characteristic must be prime");
  if (p >= (uint64_t{1} << 31))
    throw HypothesisError("field characteristic too large");
  FieldParams f;
  f.p = p;
  f.e = 1;
  f.modulus = 0;
  return f;
}

FieldParams FieldParams::extension(uint64_t p, uint32_t e,
                                   const std::vector<uint64_t>& md) {
  if (e == 1) {
    if (!md.empty() && md != std::vector<uint64_t>{0, 1})
      throw HypothesisError("modulus given for prime field");
    return prime_field(p);
  }
  FieldParams f = prime_field(p);
  if (e == 0 || e > kMaxExt) throw HypothesisError("bad field extension degree");
  checked_pow(p, e + 1);  // packing bound
  if (md.size() != e + 1)
    throw HypothesisError("modulus must have degree e");
  std::vector<uint64_t> norm(md.size());
  for (size_t i = 0; i < md.size(); ++i) norm[i] = md[i] % p;
  if (norm.back() != 1)
    throw HypothesisError("modulus must be monic");
  if (!is_irreducible(norm, p, e))
    throw HypothesisError("modulus is not irreducible over F_p");
  f.e = e;
  Digits d{};
  for (size_t i = 0; i < norm.size(); ++i) d[i] = norm[i];
  f.modulus = pack(d, p, e + 1);
  return f;
}

uint64_t FieldParams::q() const { return checked_pow(p, e); }

Fq Fq::from_int(const FieldParams& f, int64_t n) {
  TMODEXT_CHECK(f.valid(), "uninitialized field");
  int64_t p = static_cast<int64_t>(f.p);
  int64_t r = n % p;
  if (r < 0) r += p;
  return Fq(f, static_cast<uint64_t>(r));
}

Fq Fq::from_digits(const FieldParams& f, const std::vector<uint64_t>& ds) {
  TMODEXT_CHECK(f.valid(), "uninitialized field");
  if (ds.size() > f.e)
    throw HypothesisError("digit vector longer than the field degree");
  Digits d{};
  for (size_t i = 0; i < ds.size(); ++i) d[i] = ds[i] % f.p;
  return Fq(f, pack(d, f.p, f.e));
}

bool Fq::in_prime_subfield() const {
  return f_.e == 1 || v_ < f_.p;
}

int64_t Fq::to_int() const {
  TMODEXT_CHECK(in_prime_subfield(), "value outside prime subfield");
  return static_cast<int64_t>(v_);
}

std::vector<uint64_t> Fq::digits() const {
  Digits d{};
  unpack(v_, f_.p, f_.e, d);
  return std::vector<uint64_t>(d.begin(), d.begin() + f_.e);
}

Fq Fq::operator+(const Fq& o) const {
  TMODEXT_CHECK(f_ == o.f_, "field mismatch");
  if (f_.e == 1) return Fq(f_, (v_ + o.v_) % f_.p);
  Digits a{}, b{};
  unpack(v_, f_.p, f_.e, a);
  unpack(o.v_, f_.p, f_.e, b);
  for (uint32_t i = 0; i < f_.e; ++i) a[i] = (a[i] + b[i]) % f_.p;
  return Fq(f_, pack(a, f_.p, f_.e));
}

Fq Fq::operator-() const {
  if (f_.e == 1) return Fq(f_, v_ == 0 ? 0 : f_.p - v_);
  Digits a{};
  unpack(v_, f_.p, f_.e, a);
  for (uint32_t i = 0; i < f_.e; ++i) a[i] = a[i] == 0 ? 0 : f_.p - a[i];
  return Fq(f_, pack(a, f_.p, f_.e));
}

Fq Fq::operator-(const Fq& o) const { return *this + (-o); }

Fq Fq::operator*(const Fq& o) const {
  TMODEXT_CHECK(f_ == o.f_, "field mismatch");
  if (f_.e == 1) return Fq(f_, (v_ * o.v_) % f_.p);
  std::vector<uint64_t> a(f_.e), b(f_.e), m(f_.e + 1);
  Digits t{};
  unpack(v_, f_.p, f_.e, t);
  std::copy(t.begin(), t.begin() + f_.e, a.begin());
  unpack(o.v_, f_.p, f_.e, t);
  std::copy(t.begin(), t.begin() + f_.e, b.begin());
  unpack(f_.modulus, f_.p, f_.e + 1, t);
  std::copy(t.begin(), t.begin() + f_.e + 1, m.begin());
  auto r = poly_mulmod(a, b, m, f_.p);
  Digits out{};
  for (size_t i = 0; i < r.size() && i < f_.e; ++i) out[i] = r[i];
  return Fq(f_, pack(out, f_.p, f_.e));
}

Fq Fq::inv() const {
  TMODEXT_CHECK(!is_zero(), "division by zero in F_q");
  if (f_.e == 1) return Fq(f_, inv_mod_p(v_, f_.p));
  // x^(q-2) is the inverse for nonzero x
  return pow(static_cast<int64_t>(f_.q()) - 2);
}

Fq Fq::pow(int64_t n) const {
  if (n < 0) return inv().pow(-n);
  Fq r = Fq::one(f_);
  Fq b = *this;
  uint64_t k = static_cast<uint64_t>(n);
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

}  // namespace tmodext
