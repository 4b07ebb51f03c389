#include "tmodext/rational.hpp"

#include <algorithm>
#include <map>

namespace tmodext {

int var_cmp(const Var& a, const Var& b) {
  int c = Symbols::cmp(a.sym, b.sym);
  if (c != 0) return c;
  if (a.twist != b.twist) return a.twist < b.twist ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(const Var& v, int64_t exp) {
  Monomial m;
  if (exp != 0) m.f_.push_back({v, exp});
  return m;
}

int64_t Monomial::degree() const {
  int64_t d = 0;
  for (const auto& [v, e] : f_) d += e;
  return d;
}

int64_t Monomial::degree_of(const Var& v) const {
  for (const auto& [w, e] : f_)
    if (w == v) return e;
  return 0;
}

int64_t Monomial::degree_in_sym(uint32_t sym) const {
  int64_t d = 0;
  for (const auto& [v, e] : f_)
    if (v.sym == sym) d += e;
  return d;
}

bool Monomial::contains_sym(uint32_t sym) const {
  for (const auto& [v, e] : f_)
    if (v.sym == sym) return true;
  return false;
}

Monomial Monomial::twisted(int32_t k) const {
  // Uniform twist shift preserves factor order.
  Monomial m;
  m.f_.reserve(f_.size());
  for (const auto& [v, e] : f_) m.f_.push_back({Var{v.sym, v.twist + k}, e});
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.f_.reserve(a.f_.size() + b.f_.size());
  size_t i = 0, j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    int c = var_cmp(a.f_[i].first, b.f_[j].first);
    if (c < 0) r.f_.push_back(a.f_[i++]);
    else if (c > 0) r.f_.push_back(b.f_[j++]);
    else {
      r.f_.push_back({a.f_[i].first, a.f_[i].second + b.f_[j].second});
      ++i, ++j;
    }
  }
  for (; i < a.f_.size(); ++i) r.f_.push_back(a.f_[i]);
  for (; j < b.f_.size(); ++j) r.f_.push_back(b.f_[j]);
  return r;
}

std::optional<Monomial> Monomial::try_div(const Monomial& a, const Monomial& b) {
  Monomial r;
  size_t i = 0;
  for (const auto& [v, e] : b.f_) {
    while (i < a.f_.size() && var_cmp(a.f_[i].first, v) < 0)
      r.f_.push_back(a.f_[i++]);
    if (i >= a.f_.size() || !(a.f_[i].first == v) || a.f_[i].second < e)
      return std::nullopt;
    if (a.f_[i].second > e) r.f_.push_back({v, a.f_[i].second - e});
    ++i;
  }
  for (; i < a.f_.size(); ++i) r.f_.push_back(a.f_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    int c = var_cmp(a.f_[i].first, b.f_[j].first);
    if (c < 0) ++i;
    else if (c > 0) ++j;
    else {
      r.f_.push_back({a.f_[i].first, std::min(a.f_[i].second, b.f_[j].second)});
      ++i, ++j;
    }
  }
  return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  int64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  size_t i = 0, j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    int c = var_cmp(a.f_[i].first, b.f_[j].first);
    if (c < 0) return 1;   // a has the earlier var with positive exponent
    if (c > 0) return -1;
    if (a.f_[i].second != b.f_[j].second)
      return a.f_[i].second > b.f_[j].second ? 1 : -1;
    ++i, ++j;
  }
  if (i < a.f_.size()) return 1;
  if (j < b.f_.size()) return -1;
  return 0;
}

// -------------------------------------------------------------------- Poly

Poly Poly::constant(const Fq& c) {
  Poly p(c.field());
  if (!c.is_zero()) p.t_.push_back({Monomial(), c});
  return p;
}

Poly Poly::from_int(const FieldParams& f, int64_t n) {
  return constant(Fq::from_int(f, n));
}

Poly Poly::variable(const FieldParams& f, const Var& v) {
  Poly p(f);
  p.t_.push_back({Monomial::var(v), Fq::one(f)});
  return p;
}

Poly Poly::term(const Fq& c, const Monomial& m) {
  Poly p(c.field());
  if (!c.is_zero()) p.t_.push_back({m, c});
  return p;
}

Fq Poly::constant_value() const {
  TMODEXT_CHECK(is_constant(), "polynomial is not constant");
  return t_.empty() ? Fq::zero(f_) : t_[0].second;
}

const Monomial& Poly::lead_mono() const {
  TMODEXT_CHECK(!t_.empty(), "zero polynomial has no leading term");
  return t_[0].first;
}

const Fq& Poly::lead_coeff() const {
  TMODEXT_CHECK(!t_.empty(), "zero polynomial has no leading term");
  return t_[0].second;
}

Poly Poly::collect(const FieldParams& f, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return Monomial::cmp(a.first, b.first) > 0;
  });
  Poly p(f);
  for (auto& t : terms) {
    if (t.second.is_zero()) continue;
    if (!p.t_.empty() && p.t_.back().first == t.first) {
      p.t_.back().second = p.t_.back().second + t.second;
      if (p.t_.back().second.is_zero()) p.t_.pop_back();
    } else {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  TMODEXT_CHECK(f_ == o.f_, "field mismatch");
  Poly r(f_);
  r.t_.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = Monomial::cmp(t_[i].first, o.t_[j].first);
    if (c > 0) r.t_.push_back(t_[i++]);
    else if (c < 0) r.t_.push_back(o.t_[j++]);
    else {
      Fq s = t_[i].second + o.t_[j].second;
      if (!s.is_zero()) r.t_.push_back({t_[i].first, s});
      ++i, ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
  return r;
}

Poly Poly::operator-() const {
  Poly r(f_);
  r.t_.reserve(t_.size());
  for (const auto& [m, c] : t_) r.t_.push_back({m, -c});
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  TMODEXT_CHECK(f_ == o.f_, "field mismatch");
  if (is_zero() || o.is_zero()) return Poly(f_);
  std::vector<Term> prods;
  prods.reserve(t_.size() * o.t_.size());
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) prods.push_back({ma * mb, ca * cb});
  return collect(f_, std::move(prods));
}

Poly Poly::scaled(const Fq& c) const {
  if (c.is_zero()) return Poly(f_);
  Poly r(f_);
  r.t_.reserve(t_.size());
  for (const auto& [m, a] : t_) r.t_.push_back({m, a * c});
  return r;
}

Poly Poly::pow(uint64_t n) const {
  Poly r = Poly::from_int(f_, 1);
  Poly b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

Poly Poly::twisted(int32_t k) const {
  Poly r(f_);
  r.t_.reserve(t_.size());
  for (const auto& [m, c] : t_) r.t_.push_back({m.twisted(k), c});
  return r;
}

bool Poly::contains_sym(uint32_t sym) const {
  for (const auto& [m, c] : t_)
    if (m.contains_sym(sym)) return true;
  return false;
}

int64_t Poly::degree_of(const Var& v) const {
  if (t_.empty()) return -1;
  int64_t d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m.degree_of(v));
  return d;
}

std::vector<Var> Poly::vars() const {
  std::vector<Var> out;
  for (const auto& [m, c] : t_)
    for (const auto& [v, e] : m.factors()) out.push_back(v);
  std::sort(out.begin(), out.end(),
            [](const Var& a, const Var& b) { return var_cmp(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ----------------------------------------------------------------- gcd

namespace {

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.lead_coeff().inv());
}

Monomial monomial_content(const Poly& p) {
  Monomial g = p.terms()[0].first;
  for (size_t i = 1; i < p.terms().size() && !g.is_one(); ++i)
    g = Monomial::gcd(g, p.terms()[i].first);
  return g;
}

Poly div_by_monomial(const Poly& p, const Monomial& m) {
  if (m.is_one()) return p;
  std::vector<Poly::Term> out;
  out.reserve(p.terms().size());
  for (const auto& [mm, c] : p.terms()) {
    auto q = Monomial::try_div(mm, m);
    TMODEXT_CHECK(q.has_value(), "inexact monomial division");
    out.push_back({*q, c});
  }
  return Poly::collect(p.field(), std::move(out));
}

// Decompose p as a univariate polynomial in v with Poly coefficients.
std::map<int64_t, Poly> decompose(const Poly& p, const Var& v) {
  std::map<int64_t, Poly> out;
  for (const auto& [m, c] : p.terms()) {
    int64_t e = m.degree_of(v);
    Monomial rest;
    for (const auto& [w, we] : m.factors())
      if (!(w == v)) rest = rest * Monomial::var(w, we);
    auto it = out.find(e);
    if (it == out.end()) it = out.emplace(e, Poly(p.field())).first;
    it->second = it->second + Poly::term(c, rest);
  }
  return out;
}

Poly recompose(const FieldParams& f, const Var& v,
               const std::map<int64_t, Poly>& parts) {
  std::vector<Poly::Term> out;
  for (const auto& [e, coeff] : parts)
    for (const auto& [m, c] : coeff.terms())
      out.push_back({m * Monomial::var(v, e), c});
  return Poly::collect(f, std::move(out));
}

Poly content_wrt(const Poly& p, const Var& v) {
  Poly g(p.field());
  for (const auto& [e, coeff] : decompose(p, v)) {
    g = poly_gcd(g, coeff);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Poly coeff_wrt(const Poly& p, const Var& v, int64_t k) {
  auto parts = decompose(p, v);
  auto it = parts.find(k);
  return it == parts.end() ? Poly(p.field()) : it->second;
}

// Pseudo-remainder of f by g with respect to v.
Poly prem(Poly f, const Poly& g, const Var& v) {
  int64_t dg = g.degree_of(v);
  Poly lg = coeff_wrt(g, v, dg);
  while (!f.is_zero()) {
    int64_t df = f.degree_of(v);
    if (df < dg) break;
    Poly lf = coeff_wrt(f, v, df);
    Poly shift = Poly::term(Fq::one(f.field()), Monomial::var(v, df - dg));
    f = f * lg - lf * shift * g;
  }
  return f;
}

Poly primitive_wrt(const Poly& p, const Var& v) {
  if (p.is_zero()) return p;
  Poly c = content_wrt(p, v);
  return divide_exact(p, c);
}

// gcd of polynomials with trivial monomial content.
Poly gcd_core(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant())
    return Poly::from_int(a.field(), 1);
  std::vector<Var> va = a.vars(), vb = b.vars();
  Var main = va.back();
  if (var_cmp(vb.back(), main) > 0) main = vb.back();
  if (a.degree_of(main) == 0) return gcd_core(a, content_wrt(b, main));
  if (b.degree_of(main) == 0) return gcd_core(content_wrt(a, main), b);

  Poly ca = content_wrt(a, main), cb = content_wrt(b, main);
  Poly gc = poly_gcd(ca, cb);
  Poly pa = divide_exact(a, ca), pb = divide_exact(b, cb);
  if (pa.degree_of(main) < pb.degree_of(main)) std::swap(pa, pb);
  // primitive PRS
  Poly gp(a.field());
  while (true) {
    Poly r = prem(pa, pb, main);
    if (r.is_zero()) {
      gp = primitive_wrt(pb, main);
      break;
    }
    if (r.degree_of(main) == 0) {
      gp = Poly::from_int(a.field(), 1);
      break;
    }
    pa = pb;
    pb = primitive_wrt(r, main);
  }
  return gc * gp;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  TMODEXT_CHECK(a.field() == b.field(), "field mismatch");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly::from_int(a.field(), 1);
  Monomial mg = Monomial::gcd(monomial_content(a), monomial_content(b));
  Poly pa = div_by_monomial(a, monomial_content(a));
  Poly pb = div_by_monomial(b, monomial_content(b));
  Poly g = gcd_core(pa, pb) * Poly::term(Fq::one(a.field()), mg);
  return monic(g);
}

Poly divide_exact(const Poly& a, const Poly& b) {
  TMODEXT_CHECK(!b.is_zero(), "division by zero polynomial");
  if (a.is_zero()) return a;
  if (b.is_constant()) return a.scaled(b.constant_value().inv());
  Poly q(a.field());
  Poly r = a;
  std::vector<Poly::Term> qt;
  while (!r.is_zero()) {
    auto m = Monomial::try_div(r.lead_mono(), b.lead_mono());
    TMODEXT_CHECK(m.has_value(), "inexact polynomial division");
    Fq c = r.lead_coeff() * b.lead_coeff().inv();
    Poly t = Poly::term(c, *m);
    qt.push_back({*m, c});
    r = r - t * b;
  }
  return Poly::collect(a.field(), std::move(qt));
}

// ---------------------------------------------------------- RationalCoeff

RationalCoeff RationalCoeff::of(Poly p) {
  FieldParams f = p.field();
  return RationalCoeff(std::move(p), Poly::from_int(f, 1));
}

RationalCoeff RationalCoeff::from_int(const FieldParams& f, int64_t n) {
  return of(Poly::from_int(f, n));
}

RationalCoeff RationalCoeff::variable(const FieldParams& f, const Var& v) {
  return of(Poly::variable(f, v));
}

RationalCoeff RationalCoeff::theta(const FieldParams& f) {
  return variable(f, Var{Symbols::theta(), 0});
}

RationalCoeff RationalCoeff::frac(Poly num, Poly den) {
  TMODEXT_CHECK(!den.is_zero(), "division by zero");
  RationalCoeff r(std::move(num), std::move(den));
  r.normalize();
  return r;
}

bool RationalCoeff::is_one() const {
  return n_.is_constant() && !n_.is_zero() && n_.constant_value().is_one() &&
         d_.is_constant() && d_.constant_value().is_one();
}

void RationalCoeff::normalize() {
  if (n_.is_zero()) {
    d_ = Poly::from_int(n_.field(), 1);
    return;
  }
  if (d_.is_constant()) {
    Fq c = d_.constant_value();
    if (!c.is_one()) n_ = n_.scaled(c.inv());
    d_ = Poly::from_int(n_.field(), 1);
    return;
  }
  Poly g = poly_gcd(n_, d_);
  if (!g.is_constant()) {
    n_ = divide_exact(n_, g);
    d_ = divide_exact(d_, g);
  }
  if (d_.is_constant()) {
    normalize();
    return;
  }
  Fq lc = d_.lead_coeff();
  if (!lc.is_one()) {
    Fq i = lc.inv();
    n_ = n_.scaled(i);
    d_ = d_.scaled(i);
  }
}

RationalCoeff RationalCoeff::operator+(const RationalCoeff& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (d_.is_constant() && o.d_.is_constant())
    return RationalCoeff(n_ + o.n_, d_);  // both dens are 1
  if (d_ == o.d_) return frac(n_ + o.n_, d_);
  return frac(n_ * o.d_ + o.n_ * d_, d_ * o.d_);
}

RationalCoeff RationalCoeff::operator-() const {
  return RationalCoeff(-n_, d_);
}

RationalCoeff RationalCoeff::operator-(const RationalCoeff& o) const {
  return *this + (-o);
}

RationalCoeff RationalCoeff::operator*(const RationalCoeff& o) const {
  if (is_zero() || o.is_zero()) return RationalCoeff(field());
  if (d_.is_constant() && o.d_.is_constant())
    return RationalCoeff(n_ * o.n_, d_);
  // cross-cancel so no gcd of large products is needed
  Poly g1 = poly_gcd(n_, o.d_);
  Poly g2 = poly_gcd(o.n_, d_);
  Poly num = divide_exact(n_, g1) * divide_exact(o.n_, g2);
  Poly den = divide_exact(d_, g2) * divide_exact(o.d_, g1);
  RationalCoeff r(std::move(num), std::move(den));
  if (r.d_.is_constant()) {
    r.normalize();
    return r;
  }
  Fq lc = r.d_.lead_coeff();
  if (!lc.is_one()) {
    Fq i = lc.inv();
    r.n_ = r.n_.scaled(i);
    r.d_ = r.d_.scaled(i);
  }
  return r;
}

RationalCoeff RationalCoeff::inv() const {
  TMODEXT_CHECK(!is_zero(), "division by zero");
  RationalCoeff r(d_, n_);
  r.normalize();
  return r;
}

RationalCoeff RationalCoeff::operator/(const RationalCoeff& o) const {
  return *this * o.inv();
}

RationalCoeff RationalCoeff::twisted(int32_t k) const {
  // A ring automorphism fixing F_q: canonical form is preserved.
  return RationalCoeff(n_.twisted(k), d_.twisted(k));
}

namespace {

Poly specialize_poly(const Poly& p) {
  uint64_t q = p.field().q();
  std::vector<Poly::Term> out;
  out.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) {
    Monomial built;
    for (const auto& [v, e] : m.factors()) {
      if (v.twist < 0)
        throw HypothesisError(
            "cannot specialize a coefficient with a negative twist");
      uint64_t scale = 1;
      for (int32_t i = 0; i < v.twist; ++i) {
        if (scale > (uint64_t{1} << 40) / q)
          throw HypothesisError("specialized exponent too large");
        scale *= q;
      }
      int64_t exp = e * static_cast<int64_t>(scale);
      TMODEXT_CHECK(exp / static_cast<int64_t>(scale) == e,
                    "specialized exponent overflow");
      built = built * Monomial::var(Var{v.sym, 0}, exp);
    }
    out.push_back({built, c});
  }
  return Poly::collect(p.field(), std::move(out));
}

}  // namespace

RationalCoeff RationalCoeff::specialized() const {
  Poly num = specialize_poly(n_);
  Poly den = specialize_poly(d_);
  if (den.is_zero())
    throw HypothesisError("denominator vanishes under specialization");
  return frac(std::move(num), std::move(den));
}

RationalCoeff::Valuation RationalCoeff::valuation_inf() const {
  if (is_zero()) return {true, 0};
  Var th{Symbols::theta(), 0};
  for (const Var& v : n_.vars())
    if (!(v == th))
      throw HypothesisError(
          "valuation requires a specialized coefficient univariate in theta");
  for (const Var& v : d_.vars())
    if (!(v == th))
      throw HypothesisError(
          "valuation requires a specialized coefficient univariate in theta");
  int64_t dn = std::max<int64_t>(n_.degree_of(th), 0);
  int64_t dd = std::max<int64_t>(d_.degree_of(th), 0);
  return {false, dd - dn};
}

}  // namespace tmodext
