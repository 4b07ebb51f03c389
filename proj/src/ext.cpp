#include "tmodext/ext.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

namespace tmodext {

namespace {

constexpr int kMaxSweeps = 1000;
constexpr int kMaxStepsPerEntry = 100000;

unsigned resolve_threads(const ExtOptions& options, size_t jobs) {
  unsigned t = options.threads;
  if (t == 0) {
    if (const char* env = std::getenv("TMODEXT_THREADS")) {
      long v = std::strtol(env, nullptr, 10);
      if (v > 0) t = static_cast<unsigned>(std::min<long>(v, 256));
    }
  }
  if (t == 0) t = std::thread::hardware_concurrency();
  if (t == 0) t = 1;
  return static_cast<unsigned>(std::min<size_t>(t, jobs));
}

template <typename Fn>
void parallel_for(size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr first;
  std::mutex mu;
  auto work = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first) first = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (first) std::rethrow_exception(first);
}

// v -= g*phi_t - psi_t*g for the single-row matrix g placed at row gi.
void apply_row(SkewMatrix& v, size_t gi, const std::vector<SkewPoly>& g_row,
               const TModule& phi, const TModule& psi) {
  size_t e = v.rows(), d = v.cols();
  for (size_t m = 0; m < d; ++m) {
    SkewPoly acc(v.field(), v.side());
    for (size_t l = 0; l < d; ++l) {
      if (g_row[l].is_zero() || phi.t().at(l, m).is_zero()) continue;
      acc = acc + g_row[l] * phi.t().at(l, m);
    }
    if (!acc.is_zero()) v.at(gi, m) = v.at(gi, m) - acc;
  }
  for (size_t i2 = 0; i2 < e; ++i2) {
    const SkewPoly& p = psi.t().at(i2, gi);
    if (p.is_zero()) continue;
    for (size_t m = 0; m < d; ++m) {
      if (g_row[m].is_zero()) continue;
      v.at(i2, m) = v.at(i2, m) + p * g_row[m];
    }
  }
}

using RowMaker = std::function<std::vector<SkewPoly>(
    size_t j, const RationalCoeff& x, int64_t rp)>;

SkewMatrix reduce_sweep(SkewMatrix v, const TModule& phi, const TModule& psi,
                        const DegreeBounds& bounds, bool descending_cols,
                        const ExtOptions& options,
                        std::vector<TraceStep>* steps, const RowMaker& make) {
  size_t e = v.rows(), d = v.cols();
  int sweeps = 0;
  while (true) {
    TMODEXT_CHECK(++sweeps <= kMaxSweeps,
                  "reduction did not reach a fixed point");
    bool changed = false;
    for (size_t i = 0; i < e; ++i) {
      for (size_t jj = 0; jj < d; ++jj) {
        size_t j = descending_cols ? d - 1 - jj : jj;
        int64_t bound = bounds.col[j];
        int count = 0;
        while (!v.at(i, j).is_zero() && v.at(i, j).deg() >= bound) {
          TMODEXT_CHECK(++count <= kMaxStepsPerEntry,
                        "entry elimination did not terminate");
          int64_t rp = v.at(i, j).deg();
          RationalCoeff x = v.at(i, j).coeff(rp);
          std::vector<SkewPoly> g_row = make(j, x, rp);
          apply_row(v, i, g_row, phi, psi);
          TMODEXT_CHECK(v.at(i, j).deg() < rp,
                        "elimination failed to lower the degree");
          changed = true;
          if (steps)
            steps->push_back({i, j, rp - bound, std::move(g_row)});
        }
      }
    }
    if (options.strict_sweep || !changed) break;
  }
  return v;
}

using Reducer =
    std::function<SkewMatrix(const SkewMatrix&, std::vector<TraceStep>*)>;

ExtResult run_reduction(const TModule& phi, const TModule& psi,
                        std::string method, DegreeBounds bounds,
                        const ExtOptions& options, const Reducer& reduce) {
  size_t e = psi.dim(), d = phi.dim();
  std::vector<GeneratorIndex> ordering = generator_ordering(e, bounds);
  size_t n = ordering.size();
  const FieldParams& f = phi.field();
  Side side = phi.side();
  std::vector<std::vector<RationalCoeff>> cfs(n);
  std::vector<std::unique_ptr<ColumnTrace>> traces(n);
  parallel_for(n, resolve_threads(options, n), [&](size_t idx) {
    const GeneratorIndex& g = ordering[idx];
    SkewMatrix delta(f, side, e, d);
    RationalCoeff c = RationalCoeff::variable(f, Var{Symbols::gen(), 0});
    delta.at(g.i - 1, g.j - 1) = SkewPoly::monomial(c, g.k, side);
    SkewMatrix v0 = t_action(delta, psi);
    std::vector<TraceStep> steps;
    SkewMatrix red = reduce(v0, options.keep_trace ? &steps : nullptr);
    cfs[idx] = coefficient_form(red, bounds, options.strict_sweep);
    if (options.keep_trace)
      traces[idx] = std::make_unique<ColumnTrace>(
          ColumnTrace{g, std::move(v0), std::move(steps), std::move(red)});
  });
  SkewMatrix pi(f, side, n, n);
  for (size_t idx = 0; idx < n; ++idx)
    for (size_t row = 0; row < n; ++row)
      pi.at(row, idx) = substitute_generator(cfs[idx][row], side);
  ExtResult res{phi,
                psi,
                std::move(method),
                options.strict_sweep,
                std::move(bounds),
                std::move(ordering),
                std::move(pi),
                {}};
  if (options.keep_trace) {
    res.traces.reserve(n);
    for (auto& t : traces) res.traces.push_back(std::move(*t));
  }
  return res;
}

void check_pair(const TModule& phi, const TModule& psi) {
  TMODEXT_CHECK(phi.field() == psi.field(), "field mismatch");
  TMODEXT_CHECK(phi.side() == psi.side(), "operator side mismatch");
  phi.validate();
  psi.validate();
}

}  // namespace

size_t DegreeBounds::total(size_t e) const {
  size_t n = 0;
  for (int64_t b : col) n += static_cast<size_t>(b);
  return n * e;
}

std::vector<GeneratorIndex> generator_ordering(size_t e,
                                               const DegreeBounds& bounds) {
  std::vector<GeneratorIndex> out;
  out.reserve(bounds.total(e));
  for (size_t i = 1; i <= e; ++i)
    for (size_t j = 1; j <= bounds.col.size(); ++j)
      for (int64_t k = 0; k < bounds.col[j - 1]; ++k) out.push_back({i, j, k});
  return out;
}

SkewMatrix reduce_invertible(SkewMatrix v, const TModule& phi,
                             const TModule& psi, const KMatrix& lead_inv,
                             const ExtOptions& options,
                             std::vector<TraceStep>* steps) {
  int64_t r = phi.deg();
  size_t d = phi.dim();
  DegreeBounds bounds{std::vector<int64_t>(d, r)};
  int sgn = twist_sign(phi.side());
  RowMaker make = [&](size_t j, const RationalCoeff& x, int64_t rp) {
    int64_t shift = rp - r;
    std::vector<SkewPoly> row(d, SkewPoly(phi.field(), phi.side()));
    for (size_t l = 0; l < d; ++l) {
      const RationalCoeff& ai = lead_inv.at(j, l);
      if (ai.is_zero()) continue;
      row[l] = SkewPoly::monomial(
          x * ai.twisted(static_cast<int32_t>(sgn * shift)), shift,
          phi.side());
    }
    return row;
  };
  return reduce_sweep(std::move(v), phi, psi, bounds, false, options, steps,
                      make);
}

SkewMatrix reduce_triangular(SkewMatrix v, const TModule& phi,
                             const TModule& psi, const ExtOptions& options,
                             std::vector<TraceStep>* steps) {
  size_t d = phi.dim();
  DegreeBounds bounds;
  bounds.col.reserve(d);
  std::vector<RationalCoeff> lcinv;
  lcinv.reserve(d);
  for (size_t j = 0; j < d; ++j) {
    const SkewPoly& diag = phi.t().at(j, j);
    bounds.col.push_back(diag.deg());
    lcinv.push_back(diag.coeff(diag.deg()).inv());
  }
  int sgn = twist_sign(phi.side());
  RowMaker make = [&](size_t j, const RationalCoeff& x, int64_t rp) {
    int64_t shift = rp - bounds.col[j];
    std::vector<SkewPoly> row(d, SkewPoly(phi.field(), phi.side()));
    row[j] = SkewPoly::monomial(
        x * lcinv[j].twisted(static_cast<int32_t>(sgn * shift)), shift,
        phi.side());
    return row;
  };
  return reduce_sweep(std::move(v), phi, psi, bounds, true, options, steps,
                      make);
}

ExtResult extension_invertible(const TModule& phi, const TModule& psi,
                               const ExtOptions& options) {
  check_pair(phi, psi);
  int64_t r = phi.deg(), s = psi.deg();
  if (s >= r)
    throw HypothesisError(
        "invertible route requires deg(psi_t) < deg(phi_t)");
  std::optional<KMatrix> li = phi.leading_inverse();
  if (!li)
    throw HypothesisError(
        "top coefficient matrix of phi_t is not invertible");
  DegreeBounds bounds{std::vector<int64_t>(phi.dim(), r)};
  Reducer reduce = [&](const SkewMatrix& v, std::vector<TraceStep>* steps) {
    return reduce_invertible(v, phi, psi, *li, options, steps);
  };
  return run_reduction(phi, psi, "inverse", std::move(bounds), options,
                       reduce);
}

ExtResult extension_triangular(const TModule& phi, const TModule& psi,
                               const ExtOptions& options) {
  check_pair(phi, psi);
  if (!is_lower_triangular(phi.t()) || !is_lower_triangular(psi.t()))
    throw HypothesisError(
        "triangular route requires lower triangular t-matrices");
  int64_t min_r = INT64_MAX, max_s = 0;
  for (size_t j = 0; j < phi.dim(); ++j)
    min_r = std::min(min_r, phi.t().at(j, j).deg());
  for (size_t i = 0; i < psi.dim(); ++i)
    max_s = std::max(max_s, psi.t().at(i, i).deg());
  if (max_s >= min_r)
    throw HypothesisError(
        "triangular route requires every diagonal degree of psi_t below "
        "every diagonal degree of phi_t");
  DegreeBounds bounds;
  for (size_t j = 0; j < phi.dim(); ++j)
    bounds.col.push_back(phi.t().at(j, j).deg());
  Reducer reduce = [&](const SkewMatrix& v, std::vector<TraceStep>* steps) {
    return reduce_triangular(v, phi, psi, options, steps);
  };
  return run_reduction(phi, psi, "triangular", std::move(bounds), options,
                       reduce);
}

ExtResult extension_dual(const TModule& phi, const TModule& psi,
                         const ExtOptions& options) {
  check_pair(phi, psi);
  TModule phi_a = phi.adjoint();
  TModule psi_a = psi.adjoint();
  ExtResult res = extension_invertible(psi_a, phi_a, options);
  res.method = "dual";
  return res;
}

ExtResult extension_auto(const TModule& phi, const TModule& psi,
                         const ExtOptions& options) {
  std::string why;
  try {
    return extension_invertible(phi, psi, options);
  } catch (const HypothesisError& e) {
    why = e.what();
  }
  try {
    return extension_triangular(phi, psi, options);
  } catch (const HypothesisError& e) {
    why = why + "; " + e.what();
  }
  try {
    return extension_dual(phi, psi, options);
  } catch (const HypothesisError& e) {
    why = why + "; " + e.what();
  }
  throw HypothesisError("no reduction route applies: " + why);
}

std::vector<RationalCoeff> coefficient_form(const SkewMatrix& v,
                                            const DegreeBounds& bounds,
                                            bool allow_truncate) {
  size_t e = v.rows(), d = v.cols();
  TMODEXT_CHECK(bounds.col.size() == d, "bounds shape mismatch");
  if (!allow_truncate) {
    for (size_t i = 0; i < e; ++i)
      for (size_t j = 0; j < d; ++j)
        TMODEXT_CHECK(v.at(i, j).deg() < bounds.col[j],
                      "reduction left a coefficient above the degree bound");
  }
  std::vector<RationalCoeff> out;
  out.reserve(bounds.total(e));
  for (size_t i = 0; i < e; ++i)
    for (size_t j = 0; j < d; ++j)
      for (int64_t k = 0; k < bounds.col[j]; ++k)
        out.push_back(v.at(i, j).coeff(k));
  return out;
}

SkewPoly substitute_generator(const RationalCoeff& entry, Side side) {
  const FieldParams& f = entry.field();
  SkewPoly out(f, side);
  if (entry.is_zero()) return out;
  uint32_t c = Symbols::gen();
  TMODEXT_CHECK(!entry.den().contains_sym(c),
                "generator symbol in a denominator");
  int sgn = twist_sign(side);
  std::map<int64_t, std::vector<Poly::Term>> buckets;
  for (const auto& [m, coeff] : entry.num().terms()) {
    TMODEXT_CHECK(m.degree_in_sym(c) == 1,
                  "reduction result is not linear in the generator");
    Monomial stripped;
    int64_t power = -1;
    for (const auto& [v, e] : m.factors()) {
      if (v.sym == c) {
        power = sgn > 0 ? v.twist : -static_cast<int64_t>(v.twist);
      } else {
        stripped = stripped * Monomial::var(v, e);
      }
    }
    TMODEXT_CHECK(power >= 0, "generator twist against the ring orientation");
    buckets[power].push_back({stripped, coeff});
  }
  for (auto& [power, terms] : buckets) {
    Poly num = Poly::collect(f, std::move(terms));
    if (num.is_zero()) continue;
    out.set_coeff(power, RationalCoeff::frac(num, entry.den()));
  }
  return out;
}

Ext0Split split_ext0(const ExtResult& result) {
  const FieldParams& f = result.pi.field();
  Side side = result.pi.side();
  size_t n = result.ordering.size();
  SkewPoly theta = SkewPoly::constant(RationalCoeff::theta(f), side);
  std::vector<size_t> deleted;
  for (size_t idx = 0; idx < n; ++idx) {
    if (result.ordering[idx].k != 0) continue;
    bool theta_only = true;
    for (size_t col = 0; col < n && theta_only; ++col) {
      const SkewPoly& entry = result.pi.at(idx, col);
      theta_only = col == idx ? entry == theta : entry.is_zero();
    }
    if (theta_only) deleted.push_back(idx + 1);
  }
  size_t witnesses = deleted.size();
  if (result.method == "inverse") {
    const TModule& phi = result.source;
    const TModule& psi = result.target;
    std::optional<KMatrix> li = phi.leading_inverse();
    TMODEXT_CHECK(li.has_value(), "leading inverse disappeared");
    KMatrix nphi = phi.nilpotent_part();
    KMatrix npsi = psi.nilpotent_part();
    size_t e = psi.dim(), d = phi.dim();
    size_t count = 0;
    for (size_t i = 0; i < e; ++i) {
      for (size_t j = 0; j < d; ++j) {
        bool eq = true;
        for (size_t i2 = 0; i2 < e && eq; ++i2) {
          for (size_t m = 0; m < d && eq; ++m) {
            RationalCoeff lhs(f);
            if (i2 == i)
              for (size_t l = 0; l < d; ++l)
                lhs = lhs + li->at(j, l) * nphi.at(l, m);
            RationalCoeff rhs = npsi.at(i2, i) * li->at(j, m);
            eq = lhs == rhs;
          }
        }
        if (eq) ++count;
      }
    }
    TMODEXT_CHECK(count == deleted.size(),
                  "splitting witness count mismatch");
    witnesses = count;
  }
  std::vector<size_t> keep;
  keep.reserve(n - deleted.size());
  for (size_t idx = 0; idx < n; ++idx) {
    bool drop = false;
    for (size_t p : deleted) drop = drop || (p == idx + 1);
    if (!drop) keep.push_back(idx);
  }
  SkewMatrix pi0(f, side, keep.size(), keep.size());
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = 0; b < keep.size(); ++b)
      pi0.at(a, b) = result.pi.at(keep[a], keep[b]);
  return Ext0Split{witnesses, std::move(deleted), std::move(pi0)};
}

bool verify_result(const ExtResult& result) {
  if (result.traces.empty())
    throw HypothesisError("result carries no traces to verify");
  const TModule& phi = result.source;
  const TModule& psi = result.target;
  const FieldParams& f = phi.field();
  Side side = phi.side();
  size_t n = result.ordering.size();
  if (result.traces.size() != n) return false;
  for (size_t idx = 0; idx < n; ++idx) {
    const ColumnTrace& tr = result.traces[idx];
    if (!(tr.gen == result.ordering[idx])) return false;
    SkewMatrix delta(f, side, psi.dim(), phi.dim());
    RationalCoeff c = RationalCoeff::variable(f, Var{Symbols::gen(), 0});
    delta.at(tr.gen.i - 1, tr.gen.j - 1) = SkewPoly::monomial(c, tr.gen.k, side);
    if (t_action(delta, psi) != tr.start) return false;
    SkewMatrix v = tr.start;
    for (const TraceStep& step : tr.steps) {
      SkewMatrix g(f, side, psi.dim(), phi.dim());
      for (size_t m = 0; m < phi.dim(); ++m) g.at(step.row, m) = step.g_row[m];
      v = v - inner_biderivation(g, phi, psi);
    }
    if (v != tr.reduced) return false;
    std::vector<RationalCoeff> cf =
        coefficient_form(v, result.bounds, result.strict_sweep);
    for (size_t row = 0; row < n; ++row)
      if (result.pi.at(row, idx) != substitute_generator(cf[row], side))
        return false;
  }
  return true;
}

}  // namespace tmodext
