#include "tmodext/io.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace tmodext {

namespace {

using ordered_json = nlohmann::ordered_json;

// ---- canonical text ----

struct FqText {
  std::string text;
  bool multi = false;  // true when the text is a sum
};

FqText fq_text(const Fq& c) {
  if (c.field().e == 1 || c.in_prime_subfield())
    return {std::to_string(c.to_int()), false};
  const std::vector<uint64_t> ds = c.digits();
  std::string out;
  int terms = 0;
  for (int i = static_cast<int>(ds.size()) - 1; i >= 0; --i) {
    if (ds[i] == 0) continue;
    if (terms) out += " + ";
    if (i == 0) {
      out += std::to_string(ds[i]);
    } else {
      if (ds[i] != 1) out += std::to_string(ds[i]) + "*";
      out += "w";
      if (i > 1) out += "^" + std::to_string(i);
    }
    ++terms;
  }
  if (!terms) return {"0", false};
  return {out, terms > 1};
}

std::string factor_text(const Monomial::Factor& fac) {
  std::string out = Symbols::name(fac.first.sym);
  if (fac.first.twist != 0)
    out += "^(" + std::to_string(fac.first.twist) + ")";
  if (fac.second != 1) out += "^" + std::to_string(fac.second);
  return out;
}

std::string term_text(const Fq& c, const Monomial& m) {
  if (m.is_one()) return fq_text(c).text;
  std::string out;
  if (!c.is_one()) {
    const FqText t = fq_text(c);
    out = (t.multi ? "(" + t.text + ")" : t.text) + "*";
  }
  bool first = true;
  for (const auto& fac : m.factors()) {
    if (!first) out += "*";
    out += factor_text(fac);
    first = false;
  }
  return out;
}

std::string poly_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += term_text(c, m);
  }
  return out;
}

// Text usable as the left factor of a product: sums get wrapped.  Fractions
// are already safe, since a/b*T parses as (a/b)*T.
std::string coeff_factor_text(const RationalCoeff& x) {
  if (x.den().is_constant()) {
    std::string t = poly_text(x.num());
    if (t.find(' ') != std::string::npos) return "(" + t + ")";
    return t;
  }
  return render(x);
}

// ---- display (LaTeX) text ----

int64_t balanced(uint64_t v, uint64_t p) {
  return 2 * v > p ? static_cast<int64_t>(v) - static_cast<int64_t>(p)
                   : static_cast<int64_t>(v);
}

std::string name_latex(uint32_t sym) {
  const std::string& n = Symbols::name(sym);
  if (n == "theta") return "\\theta";
  if (n.size() == 1) return n;
  return "\\mathrm{" + n + "}";
}

struct LatexConst {
  bool neg = false;   // sign, when the text is a single product
  bool one = false;   // magnitude is 1
  bool multi = false; // the text is a sum carrying its own signs
  std::string text;
};

LatexConst fq_latex(const Fq& c) {
  LatexConst out;
  if (c.field().e == 1 || c.in_prime_subfield()) {
    const int64_t b = balanced(static_cast<uint64_t>(c.to_int()), c.field().p);
    out.neg = b < 0;
    const int64_t a = b < 0 ? -b : b;
    out.one = a == 1;
    out.text = std::to_string(a);
    return out;
  }
  const std::vector<uint64_t> ds = c.digits();
  int terms = 0;
  for (int i = static_cast<int>(ds.size()) - 1; i >= 0; --i) {
    if (ds[i] == 0) continue;
    const int64_t b = balanced(ds[i], c.field().p);
    const int64_t a = b < 0 ? -b : b;
    if (terms == 0)
      out.text += b < 0 ? "-" : "";
    else
      out.text += b < 0 ? " - " : " + ";
    if (i == 0 || a != 1) out.text += std::to_string(a);
    if (i >= 1) out.text += i == 1 ? "w" : "w^{" + std::to_string(i) + "}";
    ++terms;
  }
  if (!terms) out.text = "0";
  out.multi = terms > 1;
  return out;
}

std::string factor_latex(const Monomial::Factor& fac) {
  std::string base = name_latex(fac.first.sym);
  if (fac.first.twist != 0)
    base += "^{(" + std::to_string(fac.first.twist) + ")}";
  if (fac.second != 1) {
    if (fac.first.twist != 0) base = "(" + base + ")";
    base += "^{" + std::to_string(fac.second) + "}";
  }
  return base;
}

struct SignedText {
  bool neg = false;
  std::string text;
};

SignedText term_latex(const Fq& c, const Monomial& m) {
  const LatexConst lc = fq_latex(c);
  if (m.is_one()) {
    if (lc.multi) return {false, lc.text};
    return {lc.neg, lc.text};
  }
  std::string vars;
  for (const auto& fac : m.factors()) {
    if (!vars.empty()) vars += " ";
    vars += factor_latex(fac);
  }
  if (lc.multi) return {false, "\\left(" + lc.text + "\\right)" + vars};
  if (lc.one) return {lc.neg, vars};
  return {lc.neg, lc.text + " " + vars};
}

std::string poly_latex(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const SignedText t = term_latex(c, m);
    if (out.empty())
      out = (t.neg ? "-" : "") + t.text;
    else
      out += (t.neg ? " - " : " + ") + t.text;
  }
  return out;
}

// Signed factor suitable in front of an operator power; empty text stands
// for magnitude one.
SignedText coeff_factor_latex(const RationalCoeff& x) {
  if (!x.den().is_constant())
    return {false,
            "\\frac{" + poly_latex(x.num()) + "}{" + poly_latex(x.den()) + "}"};
  const auto& terms = x.num().terms();
  if (terms.size() > 1)
    return {false, "\\left(" + poly_latex(x.num()) + "\\right)"};
  SignedText t = term_latex(terms[0].second, terms[0].first);
  if (terms[0].first.is_one() && t.text == "1") t.text.clear();
  return t;
}

std::string op_latex(Side side, int64_t k) {
  std::string op = side == Side::Tau ? "\\tau" : "\\sigma";
  if (k > 1) op += "^{" + std::to_string(k) + "}";
  return op;
}

// ---- JSON helpers ----

std::vector<uint64_t> modulus_digits(const FieldParams& f) {
  std::vector<uint64_t> ds;
  uint64_t v = f.modulus;
  for (uint32_t i = 0; i <= f.e; ++i) {
    ds.push_back(v % f.p);
    v /= f.p;
  }
  return ds;
}

ordered_json field_json(const FieldParams& f) {
  ordered_json j;
  j["p"] = f.p;
  j["e"] = f.e;
  if (f.e > 1) j["modulus"] = modulus_digits(f);
  return j;
}

ordered_json matrix_json(const SkewMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(render(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json module_json(const TModule& mod) {
  ordered_json j;
  j["name"] = mod.name();
  j["t"] = matrix_json(mod.t());
  return j;
}

std::string field_pretty(const FieldParams& f) {
  if (f.e == 1) return "F_" + std::to_string(f.p);
  const std::vector<uint64_t> ds = modulus_digits(f);
  std::string mod;
  for (int i = static_cast<int>(ds.size()) - 1; i >= 0; --i) {
    if (ds[i] == 0) continue;
    if (!mod.empty()) mod += " + ";
    if (i == 0) {
      mod += std::to_string(ds[i]);
    } else {
      if (ds[i] != 1) mod += std::to_string(ds[i]) + "*";
      mod += i == 1 ? "w" : "w^" + std::to_string(i);
    }
  }
  return "F_" + std::to_string(f.q()) + " = F_" + std::to_string(f.p) +
         "[w]/(" + mod + ")";
}

std::vector<std::vector<std::string>> matrix_from_json(const ordered_json& a) {
  return a.get<std::vector<std::vector<std::string>>>();
}

}  // namespace

std::string op_symbol(Side side) { return side == Side::Tau ? "T" : "S"; }

std::string render(const RationalCoeff& x) {
  if (x.is_zero()) return "0";
  if (x.den().is_constant()) return poly_text(x.num());
  return "(" + poly_text(x.num()) + ")/(" + poly_text(x.den()) + ")";
}

std::string render(const SkewPoly& w) {
  if (w.is_zero()) return "0";
  const std::string op = op_symbol(w.side());
  std::string out;
  for (int64_t k = 0; k <= w.deg(); ++k) {
    const RationalCoeff c = w.coeff(k);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += render(c);
      continue;
    }
    const std::string ops = k > 1 ? op + "^" + std::to_string(k) : op;
    if (c.is_one())
      out += ops;
    else
      out += coeff_factor_text(c) + "*" + ops;
  }
  return out;
}

std::string render(const SkewMatrix& m) {
  std::string out = "[";
  for (size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",\n [" : "[";
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += render(m.at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

std::string render_latex(const RationalCoeff& x) {
  if (x.is_zero()) return "0";
  if (x.den().is_constant()) return poly_latex(x.num());
  return "\\frac{" + poly_latex(x.num()) + "}{" + poly_latex(x.den()) + "}";
}

std::string render_latex(const SkewPoly& w) {
  if (w.is_zero()) return "0";
  std::string out;
  for (int64_t k = 0; k <= w.deg(); ++k) {
    const RationalCoeff c = w.coeff(k);
    if (c.is_zero()) continue;
    SignedText t;
    if (k == 0) {
      t.text = render_latex(c);
    } else {
      t = coeff_factor_latex(c);
      t.text += t.text.empty() ? op_latex(w.side(), k)
                               : " " + op_latex(w.side(), k);
    }
    if (out.empty())
      out = (t.neg ? "-" : "") + t.text;
    else
      out += (t.neg ? " - " : " + ") + t.text;
  }
  return out;
}

std::string render_latex(const SkewMatrix& m) {
  std::string out =
      "\\left[\\begin{array}{" + std::string(m.cols(), 'c') + "}\n";
  for (size_t i = 0; i < m.rows(); ++i) {
    if (i) out += " \\\\\n";
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j) out += " & ";
      out += render_latex(m.at(i, j));
    }
  }
  return out + "\n\\end{array}\\right]";
}

SkewMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows,
                        const ParseContext& ctx) {
  if (rows.empty() || rows[0].empty()) throw ParseError("empty matrix");
  const size_t cols = rows[0].size();
  SkewMatrix m(ctx.field, ctx.side, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw ParseError("matrix rows of unequal length");
    for (size_t j = 0; j < cols; ++j)
      m.at(i, j) = parse_skew(rows[i][j], ctx);
  }
  return m;
}

std::string to_pretty(const ResultDocument& doc) {
  TMODEXT_CHECK(doc.result, "result document without a result");
  const ExtResult& r = *doc.result;
  std::ostringstream os;
  os << doc.command << " " << r.source.name() << " by " << r.target.name()
     << "\n";
  os << "method: " << r.method << (r.strict_sweep ? " (strict sweep)" : "")
     << "\n";
  os << "field: " << field_pretty(r.pi.field())
     << "   side: " << op_symbol(r.pi.side()) << "\n";
  os << "coordinates (i,j,k):";
  for (const GeneratorIndex& g : r.ordering)
    os << " (" << g.i << "," << g.j << "," << g.k << ")";
  os << "\n";
  os << "pi_t =\n" << render(r.pi) << "\n";
  if (doc.split) {
    os << "splitting witnesses: " << doc.split->witnesses << "\n";
    os << "deleted coordinates:";
    for (size_t p : doc.split->deleted) os << " " << p;
    os << "\n";
    os << "pi0 =\n" << render(doc.split->pi0) << "\n";
  }
  if (doc.rank) os << "rank: " << *doc.rank << "\n";
  if (doc.integrality) {
    const IntegralityReport& ir = *doc.integrality;
    os << "integrality: conditions "
       << (ir.conditions_hold ? "hold" : "not satisfied") << " (psi "
       << (ir.psi_integral ? "yes" : "no") << ", phi tail "
       << (ir.phi_tail_integral ? "yes" : "no") << ", leading "
       << (ir.leading_minimal ? "yes" : "no") << ")\n";
    if (ir.conditions_hold) {
      os << "pi integral: " << (ir.pi_integral ? "yes" : "no") << " ("
         << ir.coefficients_checked << " coefficients checked)\n";
      if (!ir.pi_integral) os << "counterexample: " << ir.counterexample << "\n";
    }
  }
  if (doc.with_traces)
    os << "traces: " << r.traces.size() << " columns recorded\n";
  return os.str();
}

std::string to_latex(const ResultDocument& doc) {
  TMODEXT_CHECK(doc.result, "result document without a result");
  const ExtResult& r = *doc.result;
  std::ostringstream os;
  os << "\\Pi_t = " << render_latex(r.pi) << "\n";
  if (doc.split) {
    os << "s = " << doc.split->witnesses << ",\\quad \\text{deleted} = \\{";
    bool first = true;
    for (size_t p : doc.split->deleted) {
      if (!first) os << ", ";
      os << p;
      first = false;
    }
    os << "\\}\n";
    os << "\\Pi^{0}_t = " << render_latex(doc.split->pi0) << "\n";
  }
  if (doc.rank) os << "\\operatorname{rk} = " << *doc.rank << "\n";
  os << "% (n) := q^n\n";
  return os.str();
}

std::string to_json_text(const ResultDocument& doc) {
  TMODEXT_CHECK(doc.result, "result document without a result");
  const ExtResult& r = *doc.result;
  ordered_json j;
  j["command"] = doc.command;
  j["field"] = field_json(r.pi.field());
  j["symbols"] = doc.symbols;
  j["side"] = r.pi.side() == Side::Tau ? "tau" : "sigma";
  j["method"] = r.method;
  j["strict_pseudocode"] = r.strict_sweep;
  j["source_module"] = module_json(r.source);
  j["target_module"] = module_json(r.target);
  j["bounds"] = r.bounds.col;
  ordered_json ordering = ordered_json::array();
  for (const GeneratorIndex& g : r.ordering)
    ordering.push_back(ordered_json::array({g.i, g.j, g.k}));
  j["ordering"] = std::move(ordering);
  j["pi_t"] = matrix_json(r.pi);
  if (doc.with_traces && !r.traces.empty()) {
    ordered_json traces = ordered_json::array();
    for (const ColumnTrace& t : r.traces) {
      ordered_json tj;
      tj["generator"] = ordered_json::array({t.gen.i, t.gen.j, t.gen.k});
      tj["start"] = matrix_json(t.start);
      ordered_json steps = ordered_json::array();
      for (const TraceStep& s : t.steps) {
        ordered_json sj;
        sj["row"] = s.row;
        sj["col"] = s.col;
        sj["shift"] = s.shift;
        ordered_json g_row = ordered_json::array();
        for (const SkewPoly& g : s.g_row) g_row.push_back(render(g));
        sj["g_row"] = std::move(g_row);
        steps.push_back(std::move(sj));
      }
      tj["steps"] = std::move(steps);
      tj["reduced"] = matrix_json(t.reduced);
      traces.push_back(std::move(tj));
    }
    j["traces"] = std::move(traces);
  }
  if (doc.split) {
    ordered_json sj;
    sj["witnesses"] = doc.split->witnesses;
    sj["deleted"] = doc.split->deleted;
    sj["pi0"] = matrix_json(doc.split->pi0);
    j["ext0"] = std::move(sj);
  }
  if (doc.rank) j["rank"] = *doc.rank;
  if (doc.integrality) {
    const IntegralityReport& ir = *doc.integrality;
    ordered_json ij;
    ij["psi_integral"] = ir.psi_integral;
    ij["phi_tail_integral"] = ir.phi_tail_integral;
    ij["leading_minimal"] = ir.leading_minimal;
    ij["conditions_hold"] = ir.conditions_hold;
    if (ir.conditions_hold) {
      ij["pi_integral"] = ir.pi_integral;
      ij["coefficients_checked"] = ir.coefficients_checked;
      if (!ir.pi_integral) ij["counterexample"] = ir.counterexample;
    }
    j["integrality"] = std::move(ij);
  }
  return j.dump(2) + "\n";
}

ExtResult result_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(std::string("invalid result JSON: ") + ex.what());
  }
  try {
    const ordered_json& fj = j.at("field");
    const uint64_t p = fj.at("p").get<uint64_t>();
    const uint32_t e = fj.value("e", 1u);
    FieldParams f =
        e > 1 ? FieldParams::extension(
                    p, e, fj.at("modulus").get<std::vector<uint64_t>>())
              : FieldParams::prime_field(p);
    const std::string side_name = j.at("side").get<std::string>();
    if (side_name != "tau" && side_name != "sigma")
      throw ParseError("side must be tau or sigma");
    const Side side = side_name == "tau" ? Side::Tau : Side::Sigma;
    ParseContext ctx{f, side, j.at("symbols").get<std::vector<std::string>>()};
    const auto mat = [&](const ordered_json& a) {
      return parse_matrix(matrix_from_json(a), ctx);
    };
    TModule source(j.at("source_module").at("name").get<std::string>(),
                   mat(j.at("source_module").at("t")));
    TModule target(j.at("target_module").at("name").get<std::string>(),
                   mat(j.at("target_module").at("t")));
    ExtResult r{std::move(source),
                std::move(target),
                j.at("method").get<std::string>(),
                j.value("strict_pseudocode", false),
                DegreeBounds{j.at("bounds").get<std::vector<int64_t>>()},
                {},
                mat(j.at("pi_t")),
                {}};
    for (const ordered_json& g : j.at("ordering"))
      r.ordering.push_back(GeneratorIndex{g.at(0).get<size_t>(),
                                          g.at(1).get<size_t>(),
                                          g.at(2).get<int64_t>()});
    if (j.contains("traces")) {
      for (const ordered_json& tj : j.at("traces")) {
        const ordered_json& g = tj.at("generator");
        ColumnTrace t{GeneratorIndex{g.at(0).get<size_t>(),
                                     g.at(1).get<size_t>(),
                                     g.at(2).get<int64_t>()},
                      mat(tj.at("start")),
                      {},
                      mat(tj.at("reduced"))};
        for (const ordered_json& sj : tj.at("steps")) {
          TraceStep s;
          s.row = sj.at("row").get<size_t>();
          s.col = sj.at("col").get<size_t>();
          s.shift = sj.at("shift").get<int64_t>();
          for (const ordered_json& gp : sj.at("g_row"))
            s.g_row.push_back(parse_skew(gp.get<std::string>(), ctx));
          t.steps.push_back(std::move(s));
        }
        r.traces.push_back(std::move(t));
      }
    }
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("result JSON shape: ") + ex.what());
  }
}

}  // namespace tmodext
