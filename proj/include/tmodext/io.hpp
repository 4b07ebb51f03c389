#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tmodext/closed_form.hpp"
#include "tmodext/expr.hpp"

namespace tmodext {

// Text forms round-trip through the expression grammar: parsing a rendered
// entry in a context with the same field, side, and symbols returns an equal
// value.  All renderers are deterministic.

std::string op_symbol(Side side);  // "T" or "S"

std::string render(const RationalCoeff& x);
std::string render(const SkewPoly& w);
std::string render(const SkewMatrix& m);

// Display form: \tau or \sigma powers, twists as ^{(n)}, prime-field
// constants in balanced form (p-1 prints as -1).
std::string render_latex(const RationalCoeff& x);
std::string render_latex(const SkewPoly& w);
std::string render_latex(const SkewMatrix& m);

SkewMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows,
                        const ParseContext& ctx);

// One computed result with its optional attachments, ready to render.
struct ResultDocument {
  std::string command;  // ext | ext0 | dual | closed-form
  const ExtResult* result = nullptr;
  std::vector<std::string> symbols;
  bool with_traces = false;
  const Ext0Split* split = nullptr;
  std::optional<int64_t> rank;
  std::optional<IntegralityReport> integrality;
};

std::string to_pretty(const ResultDocument& doc);
std::string to_latex(const ResultDocument& doc);
std::string to_json_text(const ResultDocument& doc);

// Rebuilds a result (with any stored traces) from its JSON text.
ExtResult result_from_json(const std::string& text);

}  // namespace tmodext
