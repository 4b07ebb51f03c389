#pragma once

#include <string>
#include <vector>

#include "tmodext/biderivation.hpp"

namespace tmodext {

struct ExtOptions {
  // One pass over the entries in source order, truncating anything left
  // above the degree bounds, instead of iterating to the fixed point.
  bool strict_sweep = false;
  bool keep_trace = false;
  unsigned threads = 0;  // 0: TMODEXT_THREADS, then hardware concurrency
};

// Reduced-space basis element: the matrix unit at (i, j) times the k-th
// operator power, with i in 1..e (target row), j in 1..d (source column),
// 0 <= k < bound(j).
struct GeneratorIndex {
  size_t i = 0, j = 0;
  int64_t k = 0;
  bool operator==(const GeneratorIndex&) const = default;
};

// Per-source-column degree bounds of the reduced space: entry (i, j) of a
// reduced matrix has operator degree < col[j-1].
struct DegreeBounds {
  std::vector<int64_t> col;

  int64_t bound(size_t j1) const { return col[j1 - 1]; }
  size_t total(size_t e) const;
};

// One elimination: subtract the inner biderivation of the single-row matrix
// with the given row placed at `row`.
struct TraceStep {
  size_t row = 0, col = 0;  // 0-based entry that was eliminated
  int64_t shift = 0;        // operator power of the eliminating row
  std::vector<SkewPoly> g_row;
};

struct ColumnTrace {
  GeneratorIndex gen;
  SkewMatrix start;    // the t-action on the generator, before reduction
  std::vector<TraceStep> steps;
  SkewMatrix reduced;
};

// The module structure on the space of extension classes: coordinates over K
// indexed by `ordering`, with t acting through the matrix pi.
struct ExtResult {
  TModule source, target;  // the pair the reduction actually ran on
  std::string method;      // "inverse", "triangular", or "dual"
  bool strict_sweep = false;
  DegreeBounds bounds;
  std::vector<GeneratorIndex> ordering;
  SkewMatrix pi;
  std::vector<ColumnTrace> traces;  // filled only when requested
};

// Splitting off the coordinates fixed by the module action: positions whose
// pi-row is exactly theta on the diagonal.
struct Ext0Split {
  size_t witnesses = 0;          // matrix-unit witnesses of the splitting
  std::vector<size_t> deleted;   // 1-based coordinate positions removed
  SkewMatrix pi0;
};

// Requires deg(psi_t) < deg(phi_t) and an invertible top coefficient matrix
// of phi_t.  Throws HypothesisError otherwise.
ExtResult extension_invertible(const TModule& phi, const TModule& psi,
                               const ExtOptions& options = {});

// Requires both t-matrices lower triangular with every diagonal degree of
// psi_t below every diagonal degree of phi_t.
ExtResult extension_triangular(const TModule& phi, const TModule& psi,
                               const ExtOptions& options = {});

// Computes on the adjoint side: the classes from psi* to phi* over K{S}.
ExtResult extension_dual(const TModule& phi, const TModule& psi,
                         const ExtOptions& options = {});

// Tries the invertible, triangular, and dual routes in that order.
ExtResult extension_auto(const TModule& phi, const TModule& psi,
                         const ExtOptions& options = {});

// The deleted positions come from the theta-row rule; when the result came
// from the invertible route the count is cross-checked against the number of
// matrix-unit witnesses.
Ext0Split split_ext0(const ExtResult& result);

// Building blocks, exposed for testing.

std::vector<GeneratorIndex> generator_ordering(size_t e,
                                               const DegreeBounds& bounds);

SkewMatrix reduce_invertible(SkewMatrix v, const TModule& phi,
                             const TModule& psi, const KMatrix& lead_inv,
                             const ExtOptions& options,
                             std::vector<TraceStep>* steps = nullptr);

SkewMatrix reduce_triangular(SkewMatrix v, const TModule& phi,
                             const TModule& psi, const ExtOptions& options,
                             std::vector<TraceStep>* steps = nullptr);

// Flatten a reduced matrix to coordinates in generator order.  Entries above
// the bounds throw InternalError unless allow_truncate.
std::vector<RationalCoeff> coefficient_form(const SkewMatrix& v,
                                            const DegreeBounds& bounds,
                                            bool allow_truncate);

// Replace twists of the generator symbol by operator powers.  The input must
// be linear in the generator with a generator-free denominator.
SkewPoly substitute_generator(const RationalCoeff& entry, Side side);

// Replays every stored trace and rechecks the pi columns; throws
// HypothesisError when the result carries no traces.
bool verify_result(const ExtResult& result);

}  // namespace tmodext
