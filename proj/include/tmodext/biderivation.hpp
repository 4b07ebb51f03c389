#pragma once

#include "tmodext/tmodule.hpp"

namespace tmodext {

// A biderivation from the source module phi (dim d) to the target module psi
// (dim e) is determined by its value at t: an e x d matrix over K{T}.  It
// extends to all of F_q[t] by delta(ab) = psi_a delta(b) + delta(a) phi_b.

// delta at t of the inner biderivation attached to u: u*phi_t - psi_t*u.
SkewMatrix inner_biderivation(const SkewMatrix& u, const TModule& phi,
                              const TModule& psi);

// delta evaluated at the polynomial sum(a_k t^k).
SkewMatrix biderivation_at(const SkewMatrix& delta_t, const TModule& phi,
                           const TModule& psi, const std::vector<Fq>& a);

// delta at t of t*delta, the module action on extension classes.
SkewMatrix t_action(const SkewMatrix& delta_t, const TModule& psi);

// delta lands in the subspace with no constant term.
bool has_no_constant_term(const SkewMatrix& delta_t);

SkewMatrix scaled_matrix(const SkewMatrix& m, const Fq& c);

}  // namespace tmodext
