#pragma once

#include <string>

#include "tmodext/matrix.hpp"

namespace tmodext {

// A module structure over F_q[t] given by the image of t: a square matrix
// over K{T} whose constant term is theta*I + N with N nilpotent.  The same
// type carries the dual-side objects over K{S}.
class TModule {
 public:
  TModule(std::string name, SkewMatrix t);

  const std::string& name() const { return name_; }
  const SkewMatrix& t() const { return t_; }
  size_t dim() const { return t_.rows(); }
  Side side() const { return t_.side(); }
  const FieldParams& field() const { return t_.field(); }

  // max operator degree appearing in the t-matrix
  int64_t deg() const { return t_.max_deg(); }
  KMatrix constant_term() const { return t_.coeff_matrix(0); }
  KMatrix nilpotent_part() const;  // constant term minus theta*I
  KMatrix leading() const { return t_.coeff_matrix(deg()); }
  // inverse of the top-degree coefficient matrix, when it exists
  std::optional<KMatrix> leading_inverse() const;

  // Throws HypothesisError unless the t-matrix defines a valid module:
  // square, degree >= 1, constant term theta*I + nilpotent.
  void validate() const;

  TModule adjoint() const;

  // image of a polynomial sum(a_k t^k), coefficients in F_q
  SkewMatrix at(const std::vector<Fq>& a) const;
  SkewMatrix t_power(uint64_t k) const;

 private:
  std::string name_;
  SkewMatrix t_;
};

// f defines a morphism when f * source_t == target_t * f.
bool is_morphism(const SkewMatrix& f, const TModule& source,
                 const TModule& target);

TModule direct_sum(const TModule& a, const TModule& b);

// The extension with t-matrix [[phi_t, 0], [delta_t, psi_t]].
TModule assemble_extension(const TModule& phi, const TModule& psi,
                           const SkewMatrix& delta_t,
                           const std::string& name = "X");

// Entries above the diagonal vanish and every diagonal entry has positive
// degree with a nonzero leading coefficient.
bool is_lower_triangular(const SkewMatrix& m);

}  // namespace tmodext
