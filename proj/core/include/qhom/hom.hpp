#pragma once

#include <optional>

#include "qhom/rep.hpp"

namespace qhom {

/// A computed basis of a space of morphisms source -> target, as columns in
/// the flat coordinate space concatenating the row-major entries of the
/// per-vertex matrices.  When the target carries a nontrivial R-action and
/// equivariance was not imposed, the induced R-action on the hom space is
/// recorded.
class HomSpace {
 public:
  int dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  RepMorphism morphism(int i) const;
  RepMorphism from_coords(const Matrix& coords) const;  // column of length dim
  Matrix flatten(const RepMorphism& f) const;
  /// Coordinates of a morphism known to lie in the span.
  Matrix coords_of(const RepMorphism& f) const;

  bool has_r_action() const { return !r_action_.empty(); }
  const std::vector<Matrix>& r_action() const { return r_action_; }
  /// The hom space as an R-module over the target's ground algebra.
  RModule to_rmodule() const;

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }

  friend HomSpace hom_space(const Representation& m, const Representation& x,
                            bool equivariant);

 private:
  RepMorphism from_coords_col(int i) const;

  Representation source_, target_;
  std::vector<int> offsets_;  // per vertex
  int flat_dim_ = 0;
  Matrix basis_;
  std::vector<Matrix> r_action_;
};

/// Hom over the quiver: solves the commuting-square system.  With
/// equivariant = true also imposes commutation with the ground action
/// (Hom_{Q,R}); otherwise computes Hom_Q and, when the target ground is
/// nontrivial, the R-action on the result.  Throws on algebra mismatch.
HomSpace hom_space(const Representation& m, const Representation& x,
                   bool equivariant);

/// Hom_Q(m, x) as an R-module (m over ground k).
RModule hom_over_q(const Representation& m, const Representation& x);

int hom_dim_q(const Representation& m, const Representation& x);
int hom_dim_qr(const Representation& x, const Representation& y);

/// Searches for an invertible morphism commuting with everything (arrows and
/// ground action).  Deterministic; returns nothing if dimensions differ or no
/// isomorphism was found among basis elements and seeded combinations.
std::optional<RepMorphism> find_module_isomorphism(const Representation& a,
                                                   const Representation& b);

}  // namespace qhom
