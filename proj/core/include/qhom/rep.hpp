#pragma once

#include "qhom/algebra.hpp"
#include "qhom/fixtures.hpp"
#include "qhom/ground.hpp"
#include "qhom/rng.hpp"

namespace qhom {

/// An object of the representation category: a k-space at each vertex, a map
/// for each arrow, and an R-action at each vertex commuting with all arrow
/// maps.  Equivalently a module over Lambda⊗R, exposed vertexwise.
struct Representation {
  AlgebraPtr alg;
  GroundPtr ground;
  std::vector<int> dims;                    // per vertex
  std::vector<Matrix> arrow_maps;           // [arrow]: dims[to] x dims[from]
  std::vector<std::vector<Matrix>> action;  // [vertex][r-basis]

  int dim(int v) const { return dims[v]; }
  int total_dim() const;
  const FieldSpec& field() const { return alg->field(); }

  /// Evaluates a path (arrow indices, application order) as a matrix.
  Matrix eval_path(const std::vector<int>& path, int from) const;
  /// Evaluates a basis class of the algebra.
  Matrix eval_class(int basis_idx) const;
  /// Action of an R-element given by coordinates.
  Matrix eval_ground(int v, const Matrix& coords) const;
};

/// R-modules are representations of the one-point quiver.
using RModule = Representation;

struct RepMorphism {
  Representation source, target;
  std::vector<Matrix> maps;  // per vertex
};

/// The point algebra over a field (memoized per field).
AlgebraPtr point_algebra(const FieldSpec& field);

// -- construction ------------------------------------------------------------

Representation zero_rep(AlgebraPtr alg, GroundPtr ground);

/// Throws with the offending vertex / arrow / R-basis element when the data
/// is not a representation (relation failure, action laws, equivariance).
void validate_representation(const Representation& x);

bool is_morphism(const RepMorphism& f);

Representation simple(AlgebraPtr alg, int q);            // over ground k
Representation proj(AlgebraPtr alg, int q);              // P<q> = Q(q,-)
Representation inj(AlgebraPtr alg, int q);               // D Q(-,q)
Representation s_functor(AlgebraPtr alg, int q, const RModule& m);

RModule free_rmodule(GroundPtr ground, int n);
RModule dual_of_regular(GroundPtr ground);               // D(R) as left module
RModule simple_rmodule(GroundPtr ground);                // R/rad (local R)
RModule rmodule_from_action(GroundPtr ground, std::vector<Matrix> action);

/// M⊗B for M over ground k: vertexwise Kronecker, arrows act on the left
/// factor, R on the right.
Representation tensor_k(const Representation& m, const RModule& b);
/// f⊗B and M⊗g on morphisms.
RepMorphism tensor_k_map_left(const RepMorphism& f, const RModule& b);
RepMorphism tensor_k_map_right(const Representation& m, const RepMorphism& g);

/// Hom_k(N, B) for a right module N (a representation of the opposite
/// algebra) over ground k: a left representation over B's ground.
Representation hom_k(AlgebraPtr alg, const Representation& n, const RModule& b);

/// Dual over the opposite algebra; defined for ground k only.
Representation dual(const Representation& m, AlgebraPtr op);
RepMorphism dual_map(const RepMorphism& f, AlgebraPtr op);

/// Dual at the level of Lambda⊗R: a representation over (op alg, op ground).
Representation dual_gamma(const Representation& x, AlgebraPtr op,
                          GroundPtr op_ground);

/// Forgets the R-structure (result has ground k).
Representation forget_ground(const Representation& x);

Representation direct_sum(const Representation& x, const Representation& y);

// -- kernels, cokernels, universal squares -----------------------------------

struct SubObject {
  Representation obj;
  RepMorphism incl;  // obj -> ambient
};
struct QuotObject {
  Representation obj;
  RepMorphism proj;  // ambient -> obj
};

SubObject kernel(const RepMorphism& f);
QuotObject cokernel(const RepMorphism& f);
SubObject image(const RepMorphism& f);  // incl into the target

RepMorphism identity_morphism(const Representation& x);
RepMorphism zero_morphism(const Representation& x, const Representation& y);
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);
RepMorphism add(const RepMorphism& f, const RepMorphism& g);

bool is_mono(const RepMorphism& f);
bool is_epi(const RepMorphism& f);
bool is_iso(const RepMorphism& f);

struct RepPullback {
  Representation obj;
  RepMorphism to_first, to_second;
};
/// Pullback of f: X -> Z, g: Y -> Z, assembled vertexwise.
RepPullback rep_pullback(const RepMorphism& f, const RepMorphism& g);
RepMorphism rep_pullback_factor(const RepPullback& pb, const RepMorphism& u,
                                const RepMorphism& v);

struct RepPushout {
  Representation obj;
  RepMorphism from_first, from_second;
};
/// Pushout of f: Z -> X, g: Z -> Y.
RepPushout rep_pushout(const RepMorphism& f, const RepMorphism& g);
RepMorphism rep_pushout_factor(const RepPushout& po, const RepMorphism& u,
                               const RepMorphism& v);

/// Unique h with incl∘h = f, for f landing inside the subobject.
RepMorphism restrict_to_sub(const SubObject& sub, const RepMorphism& f);
/// Unique h with h∘proj = f, for f vanishing on the kernel of proj.
RepMorphism descend_to_quot(const QuotObject& quot, const RepMorphism& f);

// -- randomized generation ---------------------------------------------------

/// A sum of indecomposable projectives P<v>⊗R with listed head vertices;
/// offsets[s][w] locates summand s inside the sum at vertex w.
struct ProjectiveSum {
  Representation rep;
  std::vector<int> heads;
  std::vector<std::vector<int>> offsets;
};

ProjectiveSum projective_sum(AlgebraPtr alg, GroundPtr ground,
                             const std::vector<int>& heads);

/// Morphism out of a sum of projectives, freely determined by the images of
/// the summand generators (a column vector in target(head) per summand).
RepMorphism morphism_from_generator_images(const ProjectiveSum& src,
                                           const Representation& target,
                                           const std::vector<Matrix>& images);

/// Valid representation by construction: the cokernel of a random morphism
/// between random sums of projectives, with per-vertex dimension <= max_dim.
/// Deterministic in the seed; max_dim = 0 gives the zero representation.
Representation random_representation(AlgebraPtr alg, GroundPtr ground,
                                     int max_dim, std::uint64_t seed);

/// Variant drawing summand head vertices from the given set only.
Representation random_representation_heads(AlgebraPtr alg, GroundPtr ground,
                                           int max_dim, std::uint64_t seed,
                                           const std::vector<int>& head_pool);

/// Conjugates all structure matrices by random invertible vertexwise maps
/// (an isomorphic but differently presented copy).
Representation scramble(const Representation& x, Rng& rng);

}  // namespace qhom
