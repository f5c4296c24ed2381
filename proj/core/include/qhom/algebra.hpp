#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qhom/matrix.hpp"
#include "qhom/quiver.hpp"

namespace qhom {

/// Sparse vector over the path-class basis of an algebra.
using SparseVec = std::vector<std::pair<int, Scalar>>;

/// The finite-dimensional algebra presented by a quiver with homogeneous
/// admissible relations: a basis of residue classes of paths, composition by
/// concatenation followed by reduction, and the radical filtration by path
/// length.  Immutable after construction.
class AlgebraPresentation {
 public:
  struct BasisClass {
    int from = 0;
    int to = 0;
    int length = 0;
    std::vector<int> path;  // representative, arrow indices, application order
    std::string name;
  };

  const QuiverPresentation& quiver() const { return quiver_; }
  const FieldSpec& field() const { return field_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int num_vertices() const { return static_cast<int>(quiver_.vertices.size()); }
  int num_arrows() const { return static_cast<int>(quiver_.arrows.size()); }

  /// Minimal N with rad^N = 0.
  int radical_length() const { return radical_length_; }

  const std::vector<BasisClass>& basis() const { return basis_; }
  int vertex_class(int v) const { return vertex_class_[v]; }
  int arrow_class(int a) const { return arrow_class_[a]; }

  /// Basis indices of the hom-space Q(p, q) (path classes p -> q).
  const std::vector<int>& classes(int p, int q) const {
    return by_pair_[static_cast<std::size_t>(p) * num_vertices() + q];
  }
  int hom_dim(int p, int q) const {
    return static_cast<int>(classes(p, q).size());
  }

  /// Composite g∘f of two basis classes; zero unless to(f) == from(g).
  const SparseVec& compose(int g, int f) const {
    return compose_[static_cast<std::size_t>(g) * dim() + f];
  }

  /// n_i(p, q): multiplicity table of the radical filtration, indexed
  /// [i][p][q].  Valid because the defining ideal is homogeneous, so
  /// rad^i is spanned by the classes of length >= i.
  std::vector<std::vector<std::vector<int>>> radical_multiplicities() const;

  friend AlgebraPresentation build_algebra(const QuiverPresentation& pres,
                                           const FieldSpec& field,
                                           int length_cap);

 private:
  QuiverPresentation quiver_;
  FieldSpec field_;
  int radical_length_ = 0;
  std::vector<BasisClass> basis_;
  std::vector<int> vertex_class_;
  std::vector<int> arrow_class_;
  std::vector<std::vector<int>> by_pair_;
  std::vector<SparseVec> compose_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraPresentation>;

/// Builds the path-class basis degree by degree, quotienting by the
/// homogeneous two-sided ideal generated by the relations.  Throws if path
/// classes survive at length_cap (the algebra cannot be confirmed finite
/// dimensional) or if the raw path count explodes.
AlgebraPresentation build_algebra(const QuiverPresentation& pres,
                                  const FieldSpec& field, int length_cap = 32);

AlgebraPtr build_algebra_ptr(const QuiverPresentation& pres,
                             const FieldSpec& field, int length_cap = 32);

/// The opposite algebra (same vertices, reversed arrows and relations).
AlgebraPtr opposite_algebra(const AlgebraPresentation& alg);

/// True when both arguments present the same quiver over the same field.
bool same_algebra(const AlgebraPresentation& a, const AlgebraPresentation& b);

/// Associativity of the composition table on all basis triples; used by
/// tests and input validation.
bool composition_is_associative(const AlgebraPresentation& alg);

}  // namespace qhom
