#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "qhom/errors.hpp"

namespace qhom {

/// A quiver with relations.  Paths are sequences of arrow indices in
/// application order: the first arrow of the sequence is applied first, so
/// the path {a, b} is the composite b∘a.
struct QuiverPresentation {
  struct Arrow {
    std::string name;
    int from = 0;
    int to = 0;
  };
  struct RelTerm {
    mpq_class coef;
    std::vector<int> path;  // arrow indices, application order
  };

  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<RelTerm>> relations;

  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;

  /// Source and target of a composable path (throws if non-composable).
  std::pair<int, int> path_endpoints(const std::vector<int>& path) const;

  /// Throws unless every relation is a sum of composable paths of a common
  /// length >= 2 with common source and target.  Mixed-length relations are
  /// rejected: the basis construction handles homogeneous admissible ideals.
  void validate() const;

  /// Same vertices, reversed arrows, with each relation path reversed.
  QuiverPresentation opposite() const;
};

}  // namespace qhom
