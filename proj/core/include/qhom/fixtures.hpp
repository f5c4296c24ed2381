#pragma once

#include "qhom/algebra.hpp"

namespace qhom {

/// The cycle quiver with N vertices 0..N-1, one arrow d_q : q -> q-1 (mod N)
/// per vertex, and the relations that two consecutive arrows compose to zero.
/// N = 1 is a single vertex with a loop d squaring to zero.
QuiverPresentation cycle_quiver(int n);

/// A finite window of the repetitive A3 quiver with mesh relations: vertices
/// (j, l) for j_min <= j <= j_max and l in {0,1,2}; arrows
///   a_j : (j,0) -> (j,1),   b_j : (j,1) -> (j,2),
///   g_j : (j,1) -> (j-1,0), d_j : (j,2) -> (j-1,1)
/// (present when both endpoints lie in the window); relations g∘a = 0,
/// b∘d = 0 and the anticommuting square a∘g + d∘b = 0.
QuiverPresentation za3_window(int j_min, int j_max);

/// Two vertices, one arrow, no relations (not self-injective).
QuiverPresentation a2_quiver();

/// Vertex name used by za3_window.
std::string za3_vertex_name(int j, int level);

/// A single vertex and no arrows; modules over it (with a ground algebra R)
/// are plain R-modules.
QuiverPresentation point_quiver();

/// Resolves a fixture name: "C<N>" (e.g. C1, C3, C5), "Z6"
/// (= ZA3 window with columns 0..5), "A2", or "ZA3:<jmin>:<jmax>".
QuiverPresentation fixture_by_name(const std::string& name);

}  // namespace qhom
