#pragma once

#include "qhom/hom.hpp"

namespace qhom {

struct Cover {
  RepMorphism epi;          // P -> X
  std::vector<int> heads;   // head vertex per projective summand
  bool minimal = false;
};

/// Projective cover P -> X by a sum of P<v>⊗R, one summand per element of a
/// basis of the top X/rad·X.  Minimal when the ground is local with residue
/// field k (in particular for ground k itself); otherwise still a projective
/// presentation, flagged non-minimal.
Cover projective_cover(const Representation& x);

struct Envelope {
  RepMorphism mono;         // X -> I
  std::vector<int> socle_vertices;
  bool minimal = false;
};

/// Injective envelope, computed as the dual of a projective cover over the
/// opposite algebra.
Envelope injective_envelope(const Representation& x, AlgebraPtr op,
                            GroundPtr op_ground);
Envelope injective_envelope(const Representation& x);

/// Augmented projective resolution P_d -> ... -> P_0 -> X broken into short
/// exact sequences: pi_i : P_i ->> M_i, mu_i : M_i -> P_{i-1}, with M_0 = X
/// and differentials d_i = mu_i ∘ pi_i.
struct ProjResolution {
  Representation module;
  std::vector<Representation> terms;        // P_0 .. P_depth
  std::vector<std::vector<int>> heads;      // per term
  std::vector<RepMorphism> differentials;   // d_i : P_i -> P_{i-1}, i >= 1
  RepMorphism augmentation;                 // pi_0 : P_0 -> module
  std::vector<Representation> syzygies;     // M_1 .. M_depth
  std::vector<RepMorphism> syzygy_incl;     // mu_i : M_i -> P_{i-1}
  std::vector<RepMorphism> syzygy_proj;     // pi_i : P_i -> M_i
  bool minimal = false;
  int depth = 0;
};

ProjResolution min_proj_resolution(const Representation& x, int depth);

/// Augmented injective resolution X -> I^0 -> I^1 -> ... with cosyzygies:
/// beta^i : B^i -> I^i, alpha^i : I^i ->> B^{i+1}, B^0 = X.
struct InjResolution {
  Representation module;
  std::vector<Representation> terms;        // I^0 .. I^depth
  std::vector<Representation> cosyzygies;   // B^1 .. B^depth
  std::vector<RepMorphism> beta;            // beta^i : B^i -> I^i
  std::vector<RepMorphism> alpha;           // alpha^i : I^i -> B^{i+1}
  std::vector<RepMorphism> differentials;   // I^i -> I^{i+1}
  int depth = 0;
};

InjResolution min_inj_resolution(const Representation& x, int depth);

/// Exactness of the augmented complex at every computed position.
bool resolution_is_exact(const ProjResolution& r);
bool resolution_is_exact(const InjResolution& r);

/// Minimality in the sense that matters for ground-k modules: every
/// differential is killed by DS<q>⊗_Q(-) and Hom_Q(S<q>, -) for all q.
/// Checked as: the image of each differential lies in rad·P.
bool resolution_is_minimal(const ProjResolution& r);

}  // namespace qhom
