#pragma once

#include "taucat/rep.hpp"

namespace taucat {

// Per-vertex basis of rad(M) = (rad A)·M.
std::vector<Mat> radical_of_module(const Representation& m);

// Projective cover P -> m with the indec projective summands labeled by
// vertex. `verts` lists one vertex per summand, in vertex order.
struct Cover {
  std::vector<int> verts;
  Representation proj;
  RepMorphism map;  // proj -> m, surjective with superfluous kernel
};
Cover projective_cover(const Representation& m);

// Minimal projective presentation p1 --d1--> p0 --d0--> m -> 0.
struct MinPresentation {
  std::vector<int> verts1, verts0;
  Representation p1, p0;
  RepMorphism d1;  // p1 -> p0, image inside rad p0
  RepMorphism d0;  // p0 -> m
};
MinPresentation min_presentation(const Representation& m);

struct GVector {
  std::vector<long long> coords;
  bool operator==(const GVector& o) const { return coords == o.coords; }
};
GVector g_vector(const Representation& m);

// Nakayama functor on projective modules; throws "input not projective".
Representation nakayama_of_projective(const Representation& p);

// τ as the kernel of ν applied to a minimal presentation.
Representation tau(const Representation& m);
// Independent oracle: dualize the transpose computed over the opposite algebra.
Representation tau_dtr_oracle(const Representation& m);
// Inverse translate; zero on injective modules.
Representation tau_inverse(const Representation& m);

// dim Ext^k(m, n), via syzygy shifting (k >= 0).
int ext_dim(const Representation& m, const Representation& n, int k);

struct PdResult {
  int pd = 0;
  bool capped = false;  // true means "pd >= cap"
};
PdResult pd_capped(const Representation& m, int cap = 32);

}  // namespace taucat
