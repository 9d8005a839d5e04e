#pragma once

#include <optional>
#include <vector>

#include "taucat/homology.hpp"
#include "taucat/rep.hpp"

namespace taucat {

// A pair (M, P[1]): M a tau-rigid module, P projective with Hom(P, M) = 0.
// Summand index lists refer to the canonical indecomposable lists used to
// build the object (indec_tau_rigid order for modules, vertex order for P).
struct SttObject {
  Representation m;
  Representation p;
  std::vector<int> module_summands;
  std::vector<int> proj_verts;
  int size() const { return int(module_summands.size() + proj_verts.size()); }
};

struct TorsionDecomposition {
  std::vector<Mat> t_basis;  // per-vertex basis of the trace of M in X
  Representation tx;
  RepMorphism t_incl;  // tx -> x
  Representation fx;
  RepMorphism f_proj;  // x -> fx
};

bool is_tau_rigid(const Representation& m);

// Trace of M in X and its cokernel: 0 -> tX -> X -> fX -> 0.
TorsionDecomposition torsion_parts(const Representation& m, const Representation& x);
// X lies in Gen M, i.e. the trace of M fills X.
bool gen_membership(const Representation& m, const Representation& x);

// All indecomposable tau-rigid modules up to isomorphism, in a deterministic
// order (sorted by dimension vector, then discovery).  Routes: semisimple,
// tensor construction over a hereditary base, hereditary of Dynkin type
// (knitting from the projectives), local, or an explicit candidate list.
// Throws "enumeration route unavailable" otherwise.
std::vector<Representation> indec_tau_rigid(
    const AlgebraPtr& a, const std::vector<Representation>& candidates = {});

// All support tau-tilting objects: maximal compatible collections of size n
// drawn from indec_tau_rigid(a) and the shifted indecomposable projectives.
// `candidates` is forwarded to the enumeration.
std::vector<SttObject> support_tau_tilting(const AlgebraPtr& a,
                                           const std::vector<Representation>& candidates = {});

// Decompose m and return the indices of its summands in the canonical
// indecomposable tau-rigid list; throws "not jointly rigid" when a summand
// is not in the list and "shape mismatch" when a multiplicity exceeds 1.
std::vector<int> summand_indices(const std::vector<Representation>& indecs,
                                 const Representation& m);

// Bongartz completion: the unique Gen-maximal module-only completion of M.
Representation bongartz(const Representation& m,
                        const std::vector<Representation>& candidates = {});

// Co-Bongartz completion (C_M ⊕ M, Q): C_M collects the indecomposable
// tau-rigid N in Gen M outside add M with Hom(M, tau N) = 0; Q collects the
// projectives that do not map to M.
SttObject co_bongartz(const Representation& m,
                      const std::vector<Representation>& candidates = {});

// Split M into its split-projective part (the unique minimal subset of
// summands generating Gen M) and the rest.
struct SplitParts {
  Representation split;
  Representation non_split;
  std::vector<int> split_idx;  // positions in decompose(m) order
};
SplitParts split_projective_split(const Representation& m);

// Multiset equality of g-vectors of indecomposable tau-rigid modules for a
// tensor construction and its base.
bool g_vector_reduction_check(const AlgebraPtr& lam);

}  // namespace taucat
