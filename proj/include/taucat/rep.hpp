#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taucat/algebra.hpp"

namespace taucat {

// A finite dimensional left module, stored as one matrix per algebra basis
// element: act[b] maps the vertex space at basis[b].src to the one at
// basis[b].tgt. Idempotents act as identities.
struct Representation {
  AlgebraPtr algebra;
  std::vector<int> dims;  // one per vertex
  std::vector<Mat> act;   // one per algebra basis element

  int total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
  bool is_zero() const { return total_dim() == 0; }
  const Mat& arrow_matrix(int arrow) const;  // quiver algebras only
};

// A morphism of representations: one matrix per vertex, source coordinates on
// the right (comps[v] has shape dst.dims[v] x src.dims[v]).
struct RepMorphism {
  std::vector<Mat> comps;
};

RepMorphism identity_morphism(const Representation& m);
RepMorphism zero_morphism(const Representation& src, const Representation& dst);
RepMorphism compose(const RepMorphism& f, const RepMorphism& g);  // f after g
RepMorphism add(const RepMorphism& f, const RepMorphism& g);
RepMorphism scale(const RepMorphism& f, const Scalar& c);
bool is_invertible(const RepMorphism& f);
RepMorphism invert(const RepMorphism& f);
bool is_zero(const RepMorphism& f);

// Build a module from matrices for the quiver arrows; validates that the
// matrices satisfy the relations and the nilpotency truncation by checking
// compatibility with the whole multiplication table.
Representation rep_from_arrow_maps(const AlgebraPtr& a, const std::vector<int>& dims,
                                   const std::vector<Mat>& arrow_mats);

// Same validation, but the action of every basis element is given directly.
// Works for algebras without a quiver.
Representation rep_from_action(const AlgebraPtr& a, const std::vector<int>& dims,
                               std::vector<Mat> act);

Representation zero_rep(const AlgebraPtr& a);
Representation simple_rep(const AlgebraPtr& a, int v);
Representation indec_projective(const AlgebraPtr& a, int v);
Representation indec_injective(const AlgebraPtr& a, int v);
Representation free_module(const AlgebraPtr& a);  // all indec projectives once
Representation direct_sum(const AlgebraPtr& a, const std::vector<Representation>& parts);

// The dual module over the opposite algebra (basis elements correspond
// positionally between `a` and `op`).
Representation dualize(const Representation& m, const AlgebraPtr& op);

// Basis of Hom(m, n). Throws "algebra mismatch" if the modules live over
// different algebras.
std::vector<RepMorphism> hom_basis(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);

// Submodule spanned by the given per-vertex column spaces (must be closed
// under the action). `map` is the inclusion. For quotients `map` is the
// projection.
struct SubQuot {
  Representation rep;
  RepMorphism map;
};
SubQuot sub_representation(const Representation& m, const std::vector<Mat>& bases);
SubQuot quotient_representation(const Representation& m, const std::vector<Mat>& bases);

std::vector<Mat> morphism_kernel(const Representation& src, const Representation& dst,
                                 const RepMorphism& f);
std::vector<Mat> morphism_image(const Representation& src, const Representation& dst,
                                const RepMorphism& f);

struct IsoResult {
  bool isomorphic = false;
  RepMorphism witness;        // valid when isomorphic
  std::string certificate;    // how the answer was established
};
IsoResult is_isomorphic(const Representation& m, const Representation& n, unsigned seed = 1);

struct IndecResult {
  bool indecomposable = false;
  bool absolutely = false;  // dim End/rad == 1
  int end_dim = 0;
  int top_dim = 0;  // dim End/rad
};
IndecResult is_indecomposable(const Representation& m);

// Full direct sum decomposition with verified witness: the summand inclusions
// assembled over all copies form an invertible map onto m.
struct Decomposition {
  std::vector<std::pair<Representation, int>> summands;       // indec, multiplicity
  std::vector<std::vector<RepMorphism>> inclusions;           // [summand][copy]
};
Decomposition decompose(const Representation& m, unsigned seed = 1);

// Λ ⊗ M for a tensor algebra Λ = R ⊗ kQ and a module M over the embedded kQ.
Representation induction(const AlgebraPtr& lam, const Representation& m);
// Functorial action on morphisms: identity-on-R tensor f.
RepMorphism induction_map(const AlgebraPtr& lam, const RepMorphism& f);
// Forget the loop actions; result is a module over the embedded kQ.
Representation restriction(const Representation& n);

// Move a module with no support on the dropped vertices to the quotient
// algebra, and back. Both validate against the target multiplication table.
Representation restrict_to_quotient(const Representation& x, const VertexQuotient& vq);
Representation embed_from_quotient(const Representation& y, const AlgebraPtr& a,
                                   const VertexQuotient& vq);

// End(m)-radical membership via the trace form tr(h ∘ h_b) against an End
// basis (faithful module, characteristic zero).
bool in_end_radical(const Representation& m, const std::vector<RepMorphism>& end_basis,
                    const RepMorphism& h);

}  // namespace taucat
