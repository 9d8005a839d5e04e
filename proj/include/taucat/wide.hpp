#pragma once

#include <memory>
#include <string>
#include <vector>

#include "taucat/tau.hpp"
#include "taucat/twoterm.hpp"

namespace taucat {

// An object of C(A) = mod A ⊕ (mod A)[1]. In the shifted case `m` is the
// projective (or relative projective) in module form.
struct SignedObject {
  Representation m;
  bool shifted = false;
};

// A support tau-rigid pair U = M ⊕ P[1], both parts stored as modules.
struct SupportPair {
  Representation m;
  Representation p;
};

struct WideSubcategory;
using WidePtr = std::shared_ptr<const WideSubcategory>;

// The tau-perpendicular subcategory J(U) together with its reduced algebra
// Gamma = End(B)^op / <e_M> and the data of the equivalence G = Hom(B, -).
// When U has a shifted part the reduction happens over the vertex quotient
// killing the support of P; `core` fields then live over that algebra.
struct WideSubcategory {
  AlgebraPtr ambient;
  SupportPair u;

  bool has_quotient = false;
  VertexQuotient vq;  // ambient -> core algebra (only when has_quotient)

  AlgebraPtr core_algebra;  // equals ambient when no quotient
  Representation core_m;    // M moved to the core algebra
  Representation b;         // Bongartz completion of core_m

  std::vector<RepMorphism> end_basis;    // hom basis of End(b)
  Mat end_to_gamma;                      // End(b) coordinates -> gamma coordinates
  std::vector<RepMorphism> gamma_reps;   // one endomorphism of b per gamma basis element
  std::vector<Representation> b_summands;  // non-M summands of b, in gamma vertex order
  std::vector<RepMorphism> b_incl, b_proj;
  std::vector<Representation> rel_proj;  // f_M(B_i), the relative projectives (core level)

  AlgebraPtr gamma;
  std::vector<Representation> simples;  // ambient form, sorted by dimension vector
};

// The three defining Hom conditions of J(U).
bool j_membership(const SupportPair& u, const Representation& x);

// Build J(U) with all reduction data; results are memoized per (algebra, U).
// `candidates` feeds the tau-rigid enumeration when no generic route applies.
WidePtr jasso_reduction(const AlgebraPtr& a, const SupportPair& u,
                        const std::vector<Representation>& candidates = {});

// G on objects; throws "not in subcategory" when x is not in J(U).
Representation gamma_module(const WideSubcategory& w, const Representation& x);

// Quasi-inverse of G by lifting a minimal Gamma-presentation; the round trip
// G(F(y)) ≅ y is certified. Throws "lift failed".
Representation f_inverse(const WideSubcategory& w, const Representation& y);

// Coordinates of an endomorphism of b in gamma (composition with end_to_gamma).
AlgElem gamma_class(const WideSubcategory& w, const RepMorphism& endo);

// Identity of wide subcategories: equal simple multisets up to isomorphism.
bool same_wide(const WideSubcategory& x, const WideSubcategory& y);

// Homological invariants computed inside J(U) through the equivalence.
// All throw "not in subcategory" when an argument fails membership.
PdResult pd_in_wide(const Representation& x, const WideSubcategory& w, int cap = 32);
int ext_in_wide(const WideSubcategory& w, const Representation& x, const Representation& y,
                int k);
Representation tau_in_wide(const WideSubcategory& w, const Representation& x);

// The reduction bijection: sends V (with U ⊕ V support tau-rigid) to a
// support tau-rigid object of C(J(U)), in ambient form. Throws "not jointly
// rigid" when the compatibility precondition fails.
SignedObject epsilon(const SupportPair& u, const SignedObject& v,
                     const std::vector<Representation>& candidates = {});

// Exhaustive inverse; throws "no preimage" / "non-unique preimage".
SignedObject epsilon_inverse(const SupportPair& u, const SignedObject& w,
                             const std::vector<Representation>& candidates = {});

// The complete list of indecomposable tau-rigid gamma-modules of w, obtained
// as images of the torsion-free parts of the ambient indecomposables
// compatible with w.u. `ambient_tr` feeds the ambient enumeration when no
// generic route applies.
std::vector<Representation> gamma_tau_rigid(const WideSubcategory& w,
                                            const std::vector<Representation>& ambient_tr = {});

// Epsilon computed inside J(W): transports through gamma, reduces there, and
// maps back. Inputs and output are in ambient form.
SignedObject epsilon_in_wide(const WideSubcategory& w, const SupportPair& u,
                             const SignedObject& v);

// The left weak-wide subcategory of the torsion class Gen(t.m): split off the
// split projectives and reduce by the rest.
WidePtr w_left(const SttObject& t, const std::vector<Representation>& candidates = {});

}  // namespace taucat
