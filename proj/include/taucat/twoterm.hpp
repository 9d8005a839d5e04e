#pragma once

#include <vector>

#include "taucat/homology.hpp"
#include "taucat/rep.hpp"
#include "taucat/tau.hpp"

namespace taucat {

// A complex of projectives concentrated in degrees -1 and 0.
struct TwoTermComplex {
  Representation p1, p0;  // degree -1 and degree 0 terms
  RepMorphism d;          // p1 -> p0
  std::vector<int> verts1, verts0;  // projective summand bookkeeping
};

TwoTermComplex presentation_complex(const Representation& m);
TwoTermComplex stalk_complex(const Representation& p);          // (0 -> p)
TwoTermComplex shifted_stalk_complex(const Representation& p);  // (p -> 0)
TwoTermComplex direct_sum_complex(const AlgebraPtr& a,
                                  const std::vector<TwoTermComplex>& parts);
Representation h_zero(const TwoTermComplex& x);       // cokernel of d
Representation h_minus_one(const TwoTermComplex& x);  // kernel of d
TwoTermComplex induce_complex(const AlgebraPtr& lam, const TwoTermComplex& x);

struct ChainMapClass {
  // shift 0: components (f1: x.p1 -> y.p1, f0: x.p0 -> y.p0)
  // shift 1: only f1, a map x.p1 -> y.p0
  // shift -1: only f0, a map x.p0 -> y.p1
  RepMorphism f1, f0;
};

struct HomotopyHomSpace {
  int dim = 0;
  std::vector<ChainMapClass> basis;  // canonical coset representatives
};

// Hom in the homotopy category between two-term complexes, shift in {-1,0,1}.
HomotopyHomSpace hom_upto_homotopy(const TwoTermComplex& x, const TwoTermComplex& y,
                                   int shift);

// Two-term objects attached to the support tau-tilting objects, in the same
// order; each certified presilting with n summands.
std::vector<TwoTermComplex> two_silt(const AlgebraPtr& a);

struct Approximation {
  TwoTermComplex source;
  ChainMapClass map;           // source -> target chain map
  std::vector<int> copy_atom;  // atom index of each surviving source copy
};

// Minimal right approximation of target by finite sums of the given
// indecomposable complexes, computed in the homotopy category.
Approximation minimal_right_approximation(const TwoTermComplex& target,
                                          const std::vector<TwoTermComplex>& atoms);

// Factorization property of a right approximation, checked by solvability.
bool is_right_approximation(const Approximation& appr, const TwoTermComplex& target,
                            const std::vector<TwoTermComplex>& atoms);

struct MinLeftApprox {
  Representation target;
  RepMorphism map;  // v -> target
  std::vector<int> copy_atom;
};

// Minimal left approximation of a module by sums of the given modules.
MinLeftApprox minimal_left_approximation(const Representation& v,
                                         const std::vector<Representation>& atoms);

// The Bongartz-completion summand attached to a signed indecomposable V
// compatible with M: for V in Gen M, H^0 of the shifted cone of a minimal
// right approximation of the presentation of V; for V = Q[1], the target of
// a minimal left approximation of Q into the Bongartz completion.
// Throws "V not in Gen M and not shifted projective".
Representation b_m_v(const Representation& m, const Representation& v, bool v_shifted,
                     const std::vector<Representation>& candidates = {});

}  // namespace taucat
