#pragma once

#include <array>
#include <string>
#include <vector>

#include "taucat/sequences.hpp"

namespace taucat {

// A morphism g_U out of a tau-perpendicular subcategory: U is a basic support
// tau-rigid object of the source, kept both over the source's gamma algebra
// and in ambient form. Parts are stored in a fixed canonical order; the empty
// U is the identity.
struct ClusterMorphism {
  int src = 0;
  int tgt = 0;
  std::vector<SignedObject> parts_local;
  std::vector<SignedObject> parts_ambient;
};

struct ClusterObject {
  WidePtr w;
  SupportPair defining;  // first support tau-rigid pair found with this reduction
  std::string key;       // "mod" for the whole category, "0" for zero, else "W<k>"
};

// The cluster morphism category of a tau-tilting finite algebra, with the
// composition table fully materialized.
struct ClusterCategory {
  AlgebraPtr algebra;
  std::vector<Representation> tau_rigid;   // ambient indecomposable tau-rigid pool
  std::vector<ClusterObject> objects;      // simple count descending, then key
  std::vector<ClusterMorphism> morphisms;  // grouped by source object
  std::vector<std::vector<std::vector<int>>> hom;  // hom[i][j] = morphism ids
  std::vector<int> identity;               // identity[i] = id of g_0 at object i
  std::vector<std::vector<int>> compose;   // compose[g][f] = g after f, -1 if undefined
};

// Objects from all basic support tau-rigid objects (deduplicated), morphisms
// per source from the reduced algebra's own support tau-rigid objects,
// composition resolved through epsilon_inverse over the source. Unit and
// associativity laws are checked exhaustively before returning. `candidates`
// feeds enumeration when no generic route applies.
// Throws "τ-tilting infinite input" when the input is hereditary (or a tensor
// over a hereditary base) of non-Dynkin type.
ClusterCategory build_category(const AlgebraPtr& a,
                               const std::vector<Representation>& candidates = {});

struct ClusterFunctor {
  std::vector<int> object_map;    // down object index -> up object index
  std::vector<int> morphism_map;  // down morphism id -> up morphism id
};

// The induced functor from the category of the base algebra to the category
// of its tensor extension. Verifies the object bijection, a bijection on
// every Hom set, preservation of identities, and functoriality on the whole
// composition table; throws on any failure.
ClusterFunctor build_functor(const ClusterCategory& down, const ClusterCategory& up);

// All factorizations of a morphism into irreducibles (tokens with one
// indecomposable part), each certified against the composition table. The
// identity has exactly one, empty, factorization.
std::vector<std::vector<int>> factorizations(const ClusterCategory& cat, int morphism_id);

// Computes the object set three ways — reductions of all basic support
// tau-rigid objects, left wide subcategories of all torsion classes, and
// duals of the right-hand analogue over the opposite algebra — and checks the
// three key sets coincide. Returns a report; throws on mismatch.
std::string conjecture_check(const AlgebraPtr& a,
                             const std::vector<Representation>& candidates = {});

// "dot": digraph of irreducible morphisms with deterministic node and edge
// order. "structured": full dump (objects, morphisms, identities, composition
// table) that parse_structured reads back.
std::string export_category(const ClusterCategory& cat, const std::string& format);

// Structural shadow of a category (keys, dimension vectors, tables) used for
// the export round-trip.
struct SkeletonPart {
  std::vector<int> dims;
  bool shifted = false;
  bool operator==(const SkeletonPart&) const = default;
  auto operator<=>(const SkeletonPart&) const = default;
};
struct SkeletonObject {
  std::string key;
  std::vector<std::vector<int>> simples;
  bool operator==(const SkeletonObject&) const = default;
};
struct SkeletonMorphism {
  int src = 0;
  int tgt = 0;
  std::vector<SkeletonPart> parts;
  bool operator==(const SkeletonMorphism&) const = default;
};
struct ClusterSkeleton {
  std::vector<SkeletonObject> objects;
  std::vector<SkeletonMorphism> morphisms;
  std::vector<int> identity;
  std::vector<std::array<int, 3>> compose;  // (g, f, g∘f), sorted
  bool operator==(const ClusterSkeleton&) const = default;
};

ClusterSkeleton skeleton(const ClusterCategory& cat);
ClusterSkeleton parse_structured(const std::string& text);

}  // namespace taucat
