#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "taucat/mat.hpp"

namespace taucat {

struct ArrowDef {
  std::string label;
  int src = 0;
  int tgt = 0;
};

struct Quiver {
  std::vector<std::string> vertices;  // display labels
  std::vector<ArrowDef> arrows;
  int n() const { return int(vertices.size()); }
};

// One term of a relation: coeff * (arrow path in traversal order, i.e. the
// first entry is applied first when acting on a representation).
struct RelTerm {
  Scalar coeff;
  std::vector<int> path;  // arrow indices
};
using Relation = std::vector<RelTerm>;

// A basis element of the algebra, living in e_tgt · A · e_src. The empty path
// is the idempotent e_src (src == tgt). Paths are stored in traversal order.
struct BasisElem {
  int src = 0;
  int tgt = 0;
  std::vector<int> path;
};

inline bool operator==(const BasisElem& a, const BasisElem& b) {
  return a.src == b.src && a.tgt == b.tgt && a.path == b.path;
}

// Sparse row of structure constants: product expressed over the basis.
using AlgElem = std::vector<std::pair<int, Scalar>>;  // (basis index, coeff), sorted by index

AlgElem alg_add(const AlgElem& a, const AlgElem& b);
AlgElem alg_scale(const AlgElem& a, const Scalar& s);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Provenance of a tensor construction Λ = R ⊗ kQ.
struct TensorInfo {
  AlgebraPtr base_quiver;  // kQ
  AlgebraPtr local;        // R, on one vertex
  // Arrow bookkeeping in the big quiver Q': loops first (vertex-major, then
  // generator order of R), then the embedded arrows of Q in their original
  // order.
  int loops_per_vertex = 0;
  std::vector<int> embedded_arrow;       // Q arrow index -> Q' arrow index
  std::vector<std::vector<int>> loop_arrow;  // [vertex][gen] -> Q' arrow index
  // Quotient map killing all loops: Λ basis index -> kQ basis index, or -1.
  std::vector<int> loop_free_image;
};

// A finite dimensional basic algebra with a chosen basis and multiplication
// table. Quiver algebras carry a quiver and representative paths; algebras
// built from raw structure constants (e.g. endomorphism quotients) have no
// quiver but still expose idempotent blocks through src/tgt tags.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  std::optional<Quiver> quiver;
  std::vector<Relation> relations;  // only for quiver algebras
  int m = 0;                        // nilpotency bound (paths of length >= m vanish)

  std::vector<BasisElem> basis;  // idempotents first: basis[i] = e_i for i < n()
  // mult[i][j] = basis[i] * basis[j]; the product is "apply j first, then i"
  // and is zero unless basis[j].tgt == basis[i].src.
  std::vector<std::vector<AlgElem>> mult;

  std::optional<TensorInfo> tensor;

  // Radical as basis indices (quiver algebras) or as a coefficient matrix
  // (columns = radical basis vectors over the algebra basis).
  Mat radical_basis;  // dim x r

  int n() const { return n_; }
  int dim() const { return int(basis.size()); }
  std::string vertex_label(int v) const;

  // Product of two general elements.
  AlgElem multiply(const AlgElem& a, const AlgElem& b) const;
  AlgElem unit() const;

  // Left multiplication matrix of basis element g on the whole algebra.
  Mat left_mult_matrix(int g) const;

  bool is_commutative() const;
  bool is_local() const;  // dim(A / rad A) == 1

  void set_vertex_count(int n) { n_ = n; }

 private:
  int n_ = 0;
};

// --- constructors -----------------------------------------------------------

// Bound quiver algebra kQ/(relations + all paths of length >= m).
// Throws "relation not parallel" / "not admissible at bound m".
AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& relations, int m);

// Λ = R ⊗ kQ for a one-vertex algebra R and an acyclic quiver Q.
// Throws "quiver has oriented cycle" and propagates build errors.
AlgebraPtr tensor_construction(const AlgebraPtr& r, const Quiver& q);

// Wrap raw structure constants. `idempotents` are orthogonal idempotents
// summing to the unit, given as coefficient columns over the raw basis.
// Throws "unit mismatch" / "not associative". When `basis_cols` is given it
// receives the change of basis: column c holds the raw coordinates of the
// constructed algebra's basis element c.
AlgebraPtr algebra_from_structure_constants(int dim, const std::vector<Mat>& idempotents,
                                            const std::vector<std::vector<AlgElem>>& table,
                                            Mat* basis_cols = nullptr);

// Opposite algebra (arrows reversed, table transposed). For quiver algebras
// the result is again a quiver algebra over the reversed quiver.
AlgebraPtr opposite(const AlgebraPtr& a);

// Kill the vertices in `drop` (quotient by the two-sided ideal generated by
// their idempotents). Vertices keep their relative order; `vertex_map` gives
// old index -> new index or -1. `section` lifts quotient basis elements to
// source basis indices; `proj` expands each source basis element over the
// quotient basis (empty when it dies). Together they move modules across the
// quotient in either direction.
struct VertexQuotient {
  AlgebraPtr algebra;
  std::vector<int> vertex_map;
  std::vector<int> section;
  std::vector<AlgElem> proj;
};
VertexQuotient idempotent_quotient(const AlgebraPtr& a, const std::vector<bool>& drop);

// --- quiver shape ------------------------------------------------------------

struct DynkinClass {
  bool dynkin = false;
  std::string label;              // e.g. "A2", "D4", "A2+A1", "not-Dynkin"
  long long positive_roots = 0;   // summed over components when Dynkin
};
DynkinClass is_dynkin(const Quiver& q);

bool is_acyclic(const Quiver& q);

}  // namespace taucat
