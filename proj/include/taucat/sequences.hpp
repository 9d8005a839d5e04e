#pragma once

#include <string>
#include <vector>

#include "taucat/wide.hpp"

namespace taucat {

// An ordered tuple of indecomposable signed objects whose direct sum is a
// basic support tau-rigid object.
struct OrderedSupportRigid {
  std::vector<SignedObject> objects;
};

// A signed tau-exceptional sequence together with its certificate chain:
// entries[k] is an indecomposable support tau-rigid object of C(chain[k]),
// chain[k-1] is the reduction of chain[k] by entries[k], and chain.back()
// is the whole module category. Entries are stored in ambient form.
struct SignedSequence {
  std::vector<SignedObject> entries;
  std::vector<WidePtr> chain;
};

bool same_signed_object(const SignedObject& x, const SignedObject& y);
bool same_sequence(const SignedSequence& x, const SignedSequence& y);
bool same_ordered(const OrderedSupportRigid& x, const OrderedSupportRigid& y);

// All ordered support tau-rigid tuples of length t, enumerated from the
// pairwise-compatible indecomposables.
std::vector<OrderedSupportRigid> ordered_support_rigid(
    const AlgebraPtr& a, int t, const std::vector<Representation>& candidates = {});

// All signed tau-exceptional sequences of length t, by the recursive
// definition: choose the last entry, reduce by it, enumerate over the
// reduced algebra, transport the inner entries back. The unsigned list is
// the signed one filtered to module-only entries.
std::vector<SignedSequence> enumerate_tau_exceptional(
    const AlgebraPtr& a, int t, bool with_signs,
    const std::vector<Representation>& candidates = {});

// Classical exceptional sequences by brute force over ordered tuples of
// indecomposables. Throws "not hereditary".
std::vector<std::vector<Representation>> classical_exceptional(const AlgebraPtr& a, int t);

// The mutually inverse bijections between ordered support tau-rigid tuples
// and signed sequences: psi reduces each object by the sum of its successors,
// phi inverts level by level.
SignedSequence psi(const AlgebraPtr& a, const OrderedSupportRigid& ordered,
                   const std::vector<Representation>& candidates = {});
OrderedSupportRigid phi(const AlgebraPtr& a, const SignedSequence& seq,
                        const std::vector<Representation>& candidates = {});

// Rebuild the certificate chain for the given ambient entries; throws when
// they do not form a signed tau-exceptional sequence.
SignedSequence make_sequence(const AlgebraPtr& a, std::vector<SignedObject> entries,
                             const std::vector<Representation>& candidates = {});

// Re-validation: chain alignment and every entry indecomposable support
// tau-rigid at its level. Returns false instead of throwing.
bool verify_sequence(const AlgebraPtr& a, const SignedSequence& seq,
                     const std::vector<Representation>& candidates = {});

// Entrywise induction of a sequence over the base quiver algebra of lam,
// with the certificate chain rebuilt upstairs.
SignedSequence induce_sequence(const AlgebraPtr& lam, const SignedSequence& seq);

// Checks that entrywise induction maps the downstairs length-t enumeration
// bijectively onto the upstairs one and that it commutes with psi. Returns a
// short text report; throws on any mismatch.
std::string verify_sequence_bijection(const AlgebraPtr& kq, const AlgebraPtr& lam, int t);

}  // namespace taucat
