#pragma once

#include <functional>
#include <span>

#include "hopfrb/rota_baxter.hpp"

namespace hopfrb {

/// A set map B on a finite group, B(g_i) = g_{images[i]}, recorded together
/// with its group.
struct GroupRBMap {
  FiniteGroup group;
  std::vector<std::size_t> images;
};

/// B(g)B(h) = B(gB(g)hB(g)⁻¹) over all pairs.
bool group_rb_identity_holds(const FiniteGroup& g, std::span<const std::size_t> images);

/// All set maps satisfying the group identity, in lexicographic order of
/// their image tuples.  Exhausts |G|^|G| candidates; refuses |G| beyond
/// max_order.
std::vector<GroupRBMap> enumerate_group_rb(const FiniteGroup& g, std::size_t max_order = 8);

/// Linear extension of a group-level map to k[G].
RBOperatorCandidate linearize_group_rb(const GroupRBMap& m, const Field& f);

/// Streams every linear extension of a set map on the basis of a pointed
/// carrier (all basis vectors grouplike), lexicographically by image tuple.
void for_each_pointed_set_map(
    const FiniteHopfAlgebra& h,
    const std::function<void(std::span<const std::size_t>, const LinearOperator&)>& fn);

/// All |n|^n linear extensions of basis set maps; these are exactly the
/// coalgebra endomorphisms preserving the grouplike basis.  Throws when the
/// candidate count exceeds max_candidates.
std::vector<LinearOperator> enumerate_coalgebra_endos_pointed(const FiniteHopfAlgebra& h,
                                                              std::size_t max_candidates = 100000);

/// Forms the transpose of an operator-kind candidate on a commutative and
/// cocommutative carrier and reports the co-operator suite on the dual.
VerificationReport transpose_duality_check(const RBOperatorCandidate& b);

struct HarnessVerdict {
  std::size_t index = 0;
  std::vector<std::size_t> images;
  bool conditions_pass = false;
  bool lift_pass = false;
};

struct HarnessSummary {
  std::size_t total = 0;
  std::size_t passing = 0;    // candidates where both predicates hold
  bool equivalence = true;    // conditions_pass == lift_pass on every candidate
  std::vector<HarnessVerdict> verdicts;
};

/// For every coalgebra endomorphism R of act.a() preserving the grouplike
/// basis: evaluates the condition suite (tags 2a, 2b plus R's own checks)
/// and independently whether the lifted map passes the operator suite on
/// the smash product, then compares the two predicates.
HarnessSummary iff_harness_2a2b(const BimoduleAction& act, const RBOperatorCandidate& b,
                                std::size_t jobs = 1);

/// Mirror harness on the coproduct side: candidates are the transposes of
/// the set-map family on linear_dual(coact.c()).
HarnessSummary iff_harness_3c3d(const BicomoduleCoaction& coact, const RBOperatorCandidate& b,
                                std::size_t jobs = 1);

}  // namespace hopfrb
