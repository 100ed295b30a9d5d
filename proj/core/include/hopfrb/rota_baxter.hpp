#pragma once

#include "hopfrb/smash.hpp"

namespace hopfrb {

enum class RBKind { Operator, CoOperator };

/// A candidate map on a Hopf algebra carrier.  Operator kind (the identity
/// B(x)B(y) = B(x₁B(x₂)yS(B(x₃)))) needs a cocommutative carrier; co-operator
/// kind (the dual identity, tag 3a) needs a commutative one.  Construction
/// enforces the carrier requirement; whether the map is a (co)algebra map is
/// reported by the checkers, not assumed.
struct RBOperatorCandidate {
  RBOperatorCandidate(FiniteHopfAlgebra carrier_, LinearOperator map_, RBKind kind_);

  FiniteHopfAlgebra carrier;
  LinearOperator map;
  RBKind kind;
};

/// ε(x)1 — an operator of either kind on any carrier.
LinearOperator counit_unit_operator(const FiniteHopfAlgebra& h);

/// Entries: coalgebra-map checks plus the identity
/// B(x)B(y) = B(x₁B(x₂)yS(B(x₃))) over all basis pairs.
VerificationReport is_rb_operator(const RBOperatorCandidate& cand);

/// Entries: algebra-map checks plus the identity
/// B(x₁)⊗B(x₂) = B(x)₁B(B(x)₂S(B(x)₄))⊗B(x)₃ (tag 3a) over all basis elements.
VerificationReport is_rb_co_operator(const RBOperatorCandidate& cand);

/// ε∘B = ε on all basis elements (a consequence for every co-operator).
VerificationReport check_counit_identity(const RBOperatorCandidate& cand);

/// The lifted operator on A⋊H:
///   B̄(a⊗h) = B(h₁)▷R(a)◁B(h₂) ⊗ B(h₃).
/// Validates the smash preconditions and that B passes is_rb_operator.
LinearOperator lift_rb_operator(const LinearOperator& r, const RBOperatorCandidate& b,
                                const BimoduleAction& act);

/// The B = S_H specialization: B̄(a⊗h) = S(h₁)▷R(a)◁S(h₂) ⊗ S(h₃).
LinearOperator lift_rb_operator_via_antipode(const LinearOperator& r, const BimoduleAction& act);

/// Conditions tying R, B, and the action on the product side (tags 2a, 2b),
/// together with R being a coalgebra map and R satisfying the operator
/// identity on A.  The lift is a Rota-Baxter operator iff all four hold.
VerificationReport check_conditions_2a2b(const LinearOperator& r, const RBOperatorCandidate& b,
                                         const BimoduleAction& act);

/// Diagnostic identities from the product-side derivation (tags 2c, 2d);
/// implied by 2a2b, not part of the equivalence.
VerificationReport check_internal_2c2d(const LinearOperator& r, const RBOperatorCandidate& b,
                                       const BimoduleAction& act);

/// Sufficient conditions for the B = S_H lift (tags COR24-A, COR24-B).
VerificationReport check_conditions_cor24(const LinearOperator& r, const BimoduleAction& act);

/// Conditions for the R = S_A lift B̄(a⊗h) = B(h₁)▷S(a)◁B(h₂)⊗B(h₃)
/// (tags COR25-A, COR25-B) plus an equivalence cross-check against
/// is_rb_operator of the built lift.
VerificationReport check_conditions_cor25(const RBOperatorCandidate& b,
                                          const BimoduleAction& act);

/// The lifted co-operator on C⋉H:
///   B̃(c⊗h) = R(c₍₀₎₍₀₎') ⊗ B(c₍₋₁₎ c₍₀₎₍₁₎ h).
/// Validates the coproduct preconditions and that B passes is_rb_co_operator.
LinearOperator lift_rb_co_operator(const LinearOperator& r, const RBOperatorCandidate& b,
                                   const BicomoduleCoaction& coact);

/// The B = S_H specialization of the co-operator lift.
LinearOperator lift_rb_co_operator_via_antipode(const LinearOperator& r,
                                                const BicomoduleCoaction& coact);

/// Coproduct-side conditions (tags 3c, 3d) together with R being an algebra
/// map and R satisfying the co-operator identity on C.  The lift satisfies
/// the co-operator identity iff all four hold.
VerificationReport check_conditions_3c3d(const LinearOperator& r, const RBOperatorCandidate& b,
                                         const BicomoduleCoaction& coact);

/// Diagnostic four-tensor identity from the coproduct-side derivation
/// (tag 3b).
VerificationReport check_internal_3b(const LinearOperator& r, const RBOperatorCandidate& b,
                                     const BicomoduleCoaction& coact);

/// Trivial-right-coaction specialization (tags 3f, 3g) with iff cross-check.
/// Requires ρʳ(c) = c⊗1.
VerificationReport check_conditions_cor34(const LinearOperator& r, const RBOperatorCandidate& b,
                                          const BicomoduleCoaction& coact);

/// R = S_C specialization (tags 3h, 3i) with iff cross-check.
VerificationReport check_conditions_cor35(const RBOperatorCandidate& b,
                                          const BicomoduleCoaction& coact);

/// B = S_H specialization (tags 3j, 3k) with iff cross-check.
VerificationReport check_conditions_cor36(const LinearOperator& r,
                                          const BicomoduleCoaction& coact);

}  // namespace hopfrb
