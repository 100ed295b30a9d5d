#pragma once

#include "hopfrb/action.hpp"

namespace hopfrb {

/// Hopf algebra on A⊗H with the twisted multiplication
///   (a⊗h)(b⊗g) = (a◁g₂)(h₁▷b) ⊗ h₂g₁,
/// tensor-product coalgebra, and antipode
///   S(a⊗h) = S(h₃)▷S(a)◁S(h₂) ⊗ S(h₁).
/// Basis pairing is row-major with the A index major: (i,j) ↦ i·dim(H)+j.
class SmashProductAlgebra {
public:
  const FiniteHopfAlgebra& algebra() const { return algebra_; }
  const FiniteHopfAlgebra& factor_a() const { return action_.a(); }
  const FiniteHopfAlgebra& factor_h() const { return action_.h(); }
  const BimoduleAction& action() const { return action_; }
  std::size_t pair_index(std::size_t ai, std::size_t hi) const {
    return ai * action_.h().dim() + hi;
  }

private:
  friend SmashProductAlgebra lr_smash_product(const FiniteHopfAlgebra&, const FiniteHopfAlgebra&,
                                              const BimoduleAction&);
  SmashProductAlgebra(FiniteHopfAlgebra algebra, BimoduleAction action)
      : algebra_(std::move(algebra)), action_(std::move(action)) {}

  FiniteHopfAlgebra algebra_;
  BimoduleAction action_;
};

/// Hopf algebra on C⊗H with componentwise multiplication and the twisted
/// comultiplication
///   Δ(c⊗h) = (c₁₍₀₎' ⊗ c₂₍₋₁₎h₁) ⊗ (c₂₍₀₎ ⊗ h₂c₁₍₁₎),
/// antipode S(c⊗h) = S(c₍₀₎₍₀₎') ⊗ S(c₍₋₁₎ c₍₀₎₍₁₎ h).
/// Basis pairing is row-major with the C index major.
class SmashCoproductAlgebra {
public:
  const FiniteHopfAlgebra& algebra() const { return algebra_; }
  const FiniteHopfAlgebra& factor_c() const { return coaction_.c(); }
  const FiniteHopfAlgebra& factor_h() const { return coaction_.h(); }
  const BicomoduleCoaction& coaction() const { return coaction_; }
  std::size_t pair_index(std::size_t ci, std::size_t hi) const {
    return ci * coaction_.h().dim() + hi;
  }

private:
  friend SmashCoproductAlgebra lr_smash_coproduct(const FiniteHopfAlgebra&,
                                                  const FiniteHopfAlgebra&,
                                                  const BicomoduleCoaction&);
  SmashCoproductAlgebra(FiniteHopfAlgebra algebra, BicomoduleCoaction coaction)
      : algebra_(std::move(algebra)), coaction_(std::move(coaction)) {}

  FiniteHopfAlgebra algebra_;
  BicomoduleCoaction coaction_;
};

/// h₁▷a⊗h₂ = h₂▷a⊗h₁ and a◁h₁⊗h₂ = a◁h₂⊗h₁ over all basis pairs.
/// Both hold automatically when H is cocommutative.
VerificationReport check_conditions_1ab(const BimoduleAction& act);

/// c₍₋₁₎h⊗c₍₀₎ = hc₍₋₁₎⊗c₍₀₎ and c₍₀₎⊗c₍₁₎h = c₍₀₎⊗hc₍₁₎ over all basis
/// pairs.  Both hold automatically when H is commutative.
VerificationReport check_conditions_1cd(const BicomoduleCoaction& coact);

/// Validates every precondition a smash product needs (throws
/// PreconditionError otherwise): A, H verified Hopf, A cocommutative, the
/// full bimodule suite, S_A bilinear, and the two compatibility conditions.
void require_smash_preconditions(const BimoduleAction& act);

/// Same for the coproduct side: C, H verified, C commutative, bicomodule
/// suite, S_C bicolinear, compatibility conditions.
void require_cosmash_preconditions(const BicomoduleCoaction& coact);

/// Builds the L-R smash product.  Refuses to build on failed preconditions.
SmashProductAlgebra lr_smash_product(const FiniteHopfAlgebra& a, const FiniteHopfAlgebra& h,
                                     const BimoduleAction& act);

/// Builds the L-R smash coproduct.  Refuses to build on failed preconditions.
SmashCoproductAlgebra lr_smash_coproduct(const FiniteHopfAlgebra& c, const FiniteHopfAlgebra& h,
                                         const BicomoduleCoaction& coact);

/// The tensor-product Hopf algebra A⊗H (both structures componentwise);
/// the degeneration of either smash construction at trivial (co)actions.
FiniteHopfAlgebra tensor_product_hopf(const FiniteHopfAlgebra& a, const FiniteHopfAlgebra& h);

}  // namespace hopfrb
