#pragma once

#include "hopfrb/hopf.hpp"

namespace hopfrb {

/// Left and right actions of a Hopf algebra H on a bialgebra A, given as
/// structure tensors:
///   left  (h-index, a-index; a-index)   for h ▷ a
///   right (a-index, h-index; a-index)   for a ◁ h
/// Construction checks shapes only; the axioms are the verifiers' business.
class BimoduleAction {
public:
  BimoduleAction(FiniteHopfAlgebra h, FiniteHopfAlgebra a, SparseTensor left, SparseTensor right);

  /// h ▷ a = ε(h)a, a ◁ h = ε(h)a.
  static BimoduleAction trivial(const FiniteHopfAlgebra& h, const FiniteHopfAlgebra& a);

  const FiniteHopfAlgebra& h() const { return h_; }
  const FiniteHopfAlgebra& a() const { return a_; }
  const SparseTensor& left() const { return left_; }
  const SparseTensor& right() const { return right_; }

  Vec act_left(const Vec& hx, const Vec& ax) const;
  Vec act_right(const Vec& ax, const Vec& hx) const;

  bool left_is_trivial() const;
  bool right_is_trivial() const;

  /// Cached suites; copies of the action share the cache.
  const VerificationReport& bimodule_report() const;
  const VerificationReport& bilinearity_report() const;

private:
  FiniteHopfAlgebra h_, a_;
  SparseTensor left_, right_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// Left and right coactions of H on a bialgebra C:
///   left  (c-index; h-index, c-index)   for ρˡ(c) ∈ H⊗C
///   right (c-index; c-index, h-index)   for ρʳ(c) ∈ C⊗H
class BicomoduleCoaction {
public:
  BicomoduleCoaction(FiniteHopfAlgebra h, FiniteHopfAlgebra c, SparseTensor left,
                     SparseTensor right);

  /// ρˡ(c) = 1⊗c, ρʳ(c) = c⊗1.
  static BicomoduleCoaction trivial(const FiniteHopfAlgebra& h, const FiniteHopfAlgebra& c);

  const FiniteHopfAlgebra& h() const { return h_; }
  const FiniteHopfAlgebra& c() const { return c_; }
  const SparseTensor& left() const { return left_; }
  const SparseTensor& right() const { return right_; }

  /// ρˡ(x) as an (H, C) tensor.
  SparseTensor coact_left(const Vec& x) const;
  /// ρʳ(x) as a (C, H) tensor.
  SparseTensor coact_right(const Vec& x) const;

  bool left_is_trivial() const;
  bool right_is_trivial() const;

  /// Cached suites; copies of the coaction share the cache.
  const VerificationReport& bicomodule_report() const;
  const VerificationReport& bicolinearity_report() const;

private:
  FiniteHopfAlgebra h_, c_;
  SparseTensor left_, right_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// Module laws, measuring, and coalgebra-compatibility of both actions,
/// checked over all basis tuples.
VerificationReport verify_bimodule_bialgebra(const BimoduleAction& act);

/// S_A(h▷a) = h▷S_A(a) and S_A(a◁h) = S_A(a)◁h.
VerificationReport verify_antipode_bilinear(const BimoduleAction& act);

/// Comodule laws, multiplicativity, and coalgebra-compatibility of both
/// coactions, over all basis tuples.
VerificationReport verify_bicomodule_bialgebra(const BicomoduleCoaction& coact);

/// ρˡ∘S_C = (id⊗S_C)∘ρˡ and ρʳ∘S_C = (S_C⊗id)∘ρʳ.
VerificationReport verify_antipode_bicolinear(const BicomoduleCoaction& coact);

/// Transposes a verified bimodule action into a bicomodule coaction of
/// linear_dual(H) on linear_dual(A).
BicomoduleCoaction dualize_action(const BimoduleAction& act);

}  // namespace hopfrb
