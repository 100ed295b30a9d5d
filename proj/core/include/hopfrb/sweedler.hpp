#pragma once

#include <vector>

#include "hopfrb/hopf.hpp"

namespace hopfrb {

struct BimoduleAction;
struct BicomoduleCoaction;

/// An exact element of a tensor product of based Hopf-algebra carriers,
/// together with the carrier of every slot.  This is the evaluator for
/// Heyneman-Sweedler expressions: identities are transcribed as chains of
/// slot operations and the resulting tensors compared entrywise.
///
/// Slot bookkeeping: every operation returns a new value.  Operations that
/// consume two slots keep the result at the position of the surviving slot
/// (stated per operation); the remaining slots keep their relative order.
/// One convention is global: tensor-product bases are paired row-major.
class SweedlerTensor {
public:
  SweedlerTensor(const FiniteHopfAlgebra& h, const Vec& x);

  std::size_t slots() const { return algebras_.size(); }
  const FiniteHopfAlgebra& algebra(std::size_t slot) const { return *algebras_.at(slot); }
  const SparseTensor& tensor() const { return tensor_; }

  /// Δ on one slot; the two legs sit at `slot` and `slot`+1.
  SweedlerTensor comult(std::size_t slot) const;
  /// Splits a slot into `legs` legs, left-leaning.
  SweedlerTensor comult_iter(std::size_t slot, std::size_t legs) const;
  /// Applies a linear map to one slot (carrier unchanged).
  SweedlerTensor apply(std::size_t slot, const LinearOperator& f) const;
  SweedlerTensor antipode(std::size_t slot) const;
  /// Contracts one slot with ε and drops it.
  SweedlerTensor counit(std::size_t slot) const;
  /// Product (slot a)·(slot b) in that order; result replaces a, b is dropped.
  SweedlerTensor multiply(std::size_t a, std::size_t b) const;
  /// Left-to-right product of `count` consecutive slots starting at `first`.
  SweedlerTensor multiply_range(std::size_t first, std::size_t count) const;
  SweedlerTensor permute(const std::vector<std::size_t>& perm) const;
  SweedlerTensor outer(const SweedlerTensor& o) const;

  /// h ▷ a: consumes h_slot, result replaces a_slot.
  SweedlerTensor act_left(const BimoduleAction& act, std::size_t h_slot, std::size_t a_slot) const;
  /// a ◁ h: consumes h_slot, result replaces a_slot.
  SweedlerTensor act_right(const BimoduleAction& act, std::size_t a_slot, std::size_t h_slot) const;
  /// ρˡ on a C-slot; legs (H, C) at positions slot, slot+1.
  SweedlerTensor coact_left(const BicomoduleCoaction& coact, std::size_t slot) const;
  /// ρʳ on a C-slot; legs (C, H) at positions slot, slot+1.
  SweedlerTensor coact_right(const BicomoduleCoaction& coact, std::size_t slot) const;

  Vec to_vec() const;  // requires exactly one slot
  bool same_shape(const SweedlerTensor& o) const;
  bool operator==(const SweedlerTensor& o) const;
  bool operator!=(const SweedlerTensor& o) const { return !(*this == o); }

private:
  SweedlerTensor(std::vector<const FiniteHopfAlgebra*> algebras, SparseTensor tensor)
      : algebras_(std::move(algebras)), tensor_(std::move(tensor)) {}

  std::vector<const FiniteHopfAlgebra*> algebras_;
  SparseTensor tensor_;
};

}  // namespace hopfrb
