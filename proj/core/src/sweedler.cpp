#include "hopfrb/sweedler.hpp"

#include "detail_prefix.hpp"
#include "hopfrb/action.hpp"

namespace hopfrb {

namespace {

Index erased(const Index& idx, std::size_t pos) {
  Index r = idx;
  r.erase(r.begin() + static_cast<std::ptrdiff_t>(pos));
  return r;
}

}  // namespace

SweedlerTensor::SweedlerTensor(const FiniteHopfAlgebra& h, const Vec& x)
    : algebras_{&h}, tensor_(x) {
  if (x.arity() != 1 || x.dims()[0] != h.dim() || x.field() != h.field())
    throw std::invalid_argument("element does not live in the given algebra");
}

SweedlerTensor SweedlerTensor::comult(std::size_t slot) const {
  const FiniteHopfAlgebra& alg = algebra(slot);
  auto algebras = algebras_;
  algebras.insert(algebras.begin() + static_cast<std::ptrdiff_t>(slot) + 1, &alg);
  auto dims = tensor_.dims();
  dims.insert(dims.begin() + static_cast<std::ptrdiff_t>(slot) + 1, alg.dim());
  SparseTensor out(dims, tensor_.field());
  for (const auto& [idx, c] : tensor_.entries())
    detail::for_prefix(alg.comult_tensor().entries(), {idx[slot]},
                       [&](const Index& d, const Scalar& dc) {
                         Index nidx = idx;
                         nidx[slot] = d[1];
                         nidx.insert(nidx.begin() + static_cast<std::ptrdiff_t>(slot) + 1, d[2]);
                         out.add(nidx, c * dc);
                       });
  return SweedlerTensor(std::move(algebras), std::move(out));
}

SweedlerTensor SweedlerTensor::comult_iter(std::size_t slot, std::size_t legs) const {
  if (legs == 0) throw std::invalid_argument("at least one leg required");
  SweedlerTensor r = *this;
  for (std::size_t i = 1; i < legs; ++i) r = r.comult(slot);
  return r;
}

SweedlerTensor SweedlerTensor::apply(std::size_t slot, const LinearOperator& f) const {
  const std::size_t d = tensor_.dims().at(slot);
  if (f.dim() != d) throw std::invalid_argument("operator does not fit slot");
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(d);
  for (const auto& [rc, v] : f.matrix().entries()) cols[rc[1]].emplace_back(rc[0], v);
  SparseTensor out(tensor_.dims(), tensor_.field());
  for (const auto& [idx, c] : tensor_.entries())
    for (const auto& [row, fc] : cols[idx[slot]]) {
      Index nidx = idx;
      nidx[slot] = row;
      out.add(nidx, c * fc);
    }
  return SweedlerTensor(algebras_, std::move(out));
}

SweedlerTensor SweedlerTensor::antipode(std::size_t slot) const {
  return apply(slot, algebra(slot).antipode());
}

SweedlerTensor SweedlerTensor::counit(std::size_t slot) const {
  const FiniteHopfAlgebra& alg = algebra(slot);
  auto algebras = algebras_;
  algebras.erase(algebras.begin() + static_cast<std::ptrdiff_t>(slot));
  SparseTensor out(erased(tensor_.dims(), slot), tensor_.field());
  for (const auto& [idx, c] : tensor_.entries())
    out.add(erased(idx, slot), c * alg.counit_vector().at({idx[slot]}));
  return SweedlerTensor(std::move(algebras), std::move(out));
}

SweedlerTensor SweedlerTensor::multiply(std::size_t a, std::size_t b) const {
  if (a == b) throw std::invalid_argument("cannot multiply a slot with itself");
  const FiniteHopfAlgebra& alg = algebra(a);
  if (&alg != algebras_[b] && !same_structure(alg, algebra(b)))
    throw std::invalid_argument("multiplying slots from different algebras");
  auto algebras = algebras_;
  algebras.erase(algebras.begin() + static_cast<std::ptrdiff_t>(b));
  SparseTensor out(erased(tensor_.dims(), b), tensor_.field());
  for (const auto& [idx, c] : tensor_.entries())
    detail::for_prefix(alg.mult_tensor().entries(), {idx[a], idx[b]},
                       [&](const Index& m, const Scalar& mc) {
                         Index nidx = idx;
                         nidx[a] = m[2];
                         out.add(erased(nidx, b), c * mc);
                       });
  return SweedlerTensor(std::move(algebras), std::move(out));
}

SweedlerTensor SweedlerTensor::multiply_range(std::size_t first, std::size_t count) const {
  if (count == 0) throw std::invalid_argument("empty product");
  SweedlerTensor r = *this;
  for (std::size_t i = 1; i < count; ++i) r = r.multiply(first, first + 1);
  return r;
}

SweedlerTensor SweedlerTensor::permute(const std::vector<std::size_t>& perm) const {
  std::vector<const FiniteHopfAlgebra*> algebras(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) algebras[i] = algebras_.at(perm[i]);
  return SweedlerTensor(std::move(algebras), tensor_.permuted(perm));
}

SweedlerTensor SweedlerTensor::outer(const SweedlerTensor& o) const {
  auto algebras = algebras_;
  algebras.insert(algebras.end(), o.algebras_.begin(), o.algebras_.end());
  return SweedlerTensor(std::move(algebras), tensor_outer(tensor_, o.tensor_));
}

SweedlerTensor SweedlerTensor::act_left(const BimoduleAction& act, std::size_t h_slot,
                                        std::size_t a_slot) const {
  if (h_slot == a_slot) throw std::invalid_argument("action slots must differ");
  if (!same_structure(algebra(h_slot), act.h()) || !same_structure(algebra(a_slot), act.a()))
    throw std::invalid_argument("action does not fit the slots");
  auto algebras = algebras_;
  algebras.erase(algebras.begin() + static_cast<std::ptrdiff_t>(h_slot));
  SparseTensor out(erased(tensor_.dims(), h_slot), tensor_.field());
  for (const auto& [idx, c] : tensor_.entries())
    detail::for_prefix(act.left().entries(), {idx[h_slot], idx[a_slot]},
                       [&](const Index& t, const Scalar& tc) {
                         Index nidx = idx;
                         nidx[a_slot] = t[2];
                         out.add(erased(nidx, h_slot), c * tc);
                       });
  return SweedlerTensor(std::move(algebras), std::move(out));
}

SweedlerTensor SweedlerTensor::act_right(const BimoduleAction& act, std::size_t a_slot,
                                         std::size_t h_slot) const {
  if (h_slot == a_slot) throw std::invalid_argument("action slots must differ");
  if (!same_structure(algebra(h_slot), act.h()) || !same_structure(algebra(a_slot), act.a()))
    throw std::invalid_argument("action does not fit the slots");
  auto algebras = algebras_;
  algebras.erase(algebras.begin() + static_cast<std::ptrdiff_t>(h_slot));
  SparseTensor out(erased(tensor_.dims(), h_slot), tensor_.field());
  for (const auto& [idx, c] : tensor_.entries())
    detail::for_prefix(act.right().entries(), {idx[a_slot], idx[h_slot]},
                       [&](const Index& t, const Scalar& tc) {
                         Index nidx = idx;
                         nidx[a_slot] = t[2];
                         out.add(erased(nidx, h_slot), c * tc);
                       });
  return SweedlerTensor(std::move(algebras), std::move(out));
}

SweedlerTensor SweedlerTensor::coact_left(const BicomoduleCoaction& coact,
                                          std::size_t slot) const {
  if (!same_structure(algebra(slot), coact.c()))
    throw std::invalid_argument("coaction does not fit the slot");
  auto algebras = algebras_;
  algebras[slot] = &coact.h();
  algebras.insert(algebras.begin() + static_cast<std::ptrdiff_t>(slot) + 1, &coact.c());
  auto dims = tensor_.dims();
  dims[slot] = coact.h().dim();
  dims.insert(dims.begin() + static_cast<std::ptrdiff_t>(slot) + 1, coact.c().dim());
  SparseTensor out(dims, tensor_.field());
  for (const auto& [idx, c] : tensor_.entries())
    detail::for_prefix(coact.left().entries(), {idx[slot]}, [&](const Index& t, const Scalar& tc) {
      Index nidx = idx;
      nidx[slot] = t[1];
      nidx.insert(nidx.begin() + static_cast<std::ptrdiff_t>(slot) + 1, t[2]);
      out.add(nidx, c * tc);
    });
  return SweedlerTensor(std::move(algebras), std::move(out));
}

SweedlerTensor SweedlerTensor::coact_right(const BicomoduleCoaction& coact,
                                           std::size_t slot) const {
  if (!same_structure(algebra(slot), coact.c()))
    throw std::invalid_argument("coaction does not fit the slot");
  auto algebras = algebras_;
  algebras.insert(algebras.begin() + static_cast<std::ptrdiff_t>(slot) + 1, &coact.h());
  auto dims = tensor_.dims();
  dims.insert(dims.begin() + static_cast<std::ptrdiff_t>(slot) + 1, coact.h().dim());
  SparseTensor out(dims, tensor_.field());
  for (const auto& [idx, c] : tensor_.entries())
    detail::for_prefix(coact.right().entries(), {idx[slot]},
                       [&](const Index& t, const Scalar& tc) {
                         Index nidx = idx;
                         nidx[slot] = t[1];
                         nidx.insert(nidx.begin() + static_cast<std::ptrdiff_t>(slot) + 1, t[2]);
                         out.add(nidx, c * tc);
                       });
  return SweedlerTensor(std::move(algebras), std::move(out));
}

Vec SweedlerTensor::to_vec() const {
  if (slots() != 1) throw std::logic_error("tensor has more than one slot");
  return tensor_;
}

bool SweedlerTensor::same_shape(const SweedlerTensor& o) const {
  if (slots() != o.slots()) return false;
  for (std::size_t s = 0; s < slots(); ++s)
    if (algebras_[s]->dim() != o.algebras_[s]->dim() ||
        algebras_[s]->field() != o.algebras_[s]->field())
      return false;
  return true;
}

bool SweedlerTensor::operator==(const SweedlerTensor& o) const {
  return same_shape(o) && tensor_ == o.tensor_;
}

}  // namespace hopfrb
