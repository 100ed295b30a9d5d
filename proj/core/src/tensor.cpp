#include "hopfrb/tensor.hpp"

#include <algorithm>
#include <string>

namespace hopfrb {

void SparseTensor::check_index(const Index& idx) const {
  if (idx.size() != dims_.size())
    throw std::invalid_argument("index arity " + std::to_string(idx.size()) +
                                " does not match tensor arity " + std::to_string(dims_.size()));
  for (std::size_t s = 0; s < idx.size(); ++s)
    if (idx[s] >= dims_[s])
      throw std::invalid_argument("index out of range in slot " + std::to_string(s));
}

Scalar SparseTensor::at(const Index& idx) const {
  check_index(idx);
  auto it = entries_.find(idx);
  return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

void SparseTensor::set(const Index& idx, Scalar value) {
  check_index(idx);
  if (value.field() != field_) throw std::invalid_argument("scalar field mismatch");
  if (value.is_zero())
    entries_.erase(idx);
  else
    entries_.insert_or_assign(idx, std::move(value));
}

void SparseTensor::add(const Index& idx, const Scalar& value) {
  check_index(idx);
  if (value.is_zero()) return;
  if (value.field() != field_) throw std::invalid_argument("scalar field mismatch");
  auto [it, inserted] = entries_.try_emplace(idx, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

SparseTensor SparseTensor::operator+(const SparseTensor& o) const {
  if (dims_ != o.dims_ || field_ != o.field_)
    throw std::invalid_argument("tensor shape/field mismatch in +");
  SparseTensor r = *this;
  for (const auto& [idx, c] : o.entries_) r.add(idx, c);
  return r;
}

SparseTensor SparseTensor::operator-(const SparseTensor& o) const {
  if (dims_ != o.dims_ || field_ != o.field_)
    throw std::invalid_argument("tensor shape/field mismatch in -");
  SparseTensor r = *this;
  for (const auto& [idx, c] : o.entries_) r.add(idx, -c);
  return r;
}

SparseTensor SparseTensor::scaled(const Scalar& c) const {
  SparseTensor r(dims_, field_);
  if (c.is_zero()) return r;
  for (const auto& [idx, v] : entries_) r.set(idx, v * c);
  return r;
}

bool SparseTensor::operator==(const SparseTensor& o) const {
  return dims_ == o.dims_ && field_ == o.field_ && entries_ == o.entries_;
}

SparseTensor SparseTensor::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != arity()) throw std::invalid_argument("permutation arity mismatch");
  std::vector<std::size_t> ndims(arity());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= arity()) throw std::invalid_argument("permutation slot out of range");
    ndims[i] = dims_[perm[i]];
  }
  SparseTensor r(std::move(ndims), field_);
  Index nidx(arity());
  for (const auto& [idx, c] : entries_) {
    for (std::size_t i = 0; i < perm.size(); ++i) nidx[i] = idx[perm[i]];
    r.set(nidx, c);
  }
  return r;
}

SparseTensor tensor_contract(const SparseTensor& t, const SparseTensor& u,
                             std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  if (t.field() != u.field()) throw std::invalid_argument("tensor field mismatch");
  std::vector<bool> t_used(t.arity(), false), u_used(u.arity(), false);
  for (const auto& [ts, us] : pairs) {
    if (ts >= t.arity() || us >= u.arity())
      throw std::invalid_argument("contraction slot out of range");
    if (t_used[ts] || u_used[us]) throw std::invalid_argument("repeated contraction slot");
    if (t.dims()[ts] != u.dims()[us])
      throw std::invalid_argument("contracted dimensions disagree: " +
                                  std::to_string(t.dims()[ts]) + " vs " +
                                  std::to_string(u.dims()[us]));
    t_used[ts] = true;
    u_used[us] = true;
  }
  std::vector<std::size_t> t_free, u_free, rdims;
  for (std::size_t s = 0; s < t.arity(); ++s)
    if (!t_used[s]) {
      t_free.push_back(s);
      rdims.push_back(t.dims()[s]);
    }
  for (std::size_t s = 0; s < u.arity(); ++s)
    if (!u_used[s]) {
      u_free.push_back(s);
      rdims.push_back(u.dims()[s]);
    }

  SparseTensor r(rdims, t.field());
  Index out(t_free.size() + u_free.size());
  for (const auto& [ti, tc] : t.entries()) {
    for (const auto& [ui, uc] : u.entries()) {
      bool match = true;
      for (const auto& [ts, us] : pairs)
        if (ti[ts] != ui[us]) {
          match = false;
          break;
        }
      if (!match) continue;
      std::size_t k = 0;
      for (std::size_t s : t_free) out[k++] = ti[s];
      for (std::size_t s : u_free) out[k++] = ui[s];
      r.add(out, tc * uc);
    }
  }
  return r;
}

SparseTensor tensor_outer(const SparseTensor& t, const SparseTensor& u) {
  return tensor_contract(t, u, {});
}

SparseTensor basis_vector(std::size_t dim, std::size_t i, const Field& f) {
  SparseTensor v({dim}, f);
  v.set({i}, Scalar::one(f));
  return v;
}

}  // namespace hopfrb
