#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hopfrb/scalar.hpp"

namespace hopfrb {

using Index = std::vector<std::size_t>;

/// Sparse multi-index array of exact scalars.  Invariants: no stored zero
/// coefficient, every stored index within dims.  Entries are kept in a
/// std::map so iteration (and hence serialization) is canonical.
class SparseTensor {
public:
  SparseTensor(std::vector<std::size_t> dims, Field field)
      : dims_(std::move(dims)), field_(field) {}

  std::size_t arity() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const Field& field() const { return field_; }

  bool is_zero() const { return entries_.empty(); }
  std::size_t entry_count() const { return entries_.size(); }
  const std::map<Index, Scalar>& entries() const { return entries_; }

  /// Coefficient at idx (zero if absent).
  Scalar at(const Index& idx) const;
  /// Overwrites the coefficient at idx; zero erases.
  void set(const Index& idx, Scalar value);
  /// Accumulates into the coefficient at idx; zero results are erased.
  void add(const Index& idx, const Scalar& value);

  SparseTensor operator+(const SparseTensor& o) const;
  SparseTensor operator-(const SparseTensor& o) const;
  SparseTensor scaled(const Scalar& c) const;
  bool operator==(const SparseTensor& o) const;
  bool operator!=(const SparseTensor& o) const { return !(*this == o); }

  /// Reorders the index slots: result index i gets old slot perm[i].
  SparseTensor permuted(const std::vector<std::size_t>& perm) const;

  void check_index(const Index& idx) const;

private:
  std::vector<std::size_t> dims_;
  Field field_;
  std::map<Index, Scalar> entries_;
};

/// Exact contraction of t against u over the given (t-slot, u-slot) pairs.
/// Result slots are t's uncontracted slots (in order) followed by u's.
/// Throws std::invalid_argument when paired dims disagree or slots repeat.
SparseTensor tensor_contract(const SparseTensor& t, const SparseTensor& u,
                             std::span<const std::pair<std::size_t, std::size_t>> pairs);

/// Outer (tensor) product: contraction with no pairs.
SparseTensor tensor_outer(const SparseTensor& t, const SparseTensor& u);

/// Arity-1 tensor with a single unit entry at position i.
SparseTensor basis_vector(std::size_t dim, std::size_t i, const Field& f);

}  // namespace hopfrb
