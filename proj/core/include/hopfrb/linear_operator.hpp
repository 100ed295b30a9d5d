#pragma once

#include "hopfrb/tensor.hpp"

namespace hopfrb {

/// An element of a based vector space: arity-1 sparse tensor.
using Vec = SparseTensor;

/// A square matrix on a based space.  Entry (i, j) is the coefficient of
/// basis element i in the image of basis element j (column j = image of j).
class LinearOperator {
public:
  LinearOperator(std::size_t dim, Field f) : matrix_({dim, dim}, f) {}
  explicit LinearOperator(SparseTensor matrix);

  static LinearOperator identity(std::size_t dim, const Field& f);

  std::size_t dim() const { return matrix_.dims()[0]; }
  const Field& field() const { return matrix_.field(); }
  const SparseTensor& matrix() const { return matrix_; }

  void set(std::size_t row, std::size_t col, Scalar v) { matrix_.set({row, col}, std::move(v)); }
  void add(std::size_t row, std::size_t col, const Scalar& v) { matrix_.add({row, col}, v); }
  Scalar at(std::size_t row, std::size_t col) const { return matrix_.at({row, col}); }

  Vec apply(const Vec& v) const;
  Vec column(std::size_t j) const;

  /// this ∘ g  (apply g first).
  LinearOperator compose(const LinearOperator& g) const;
  LinearOperator operator+(const LinearOperator& o) const;
  LinearOperator scaled(const Scalar& c) const;
  /// Operator on the tensor-product space with the row-major index pairing
  /// (i, j) ↦ i·dim(o) + j.
  LinearOperator kron(const LinearOperator& o) const;
  LinearOperator transpose() const;

  bool operator==(const LinearOperator& o) const { return matrix_ == o.matrix_; }
  bool operator!=(const LinearOperator& o) const { return !(*this == o); }
  bool is_identity() const;

private:
  SparseTensor matrix_;
};

}  // namespace hopfrb
