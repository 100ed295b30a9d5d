#include "hopfrb/linear_operator.hpp"

namespace hopfrb {

LinearOperator::LinearOperator(SparseTensor matrix) : matrix_(std::move(matrix)) {
  if (matrix_.arity() != 2 || matrix_.dims()[0] != matrix_.dims()[1])
    throw std::invalid_argument("operator matrix must be square of arity 2");
}

LinearOperator LinearOperator::identity(std::size_t dim, const Field& f) {
  LinearOperator op(dim, f);
  for (std::size_t i = 0; i < dim; ++i) op.set(i, i, Scalar::one(f));
  return op;
}

Vec LinearOperator::apply(const Vec& v) const {
  if (v.arity() != 1 || v.dims()[0] != dim())
    throw std::invalid_argument("operator/vector dimension mismatch");
  // contract matrix slot 1 (column) against the vector
  const std::pair<std::size_t, std::size_t> pair[] = {{1, 0}};
  return tensor_contract(matrix_, v, pair);
}

Vec LinearOperator::column(std::size_t j) const {
  Vec v({dim()}, field());
  for (const auto& [idx, c] : matrix_.entries())
    if (idx[1] == j) v.set({idx[0]}, c);
  return v;
}

LinearOperator LinearOperator::compose(const LinearOperator& g) const {
  if (dim() != g.dim()) throw std::invalid_argument("compose dimension mismatch");
  const std::pair<std::size_t, std::size_t> pair[] = {{1, 0}};
  return LinearOperator(tensor_contract(matrix_, g.matrix_, pair));
}

LinearOperator LinearOperator::operator+(const LinearOperator& o) const {
  return LinearOperator(matrix_ + o.matrix_);
}

LinearOperator LinearOperator::scaled(const Scalar& c) const {
  return LinearOperator(matrix_.scaled(c));
}

LinearOperator LinearOperator::kron(const LinearOperator& o) const {
  if (field() != o.field()) throw std::invalid_argument("kron field mismatch");
  std::size_t d2 = o.dim();
  LinearOperator r(dim() * d2, field());
  for (const auto& [a, ca] : matrix_.entries())
    for (const auto& [b, cb] : o.matrix_.entries())
      r.add(a[0] * d2 + b[0], a[1] * d2 + b[1], ca * cb);
  return r;
}

LinearOperator LinearOperator::transpose() const {
  return LinearOperator(matrix_.permuted({1, 0}));
}

bool LinearOperator::is_identity() const {
  return *this == identity(dim(), field());
}

}  // namespace hopfrb
