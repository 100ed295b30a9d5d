#include <doctest.h>

#include "helpers.hpp"

using namespace hopfrb;
using hopfrb::testing::q;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("identity and zero operators") {
  LinearOperator id = LinearOperator::identity(3, Q);
  Vec v({3}, Q);
  v.set({0}, q(2));
  v.set({2}, q(-1, 3));
  CHECK(id.apply(v) == v);
  LinearOperator zero(3, Q);
  CHECK(zero.apply(v).is_zero());
}

TEST_CASE("antipode of a group algebra sends h to its inverse") {
  FiniteHopfAlgebra kc3 = build_group_algebra(FiniteGroup::cyclic(3), Q);
  CHECK(kc3.antipode().apply(kc3.basis_vec(1)) == kc3.basis_vec(2));
  CHECK(kc3.antipode().compose(kc3.antipode()).is_identity());
}

TEST_CASE("kron pairs indices row-major") {
  LinearOperator id2 = LinearOperator::identity(2, Q);
  LinearOperator id3 = LinearOperator::identity(3, Q);
  CHECK(id2.kron(id3) == LinearOperator::identity(6, Q));
  LinearOperator a(2, Q);
  a.set(0, 1, q(1));
  LinearOperator b(2, Q);
  b.set(1, 0, q(3));
  LinearOperator k = a.kron(b);
  // column (1,0) -> 1*2+0 = 2 maps to row (0,1) -> 1 with coefficient 3
  CHECK(k.at(1, 2) == q(3));
}

TEST_CASE("add and scale") {
  LinearOperator a(2, Q);
  a.set(0, 0, q(2));
  a.set(1, 0, q(-1));
  CHECK((a + a.scaled(q(-1))).matrix().is_zero());
}

TEST_CASE("dimension mismatches are rejected") {
  LinearOperator a(2, Q);
  Vec v({3}, Q);
  CHECK_THROWS_AS(a.apply(v), std::invalid_argument);
  LinearOperator b(3, Q);
  CHECK_THROWS_AS(a.compose(b), std::invalid_argument);
}

TEST_CASE("transpose flips the matrix") {
  LinearOperator a(2, Q);
  a.set(0, 1, q(5));
  CHECK(a.transpose().at(1, 0) == q(5));
  CHECK(a.transpose().transpose() == a);
}
