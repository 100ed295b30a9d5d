#include <doctest.h>

#include "helpers.hpp"
#include "hopfrb/sweedler.hpp"

using namespace hopfrb;
using hopfrb::testing::fx;
using hopfrb::testing::q;

namespace {
const Field Q = Field::rationals();

std::vector<FiniteHopfAlgebra> shipped_algebras() {
  return {build_group_algebra(FiniteGroup::cyclic(2), Q),
          build_group_algebra(FiniteGroup::cyclic(3), Q),
          build_group_algebra(FiniteGroup::symmetric3(), Q),
          build_dual_group_algebra(FiniteGroup::cyclic(2), Q),
          build_dual_group_algebra(FiniteGroup::cyclic(3), Q)};
}
}  // namespace

TEST_CASE("group algebra of C2 has the identity antipode") {
  FiniteHopfAlgebra kc2 = build_group_algebra(FiniteGroup::cyclic(2), Q);
  CHECK(kc2.dim() == 2);
  CHECK(kc2.antipode().is_identity());
}

TEST_CASE("group algebra of C3 inverts the generator") {
  FiniteHopfAlgebra kc3 = build_group_algebra(FiniteGroup::cyclic(3), Q);
  CHECK(kc3.antipode_of(kc3.basis_vec(1)) == kc3.basis_vec(2));
}

TEST_CASE("group algebra of S3 is cocommutative but not commutative") {
  FiniteHopfAlgebra ks3 = build_group_algebra(FiniteGroup::symmetric3(), Q);
  CHECK_FALSE(ks3.is_commutative());
  CHECK(ks3.is_cocommutative());
}

TEST_CASE("dual group algebra structure") {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  FiniteHopfAlgebra dc2 = build_dual_group_algebra(c2, Q);
  FiniteHopfAlgebra dc3 = build_dual_group_algebra(c3, Q);

  // Δ(p_g) = p_1⊗p_g + p_g⊗p_1
  SparseTensor expected({2, 2}, Q);
  expected.set({0, 1}, q(1));
  expected.set({1, 0}, q(1));
  CHECK(dc2.comult_of(dc2.basis_vec(1)) == expected);

  // 1 = p_1 + p_h + p_{h^2} and p_h p_h = p_h
  Vec ones({3}, Q);
  for (std::size_t i = 0; i < 3; ++i) ones.set({i}, q(1));
  CHECK(dc3.unit() == ones);
  CHECK(dc3.multiply(dc3.basis_vec(1), dc3.basis_vec(1)) == dc3.basis_vec(1));
  CHECK(dc3.multiply(dc3.basis_vec(1), dc3.basis_vec(2)).is_zero());

  CHECK(dc2.antipode().is_identity());
  CHECK(dc2.is_commutative());
  CHECK(dc3.is_commutative());
}

TEST_CASE("every shipped builder output passes the axiom suite") {
  for (const auto& h : shipped_algebras()) {
    const VerificationReport& rep = verify_hopf(h);
    CHECK(rep.pass());
    for (const auto& c : rep.checks()) CHECK(c.pass);
  }
}

TEST_CASE("gf(p) group algebras verify too") {
  FiniteHopfAlgebra h = build_group_algebra(FiniteGroup::symmetric3(), Field::gf(7));
  CHECK(verify_hopf(h).pass());
  CHECK(verify_hopf(build_dual_group_algebra(FiniteGroup::cyclic(3), Field::gf(5))).pass());
}

TEST_CASE("corrupted antipode fails with a witness at h") {
  FiniteHopfAlgebra bad = io::load_algebra(fx("c3-bad-antipode.alg.json"));
  const VerificationReport& rep = verify_hopf(bad);
  CHECK_FALSE(rep.pass());
  const CheckResult* anti = rep.find("antipode");
  REQUIRE(anti != nullptr);
  CHECK_FALSE(anti->pass);
  REQUIRE(anti->witness.has_value());
  CHECK(anti->witness->inputs == std::vector<std::size_t>{1});
  // m(S⊗id)Δ(h) = h·h = h^2 while ε(h)1 = 1
  CHECK(anti->witness->lhs == bad.basis_vec(2));
  CHECK(anti->witness->rhs == bad.basis_vec(0));
  // the witness re-evaluates: S(h)·h with the corrupted S really is h^2
  CHECK(bad.multiply(bad.antipode_of(bad.basis_vec(1)), bad.basis_vec(1)) == bad.basis_vec(2));
}

TEST_CASE("linear dual transposes the structure") {
  FiniteHopfAlgebra kc3 = build_group_algebra(FiniteGroup::cyclic(3), Q);
  CHECK(same_structure(linear_dual(kc3), build_dual_group_algebra(FiniteGroup::cyclic(3), Q)));

  FiniteHopfAlgebra ks3 = build_group_algebra(FiniteGroup::symmetric3(), Q);
  CHECK(same_structure(linear_dual(linear_dual(ks3)), ks3));

  FiniteHopfAlgebra kc2 = build_group_algebra(FiniteGroup::cyclic(2), Q);
  CHECK(linear_dual(kc2).counit_vector() == kc2.unit_vector());

  CHECK_THROWS_AS(linear_dual(io::load_algebra(fx("c3-bad-antipode.alg.json"))),
                  PreconditionError);
}

TEST_CASE("linear dual is an involution on every shipped algebra") {
  for (const auto& h : shipped_algebras()) CHECK(same_structure(linear_dual(linear_dual(h)), h));
}

TEST_CASE("iterated comultiplication") {
  FiniteHopfAlgebra ks3 = build_group_algebra(FiniteGroup::symmetric3(), Q);
  Vec x = ks3.basis_vec(4);
  CHECK(iterated_comult(ks3, x, 1) == x);

  SparseTensor cube({6, 6, 6}, Q);
  cube.set({4, 4, 4}, q(1));
  CHECK(iterated_comult(ks3, x, 3) == cube);

  FiniteHopfAlgebra dc2 = build_dual_group_algebra(FiniteGroup::cyclic(2), Q);
  SparseTensor expected({2, 2}, Q);
  expected.set({0, 1}, q(1));
  expected.set({1, 0}, q(1));
  CHECK(iterated_comult(dc2, dc2.basis_vec(1), 2) == expected);

  CHECK_THROWS_AS(iterated_comult(ks3, x, 0), std::invalid_argument);
}

TEST_CASE("left-leaning and right-leaning expansions agree everywhere") {
  for (const auto& h : shipped_algebras())
    for (std::size_t i = 0; i < h.dim(); ++i) {
      SweedlerTensor st(h, h.basis_vec(i));
      CHECK(st.comult(0).comult(0) == st.comult(0).comult(1));
    }
}

TEST_CASE("construction rejects malformed parts") {
  FiniteHopfAlgebra kc2 = build_group_algebra(FiniteGroup::cyclic(2), Q);
  FiniteHopfAlgebra::Parts parts{Q,
                                 {"x", "x"},
                                 kc2.mult_tensor(),
                                 kc2.unit_vector(),
                                 kc2.comult_tensor(),
                                 kc2.counit_vector(),
                                 kc2.antipode()};
  CHECK_THROWS_AS(FiniteHopfAlgebra(std::move(parts)), std::invalid_argument);
}
