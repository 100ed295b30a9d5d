#include <doctest.h>

#include "helpers.hpp"

using namespace hopfrb;
using hopfrb::testing::fx;
using hopfrb::testing::q;

namespace {
const Field Q = Field::rationals();

BicomoduleCoaction corrupted_shipped() {
  BicomoduleCoaction good = io::load_coaction(fx("dual-c2-on-dual-c3.coaction.json"));
  // ρʳ(q_h) changed to q_h⊗p_g + q_{h^2}⊗p_1
  SparseTensor right = good.right();
  right.set({1, 1, 0}, q(0));
  right.set({1, 2, 1}, q(0));
  right.set({1, 1, 1}, q(1));
  right.set({1, 2, 0}, q(1));
  return BicomoduleCoaction(good.h(), good.c(), good.left(), right);
}
}  // namespace

TEST_CASE("the shipped coaction passes the full suite") {
  BicomoduleCoaction coact = io::load_coaction(fx("dual-c2-on-dual-c3.coaction.json"));
  CHECK(coact.left_is_trivial());
  CHECK_FALSE(coact.right_is_trivial());
  CHECK(verify_bicomodule_bialgebra(coact).pass());
  CHECK(verify_antipode_bicolinear(coact).pass());

  // ρʳ(q_h) = q_h⊗p_1 + q_{h^2}⊗p_g
  SparseTensor expected({3, 2}, Q);
  expected.set({1, 0}, q(1));
  expected.set({2, 1}, q(1));
  CHECK(coact.coact_right(coact.c().basis_vec(1)) == expected);
}

TEST_CASE("trivial coactions pass for any verified pair") {
  FiniteHopfAlgebra dc2 = build_dual_group_algebra(FiniteGroup::cyclic(2), Q);
  FiniteHopfAlgebra dc3 = build_dual_group_algebra(FiniteGroup::cyclic(3), Q);
  BicomoduleCoaction t = BicomoduleCoaction::trivial(dc2, dc3);
  CHECK(verify_bicomodule_bialgebra(t).pass());
  CHECK(verify_antipode_bicolinear(t).pass());
}

TEST_CASE("a corrupted right coaction fails with a witness") {
  VerificationReport rep = verify_bicomodule_bialgebra(corrupted_shipped());
  CHECK_FALSE(rep.pass());
  for (const auto& c : rep.checks())
    if (!c.pass) REQUIRE(c.witness.has_value());
}

TEST_CASE("the corrupted coaction also breaks bicolinearity") {
  CHECK_FALSE(verify_antipode_bicolinear(corrupted_shipped()).pass());
}
