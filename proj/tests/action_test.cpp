#include <doctest.h>

#include "helpers.hpp"

using namespace hopfrb;
using hopfrb::testing::fx;
using hopfrb::testing::q;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("the shipped bimodule action passes the full suite") {
  BimoduleAction act = io::load_action(fx("c2-on-c3.action.json"));
  CHECK(act.left_is_trivial());
  CHECK_FALSE(act.right_is_trivial());
  VerificationReport rep = verify_bimodule_bialgebra(act);
  CHECK(rep.pass());
  CHECK(verify_antipode_bilinear(act).pass());
  // h ◁ g = h^2
  CHECK(act.act_right(act.a().basis_vec(1), act.h().basis_vec(1)) == act.a().basis_vec(2));
}

TEST_CASE("trivial actions pass for any verified pair") {
  FiniteHopfAlgebra kc2 = build_group_algebra(FiniteGroup::cyclic(2), Q);
  FiniteHopfAlgebra ks3 = build_group_algebra(FiniteGroup::symmetric3(), Q);
  BimoduleAction t1 = BimoduleAction::trivial(kc2, ks3);
  CHECK(verify_bimodule_bialgebra(t1).pass());
  CHECK(verify_antipode_bilinear(t1).pass());
  BimoduleAction t2 = BimoduleAction::trivial(ks3, kc2);
  CHECK(verify_bimodule_bialgebra(t2).pass());
  CHECK(verify_antipode_bilinear(t2).pass());
}

TEST_CASE("a corrupted right action fails with a witness") {
  BimoduleAction good = io::load_action(fx("c2-on-c3.action.json"));
  // redefine h ◁ g to h
  SparseTensor right = good.right();
  right.set({1, 1, 2}, q(0));
  right.set({1, 1, 1}, q(1));
  BimoduleAction bad(good.h(), good.a(), good.left(), right);
  VerificationReport rep = verify_bimodule_bialgebra(bad);
  CHECK_FALSE(rep.pass());
  bool witnessed = false;
  for (const auto& c : rep.checks())
    if (!c.pass) {
      REQUIRE(c.witness.has_value());
      witnessed = true;
    }
  CHECK(witnessed);
}

TEST_CASE("a corrupted antipode on A breaks bilinearity") {
  // left-swap action: g ▷ h = h^2; corrupt S_A to exchange 1 and h
  BimoduleAction swap = io::load_action(fx("c2-on-c3-left-swap.action.json"));
  LinearOperator bad_s(3, Q);
  bad_s.set(1, 0, q(1));
  bad_s.set(0, 1, q(1));
  bad_s.set(2, 2, q(1));
  FiniteHopfAlgebra bad_a({Q, swap.a().basis(), swap.a().mult_tensor(), swap.a().unit_vector(),
                           swap.a().comult_tensor(), swap.a().counit_vector(), bad_s});
  BimoduleAction bad(swap.h(), bad_a, swap.left(), swap.right());
  VerificationReport rep = verify_antipode_bilinear(bad);
  CHECK_FALSE(rep.pass());
  REQUIRE(rep.find("antipode-left-linear")->witness.has_value());
}

TEST_CASE("dualizing the shipped action gives the shipped coaction") {
  BimoduleAction act = io::load_action(fx("c2-on-c3.action.json"));
  BicomoduleCoaction dual = dualize_action(act);
  CHECK(verify_bicomodule_bialgebra(dual).pass());
  CHECK(verify_antipode_bicolinear(dual).pass());

  BicomoduleCoaction shipped = io::load_coaction(fx("dual-c2-on-dual-c3.coaction.json"));
  CHECK(dual.left() == shipped.left());
  CHECK(dual.right() == shipped.right());
  CHECK(same_structure(dual.h(), shipped.h()));
  CHECK(same_structure(dual.c(), shipped.c()));
}

TEST_CASE("dualizing a trivial action gives the trivial coaction") {
  FiniteHopfAlgebra kc2 = build_group_algebra(FiniteGroup::cyclic(2), Q);
  FiniteHopfAlgebra kc3 = build_group_algebra(FiniteGroup::cyclic(3), Q);
  BicomoduleCoaction dual = dualize_action(BimoduleAction::trivial(kc2, kc3));
  CHECK(dual.left_is_trivial());
  CHECK(dual.right_is_trivial());
}

TEST_CASE("double dualization returns the original tensors") {
  BimoduleAction act = io::load_action(fx("c2-on-c3.action.json"));
  BicomoduleCoaction dual = dualize_action(act);
  // transpose the coaction tensors back by hand: (a'; h, a) -> (h, a; a')
  CHECK(dual.left().permuted({1, 2, 0}) == act.left());
  CHECK(dual.right().permuted({1, 2, 0}) == act.right());
}

TEST_CASE("every shipped action dualizes to a passing coaction") {
  FiniteHopfAlgebra kc2 = build_group_algebra(FiniteGroup::cyclic(2), Q);
  FiniteHopfAlgebra ks3 = build_group_algebra(FiniteGroup::symmetric3(), Q);
  std::vector<BimoduleAction> shipped = {io::load_action(fx("c2-on-c3.action.json")),
                                         io::load_action(fx("c2-on-c3-left-swap.action.json")),
                                         BimoduleAction::trivial(kc2, ks3)};
  for (const auto& act : shipped) {
    REQUIRE(verify_bimodule_bialgebra(act).pass());
    CHECK(verify_bicomodule_bialgebra(dualize_action(act)).pass());
  }
}

TEST_CASE("dualize_action refuses unverified input") {
  BimoduleAction good = io::load_action(fx("c2-on-c3.action.json"));
  SparseTensor right = good.right();
  right.set({1, 1, 2}, q(0));
  right.set({1, 1, 1}, q(1));
  BimoduleAction bad(good.h(), good.a(), good.left(), right);
  CHECK_THROWS_AS(dualize_action(bad), PreconditionError);
}
