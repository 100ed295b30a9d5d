#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hopfrb/sweedler.hpp"

using namespace hopfrb;
using hopfrb::testing::fx;
using hopfrb::testing::q;
using hopfrb::testing::random_vec;

namespace {
const Field Q = Field::rationals();

BimoduleAction shipped_action() { return io::load_action(fx("c2-on-c3.action.json")); }
BicomoduleCoaction shipped_coaction() {
  return io::load_coaction(fx("dual-c2-on-dual-c3.coaction.json"));
}
RBOperatorCandidate antipode_candidate(const FiniteHopfAlgebra& h, RBKind kind) {
  return RBOperatorCandidate(h, h.antipode(), kind);
}
}  // namespace

TEST_CASE("candidate construction enforces carrier flags") {
  FiniteHopfAlgebra ks3 = build_group_algebra(FiniteGroup::symmetric3(), Q);
  CHECK_THROWS_AS(RBOperatorCandidate(ks3, LinearOperator::identity(6, Q), RBKind::CoOperator),
                  PreconditionError);  // k[S3] is not commutative
  FiniteHopfAlgebra cosmash =
      lr_smash_coproduct(shipped_coaction().c(), shipped_coaction().h(), shipped_coaction())
          .algebra();
  CHECK_THROWS_AS(RBOperatorCandidate(cosmash, LinearOperator::identity(6, Q), RBKind::Operator),
                  PreconditionError);  // the coproduct carrier is not cocommutative
}

TEST_CASE("counit-unit map and the antipode are always operators") {
  for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                               FiniteGroup::symmetric3(),
                               FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                           FiniteGroup::cyclic(2))}) {
    FiniteHopfAlgebra kg = build_group_algebra(g, Q);
    CHECK(is_rb_operator(RBOperatorCandidate(kg, counit_unit_operator(kg), RBKind::Operator))
              .pass());
    CHECK(is_rb_operator(antipode_candidate(kg, RBKind::Operator)).pass());
  }
}

TEST_CASE("counit-unit map and the antipode are always co-operators on commutative carriers") {
  for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)}) {
    FiniteHopfAlgebra dual = build_dual_group_algebra(g, Q);
    CHECK(is_rb_co_operator(RBOperatorCandidate(dual, counit_unit_operator(dual),
                                                RBKind::CoOperator))
              .pass());
    CHECK(is_rb_co_operator(antipode_candidate(dual, RBKind::CoOperator)).pass());
  }
}

TEST_CASE("the identity map fails the operator identity on a noncommutative carrier") {
  FiniteHopfAlgebra ks3 = build_group_algebra(FiniteGroup::symmetric3(), Q);
  VerificationReport rep =
      is_rb_operator(RBOperatorCandidate(ks3, LinearOperator::identity(6, Q), RBKind::Operator));
  CHECK_FALSE(rep.pass());
  const CheckResult* identity = rep.find("rb-identity");
  REQUIRE(identity != nullptr);
  REQUIRE(identity->witness.has_value());
  // the witness is a pair of non-commuting grouplikes: lhs xy, rhs x²yx⁻¹
  const auto& w = *identity->witness;
  REQUIRE(w.inputs.size() == 2);
  FiniteGroup s3 = FiniteGroup::symmetric3();
  CHECK(s3.mul(w.inputs[0], w.inputs[1]) != s3.mul(w.inputs[1], w.inputs[0]));
}

TEST_CASE("the operator identity is bilinear: basis pairs decide arbitrary vectors") {
  FiniteHopfAlgebra kc3 = build_group_algebra(FiniteGroup::cyclic(3), Q);
  const LinearOperator& b = kc3.antipode();
  REQUIRE(is_rb_operator(antipode_candidate(kc3, RBKind::Operator)).pass());
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Vec x = random_vec(rng, 3), y = random_vec(rng, 3);
    Vec lhs = kc3.multiply(b.apply(x), b.apply(y));
    SweedlerTensor t = SweedlerTensor(kc3, x).comult_iter(0, 3);
    t = t.apply(1, b).apply(2, b).antipode(2).outer(SweedlerTensor(kc3, y));
    Vec rhs = b.apply(t.multiply(0, 1).multiply(0, 2).multiply(0, 1).to_vec());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("transpose of the antipode passes the co-operator suite on the dual") {
  FiniteHopfAlgebra kc3 = build_group_algebra(FiniteGroup::cyclic(3), Q);
  CHECK(transpose_duality_check(antipode_candidate(kc3, RBKind::Operator)).pass());
}

TEST_CASE("counit identity holds for co-operators") {
  FiniteHopfAlgebra dc3 = build_dual_group_algebra(FiniteGroup::cyclic(3), Q);
  RBOperatorCandidate cand(dc3, counit_unit_operator(dc3), RBKind::CoOperator);
  REQUIRE(is_rb_co_operator(cand).pass());
  CHECK(check_counit_identity(cand).pass());
}

TEST_CASE("an algebra map violating the counit identity already fails the co-operator suite") {
  // on the dual of C2 the basis swap is an algebra map with ε(B(p_1)) = 0
  FiniteHopfAlgebra dc2 = build_dual_group_algebra(FiniteGroup::cyclic(2), Q);
  LinearOperator swap(2, Q);
  swap.set(1, 0, q(1));
  swap.set(0, 1, q(1));
  RBOperatorCandidate cand(dc2, swap, RBKind::CoOperator);
  REQUIRE(is_algebra_map(dc2, dc2, swap).pass());
  CHECK_FALSE(check_counit_identity(cand).pass());
  CHECK_FALSE(is_rb_co_operator(cand).pass());
}

// ---- lifts on the product side ------------------------------------------

TEST_CASE("lift with constant R and antipode B collapses the module part") {
  BimoduleAction act = shipped_action();
  RBOperatorCandidate b = antipode_candidate(act.h(), RBKind::Operator);
  LinearOperator r = io::load_map(fx("r-const.map.json"), 3).op;
  LinearOperator lift = lift_rb_operator(r, b, act);

  SmashProductAlgebra sp = lr_smash_product(act.a(), act.h(), act);
  const FiniteHopfAlgebra& s = sp.algebra();
  // documented values: both h^i ⊗ g go to 1 ⊗ g
  for (std::size_t i : {1u, 2u})
    CHECK(lift.apply(s.basis_vec(sp.pair_index(i, 1))) == s.basis_vec(sp.pair_index(0, 1)));
  // and the whole 1-column collapses to ε(a)(1⊗1)
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(lift.apply(s.basis_vec(sp.pair_index(i, 0))) == s.basis_vec(sp.pair_index(0, 0)));

  CHECK(is_rb_operator(RBOperatorCandidate(s, lift, RBKind::Operator)).pass());
  CHECK(lift_rb_operator_via_antipode(r, act) == lift);
}

TEST_CASE("lift with the swap R fixes the g-column and inverts the 1-column") {
  BimoduleAction act = shipped_action();
  RBOperatorCandidate b = antipode_candidate(act.h(), RBKind::Operator);
  LinearOperator r = io::load_map(fx("r-swap.map.json"), 3).op;
  LinearOperator lift = lift_rb_operator(r, b, act);

  SmashProductAlgebra sp = lr_smash_product(act.a(), act.h(), act);
  const FiniteHopfAlgebra& s = sp.algebra();
  for (std::size_t i : {1u, 2u})
    CHECK(lift.apply(s.basis_vec(sp.pair_index(i, 1))) == s.basis_vec(sp.pair_index(i, 1)));
  // the lift is not the identity: h⊗1 goes to h^2⊗1
  CHECK(lift.apply(s.basis_vec(sp.pair_index(1, 0))) == s.basis_vec(sp.pair_index(2, 0)));
  CHECK_FALSE(lift.is_identity());

  CHECK(is_rb_operator(RBOperatorCandidate(s, lift, RBKind::Operator)).pass());
  CHECK(lift_rb_operator_via_antipode(r, act) == lift);
}

TEST_CASE("with a trivial right action the lift collapses to the two-leg pattern") {
  BimoduleAction act = io::load_action(fx("c2-on-c3-left-swap.action.json"));
  REQUIRE(act.right_is_trivial());
  RBOperatorCandidate b = antipode_candidate(act.h(), RBKind::Operator);
  const FiniteHopfAlgebra& A = act.a();
  const FiniteHopfAlgebra& H = act.h();
  for (const char* name : {"r-const.map.json", "r-swap.map.json"}) {
    LinearOperator r = io::load_map(fx(name), 3).op;
    LinearOperator lift = lift_rb_operator(r, b, act);
    // independent evaluation of B(h₁)▷R(a) ⊗ B(h₂)
    LinearOperator pattern(6, Q);
    for (std::size_t ai = 0; ai < 3; ++ai)
      for (std::size_t hi = 0; hi < 2; ++hi) {
        SweedlerTensor t = SweedlerTensor(A, A.basis_vec(ai))
                               .outer(SweedlerTensor(H, H.basis_vec(hi)).comult(0));
        // [a h1 h2] -> [B(h1)▷R(a), B(h2)]
        t = t.apply(0, r).apply(1, b.map).apply(2, b.map).act_left(act, 1, 0);
        for (const auto& [idx, c] : t.tensor().entries())
          pattern.add(idx[0] * 2 + idx[1], ai * 2 + hi, c);
      }
    CHECK(lift == pattern);
  }
}

TEST_CASE("lift with both maps constant is the counit-unit operator of the product") {
  FiniteHopfAlgebra kc3 = build_group_algebra(FiniteGroup::cyclic(3), Q);
  FiniteHopfAlgebra kc2 = build_group_algebra(FiniteGroup::cyclic(2), Q);
  BimoduleAction triv = BimoduleAction::trivial(kc2, kc3);
  RBOperatorCandidate b(kc2, counit_unit_operator(kc2), RBKind::Operator);
  LinearOperator lift = lift_rb_operator(counit_unit_operator(kc3), b, triv);
  SmashProductAlgebra sp = lr_smash_product(kc3, kc2, triv);
  CHECK(lift == counit_unit_operator(sp.algebra()));
}

TEST_CASE("lift refuses a failing B") {
  BimoduleAction act = shipped_action();
  // the identity map is not an operator on k[C2]?  It is (abelian), so use a
  // genuinely failing candidate: the map g ↦ 1, 1 ↦ g breaks unitality of
  // the coalgebra-map suite's counital part.
  LinearOperator bad(2, Q);
  bad.set(1, 0, q(1));
  bad.set(0, 1, q(1));
  RBOperatorCandidate b(act.h(), bad, RBKind::Operator);
  REQUIRE_FALSE(is_rb_operator(b).pass());
  CHECK_THROWS_AS(lift_rb_operator(LinearOperator::identity(3, Q), b, act), PreconditionError);
}

// ---- condition suites, product side ---------------------------------------

TEST_CASE("the swap R satisfies the product-side conditions") {
  BimoduleAction act = shipped_action();
  RBOperatorCandidate b = antipode_candidate(act.h(), RBKind::Operator);
  LinearOperator r = io::load_map(fx("r-swap.map.json"), 3).op;
  VerificationReport rep = check_conditions_2a2b(r, b, act);
  CHECK(rep.pass());
  for (const char* label : {"R-coalgebra-map", "R-rb-identity", "2a", "2b"})
    CHECK(rep.find(label)->pass);
}

TEST_CASE("with all structure trivial the conditions reduce to the operator identity") {
  FiniteHopfAlgebra kc3 = build_group_algebra(FiniteGroup::cyclic(3), Q);
  FiniteHopfAlgebra kc2 = build_group_algebra(FiniteGroup::cyclic(2), Q);
  BimoduleAction triv = BimoduleAction::trivial(kc2, kc3);
  RBOperatorCandidate b = antipode_candidate(kc2, RBKind::Operator);
  CHECK(check_conditions_2a2b(counit_unit_operator(kc3), b, triv).pass());
}

TEST_CASE("the identity R fails the conditions and its lift fails the suite") {
  BimoduleAction act = shipped_action();
  RBOperatorCandidate b = antipode_candidate(act.h(), RBKind::Operator);
  LinearOperator r = LinearOperator::identity(3, Q);
  const bool conditions = check_conditions_2a2b(r, b, act).pass();
  SmashProductAlgebra sp = lr_smash_product(act.a(), act.h(), act);
  const bool lifted =
      is_rb_operator(RBOperatorCandidate(sp.algebra(), lift_rb_operator(r, b, act),
                                         RBKind::Operator))
          .pass();
  CHECK_FALSE(conditions);
  CHECK(conditions == lifted);
}

TEST_CASE("internal identities hold on the passing fixtures") {
  BimoduleAction act = shipped_action();
  RBOperatorCandidate b = antipode_candidate(act.h(), RBKind::Operator);
  CHECK(check_internal_2c2d(io::load_map(fx("r-swap.map.json"), 3).op, b, act).pass());
  CHECK(check_internal_2c2d(io::load_map(fx("r-const.map.json"), 3).op, b, act).pass());

  FiniteHopfAlgebra kc3 = build_group_algebra(FiniteGroup::cyclic(3), Q);
  FiniteHopfAlgebra kc2 = build_group_algebra(FiniteGroup::cyclic(2), Q);
  BimoduleAction triv = BimoduleAction::trivial(kc2, kc3);
  CHECK(check_internal_2c2d(counit_unit_operator(kc3),
                            antipode_candidate(kc2, RBKind::Operator), triv)
            .pass());
}

TEST_CASE("a failing first condition forces the failing internal identity") {
  BimoduleAction act = shipped_action();
  RBOperatorCandidate b = antipode_candidate(act.h(), RBKind::Operator);
  for_each_pointed_set_map(act.a(), [&](std::span<const std::size_t>, const LinearOperator& r) {
    VerificationReport cond = check_conditions_2a2b(r, b, act);
    VerificationReport internal = check_internal_2c2d(r, b, act);
    if (!cond.find("2a")->pass) CHECK_FALSE(internal.find("2c")->pass);
    if (cond.pass()) CHECK(internal.pass());
  });
}

TEST_CASE("antipode-B specialization conditions") {
  BimoduleAction act = shipped_action();
  LinearOperator r_swap = io::load_map(fx("r-swap.map.json"), 3).op;
  VerificationReport rep = check_conditions_cor24(r_swap, act);
  CHECK(rep.pass());

  FiniteHopfAlgebra kc3 = build_group_algebra(FiniteGroup::cyclic(3), Q);
  FiniteHopfAlgebra kc2 = build_group_algebra(FiniteGroup::cyclic(2), Q);
  BimoduleAction triv = BimoduleAction::trivial(kc2, kc3);
  CHECK(check_conditions_cor24(counit_unit_operator(kc3), triv).pass());

  // sufficiency: whenever the conditions hold, the lift passes the suite
  RBOperatorCandidate b = antipode_candidate(act.h(), RBKind::Operator);
  SmashProductAlgebra sp = lr_smash_product(act.a(), act.h(), act);
  for_each_pointed_set_map(act.a(), [&](std::span<const std::size_t>, const LinearOperator& r) {
    if (!check_conditions_cor24(r, act).pass()) return;
    CHECK(is_rb_operator(RBOperatorCandidate(sp.algebra(), lift_rb_operator(r, b, act),
                                             RBKind::Operator))
              .pass());
  });
}

TEST_CASE("antipode-R specialization conditions and cross-check") {
  BimoduleAction act = shipped_action();
  {
    VerificationReport rep =
        check_conditions_cor25(antipode_candidate(act.h(), RBKind::Operator), act);
    CHECK(rep.find("COR25-A")->pass);  // S² = id on a cocommutative carrier
    CHECK(rep.find("COR25-B")->pass);  // the antipode axiom itself
    CHECK(rep.find("iff-crosscheck")->pass);
    CHECK(rep.pass());
  }
  {
    // with B = ε·1 and the shipped (left-trivial) action both conditions
    // still hold, and the cross-check confirms the lift passes the suite
    RBOperatorCandidate b(act.h(), counit_unit_operator(act.h()), RBKind::Operator);
    VerificationReport rep = check_conditions_cor25(b, act);
    CHECK(rep.find("COR25-B")->pass);
    CHECK(rep.find("iff-crosscheck")->pass);
  }
  {
    // with a genuinely nontrivial left action the second condition fails
    BimoduleAction swap = io::load_action(fx("c2-on-c3-left-swap.action.json"));
    RBOperatorCandidate b(swap.h(), counit_unit_operator(swap.h()), RBKind::Operator);
    VerificationReport rep = check_conditions_cor25(b, swap);
    CHECK_FALSE(rep.find("COR25-B")->pass);
    REQUIRE(rep.find("COR25-B")->witness.has_value());
    CHECK(rep.find("iff-crosscheck")->pass);  // the equivalence itself still holds
  }
}

// ---- lifts and conditions on the coproduct side ----------------------------

TEST_CASE("co-operator lift with trivial coactions is the tensor lift") {
  FiniteHopfAlgebra dc3 = build_dual_group_algebra(FiniteGroup::cyclic(3), Q);
  FiniteHopfAlgebra dc2 = build_dual_group_algebra(FiniteGroup::cyclic(2), Q);
  BicomoduleCoaction triv = BicomoduleCoaction::trivial(dc2, dc3);
  LinearOperator r = io::load_map(fx("rdual-swap.map.json"), 3).op;
  RBOperatorCandidate b = antipode_candidate(dc2, RBKind::CoOperator);
  CHECK(lift_rb_co_operator(r, b, triv) == r.kron(b.map));
}

TEST_CASE("co-operator lift of the identity R maps into computed columns") {
  BicomoduleCoaction coact = shipped_coaction();
  RBOperatorCandidate b = antipode_candidate(coact.h(), RBKind::CoOperator);
  LinearOperator r = LinearOperator::identity(3, Q);
  LinearOperator lift = lift_rb_co_operator(r, b, coact);

  SmashCoproductAlgebra sp = lr_smash_coproduct(coact.c(), coact.h(), coact);
  const FiniteHopfAlgebra& s = sp.algebra();
  // computed values: fixed on the p_1 half, swapped on the p_g half
  CHECK(lift.apply(s.basis_vec(sp.pair_index(1, 0))) == s.basis_vec(sp.pair_index(1, 0)));
  CHECK(lift.apply(s.basis_vec(sp.pair_index(1, 1))) == s.basis_vec(sp.pair_index(2, 1)));
  CHECK(lift.apply(s.basis_vec(sp.pair_index(2, 1))) == s.basis_vec(sp.pair_index(1, 1)));

  // the antipode of the coacting algebra is the identity, so reading B as
  // the identity map gives the same lift
  RBOperatorCandidate b_id(coact.h(), LinearOperator::identity(2, Q), RBKind::CoOperator);
  CHECK(lift_rb_co_operator(r, b_id, coact) == lift);
  CHECK(lift_rb_co_operator_via_antipode(r, coact) == lift);
}

TEST_CASE("co-operator lift of the swap R fixes the p_g half only") {
  BicomoduleCoaction coact = shipped_coaction();
  RBOperatorCandidate b = antipode_candidate(coact.h(), RBKind::CoOperator);
  LinearOperator r = io::load_map(fx("rdual-swap.map.json"), 3).op;
  LinearOperator lift = lift_rb_co_operator(r, b, coact);

  SmashCoproductAlgebra sp = lr_smash_coproduct(coact.c(), coact.h(), coact);
  const FiniteHopfAlgebra& s = sp.algebra();
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(lift.apply(s.basis_vec(sp.pair_index(i, 1))) == s.basis_vec(sp.pair_index(i, 1)));
  CHECK(lift.apply(s.basis_vec(sp.pair_index(1, 0))) == s.basis_vec(sp.pair_index(2, 0)));
  CHECK_FALSE(lift.is_identity());

  // the computed lift satisfies the co-operator identity on the coproduct
  CHECK(is_rb_co_operator(RBOperatorCandidate(s, lift, RBKind::CoOperator)).pass());
}

TEST_CASE("coproduct-side conditions with trivial coactions reduce to the co-operator identity") {
  FiniteHopfAlgebra dc3 = build_dual_group_algebra(FiniteGroup::cyclic(3), Q);
  FiniteHopfAlgebra dc2 = build_dual_group_algebra(FiniteGroup::cyclic(2), Q);
  BicomoduleCoaction triv = BicomoduleCoaction::trivial(dc2, dc3);
  RBOperatorCandidate b = antipode_candidate(dc2, RBKind::CoOperator);
  LinearOperator r = io::load_map(fx("rdual-swap.map.json"), 3).op;
  VerificationReport rep = check_conditions_3c3d(r, b, triv);
  CHECK(rep.pass());
}

TEST_CASE("coproduct-side conditions agree with the lifted suite on named fixtures") {
  BicomoduleCoaction coact = shipped_coaction();
  RBOperatorCandidate b = antipode_candidate(coact.h(), RBKind::CoOperator);
  SmashCoproductAlgebra sp = lr_smash_coproduct(coact.c(), coact.h(), coact);
  for (const char* name : {"rdual-swap.map.json", "rdual-id.map.json"}) {
    LinearOperator r = io::load_map(fx(name), 3).op;
    const bool conditions = check_conditions_3c3d(r, b, coact).pass();
    const bool lifted = is_rb_co_operator(RBOperatorCandidate(
                                              sp.algebra(), lift_rb_co_operator(r, b, coact),
                                              RBKind::CoOperator))
                            .pass();
    CHECK(conditions == lifted);
  }
  // the transpose of the constant map
  LinearOperator r_const_dual = io::load_map(fx("r-const.map.json"), 3).op.transpose();
  const bool conditions = check_conditions_3c3d(r_const_dual, b, coact).pass();
  const bool lifted = is_rb_co_operator(RBOperatorCandidate(
                                            sp.algebra(),
                                            lift_rb_co_operator(r_const_dual, b, coact),
                                            RBKind::CoOperator))
                          .pass();
  CHECK(conditions == lifted);
}

TEST_CASE("the expanded internal identity follows from the conditions") {
  BicomoduleCoaction coact = shipped_coaction();
  RBOperatorCandidate b = antipode_candidate(coact.h(), RBKind::CoOperator);
  // shipped fixtures plus known-failing set-map transposes
  std::vector<LinearOperator> candidates = {
      io::load_map(fx("rdual-id.map.json"), 3).op,
      io::load_map(fx("rdual-swap.map.json"), 3).op,
      io::load_map(fx("r-const.map.json"), 3).op.transpose(),
      io::load_map(fx("r-swap.map.json"), 3).op.transpose()};
  LinearOperator failing(3, Q);  // image tuple (0,0,1) on the pointed dual
  failing.set(0, 0, q(1));
  failing.set(0, 1, q(1));
  failing.set(1, 2, q(1));
  candidates.push_back(failing.transpose());
  for (const LinearOperator& r : candidates) {
    VerificationReport cond = check_conditions_3c3d(r, b, coact);
    VerificationReport internal = check_internal_3b(r, b, coact);
    if (cond.pass()) CHECK(internal.pass());
    if (!cond.find("3d")->pass) CHECK_FALSE(internal.find("3b")->pass);
  }

  FiniteHopfAlgebra dc3 = build_dual_group_algebra(FiniteGroup::cyclic(3), Q);
  FiniteHopfAlgebra dc2 = build_dual_group_algebra(FiniteGroup::cyclic(2), Q);
  BicomoduleCoaction triv = BicomoduleCoaction::trivial(dc2, dc3);
  CHECK(check_internal_3b(io::load_map(fx("rdual-swap.map.json"), 3).op,
                          antipode_candidate(dc2, RBKind::CoOperator), triv)
            .pass());
}

TEST_CASE("trivial-right-coaction specialization") {
  BicomoduleCoaction coact = shipped_coaction();
  // keep the (trivial) left coaction, make the right one trivial as well
  BicomoduleCoaction left_only(coact.h(), coact.c(), coact.left(),
                               BicomoduleCoaction::trivial(coact.h(), coact.c()).right());
  RBOperatorCandidate b = antipode_candidate(coact.h(), RBKind::CoOperator);
  VerificationReport rep =
      check_conditions_cor34(LinearOperator::identity(3, Q), b, left_only);
  CHECK(rep.pass());
  CHECK(rep.find("iff-crosscheck")->pass);
  // the shipped right coaction is not trivial, so the specialization refuses it
  CHECK_THROWS_AS(check_conditions_cor34(LinearOperator::identity(3, Q), b, coact),
                  PreconditionError);
}

TEST_CASE("antipode-R specialization on the coproduct side") {
  BicomoduleCoaction coact = shipped_coaction();
  RBOperatorCandidate b = antipode_candidate(coact.h(), RBKind::CoOperator);
  VerificationReport rep = check_conditions_cor35(b, coact);
  // hand expansion: Δ(p_1+p_g) convolved against the identity collapses to 1⊗q
  CHECK(rep.find("3i")->pass);
  CHECK(rep.find("3h")->pass);
  CHECK(rep.find("iff-crosscheck")->pass);
  CHECK(rep.pass());
}

TEST_CASE("antipode-B specialization on the coproduct side") {
  BicomoduleCoaction coact = shipped_coaction();
  LinearOperator r = io::load_map(fx("rdual-swap.map.json"), 3).op;
  VerificationReport rep = check_conditions_cor36(r, coact);
  CHECK(rep.find("3k")->pass);  // ρʳ(R(q_h)) really is q_{h^2}⊗p_1 + q_h⊗p_g
  CHECK(rep.find("iff-crosscheck")->pass);
  CHECK(rep.pass());
}
