// Acceptance suite: one pass/fail line per criterion, all comparisons exact.
//
// Documented example values that disagree with direct formula evaluation are
// not test failures; they are written to discrepancy_report.json and echoed
// on stdout (criteria 4 and 7).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "hopfrb/io.hpp"
#include "hopfrb/sweedler.hpp"

using namespace hopfrb;

namespace {

const Field Q = Field::rationals();

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int criterion, const std::string& what, bool pass, double seconds = -1.0) {
  std::ostringstream line;
  line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what;
  if (seconds >= 0) {
    line.precision(3);
    line << " (" << std::fixed << seconds << " s)";
  }
  std::cout << line.str() << "\n";
  if (!pass) ++failures;
}

struct Discrepancy {
  std::string id;
  std::string documented;
  std::string computed;
  bool agrees;
};
std::vector<Discrepancy> discrepancies;

void record_discrepancy(const std::string& id, const std::string& documented,
                        const std::string& computed, bool agrees) {
  discrepancies.push_back({id, documented, computed, agrees});
  std::cout << "      [" << (agrees ? "agrees" : "DIFFERS") << "] " << id << ": documented \""
            << documented << "\", computed \"" << computed << "\"\n";
}

void write_discrepancy_report() {
  std::ofstream out("discrepancy_report.json");
  out << "[\n";
  for (std::size_t i = 0; i < discrepancies.size(); ++i) {
    const auto& d = discrepancies[i];
    out << "  {\n"
        << "    \"agrees\": " << (d.agrees ? "true" : "false") << ",\n"
        << "    \"computed\": \"" << d.computed << "\",\n"
        << "    \"documented\": \"" << d.documented << "\",\n"
        << "    \"id\": \"" << d.id << "\"\n"
        << "  }" << (i + 1 < discrepancies.size() ? "," : "") << "\n";
  }
  out << "]\n";
}

std::string fx(const std::string& name) { return io::fixture_path(name); }

int run_cli(const std::string& args) {
  std::string cmd = std::string(HOPFRB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

// ---- criterion 1: axiom suite ---------------------------------------------

void criterion_1() {
  Timer timer;
  bool pass = true;
  for (const char* name :
       {"c2.alg.json", "c3.alg.json", "s3.alg.json", "dual-c2.alg.json", "dual-c3.alg.json"})
    pass = pass && verify_hopf(io::load_algebra(fx(name))).pass();
  const VerificationReport& bad = verify_hopf(io::load_algebra(fx("c3-bad-antipode.alg.json")));
  pass = pass && !bad.pass();
  const CheckResult* anti = bad.find("antipode");
  pass = pass && anti && !anti->pass && anti->witness.has_value();
  double t = timer.seconds();
  report(1, "axiom suite on the five shipped algebras plus the corrupted-antipode witness",
         pass && t < 1.0, t);
}

// ---- criterion 2: the smash product and its grouplikes ---------------------

void criterion_2() {
  BimoduleAction act = io::load_action(fx("c2-on-c3.action.json"));
  SmashProductAlgebra sp = lr_smash_product(act.a(), act.h(), act);
  bool pass = verify_hopf(sp.algebra()).pass();
  FiniteGroup g = grouplike_group_structure(sp.algebra());
  pass = pass && g.order() == 6 && !g.is_abelian();
  report(2, "smash product of the shipped action verifies; grouplikes form a nonabelian group "
            "of order 6",
         pass);
}

// ---- criteria 3 and 4: the two lifts and their documented values ----------

void criterion_3() {
  BimoduleAction act = io::load_action(fx("c2-on-c3.action.json"));
  RBOperatorCandidate b(act.h(), act.h().antipode(), RBKind::Operator);
  LinearOperator lift = lift_rb_operator(io::load_map(fx("r-const.map.json"), 3).op, b, act);
  SmashProductAlgebra sp = lr_smash_product(act.a(), act.h(), act);
  const FiniteHopfAlgebra& s = sp.algebra();

  bool values = true;
  for (std::size_t i : {1u, 2u})
    values = values &&
             lift.apply(s.basis_vec(sp.pair_index(i, 1))) == s.basis_vec(sp.pair_index(0, 1));
  bool rb = is_rb_operator(RBOperatorCandidate(s, lift, RBKind::Operator)).pass();
  report(3, "constant-R lift sends h^i⊗g to 1⊗g exactly and passes the operator suite",
         values && rb);
}

void criterion_4() {
  BimoduleAction act = io::load_action(fx("c2-on-c3.action.json"));
  RBOperatorCandidate b(act.h(), act.h().antipode(), RBKind::Operator);
  LinearOperator lift = lift_rb_operator(io::load_map(fx("r-swap.map.json"), 3).op, b, act);
  SmashProductAlgebra sp = lr_smash_product(act.a(), act.h(), act);
  const FiniteHopfAlgebra& s = sp.algebra();

  bool values = true;
  for (std::size_t i : {1u, 2u})
    values = values &&
             lift.apply(s.basis_vec(sp.pair_index(i, 1))) == s.basis_vec(sp.pair_index(i, 1));
  bool rb = is_rb_operator(RBOperatorCandidate(s, lift, RBKind::Operator)).pass();

  // documented global claim: the lift is the identity everywhere.  Recompute.
  Vec image_h1 = lift.apply(s.basis_vec(sp.pair_index(1, 0)));
  bool is_id = lift.is_identity();
  record_discrepancy("swap-R-lift-is-identity-everywhere",
                     "the lifted map is the identity on the whole 6-dimensional product",
                     "the lift fixes the g-column but maps h⊗1 to " + element_str(s, image_h1) +
                         "; it passes the operator suite: " + (rb ? "yes" : "no"),
                     is_id);
  report(4, "swap-R lift matches the documented g-column values, passes the operator suite, "
            "and the global identity claim is recorded",
         values && rb);
}

// ---- criteria 5 and 6: the two equivalence harnesses -----------------------

void criterion_5() {
  Timer timer;
  BimoduleAction act = io::load_action(fx("c2-on-c3.action.json"));
  RBOperatorCandidate b(act.h(), act.h().antipode(), RBKind::Operator);
  HarnessSummary sum = iff_harness_2a2b(act, b);
  double t = timer.seconds();
  report(5, "product-side harness: conditions ⇔ lifted operator suite over all 27 candidates",
         sum.total == 27 && sum.equivalence && t < 5.0, t);
}

void criterion_6() {
  BicomoduleCoaction coact = io::load_coaction(fx("dual-c2-on-dual-c3.coaction.json"));
  RBOperatorCandidate b(coact.h(), coact.h().antipode(), RBKind::CoOperator);
  HarnessSummary sum = iff_harness_3c3d(coact, b);
  report(6, "coproduct-side harness: conditions ⇔ lifted co-operator suite over 27 transposed "
            "candidates",
         sum.total == 27 && sum.equivalence);
}

// ---- criterion 7: the coproduct example and its documented values ----------

void criterion_7() {
  bool pass = true;

  // the CLI construction must verify
  auto out = std::filesystem::temp_directory_path() / "hopfrb_acceptance_cosmash.alg.json";
  pass = pass && run_cli("cosmash " + fx("dual-c3.alg.json") + " " + fx("dual-c2.alg.json") +
                         " " + fx("dual-c2-on-dual-c3.coaction.json") + " --out " +
                         out.string()) == 0;
  pass = pass && run_cli("check-hopf " + out.string()) == 0;

  BicomoduleCoaction coact = io::load_coaction(fx("dual-c2-on-dual-c3.coaction.json"));
  SmashCoproductAlgebra sp = lr_smash_coproduct(coact.c(), coact.h(), coact);
  const FiniteHopfAlgebra& s = sp.algebra();
  RBOperatorCandidate b_s(coact.h(), coact.h().antipode(), RBKind::CoOperator);
  RBOperatorCandidate b_id(coact.h(), LinearOperator::identity(2, Q), RBKind::CoOperator);

  LinearOperator r_id = LinearOperator::identity(3, Q);
  LinearOperator r_swap = io::load_map(fx("rdual-swap.map.json"), 3).op;

  // both readings of B for both R fixtures
  LinearOperator lift_id_s = lift_rb_co_operator(r_id, b_s, coact);
  LinearOperator lift_id_i = lift_rb_co_operator(r_id, b_id, coact);
  LinearOperator lift_swap_s = lift_rb_co_operator(r_swap, b_s, coact);
  LinearOperator lift_swap_i = lift_rb_co_operator(r_swap, b_id, coact);
  pass = pass && lift_id_s == lift_id_i && lift_swap_s == lift_swap_i;

  // documented claim 1: with R the identity, every q_{h^i}⊗p_{g^j} maps to 1⊗p_{g^j}
  bool claim1 = true;
  for (std::size_t i = 0; i < 3 && claim1; ++i)
    for (std::size_t j = 0; j < 2 && claim1; ++j) {
      Vec expected = s.zero_vec();
      for (std::size_t k = 0; k < 3; ++k)
        expected.add({sp.pair_index(k, j)}, Scalar::one(Q));
      claim1 = lift_id_s.apply(s.basis_vec(sp.pair_index(i, j))) == expected;
    }
  Vec got = lift_id_s.apply(s.basis_vec(sp.pair_index(1, 0)));
  record_discrepancy(
      "identity-R-colift-collapses-to-unit",
      "with R the identity the colift sends every q_{h^i}⊗p_{g^j} to 1⊗p_{g^j}",
      "under both readings of B the colift sends q_h⊗p_1 to " + element_str(s, got) +
          "; it is not the collapse map",
      claim1);

  // documented claim 2: with the swap R the colift is the identity map
  bool claim2 = lift_swap_s.is_identity();
  Vec got2 = lift_swap_s.apply(s.basis_vec(sp.pair_index(1, 0)));
  bool swap_is_co_rb =
      is_rb_co_operator(RBOperatorCandidate(s, lift_swap_s, RBKind::CoOperator)).pass();
  record_discrepancy("swap-R-colift-is-identity-everywhere",
                     "with the swap R the colift is the identity on the whole coproduct",
                     "the colift fixes the p_g-column but maps q_h⊗p_1 to " +
                         element_str(s, got2) + "; it passes the co-operator suite: " +
                         (swap_is_co_rb ? "yes" : "no"),
                     claim2);

  // the swap colift is checked against the co-operator identity directly
  pass = pass && swap_is_co_rb;
  report(7, "coproduct construction verifies via the CLI; both lifts computed under both "
            "readings of B; documented values recorded",
         pass);
}

// ---- criterion 8: the counit identity across every passing candidate -------

void criterion_8() {
  bool pass = true;
  std::size_t passing = 0;
  for (std::size_t order : {2u, 3u}) {
    FiniteHopfAlgebra kg = build_group_algebra(FiniteGroup::cyclic(order), Q);
    FiniteHopfAlgebra dual = build_dual_group_algebra(FiniteGroup::cyclic(order), Q);
    for_each_pointed_set_map(kg, [&](std::span<const std::size_t>, const LinearOperator& op) {
      RBOperatorCandidate cand(dual, op.transpose(), RBKind::CoOperator);
      if (!is_rb_co_operator(cand).pass()) return;
      ++passing;
      pass = pass && check_counit_identity(cand).pass();
    });
  }
  report(8, "counit identity holds for every passing co-operator across the transposed "
            "enumerations (" +
                std::to_string(passing) + " candidates)",
         pass && passing > 0);
}

// ---- criterion 9: the enumeration oracle -----------------------------------

void criterion_9() {
  bool pass = enumerate_group_rb(FiniteGroup::cyclic(2)).size() == 2 &&
              enumerate_group_rb(FiniteGroup::cyclic(3)).size() == 3;

  Timer timer;
  FiniteGroup s3 = FiniteGroup::symmetric3();
  std::vector<GroupRBMap> maps = enumerate_group_rb(s3);
  double t = timer.seconds();

  std::vector<std::size_t> inverse_images(6), constant_images(6, s3.identity());
  for (std::size_t i = 0; i < 6; ++i) inverse_images[i] = s3.inverse(i);
  bool has_inverse = false, has_constant = false;
  for (const auto& m : maps) {
    has_inverse = has_inverse || m.images == inverse_images;
    has_constant = has_constant || m.images == constant_images;
  }
  // oracle-derived regression constant (frozen after the first exhaustive run)
  pass = pass && maps.size() == 8 && has_inverse && has_constant && t < 1.0;
  report(9, "group-level enumeration: 2 maps on C2, 3 on C3, 8 on the 46656-candidate sweep "
            "with inverse and constant maps present",
         pass, t);
}

// ---- criterion 10: degenerations and the transpose sweep -------------------

void criterion_10() {
  bool pass = true;

  // trivial right action reproduces the classical smash multiplication
  BimoduleAction swap = io::load_action(fx("c2-on-c3-left-swap.action.json"));
  SmashProductAlgebra sp = lr_smash_product(swap.a(), swap.h(), swap);
  {
    const FiniteHopfAlgebra& A = swap.a();
    const FiniteHopfAlgebra& H = swap.h();
    const std::size_t nh = H.dim(), n = A.dim() * nh;
    SparseTensor classical({n, n, n}, Q);
    for (std::size_t ai = 0; ai < A.dim(); ++ai)
      for (std::size_t hi = 0; hi < nh; ++hi)
        for (std::size_t bi = 0; bi < A.dim(); ++bi)
          for (std::size_t gi = 0; gi < nh; ++gi) {
            SweedlerTensor t = SweedlerTensor(A, A.basis_vec(ai))
                                   .outer(SweedlerTensor(H, H.basis_vec(hi)).comult(0))
                                   .outer(SweedlerTensor(A, A.basis_vec(bi)))
                                   .outer(SweedlerTensor(H, H.basis_vec(gi)));
            SweedlerTensor prod = t.act_left(swap, 1, 3).multiply(0, 2).multiply(1, 2);
            for (const auto& [idx, c] : prod.tensor().entries())
              classical.add({ai * nh + hi, bi * nh + gi, idx[0] * nh + idx[1]}, c);
          }
    pass = pass && sp.algebra().mult_tensor() == classical;
  }

  // trivial everything reproduces the tensor-product Hopf algebra
  {
    FiniteHopfAlgebra kc3 = build_group_algebra(FiniteGroup::cyclic(3), Q);
    FiniteHopfAlgebra kc2 = build_group_algebra(FiniteGroup::cyclic(2), Q);
    SmashProductAlgebra triv = lr_smash_product(kc3, kc2, BimoduleAction::trivial(kc2, kc3));
    pass = pass && same_structure(triv.algebra(), tensor_product_hopf(kc3, kc2));
  }

  // transpose-duality sweep with frozen verdict vectors
  {
    const std::set<std::size_t> expected_c2{0, 1};
    const std::set<std::size_t> expected_c3{0, 5, 7};
    for (auto [order, expected] :
         {std::pair<std::size_t, const std::set<std::size_t>*>{2, &expected_c2},
          std::pair<std::size_t, const std::set<std::size_t>*>{3, &expected_c3}}) {
      FiniteHopfAlgebra kg = build_group_algebra(FiniteGroup::cyclic(order), Q);
      std::set<std::size_t> rb_pass, dual_pass;
      std::size_t index = 0;
      for_each_pointed_set_map(kg, [&](std::span<const std::size_t>, const LinearOperator& op) {
        RBOperatorCandidate cand(kg, op, RBKind::Operator);
        if (is_rb_operator(cand).pass()) rb_pass.insert(index);
        if (transpose_duality_check(cand).pass()) dual_pass.insert(index);
        ++index;
      });
      pass = pass && rb_pass == *expected && dual_pass == *expected;
    }
  }
  report(10, "degenerations reproduce the classical smash and the tensor product; transpose "
             "sweep matches the frozen verdict vectors",
         pass);
}

}  // namespace

int main() {
  std::cout << "acceptance suite (exact arithmetic, zero tolerance)\n";
  try {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
  } catch (const std::exception& e) {
    std::cout << "[FAIL] unexpected exception: " << e.what() << "\n";
    ++failures;
  }
  write_discrepancy_report();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "; discrepancy_report.json written\n";
  return failures == 0 ? 0 : 1;
}
