#include "hopfrb/search.hpp"

#include <thread>

namespace hopfrb {

bool group_rb_identity_holds(const FiniteGroup& g, std::span<const std::size_t> images) {
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t lhs = g.mul(images[x], images[y]);
      std::size_t inner = g.mul(g.mul(g.mul(x, images[x]), y), g.inverse(images[x]));
      if (lhs != images[inner]) return false;
    }
  return true;
}

namespace {

// odometer over image tuples, images[0] most significant
bool next_tuple(std::vector<std::size_t>& images, std::size_t base) {
  for (std::size_t i = images.size(); i-- > 0;) {
    if (++images[i] < base) return true;
    images[i] = 0;
  }
  return false;
}

}  // namespace

std::vector<GroupRBMap> enumerate_group_rb(const FiniteGroup& g, std::size_t max_order) {
  if (g.order() > max_order)
    throw PreconditionError("group order " + std::to_string(g.order()) +
                            " exceeds the enumeration bound " + std::to_string(max_order));
  std::vector<GroupRBMap> out;
  std::vector<std::size_t> images(g.order(), 0);
  do {
    if (group_rb_identity_holds(g, images)) out.push_back(GroupRBMap{g, images});
  } while (next_tuple(images, g.order()));
  return out;
}

RBOperatorCandidate linearize_group_rb(const GroupRBMap& m, const Field& f) {
  FiniteHopfAlgebra kg = build_group_algebra(m.group, f);
  LinearOperator op(kg.dim(), f);
  for (std::size_t j = 0; j < m.images.size(); ++j) op.set(m.images[j], j, Scalar::one(f));
  return RBOperatorCandidate(std::move(kg), std::move(op), RBKind::Operator);
}

void for_each_pointed_set_map(
    const FiniteHopfAlgebra& h,
    const std::function<void(std::span<const std::size_t>, const LinearOperator&)>& fn) {
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = h.basis_vec(i);
    if (!(h.counit_of(e).is_one() && h.comult_of(e) == tensor_outer(e, e)))
      throw PreconditionError("carrier basis is not grouplike at index " + std::to_string(i));
  }
  std::vector<std::size_t> images(n, 0);
  do {
    LinearOperator op(n, h.field());
    for (std::size_t j = 0; j < n; ++j) op.set(images[j], j, Scalar::one(h.field()));
    fn(images, op);
  } while (next_tuple(images, n));
}

std::vector<LinearOperator> enumerate_coalgebra_endos_pointed(const FiniteHopfAlgebra& h,
                                                              std::size_t max_candidates) {
  double count = 1;
  for (std::size_t i = 0; i < h.dim(); ++i) count *= static_cast<double>(h.dim());
  if (count > static_cast<double>(max_candidates))
    throw PreconditionError("candidate family exceeds the size bound");
  std::vector<LinearOperator> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each_pointed_set_map(
      h, [&](std::span<const std::size_t>, const LinearOperator& op) { out.push_back(op); });
  return out;
}

VerificationReport transpose_duality_check(const RBOperatorCandidate& b) {
  if (b.kind != RBKind::Operator)
    throw std::invalid_argument("transpose duality starts from an operator-kind candidate");
  if (!b.carrier.is_commutative() || !b.carrier.is_cocommutative())
    throw PreconditionError(
        "transpose duality is restricted to commutative cocommutative carriers");
  FiniteHopfAlgebra dual = linear_dual(b.carrier);
  RBOperatorCandidate dual_cand(std::move(dual), b.map.transpose(), RBKind::CoOperator);
  return is_rb_co_operator(dual_cand);
}

namespace {

// Deterministic fan-out over candidate indices; verdict slots are
// preallocated so the merge order never depends on scheduling.
void run_parallel(std::size_t total, std::size_t jobs,
                  const std::function<void(std::size_t)>& run_one) {
  if (jobs <= 1) {
    for (std::size_t i = 0; i < total; ++i) run_one(i);
    return;
  }
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < total; i += jobs) run_one(i);
    });
  for (auto& t : workers) t.join();
}

HarnessSummary summarize(std::vector<HarnessVerdict> verdicts) {
  HarnessSummary sum;
  sum.total = verdicts.size();
  for (const auto& v : verdicts) {
    if (v.conditions_pass && v.lift_pass) ++sum.passing;
    if (v.conditions_pass != v.lift_pass) sum.equivalence = false;
  }
  sum.verdicts = std::move(verdicts);
  return sum;
}

}  // namespace

HarnessSummary iff_harness_2a2b(const BimoduleAction& act, const RBOperatorCandidate& b,
                                std::size_t jobs) {
  require_smash_preconditions(act);
  const FiniteHopfAlgebra smash = lr_smash_product(act.a(), act.h(), act).algebra();
  std::vector<std::vector<std::size_t>> families;
  for_each_pointed_set_map(act.a(),
                           [&](std::span<const std::size_t> images, const LinearOperator&) {
                             families.emplace_back(images.begin(), images.end());
                           });
  std::vector<HarnessVerdict> verdicts(families.size());
  run_parallel(families.size(), jobs, [&](std::size_t i) {
    LinearOperator r(act.a().dim(), act.a().field());
    for (std::size_t j = 0; j < families[i].size(); ++j)
      r.set(families[i][j], j, Scalar::one(act.a().field()));
    const bool left = check_conditions_2a2b(r, b, act).pass();
    RBOperatorCandidate lifted(smash, lift_rb_operator(r, b, act), RBKind::Operator);
    const bool right = is_rb_operator(lifted).pass();
    verdicts[i] = HarnessVerdict{i, families[i], left, right};
  });
  return summarize(std::move(verdicts));
}

HarnessSummary iff_harness_3c3d(const BicomoduleCoaction& coact, const RBOperatorCandidate& b,
                                std::size_t jobs) {
  require_cosmash_preconditions(coact);
  const FiniteHopfAlgebra cosmash = lr_smash_coproduct(coact.c(), coact.h(), coact).algebra();
  const FiniteHopfAlgebra pointed = linear_dual(coact.c());
  std::vector<std::vector<std::size_t>> families;
  for_each_pointed_set_map(pointed,
                           [&](std::span<const std::size_t> images, const LinearOperator&) {
                             families.emplace_back(images.begin(), images.end());
                           });
  std::vector<HarnessVerdict> verdicts(families.size());
  run_parallel(families.size(), jobs, [&](std::size_t i) {
    LinearOperator set_map(pointed.dim(), pointed.field());
    for (std::size_t j = 0; j < families[i].size(); ++j)
      set_map.set(families[i][j], j, Scalar::one(pointed.field()));
    LinearOperator r = set_map.transpose();
    const bool left = check_conditions_3c3d(r, b, coact).pass();
    RBOperatorCandidate lifted(cosmash, lift_rb_co_operator(r, b, coact), RBKind::CoOperator);
    const bool right = is_rb_co_operator(lifted).pass();
    verdicts[i] = HarnessVerdict{i, families[i], left, right};
  });
  return summarize(std::move(verdicts));
}

}  // namespace hopfrb
