#include <benchmark/benchmark.h>

#include "hopfrb/io.hpp"

using namespace hopfrb;

namespace {

const Field Q = Field::rationals();

void BM_verify_hopf_ks3(benchmark::State& state) {
  for (auto _ : state) {
    FiniteHopfAlgebra ks3 = build_group_algebra(FiniteGroup::symmetric3(), Q);
    benchmark::DoNotOptimize(verify_hopf(ks3).pass());
  }
}
BENCHMARK(BM_verify_hopf_ks3);

void BM_smash_product(benchmark::State& state) {
  BimoduleAction act = io::load_action(io::fixture_path("c2-on-c3.action.json"));
  for (auto _ : state) {
    SmashProductAlgebra sp = lr_smash_product(act.a(), act.h(), act);
    benchmark::DoNotOptimize(sp.algebra().dim());
  }
}
BENCHMARK(BM_smash_product);

void BM_rb_suite_on_lift(benchmark::State& state) {
  BimoduleAction act = io::load_action(io::fixture_path("c2-on-c3.action.json"));
  RBOperatorCandidate b(act.h(), act.h().antipode(), RBKind::Operator);
  LinearOperator r = io::load_map(io::fixture_path("r-swap.map.json"), 3).op;
  FiniteHopfAlgebra smash = lr_smash_product(act.a(), act.h(), act).algebra();
  LinearOperator lift = lift_rb_operator(r, b, act);
  for (auto _ : state) {
    RBOperatorCandidate cand(smash, lift, RBKind::Operator);
    benchmark::DoNotOptimize(is_rb_operator(cand).pass());
  }
}
BENCHMARK(BM_rb_suite_on_lift);

void BM_enumerate_s3(benchmark::State& state) {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_group_rb(s3).size());
}
BENCHMARK(BM_enumerate_s3);

void BM_harness_2a2b(benchmark::State& state) {
  BimoduleAction act = io::load_action(io::fixture_path("c2-on-c3.action.json"));
  RBOperatorCandidate b(act.h(), act.h().antipode(), RBKind::Operator);
  for (auto _ : state) {
    HarnessSummary sum = iff_harness_2a2b(act, b, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(sum.equivalence);
  }
}
BENCHMARK(BM_harness_2a2b)->Arg(1)->Arg(4);

void BM_internal_3b(benchmark::State& state) {
  BicomoduleCoaction coact = io::load_coaction(io::fixture_path("dual-c2-on-dual-c3.coaction.json"));
  RBOperatorCandidate b(coact.h(), coact.h().antipode(), RBKind::CoOperator);
  LinearOperator r = io::load_map(io::fixture_path("rdual-swap.map.json"), 3).op;
  for (auto _ : state) benchmark::DoNotOptimize(check_internal_3b(r, b, coact).pass());
}
BENCHMARK(BM_internal_3b);

}  // namespace

BENCHMARK_MAIN();
