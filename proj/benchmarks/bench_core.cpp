#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ssli/campaign.hpp"
#include "ssli/checks.hpp"
#include "ssli/lemma.hpp"
#include "ssli/matrix.hpp"
#include "ssli/rng.hpp"
#include "ssli/tuple.hpp"

namespace {

using namespace ssli;

PositiveTuple make_tuple(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = std::exp(rng.next_gaussian());
  return PositiveTuple(std::move(v));
}

SymMat make_spd(std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> lam(3);
  for (auto& l : lam) l = std::exp(3.0 * (2.0 * rng.next_unit() - 1.0));
  const Mat r = rotation_from_quaternion(rng.next_gaussian(), rng.next_gaussian(),
                                         rng.next_gaussian(), rng.next_gaussian());
  return sym_part(r * SymMat::diagonal(lam).full() * r.transpose());
}

void BM_ElemSymAll(benchmark::State& state) {
  const PositiveTuple t = make_tuple(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(elem_sym_all(t));
}
BENCHMARK(BM_ElemSymAll)->Arg(3)->Arg(6)->Arg(12);

void BM_CheckTuple3(benchmark::State& state) {
  const PositiveTuple y = make_tuple(3, 2);
  const PositiveTuple a = make_tuple(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_tuple3(y, a));
}
BENCHMARK(BM_CheckTuple3);

void BM_SymEig(benchmark::State& state) {
  const SymMat p = make_spd(4);
  for (auto _ : state) benchmark::DoNotOptimize(sym_eig(p));
}
BENCHMARK(BM_SymEig);

void BM_LogSpd(benchmark::State& state) {
  const SymMat p = make_spd(5);
  for (auto _ : state) benchmark::DoNotOptimize(log_spd(p));
}
BENCHMARK(BM_LogSpd);

void BM_Polar(benchmark::State& state) {
  SplitMix64 rng(6);
  Mat z(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) z(i, j) = rng.next_gaussian();
  if (z.det() < 0) z(0, 0) += 5.0;
  for (auto _ : state) benchmark::DoNotOptimize(polar(z));
}
BENCHMARK(BM_Polar);

void BM_LogRealDiagonalizable(benchmark::State& state) {
  // well-conditioned positive-determinant matrix with a complex pair
  const double c = std::cos(0.8), s = std::sin(0.8);
  const Mat m = Mat::from_rows({{2 * c, -2 * s, 0.1}, {2 * s, 2 * c, 0}, {0, 0.1, 3.0}});
  for (auto _ : state) benchmark::DoNotOptimize(log_real_diagonalizable(m));
}
BENCHMARK(BM_LogRealDiagonalizable);

void BM_LemmaGridRow(benchmark::State& state) {
  const double r = 2.5;
  for (auto _ : state) {
    double acc = 0.0;
    for (int k = 0; k <= 100; ++k) {
      const double phi = std::numbers::pi / 3.0 * k / 100.0;
      acc += lemma_F(r, phi) + lemma_dh_dr(r, phi);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_LemmaGridRow);

void BM_SampleEqualProductPair(benchmark::State& state) {
  SplitMix64 rng(7);
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_equal_product_pair(static_cast<std::size_t>(state.range(0)), rng, 1.0));
}
BENCHMARK(BM_SampleEqualProductPair)->Arg(3)->Arg(6);

void BM_Theorem3Trial(benchmark::State& state) {
  CampaignConfig cfg;
  cfg.mode = CampaignMode::kTheorem3;
  cfg.n = 3;
  cfg.trials = 1000;
  cfg.seed = 8;
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_theorem3_campaign(cfg));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 1000);
}
BENCHMARK(BM_Theorem3Trial);

}  // namespace

BENCHMARK_MAIN();
