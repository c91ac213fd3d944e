#include <benchmark/benchmark.h>

#include <vector>

#include "patch_contact/cones.hpp"
#include "patch_contact/oracle.hpp"
#include "patch_contact/random.hpp"
#include "patch_contact/signorini.hpp"

using namespace patch_contact;

namespace {

std::vector<Vec2> random_points(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vec2> pts(n);
  for (auto& p : pts) p = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return pts;
}

void BM_ConvexHull(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvexHull)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

void BM_InDual(benchmark::State& state) {
  const PatchCone cone(oracle::random_convex_polygon(2, 12, 12));
  const auto twists = sample_dual(cone, 3, 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(in_dual(cone, twists[i++ & 1023]));
}
BENCHMARK(BM_InDual);

void BM_InDualEllipse(benchmark::State& state) {
  const PatchCone cone(Patch::ellipse({0.5, 0}, 2, 1, 0.3));
  const auto twists = sample_dual(cone, 3, 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(in_dual(cone, twists[i++ & 1023]));
}
BENCHMARK(BM_InDualEllipse);

void BM_Check(benchmark::State& state) {
  const Patch patch = oracle::random_convex_polygon(4, 12, 12);
  const PatchCone cone(patch);
  std::vector<oracle::ComplementaryInstance> cases;
  for (std::uint64_t s = 0; s < 256; ++s) cases.push_back(oracle::random_complementary_instance(patch, s));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& c = cases[i++ & 255];
    benchmark::DoNotOptimize(check(cone, c.wrench, c.twist));
  }
}
BENCHMARK(BM_Check);

void BM_SynthesizeNotch(benchmark::State& state) {
  const Patch l = Patch::polygon({{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 3}, {0, 3}});
  Wrench w;
  w.f_n = 3;
  w.m_t = perp(Vec2{2, 2}) * 3.0;
  Twist t;
  t.omega_t = {-1, 1};
  t.v_n = 4;
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_distribution(l, w, t));
}
BENCHMARK(BM_SynthesizeNotch);

void BM_PointwiseCheck(benchmark::State& state) {
  const Patch patch = oracle::random_star_polygon(5);
  const oracle::SampleSet samples = oracle::build_samples(patch, oracle::SamplePlan{});
  const auto inst = oracle::random_complementary_instance(patch, 6, oracle::Family::tipping);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::pointwise_check(samples, inst.dist, inst.twist));
  state.counters["samples"] = static_cast<double>(samples.points.size());
}
BENCHMARK(BM_PointwiseCheck);

}  // namespace
BENCHMARK_MAIN();
