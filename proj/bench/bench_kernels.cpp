#include <benchmark/benchmark.h>

#include <random>

#include "flatcert/kernels.hpp"

using namespace flatcert;
namespace ks = flatcert::kernels::serial;
namespace kp = flatcert::kernels::parallel;

namespace {

std::vector<Point> plane_points(std::size_t count) {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> c(-3.0, 3.0);
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pts.push_back(Point{c(gen), c(gen)});
  return pts;
}

template <bool Parallel>
void BM_EvaluationMatrix(benchmark::State& state) {
  const auto pts = plane_points(static_cast<std::size_t>(state.range(0)));
  const auto basis = monomial_basis(2, 8);
  for (auto _ : state) {
    auto a = Parallel ? kp::evaluation_matrix(pts, basis) : ks::evaluation_matrix(pts, basis);
    benchmark::DoNotOptimize(a.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_EarringDistances(benchmark::State& state) {
  const auto pts = plane_points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto d = Parallel ? kp::earring_distances(pts) : ks::earring_distances(pts);
    benchmark::DoNotOptimize(d.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_WitnessValues(benchmark::State& state) {
  const auto pts = plane_points(static_cast<std::size_t>(state.range(0)));
  const auto f = earring_witness();
  for (auto _ : state) {
    auto v = Parallel ? kp::field_values(f, pts) : ks::field_values(f, pts);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_SphereSamples(benchmark::State& state) {
  const SphereFamily fam(3);
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto s = Parallel ? kp::family_samples(fam, 0.1, 1, count) : ks::family_samples(fam, 0.1, 1, count);
    benchmark::DoNotOptimize(s.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_CoveringRadius(benchmark::State& state) {
  const auto dirs = secant_directions(SphereFamily(3), 0.1, 2000, 1).symmetrized();
  const auto probes = sphere_probes(3, static_cast<std::size_t>(state.range(0)), 0);
  for (auto _ : state) {
    const double c =
        Parallel ? kp::covering_radius(dirs.points(), probes) : ks::covering_radius(dirs.points(), probes);
    benchmark::DoNotOptimize(c);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_EvaluationMatrix<false>)->Name("evaluation_matrix/serial")->Arg(2000)->Arg(20000);
BENCHMARK(BM_EvaluationMatrix<true>)->Name("evaluation_matrix/parallel")->Arg(2000)->Arg(20000)->UseRealTime();
BENCHMARK(BM_EarringDistances<false>)->Name("earring_distances/serial")->Arg(10000)->Arg(100000);
BENCHMARK(BM_EarringDistances<true>)->Name("earring_distances/parallel")->Arg(10000)->Arg(100000)->UseRealTime();
BENCHMARK(BM_WitnessValues<false>)->Name("witness_values/serial")->Arg(10000)->Arg(100000);
BENCHMARK(BM_WitnessValues<true>)->Name("witness_values/parallel")->Arg(10000)->Arg(100000)->UseRealTime();
BENCHMARK(BM_SphereSamples<false>)->Name("sphere_samples/serial")->Arg(2000)->Arg(20000);
BENCHMARK(BM_SphereSamples<true>)->Name("sphere_samples/parallel")->Arg(2000)->Arg(20000)->UseRealTime();
BENCHMARK(BM_CoveringRadius<false>)->Name("covering_radius/serial")->Arg(2000)->Arg(20000);
BENCHMARK(BM_CoveringRadius<true>)->Name("covering_radius/parallel")->Arg(2000)->Arg(20000)->UseRealTime();

BENCHMARK_MAIN();
