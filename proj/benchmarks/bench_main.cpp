#include <benchmark/benchmark.h>

#include "stabplane/walls.hpp"

namespace sp = stabplane;

namespace {

void bm_tree_window(benchmark::State& state) {
  const unsigned depth = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    sp::BundleForest forest;
    auto bundles = forest.window(sp::rat(-1), sp::rat(2), depth);
    benchmark::DoNotOptimize(bundles.size());
  }
}
BENCHMARK(bm_tree_window)->Arg(4)->Arg(6)->Arg(8);

void bm_build_curve(benchmark::State& state) {
  const unsigned depth = static_cast<unsigned>(state.range(0));
  sp::BundleForest forest;
  for (auto _ : state) {
    sp::LPApprox approx = sp::build_lp(forest, sp::rat(-2), sp::rat(2), depth);
    benchmark::DoNotOptimize(approx.pieces().size());
  }
}
BENCHMARK(bm_build_curve)->Arg(2)->Arg(4)->Arg(6);

void bm_classify(benchmark::State& state) {
  sp::BundleForest forest;
  sp::LPApprox approx = sp::build_lp(forest, sp::rat(-2), sp::rat(2), 4);
  sp::PlanePoint p(sp::rat(1, 100), sp::rat(-9, 10));
  for (auto _ : state) {
    auto cls = sp::classify(p, approx);
    benchmark::DoNotOptimize(cls.kind);
  }
}
BENCHMARK(bm_classify);

void bm_gldim_parabola(benchmark::State& state) {
  sp::EvalContext ctx(sp::rat(-2), sp::rat(2), 3);
  sp::GeometricSC sc{sp::rat(1, 3), sp::rat(2)};
  for (auto _ : state) {
    auto res = sp::gldim_geometric(sc, ctx);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(bm_gldim_parabola);

void bm_gldim_leg(benchmark::State& state) {
  sp::EvalContext ctx(sp::rat(-2), sp::rat(2), 3);
  sp::GeometricSC sc{sp::rat(1, 100), sp::rat(-9, 10)};
  for (auto _ : state) {
    auto res = sp::gldim_geometric(sc, ctx);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(bm_gldim_leg);

void bm_gldim_algebraic(benchmark::State& state) {
  sp::BundleForest forest;
  sp::AlgebraicSC sc;
  sc.triple = sp::make_triple(sp::DyadicLabel::of(0, 0), sp::TripleShape::Consecutive, forest);
  sc.m1 = sc.m2 = sc.m3 = 1;
  sc.phi1 = 0;
  sc.phi2 = 0.5;
  sc.phi3 = 2.2;
  for (auto _ : state) {
    auto res = sp::gldim_algebraic(sc);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(bm_gldim_algebraic);

}  // namespace

BENCHMARK_MAIN();
