#include <benchmark/benchmark.h>

#include "morselab/cayley.hpp"
#include "morselab/metrics.hpp"
#include "morselab/presentation.hpp"
#include "morselab/smallcancel.hpp"
#include "morselab/walks.hpp"

using namespace morselab;

namespace {

Presentation surface(std::size_t genus) {
  static char const* const text[] = {
      "", "", "gens: a b c d\nrel: abABcdCD\n",
      "gens: a b c d e f\nrel: abABcdCDefEF\n"};
  return parse_presentation(text[genus]).presentation;
}

void pieces_surface(benchmark::State& state) {
  auto p = surface(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pieces(p));
  }
}
BENCHMARK(pieces_surface)->Arg(2)->Arg(3);

void cprime_check(benchmark::State& state) {
  auto p = surface(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_cprime_lambda(p, Rational(1, 9)));
  }
}
BENCHMARK(cprime_check);

void ball_genus2(benchmark::State& state) {
  auto p = surface(2);
  auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto b = build_ball(p, r);
    benchmark::DoNotOptimize(b.size());
    state.counters["vertices"] = static_cast<double>(b.size());
  }
}
BENCHMARK(ball_genus2)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void dehn(benchmark::State& state) {
  auto p = surface(2);
  auto w = p.alphabet().parse("abABcdCDabcdABCDdcba");
  for (auto _ : state) {
    benchmark::DoNotOptimize(dehn_reduce(p, w));
  }
}
BENCHMARK(dehn);

void rho_profile(benchmark::State& state) {
  auto p = surface(2);
  auto w = p.alphabet().parse("abABcdCDababCDcdAB");
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersection_function(p, w, 8));
  }
}
BENCHMARK(rho_profile);

void walks_free2(benchmark::State& state) {
  auto p  = parse_presentation("gens: a b\n").presentation;
  auto b  = build_ball(p, 4);
  auto mu = StepMeasure::uniform({p.alphabet().parse("a"), p.alphabet().parse("A"),
                                  p.alphabet().parse("b"), p.alphabet().parse("B")});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_walks(b, mu, 4, 100, 10000, 7,
                                          static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(walks_free2)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
