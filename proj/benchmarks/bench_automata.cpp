#include <benchmark/benchmark.h>

#include "morselab/automata.hpp"
#include "morselab/cayley.hpp"
#include "morselab/presentation.hpp"

using namespace morselab;

namespace {

CayleyBall const& genus2_ball() {
  static auto const ball = build_ball(
      parse_presentation("gens: a b c d\nrel: abABcdCD\n").presentation, 6);
  return ball;
}

void geodesic_fsa(benchmark::State& state) {
  auto const& b = genus2_ball();
  for (auto _ : state) {
    auto g = geodesic_automaton(b, static_cast<std::size_t>(state.range(0)));
    state.counters["states"] = static_cast<double>(g.automaton.states());
  }
}
BENCHMARK(geodesic_fsa)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void windowed_fsa(benchmark::State& state) {
  auto const& b = genus2_ball();
  auto g        = geodesic_automaton(b, 1);
  auto bound    = FunctionSample::constant(8, Rational(2));
  for (auto _ : state) {
    auto a = window_product(g.automaton, b.presentation().presentation(),
                            static_cast<std::size_t>(state.range(0)), bound);
    state.counters["states"] = static_cast<double>(a.states());
  }
}
BENCHMARK(windowed_fsa)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void count_words(benchmark::State& state) {
  auto g = geodesic_automaton(genus2_ball(), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_accepted(g.automaton, 16));
  }
}
BENCHMARK(count_words);

}  // namespace
