#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "morselab/cayley.hpp"
#include "morselab/function_sample.hpp"
#include "morselab/presentation.hpp"
#include "morselab/words.hpp"

namespace morselab {

struct AutomatonEdge {
  std::size_t src = 0;
  Letter label    = 0;
  std::size_t dst = 0;
  auto operator<=>(AutomatonEdge const&) const = default;
};

// Finite state automaton over the symmetrised alphabet, with
// nondeterministic semantics. Edges are kept sorted and unique.
class Automaton {
 public:
  Automaton() = default;
  Automaton(Alphabet alphabet,
            std::size_t states,
            std::size_t initial,
            std::vector<std::size_t> accept,
            std::vector<AutomatonEdge> edges);

  Alphabet const& alphabet() const noexcept {
    return alphabet_;
  }
  std::size_t states() const noexcept {
    return states_;
  }
  std::size_t initial() const noexcept {
    return initial_;
  }
  bool accepting(std::size_t q) const {
    return accept_.at(q) != 0;
  }
  std::vector<std::size_t> accept_states() const;
  std::vector<AutomatonEdge> const& edges() const noexcept {
    return edges_;
  }
  // Edges leaving q, as a range into edges().
  std::pair<std::size_t, std::size_t> out(std::size_t q) const {
    return {offset_.at(q), offset_.at(q + 1)};
  }
  bool deterministic() const noexcept;

  bool operator==(Automaton const& o) const {
    return alphabet_ == o.alphabet_ && states_ == o.states_
           && initial_ == o.initial_ && accept_ == o.accept_
           && edges_ == o.edges_;
  }

 private:
  Alphabet alphabet_;
  std::size_t states_  = 0;
  std::size_t initial_ = 0;
  std::vector<char> accept_;
  std::vector<AutomatonEdge> edges_;
  std::vector<std::size_t> offset_;
};

bool accepts(Automaton const& a, WordView w);

struct GeodesicAutomaton {
  Automaton automaton;
  std::size_t horizon = 0;
  std::size_t certified_length = 0;  // radius - horizon (+1 if horizon > 0)
  bool stabilized = false;  // every last-layer cone type also seen inside
};

// States are cone types truncated at depth horizon, refined until the
// transition function is well defined. Accepts exactly the geodesic words
// of length <= certified_length, which is radius - horizon + 1 for a positive
// horizon since the last layer of a ball is closed.
GeodesicAutomaton geodesic_automaton(CayleyBall const& ball,
                                     std::size_t horizon);

// Product of a with the window automaton remembering the last L - 1
// letters; every length <= L subword must have intersection profile at most
// bound on [1, bound.domain_max()].
Automaton window_product(Automaton const& a,
                         Presentation const& p,
                         std::size_t L,
                         FunctionSample const& bound,
                         std::size_t max_states = 1'000'000);

// Largest set of accept states in which every state has a successor.
std::vector<std::size_t> limit_liveness(Automaton const& a);

// Subset construction over reachable subsets.
Automaton determinize(Automaton const& a, std::size_t max_states = 1'000'000);

struct LanguageReport {
  std::vector<std::uint64_t> counts;  // accepted words of length 0..n
  bool empty = true;                  // no accepted word of any length
  bool infinite = false;
};

// Throws BudgetExceeded if a count overflows 64 bits.
LanguageReport count_accepted(Automaton const& a, std::size_t n);

std::string to_dot(Automaton const& a);

}  // namespace morselab
