#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "morselab/function_sample.hpp"
#include "morselab/presentation.hpp"
#include "morselab/rational.hpp"
#include "morselab/words.hpp"

namespace morselab {

struct ClosureMember {
  Word word;
  // Originating relator, cyclic shift and whether the inverse was taken.
  // A word produced by several (relator, shift) pairs keeps the first.
  std::size_t relator = 0;
  std::size_t shift   = 0;
  bool inverted       = false;
};

// All cyclic shifts of R and R^-1, as distinct words in lexicographic order.
class SymmetrizedClosure {
 public:
  SymmetrizedClosure() = default;
  explicit SymmetrizedClosure(Presentation const& p);

  std::vector<ClosureMember> const& members() const noexcept {
    return members_;
  }
  std::size_t size() const noexcept {
    return members_.size();
  }
  // Members (by index) that arise from relator j, under any shift or
  // inversion.
  std::vector<std::size_t> const& members_of(std::size_t relator) const {
    return by_relator_.at(relator);
  }
  std::optional<std::size_t> find(WordView w) const;
  bool contains(WordView w) const {
    return find(w).has_value();
  }

 private:
  std::vector<ClosureMember> members_;
  std::vector<std::vector<std::size_t>> by_relator_;
};

struct PieceRecord {
  std::size_t relator_length = 0;
  std::size_t max_piece      = 0;
  Word piece;                 // a longest piece that is a subword of r
  std::size_t member_a = 0;   // two distinct closure members sharing it
  std::size_t member_b = 0;   // as a prefix
};

struct PieceTable {
  std::vector<PieceRecord> relators;  // indexed like Presentation::relators
};

// Longest pieces per relator: sorts the closure and takes longest common
// prefixes of lexicographic neighbours.
PieceTable pieces(Presentation const& p, SymmetrizedClosure const& closure);
PieceTable pieces(Presentation const& p);

struct SmallCancellationWitness {
  std::size_t relator = 0;
  Word relator_word;
  Word piece;
  std::size_t piece_length   = 0;
  std::size_t relator_length = 0;
};

struct SmallCancellationVerdict {
  bool pass = true;
  std::optional<SmallCancellationWitness> witness;
  // n / f(n) on the sampled domain; filled by check_cprime_f only.
  std::vector<Rational> induced_bound;
};

// |p| < lambda |r| for every piece p of every relator r.
SmallCancellationVerdict check_cprime_lambda(Presentation const& p,
                                             PieceTable const& table,
                                             Rational const& lambda);
SmallCancellationVerdict check_cprime_lambda(Presentation const& p,
                                             Rational const& lambda);

// |p| < |r| / f(|r|). f must be defined up to the longest relator and be
// viable on its samples.
SmallCancellationVerdict check_cprime_f(Presentation const& p,
                                        PieceTable const& table,
                                        FunctionSample const& f);
SmallCancellationVerdict check_cprime_f(Presentation const& p,
                                        FunctionSample const& f);

struct PairVerdict {
  bool pass = true;
  // Longest common subword of x and a closure member violating the bound.
  Word offending;
  std::optional<std::size_t> member;
};

PairVerdict check_pair_cprime_f(WordView x,
                                Presentation const& p,
                                SymmetrizedClosure const& closure,
                                FunctionSample const& f);
PairVerdict check_pair_cprime_f(WordView x,
                                Presentation const& p,
                                FunctionSample const& f);

struct IpscVerdict {
  bool long_enough   = false;  // |r| >= n(i)
  bool prefix_large  = false;  // |x| >= |r| / i
  PairVerdict pair;            // (x, R) satisfies C'(1/f)
  bool pass() const noexcept {
    return long_enough && prefix_large && pair.pass;
  }
};

// r = x y with x the prefix of length split.
IpscVerdict ipsc_witness_check(Presentation const& p,
                               std::size_t i,
                               WordView r,
                               std::size_t split,
                               FunctionSample const& n,
                               FunctionSample const& f);

// g(t) = min_i g_i(t) with g_i(t) = t for t <= l_i and t / m_i otherwise.
FunctionSample construct_g(std::vector<std::int64_t> const& m,
                           std::vector<std::int64_t> const& l,
                           std::size_t domain_max);

struct ViableDerivation {
  FunctionSample f_prime;         // n / g(n)
  FunctionSample f_double_prime;  // min over k in [n, domain_max] of f'(k)
  FunctionSample f;               // max{6, f''(n)}
};

ViableDerivation derive_viable_from_sublinear(FunctionSample const& g);

}  // namespace morselab
