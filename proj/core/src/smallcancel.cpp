#include "morselab/smallcancel.hpp"

#include <algorithm>
#include <map>

#include "morselab/error.hpp"
#include "morselab/substring.hpp"

namespace morselab {

SymmetrizedClosure::SymmetrizedClosure(Presentation const& p) {
  std::map<Word, ClosureMember> unique;
  std::vector<std::vector<Word>> words_of(p.relators().size());
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    auto const& r = p.relators()[j];
    for (bool inv : {false, true}) {
      Word base = inv ? inverse(r) : r;
      for (std::size_t k = 0; k < base.size(); ++k) {
        Word w = cyclic_shift(base, k);
        unique.try_emplace(w, ClosureMember{w, j, k, inv});
        words_of[j].push_back(std::move(w));
      }
    }
  }
  members_.reserve(unique.size());
  for (auto& [w, m] : unique) {
    members_.push_back(std::move(m));
  }
  by_relator_.resize(p.relators().size());
  for (std::size_t j = 0; j < words_of.size(); ++j) {
    for (auto const& w : words_of[j]) {
      by_relator_[j].push_back(*find(w));
    }
    std::sort(by_relator_[j].begin(), by_relator_[j].end());
    by_relator_[j].erase(
        std::unique(by_relator_[j].begin(), by_relator_[j].end()),
        by_relator_[j].end());
  }
}

std::optional<std::size_t> SymmetrizedClosure::find(WordView w) const {
  auto it = std::lower_bound(
      members_.begin(), members_.end(), w,
      [](ClosureMember const& m, WordView key) {
        return std::lexicographical_compare(m.word.begin(), m.word.end(),
                                            key.begin(), key.end());
      });
  if (it != members_.end() && std::equal(it->word.begin(), it->word.end(),
                                         w.begin(), w.end())) {
    return static_cast<std::size_t>(it - members_.begin());
  }
  return std::nullopt;
}

namespace {
  std::size_t common_prefix(Word const& a, Word const& b) {
    auto n = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < n && a[i] == b[i]) {
      ++i;
    }
    return i;
  }
}  // namespace

PieceTable pieces(Presentation const& p, SymmetrizedClosure const& closure) {
  auto const& ms = closure.members();
  // In lexicographic order the longest common prefix of a word with any
  // other word is attained at one of its two neighbours.
  std::vector<std::size_t> best(ms.size(), 0), partner(ms.size(), 0);
  for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
    auto l = common_prefix(ms[i].word, ms[i + 1].word);
    if (l > best[i]) {
      best[i]    = l;
      partner[i] = i + 1;
    }
    if (l > best[i + 1]) {
      best[i + 1]    = l;
      partner[i + 1] = i;
    }
  }
  PieceTable table;
  table.relators.resize(p.relators().size());
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    auto& rec          = table.relators[j];
    rec.relator_length = p.relators()[j].size();
    for (auto i : closure.members_of(j)) {
      if (best[i] > rec.max_piece) {
        rec.max_piece = best[i];
        rec.piece.assign(ms[i].word.begin(), ms[i].word.begin() + best[i]);
        rec.member_a = i;
        rec.member_b = partner[i];
      }
    }
  }
  return table;
}

PieceTable pieces(Presentation const& p) {
  return pieces(p, SymmetrizedClosure(p));
}

namespace {
  SmallCancellationWitness witness_for(Presentation const& p,
                                       PieceRecord const& rec,
                                       std::size_t j) {
    return {j, p.relators()[j], rec.piece, rec.max_piece, rec.relator_length};
  }
}  // namespace

SmallCancellationVerdict check_cprime_lambda(Presentation const& p,
                                             PieceTable const& table,
                                             Rational const& lambda) {
  if (lambda <= Rational(0)) {
    throw InvalidArgument("lambda must be positive");
  }
  SmallCancellationVerdict v;
  for (std::size_t j = 0; j < table.relators.size(); ++j) {
    auto const& rec = table.relators[j];
    Rational piece(static_cast<std::int64_t>(rec.max_piece));
    Rational len(static_cast<std::int64_t>(rec.relator_length));
    if (!(piece < lambda * len)) {
      v.pass    = false;
      v.witness = witness_for(p, rec, j);
      break;
    }
  }
  return v;
}

SmallCancellationVerdict check_cprime_lambda(Presentation const& p,
                                             Rational const& lambda) {
  return check_cprime_lambda(p, pieces(p), lambda);
}

SmallCancellationVerdict check_cprime_f(Presentation const& p,
                                        PieceTable const& table,
                                        FunctionSample const& f) {
  if (f.domain_max() < p.max_relator_length()) {
    throw InvalidArgument("f is sampled up to "
                          + std::to_string(f.domain_max())
                          + " but the longest relator has length "
                          + std::to_string(p.max_relator_length()));
  }
  if (!viable_on_samples(f)) {
    throw InvalidArgument("f is not viable on its samples (needs f >= 6 and "
                          "non-decreasing)");
  }
  SmallCancellationVerdict v;
  for (std::size_t j = 0; j < table.relators.size(); ++j) {
    auto const& rec = table.relators[j];
    Rational piece(static_cast<std::int64_t>(rec.max_piece));
    Rational len(static_cast<std::int64_t>(rec.relator_length));
    if (!(piece * f(rec.relator_length) < len)) {
      v.pass    = false;
      v.witness = witness_for(p, rec, j);
      break;
    }
  }
  v.induced_bound.reserve(f.domain_max());
  for (std::size_t n = 1; n <= f.domain_max(); ++n) {
    v.induced_bound.push_back(Rational(static_cast<std::int64_t>(n)) / f(n));
  }
  return v;
}

SmallCancellationVerdict check_cprime_f(Presentation const& p,
                                        FunctionSample const& f) {
  return check_cprime_f(p, pieces(p), f);
}

PairVerdict check_pair_cprime_f(WordView x,
                                Presentation const& p,
                                SymmetrizedClosure const& closure,
                                FunctionSample const& f) {
  PairVerdict v;
  if (x.empty()) {
    return v;
  }
  SubwordIndex index(x, p.alphabet().letters());
  for (std::size_t i = 0; i < closure.size(); ++i) {
    auto const& m = closure.members()[i].word;
    auto common   = index.longest_common(m);
    if (common.length == 0) {
      continue;
    }
    Rational len(static_cast<std::int64_t>(common.length));
    if (!(len * f(m.size()) < Rational(static_cast<std::int64_t>(m.size())))) {
      if (v.pass || common.length > v.offending.size()) {
        v.offending.assign(m.begin() + common.probe_pos,
                           m.begin() + common.probe_pos + common.length);
        v.member = i;
      }
      v.pass = false;
    }
  }
  return v;
}

PairVerdict check_pair_cprime_f(WordView x,
                                Presentation const& p,
                                FunctionSample const& f) {
  return check_pair_cprime_f(x, p, SymmetrizedClosure(p), f);
}

IpscVerdict ipsc_witness_check(Presentation const& p,
                               std::size_t i,
                               WordView r,
                               std::size_t split,
                               FunctionSample const& n,
                               FunctionSample const& f) {
  if (i < 1) {
    throw InvalidArgument("IPSC index i must be at least 1");
  }
  SymmetrizedClosure closure(p);
  if (!closure.contains(r)) {
    throw InvalidArgument("word is not a member of the symmetrised closure");
  }
  if (split == 0 || split > r.size()) {
    throw InvalidArgument("split must satisfy 0 < split <= |r|");
  }
  IpscVerdict v;
  auto len       = static_cast<std::int64_t>(r.size());
  v.long_enough  = Rational(len) >= n(i);
  v.prefix_large = static_cast<std::int64_t>(split)
                       * static_cast<std::int64_t>(i)
                   >= len;
  v.pair = check_pair_cprime_f(r.first(split), p, closure, f);
  return v;
}

FunctionSample construct_g(std::vector<std::int64_t> const& m,
                           std::vector<std::int64_t> const& l,
                           std::size_t domain_max) {
  if (m.size() != l.size() || m.empty()) {
    throw InvalidArgument("m and l must be nonempty and of equal length");
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 1 || l[i] < 0) {
      throw InvalidArgument("m must be positive and l nonnegative");
    }
    if (i > 0 && (m[i] <= m[i - 1] || l[i] <= l[i - 1])) {
      throw InvalidArgument("m and l must be strictly increasing");
    }
  }
  std::vector<Rational> values;
  values.reserve(domain_max);
  for (std::size_t t = 1; t <= domain_max; ++t) {
    auto tt = static_cast<std::int64_t>(t);
    Rational g(tt);
    // l is increasing, so only a prefix of indices has l_i < t
    for (std::size_t i = 0; i < m.size() && l[i] < tt; ++i) {
      g = std::min(g, Rational(tt, m[i]));
    }
    values.push_back(g);
  }
  return FunctionSample(std::move(values),
                        "minimum over the " + std::to_string(m.size())
                            + " supplied indices; identity beyond");
}

ViableDerivation derive_viable_from_sublinear(FunctionSample const& g) {
  auto const N = g.domain_max();
  std::vector<Rational> fp(N), fpp(N), f(N);
  for (std::size_t n = 1; n <= N; ++n) {
    if (g(n) <= Rational(0)) {
      throw InvalidArgument("g must be strictly positive (g("
                            + std::to_string(n) + ") <= 0)");
    }
    fp[n - 1] = Rational(static_cast<std::int64_t>(n)) / g(n);
  }
  for (std::size_t n = N; n >= 1; --n) {
    fpp[n - 1] = n == N ? fp[n - 1] : std::min(fp[n - 1], fpp[n]);
  }
  for (std::size_t n = 0; n < N; ++n) {
    f[n] = std::max(Rational(6), fpp[n]);
  }
  std::string caveat = "f'' takes its minimum over k in [n, "
                       + std::to_string(N)
                       + "] only; the infinite minimum may be smaller";
  return {FunctionSample(std::move(fp)), FunctionSample(std::move(fpp), caveat),
          FunctionSample(std::move(f), caveat)};
}

}  // namespace morselab
