#include <doctest.h>

#include <random>

#include "morselab/error.hpp"
#include "morselab/smallcancel.hpp"
#include "oracles.hpp"

using namespace morselab;

namespace {
Presentation pres(char const* text) {
  return parse_presentation(text).presentation;
}

Presentation const z2     = pres("gens: a b\nrel: abAB\n");
Presentation const f2     = pres("gens: a b\n");
Presentation const genus3 = pres("gens: a b c d e f\nrel: abABcdCDefEF\n");

Presentation random_presentation(std::mt19937_64& rng) {
  auto gens = 2 + rng() % 2;
  auto alphabet = Alphabet::standard(gens);
  std::vector<Word> rels;
  auto count = 1 + rng() % 2;
  while (rels.size() < count) {
    Word r;
    auto len = 4 + rng() % 9;
    while (r.size() < len) {
      auto x = static_cast<Letter>(rng() % alphabet.letters());
      if (!r.empty() && r.back() == inverse(x)) {
        continue;
      }
      r.push_back(x);
    }
    if (is_cyclically_reduced(r)) {
      rels.push_back(r);
    }
  }
  return Presentation(alphabet, rels);
}
}  // namespace

TEST_CASE("closure of abAB") {
  SymmetrizedClosure c(z2);
  CHECK(c.size() == 8);
  CHECK(c.contains(z2.alphabet().parse("aBAb")));
  CHECK(c.members_of(0).size() == 8);
}

TEST_CASE("closure of a proper power drops repeated rotations") {
  auto p = pres("gens: a b\nrel: abab\n");
  CHECK(SymmetrizedClosure(p).size() == 4);
}

TEST_CASE("pieces: worked examples") {
  auto t = pieces(z2);
  REQUIRE(t.relators.size() == 1);
  CHECK(t.relators[0].max_piece == 1);
  CHECK(t.relators[0].piece.size() == 1);
  CHECK(pieces(f2).relators.empty());
  CHECK(pieces(genus3).relators[0].max_piece == 1);
}

TEST_CASE("pieces agree with the brute-force oracle") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    auto p = random_presentation(rng);
    auto t = pieces(p);
    for (std::size_t j = 0; j < p.relators().size(); ++j) {
      CHECK(t.relators[j].max_piece == oracle::max_piece(p, j));
      auto const& rec = t.relators[j];
      if (rec.max_piece > 0) {
        SymmetrizedClosure c(p);
        auto const& a = c.members()[rec.member_a].word;
        auto const& b = c.members()[rec.member_b].word;
        CHECK(rec.member_a != rec.member_b);
        CHECK(std::equal(rec.piece.begin(), rec.piece.end(), a.begin()));
        CHECK(std::equal(rec.piece.begin(), rec.piece.end(), b.begin()));
      }
    }
  }
}

TEST_CASE("C'(lambda) verdicts") {
  auto v = check_cprime_lambda(z2, Rational(1, 6));
  CHECK_FALSE(v.pass);
  REQUIRE(v.witness);
  CHECK(v.witness->piece_length == 1);
  CHECK(v.witness->relator_length == 4);
  CHECK(check_cprime_lambda(genus3, Rational(1, 9)).pass);
  CHECK(check_cprime_lambda(f2, Rational(1, 100)).pass);
  CHECK_THROWS_AS(check_cprime_lambda(f2, Rational(0)), InvalidArgument);
}

TEST_CASE("C'(1/f) verdicts") {
  auto six = FunctionSample::constant(12, Rational(6));
  CHECK(check_cprime_f(genus3, FunctionSample::constant(12, Rational(9))).pass);
  CHECK(check_cprime_f(genus3, six).pass
        == check_cprime_lambda(genus3, Rational(1, 6)).pass);
  CHECK(check_cprime_f(z2, FunctionSample::constant(4, Rational(6))).pass
        == check_cprime_lambda(z2, Rational(1, 6)).pass);
  // Boundary case: piece 1 with |r| / f(|r|) = 1 is not strictly smaller.
  CHECK_FALSE(check_cprime_f(genus3, FunctionSample::constant(12, Rational(12))).pass);
  CHECK_THROWS_AS(check_cprime_f(genus3, FunctionSample::constant(5, Rational(6))),
                  InvalidArgument);
  CHECK_THROWS_AS(check_cprime_f(genus3, FunctionSample::constant(12, Rational(5))),
                  InvalidArgument);
  auto v = check_cprime_f(genus3, six);
  REQUIRE(v.induced_bound.size() == 12);
  CHECK(v.induced_bound[11] == Rational(2));
}

TEST_CASE("pair condition") {
  auto six = FunctionSample::constant(12, Rational(6));
  CHECK(check_pair_cprime_f(Word{}, genus3, six).pass);
  auto r  = genus3.relators()[0];
  auto pv = check_pair_cprime_f(r, genus3, six);
  CHECK_FALSE(pv.pass);
  CHECK(pv.offending.size() == r.size());
}

TEST_CASE("pair condition against all substrings") {
  auto nine = FunctionSample::constant(12, Rational(9));
  auto closure = oracle::closure_words(genus3);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Word x(1 + rng() % 10);
    for (auto& c : x) {
      c = static_cast<Letter>(rng() % 12);
    }
    bool pass = true;
    for (std::size_t s = 0; s < x.size(); ++s) {
      for (std::size_t e = s + 1; e <= x.size(); ++e) {
        WordView sub(x.data() + s, e - s);
        for (auto const& m : closure) {
          if (is_subword(sub, m) && !(Rational(static_cast<std::int64_t>(e - s)) * Rational(9) < Rational(12))) {
            pass = false;
          }
        }
      }
    }
    CHECK(check_pair_cprime_f(x, genus3, nine).pass == pass);
  }
}

TEST_CASE("IPSC witness") {
  auto r = genus3.relators()[0];
  auto v = ipsc_witness_check(genus3, 12, r, 1,
                              FunctionSample::constant(12, Rational(12)),
                              FunctionSample::constant(12, Rational(9)));
  CHECK(v.long_enough);
  CHECK(v.prefix_large);
  CHECK(v.pair.pass);
  CHECK(v.pass());
  auto whole = ipsc_witness_check(genus3, 1, r, r.size(),
                                  FunctionSample::constant(12, Rational(12)),
                                  FunctionSample::constant(12, Rational(6)));
  CHECK(whole.prefix_large);
  CHECK_FALSE(whole.pair.pass);
  auto short_prefix = ipsc_witness_check(genus3, 2, r, 5,
                                         FunctionSample::constant(12, Rational(1)),
                                         FunctionSample::constant(12, Rational(9)));
  CHECK_FALSE(short_prefix.prefix_large);
  CHECK_THROWS_AS(ipsc_witness_check(genus3, 1, genus3.alphabet().parse("ab"), 1,
                                     FunctionSample::constant(12, Rational(1)),
                                     FunctionSample::constant(12, Rational(9))),
                  InvalidArgument);
}

TEST_CASE("construct_g examples") {
  auto g = construct_g({2, 4, 8}, {10, 100, 1000}, 2000);
  CHECK(g(50) == Rational(25));
  CHECK(g(5) == Rational(5));
  CHECK(g(500) == Rational(125));
  CHECK_THROWS_AS(construct_g({2, 2}, {1, 5}, 10), InvalidArgument);
  CHECK_THROWS_AS(construct_g({2, 3}, {5, 1}, 10), InvalidArgument);
}

TEST_CASE("derive_viable_from_sublinear") {
  auto id = derive_viable_from_sublinear(FunctionSample::identity(40));
  for (std::size_t n = 1; n <= 40; ++n) {
    CHECK(id.f_prime(n) == Rational(1));
    CHECK(id.f_double_prime(n) == Rational(1));
    CHECK(id.f(n) == Rational(6));
  }
  auto g = construct_g({2, 4, 8}, {10, 100, 1000}, 500);
  auto d = derive_viable_from_sublinear(g);
  CHECK(d.f_prime(50) == Rational(2));
  Rational m = d.f_prime(50);
  for (std::size_t k = 50; k <= 500; ++k) {
    m = std::min(m, Rational(static_cast<std::int64_t>(k)) / g(k));
  }
  CHECK(d.f_double_prime(50) == m);
  CHECK(viable_on_samples(d.f));
  CHECK_THROWS_AS(derive_viable_from_sublinear(FunctionSample::constant(3, Rational(0))),
                  InvalidArgument);
}

TEST_CASE("function samples") {
  auto f = FunctionSample::parse_csv("# header\n1,1/2\n2,3\n\n3,7/3\n");
  CHECK(f.domain_max() == 3);
  CHECK(f(1) == Rational(1, 2));
  CHECK(FunctionSample::parse_csv(f.to_csv()) == f);
  CHECK(FunctionSample::parse_csv("6\n6\n7\n").non_decreasing());
  CHECK_THROWS(FunctionSample::parse_csv("1,2\n3,4\n"));
  CHECK_THROWS(f(0));
  CHECK(viable_on_samples(FunctionSample::constant(4, Rational(6))));
  CHECK_FALSE(viable_on_samples(FunctionSample::parse_csv("7\n6\n")));
  // g(t) = sqrt-ish: 1, 1, 2, 2, 2, 2, 3, ...
  std::vector<Rational> vals;
  for (std::int64_t t = 1; t <= 100; ++t) {
    std::int64_t s = 1;
    while ((s + 1) * (s + 1) <= t) {
      ++s;
    }
    vals.push_back(Rational(s));
  }
  FunctionSample g(vals);
  auto T = sublinear_threshold(g, 2);
  REQUIRE(T);
  for (std::size_t t = *T; t <= 100; ++t) {
    CHECK(g(t) < Rational(static_cast<std::int64_t>(t), 2));
  }
  if (*T > 1) {
    CHECK(!(g(*T - 1) < Rational(static_cast<std::int64_t>(*T - 1), 2)));
  }
}
