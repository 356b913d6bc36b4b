#include <doctest.h>

#include <cmath>

#include "morselab/error.hpp"
#include "morselab/mltg.hpp"
#include "oracles.hpp"

using namespace morselab;

namespace {
Presentation pres(char const* text) {
  return parse_presentation(text).presentation;
}

Presentation const f2     = pres("gens: a b\n");
Presentation const genus2 = pres("gens: a b c d\nrel: abABcdCD\n");
}  // namespace

TEST_CASE("promotion threshold") {
  CHECK(promotion_threshold(1, 0) == 4);
  CHECK(promotion_threshold(2, 3) == 27);
  CHECK(promotion_threshold(1, 1) == 7);
  for (std::int64_t Q = 1; Q <= 6; ++Q) {
    for (std::int64_t C = 0; C <= 6; ++C) {
      CHECK(promotion_threshold(Q, C) == oracle::promotion_threshold(Q, C));
    }
  }
  CHECK_THROWS_AS(promotion_threshold(0, 1), InvalidArgument);
  CHECK_THROWS_AS(promotion_threshold(1, -1), InvalidArgument);
}

TEST_CASE("local words in the free group are all reduced words") {
  auto ball = build_ball(f2, 6);
  LocalSpec spec{3, Rational(1), FunctionSample::constant(4, Rational(0))};
  for (std::size_t n = 1; n <= 6; ++n) {
    auto lw = enumerate_local_words(ball, spec, n, 100000);
    CHECK_FALSE(lw.truncated);
    CHECK(lw.words.size() == 4 * static_cast<std::size_t>(std::pow(3, n - 1)));
    CHECK(std::is_sorted(lw.words.begin(), lw.words.end()));
  }
  auto cut = enumerate_local_words(ball, spec, 5, 10);
  CHECK(cut.truncated);
  CHECK(cut.words.size() == 10);
}

TEST_CASE("bound zero kills every letter of a relator") {
  auto ball = build_ball(genus2, 4);
  LocalSpec spec{2, Rational(1), FunctionSample::constant(8, Rational(0))};
  CHECK(enumerate_local_words(ball, spec, 3, 1000).words.empty());
}

TEST_CASE("local words are locally geodesic") {
  auto ball = build_ball(genus2, 6);
  LocalSpec spec{4, Rational(1), FunctionSample::constant(8, Rational(3))};
  auto lw = enumerate_local_words(ball, spec, 6, 200000);
  REQUIRE_FALSE(lw.words.empty());
  auto closure = oracle::closure_words(genus2);
  for (std::size_t i = 0; i < lw.words.size(); i += 97) {
    auto const& w = lw.words[i];
    for (std::size_t s = 0; s + 4 <= w.size(); ++s) {
      Word u(w.begin() + s, w.begin() + s + 4);
      CHECK(ball.dist0(*ball.find(u)) == 4);
      auto r = oracle::rho(closure, u, 8);
      CHECK(r[7] <= 3);
    }
  }
}

TEST_CASE("global audit") {
  auto ball = build_ball(genus2, 6);
  LocalSpec spec{2, Rational(1), {}};
  auto geo = global_audit(ball, genus2.alphabet().parse("abcdab"), spec);
  CHECK(geo.q_prime == doctest::Approx(1.0));
  CHECK(geo.hausdorff == 0);
  // half a relator plus one more letter is not geodesic
  auto bent = global_audit(ball, genus2.alphabet().parse("abABc"), spec);
  CHECK(bent.q_prime > 1.0);

  auto fball = build_ball(f2, 6);
  LocalSpec fspec{2, Rational(1), FunctionSample::constant(2, Rational(0))};
  for (auto const& w : enumerate_local_words(fball, fspec, 6, 1000).words) {
    auto a = global_audit(fball, w, fspec);
    CHECK(a.q_prime == doctest::Approx(1.0));
    CHECK(a.hausdorff == 0);
  }
}

TEST_CASE("auxiliary path in a tree is gamma itself") {
  auto ball  = build_ball(f2, 7);
  auto gamma = f2.alphabet().parse("abbaBa");
  auto ap    = build_aux_path(ball, gamma, 2);
  CHECK(ap.path.word == gamma);
  for (auto const& b : ap.bridges) {
    CHECK(b.degenerate);
  }
  auto audit = audit_aux_path(ap, ball);
  CHECK(audit.rho_ok);
  CHECK(audit.hausdorff_gamma == 0);
}

TEST_CASE("auxiliary path over a C'(1/9) fixture") {
  auto p     = oracle::corpus("c9_3gen_0");
  auto ball  = build_ball(p, 8);
  auto gamma = p.alphabet().parse("abCaCab");
  auto ap    = build_aux_path(ball, gamma, 2);
  CHECK(ap.anchors.front() == CayleyBall::identity());
  CHECK(ap.etas.size() + 1 == ap.anchors.size());
  CHECK(ap.bridges.size() + 1 == ap.etas.size());
  auto audit = audit_aux_path(ap, ball);
  CHECK(audit.rho_ok);
  for (std::size_t t = 1; t <= audit.profile.tmax; ++t) {
    CHECK(3 * audit.profile(t) <= 2 * t);
  }
  CHECK_THROWS_AS(build_aux_path(ball, p.alphabet().parse("abCaCabbcc"), 2),
                  InvalidArgument);
}
