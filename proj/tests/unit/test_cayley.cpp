#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "morselab/cayley.hpp"
#include "morselab/error.hpp"
#include "oracles.hpp"

using namespace morselab;

namespace {
Presentation pres(char const* text) {
  return parse_presentation(text).presentation;
}

Presentation const f2     = pres("gens: a b\n");
Presentation const genus2 = pres("gens: a b c d\nrel: abABcdCD\n");

// Growth series of the genus-2 surface group from its rational function.
std::vector<std::int64_t> genus2_spheres(std::size_t n) {
  std::vector<std::int64_t> num{1, 2, 2, 2, 1}, den{1, -6, -6, -6, 1};
  std::vector<std::int64_t> a(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    std::int64_t s = k < num.size() ? num[k] : 0;
    for (std::size_t j = 1; j < den.size() && j <= k; ++j) {
      s -= den[j] * a[k - j];
    }
    a[k] = s;
  }
  return a;
}

// <a, b | (ab)^3> is Z * Z/3 with c = ab. Elements are alternating
// syllables (0, a-exponent) and (1, c-exponent mod 3).
using Syllables = std::vector<std::pair<int, int>>;

Syllables times(Syllables w, int kind, int e) {
  if (!w.empty() && w.back().first == kind) {
    e += w.back().second;
    w.pop_back();
  }
  if (kind == 1) {
    e = ((e % 3) + 3) % 3;
  }
  if (e != 0) {
    w.emplace_back(kind, e);
  }
  return w;
}

std::vector<std::size_t> torsion_spheres(std::size_t n) {
  std::set<Syllables> seen{Syllables{}};
  std::vector<Syllables> layer{Syllables{}};
  std::vector<std::size_t> out{1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Syllables> next;
    for (auto const& w : layer) {
      // a, A, b = A c, B = c^2 a
      for (auto v : {times(w, 0, 1), times(w, 0, -1), times(times(w, 0, -1), 1, 1),
                     times(times(w, 1, 2), 0, 1)}) {
        if (seen.insert(v).second) {
          next.push_back(v);
        }
      }
    }
    out.push_back(next.size());
    layer = std::move(next);
  }
  return out;
}
}  // namespace

TEST_CASE("verification gate") {
  CHECK(VerifiedPresentation::try_verify(f2));
  CHECK(VerifiedPresentation::try_verify(genus2));
  CHECK_FALSE(VerifiedPresentation::try_verify(pres("gens: a b\nrel: abAB\n")));
  CHECK_THROWS_AS(dehn_reduce(pres("gens: a b\nrel: abAB\n"), Word{0}), NotVerified);
  CHECK_THROWS_AS(build_ball(pres("gens: a b\nrel: abAB\n"), 2), NotVerified);
}

TEST_CASE("Dehn's algorithm") {
  auto g2 = VerifiedPresentation::verify(genus2);
  auto const& A = genus2.alphabet();
  CHECK(dehn_reduce(g2, genus2.relators()[0]).empty());
  CHECK(dehn_reduce(g2, A.parse("cdCDabAB")).empty());
  // exactly half a relator is not replaced
  CHECK(dehn_reduce(g2, A.parse("abAB")) == A.parse("abAB"));
  CHECK(dehn_reduce(g2, A.parse("abABc")) == A.parse("dcD"));
  auto free = VerifiedPresentation::verify(f2);
  CHECK(dehn_reduce(free, f2.alphabet().parse("abAB")) == f2.alphabet().parse("abAB"));
  CHECK(dehn_reduce(free, f2.alphabet().parse("abBA")).empty());
}

TEST_CASE("Dehn's algorithm on conjugates of relator products") {
  auto g2 = VerifiedPresentation::verify(genus2);
  auto r  = genus2.relators()[0];
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    Word c(rng() % 6);
    for (auto& x : c) {
      x = static_cast<Letter>(rng() % 8);
    }
    auto rr = rng() % 2 ? r : inverse(r);
    auto w  = free_reduce(concat(concat(c, rr), inverse(c)));
    CHECK(represents_identity(g2, w));
    CHECK(represents_identity(g2, concat(w, inverse(w))));
    if (!w.empty()) {
      Word x = w;
      x.push_back(0);
      CHECK_FALSE(represents_identity(g2, free_reduce(x)));
    }
  }
}

TEST_CASE("free group ball is the tree") {
  auto ball = build_ball(f2, 5);
  CHECK(ball.sphere_sizes() == std::vector<std::size_t>{1, 4, 12, 36, 108, 324});
  for (VertexId v = 0; v < static_cast<VertexId>(ball.size()); ++v) {
    auto nf = ball.normal_form(v);
    CHECK(is_freely_reduced(nf));
    CHECK(nf.size() == ball.dist0(v));
    CHECK(ball.find(nf) == v);
  }
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    auto u = static_cast<VertexId>(rng() % 161);
    auto v = static_cast<VertexId>(rng() % 161);
    auto expected = free_reduce(concat(inverse(ball.normal_form(u)),
                                       ball.normal_form(v)))
                        .size();
    auto d = try_distance(ball, u, v);
    if (d) {
      CHECK(*d == expected);
    }
    if (ball.dist0(u) + ball.dist0(v) <= 5) {
      CHECK(d);
    }
  }
}

TEST_CASE("genus-2 growth matches the rational growth series") {
  auto ball = build_ball(genus2, 6);
  auto expected = genus2_spheres(6);
  for (std::size_t k = 0; k <= 6; ++k) {
    CHECK(ball.sphere_sizes()[k] == static_cast<std::size_t>(expected[k]));
  }
}

TEST_CASE("proper power relator: Z * Z/3") {
  auto p = pres("gens: a b\nrel: ababab\n");
  auto ball = build_ball(p, 8);
  CHECK(ball.sphere_sizes() == torsion_spheres(8));
  CHECK(dehn_reduce(p, p.alphabet().parse("abab")) == p.alphabet().parse("BA"));
  CHECK(represents_identity(VerifiedPresentation::verify(p), p.alphabet().parse("bababa")));
}

TEST_CASE("tracing without Dehn verification gives the same ball") {
  auto a = build_ball(genus2, 4);
  BallOptions o;
  o.verify_edges = false;
  auto b = build_ball(genus2, 4, o);
  CHECK(a == b);
}

TEST_CASE("normal forms are shortlex least geodesics") {
  auto ball = build_ball(genus2, 4);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    auto v  = static_cast<VertexId>(rng() % ball.size());
    auto nf = ball.normal_form(v);
    // any other geodesic word to v is shortlex larger
    for (Letter x = 0; x < ball.letters(); ++x) {
      auto u = ball.neighbor(v, x);
      if (u != no_vertex && ball.dist0(u) + 1 == ball.dist0(v)) {
        auto alt = ball.normal_form(u);
        alt.push_back(inverse(x));
        CHECK_FALSE(alt < nf);
      }
    }
  }
}

TEST_CASE("ball budget") {
  BallOptions o;
  o.max_vertices = 50;
  CHECK_THROWS_AS(build_ball(genus2, 3, o), BudgetExceeded);
}

TEST_CASE("snapshot round trip") {
  auto ball = build_ball(genus2, 3);
  std::stringstream ss;
  write_ball_snapshot(ball, ss);
  auto back = read_ball_snapshot(ss);
  CHECK(back == ball);
  CHECK(back.sphere_sizes() == ball.sphere_sizes());
  std::stringstream junk("not a snapshot at all");
  CHECK_THROWS_AS(read_ball_snapshot(junk), Error);
}

TEST_CASE("geodesics, paths and projections") {
  auto ball = build_ball(f2, 5);
  auto const& A = f2.alphabet();
  auto u = *ball.find(A.parse("ab"));
  CHECK(geodesic(ball, u, u).length() == 0);
  auto g = geodesic(ball, u, *ball.find(A.parse("aa")));
  CHECK(A.format(g.word) == "Ba");
  CHECK_THROWS_AS(path_along(ball, 0, A.parse("aaaaaa")), InvalidArgument);
  auto axis = path_along(ball, *ball.find(A.parse("AA")), A.parse("aaaa"));
  CHECK_NOTHROW(require_geodesic(ball, axis));
  CHECK(project(ball, axis.vertices, *ball.find(A.parse("b")))
        == std::vector<VertexId>{CayleyBall::identity()});
  CHECK(project(ball, axis.vertices, axis.vertices[1])
        == std::vector<VertexId>{axis.vertices[1]});
  auto far = *ball.find(A.parse("bbbbb"));
  auto far2 = *ball.find(A.parse("BBBBB"));
  CHECK_THROWS_AS(distance(ball, far, far2), Uncertified);
}

TEST_CASE("distance table caches rows") {
  auto ball = build_ball(genus2, 4);
  DistanceTable t(ball);
  for (VertexId v = 0; v < 20; ++v) {
    CHECK(t.distance(0, v) == ball.dist0(v));
    CHECK(t.try_distance(v, 0) == ball.dist0(v));
  }
}
