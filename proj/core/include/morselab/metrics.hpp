#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "morselab/cayley.hpp"
#include "morselab/function_sample.hpp"
#include "morselab/rational.hpp"
#include "morselab/smallcancel.hpp"

namespace morselab {

struct IntersectionWitness {
  std::optional<std::size_t> member;  // closure index; empty while rho = 0
  Word subword;
};

struct IntersectionProfile {
  std::size_t tmax = 0;
  std::vector<std::size_t> rho;  // rho[t - 1]
  std::vector<IntersectionWitness> witnesses;

  std::size_t operator()(std::size_t t) const {
    return rho.at(t - 1);
  }
  bool operator==(IntersectionProfile const& o) const {
    return tmax == o.tmax && rho == o.rho;
  }
};

// rho(t): the longest common subword of path and a closure member of
// length <= t. Uses a suffix automaton of path.
IntersectionProfile intersection_function(SymmetrizedClosure const& closure,
                                          std::size_t letters,
                                          WordView path,
                                          std::size_t tmax);
IntersectionProfile intersection_function(Presentation const& p,
                                          WordView path,
                                          std::size_t tmax);
// Same result with the quadratic dynamic programme.
IntersectionProfile intersection_function_dp(Presentation const& p,
                                             WordView path,
                                             std::size_t tmax);

struct LocalIntersectionVerdict {
  bool pass = true;
  // First failing window and the sample where it exceeds the bound.
  std::size_t window_start  = 0;
  std::size_t window_length = 0;
  std::size_t t             = 0;
  std::size_t rho           = 0;
  Rational bound;
};

// Every subpath of length <= L has rho pointwise <= bound on
// [1, bound.domain_max()]. Only maximal windows need checking since rho is
// monotone under taking subpaths.
LocalIntersectionVerdict local_intersection_ok(Presentation const& p,
                                               WordView path,
                                               std::size_t L,
                                               FunctionSample const& bound);

struct ContractionReport {
  std::size_t constant = 0;
  VertexId witness     = no_vertex;  // x attaining the constant
  std::size_t witness_radius = 0;    // d(x, gamma)
  std::size_t scope_radius   = 0;
  std::size_t admissible = 0;
  std::size_t skipped    = 0;        // points outside the certified region
};

// Max over admissible x of diam pi_gamma(B(x, d(x, gamma))).
ContractionReport contraction_constant(CayleyBall const& ball,
                                       GeodesicPath const& gamma,
                                       unsigned jobs = 1);

struct BgiReport {
  bool bounded  = false;  // false: only vacuously satisfied at this radius
  std::size_t D = 0;
  std::size_t scope_radius = 0;
  std::size_t geodesics    = 0;
  std::size_t skipped      = 0;
  std::size_t max_distance = 0;  // largest d(gamma, lambda) seen
  // A geodesic showing D - 1 fails (present when D > 0).
  std::optional<std::pair<VertexId, VertexId>> witness;
};

// Least D with diam pi_gamma(lambda) <= D for every shortlex geodesic lambda
// between certified pairs with d(gamma, lambda) >= D.
BgiReport bgi_constant(CayleyBall const& ball,
                       GeodesicPath const& gamma,
                       unsigned jobs = 1);

// D = 2N / (N - 1) * M(N).
Rational relator_length_bound(FunctionSample const& gauge, std::size_t N);

// rho_y(z) = d(z, y) - d(identity, y).
std::int64_t horofunction_value(CayleyBall const& ball, VertexId y, VertexId z);

struct HorofunctionSeparation {
  std::int64_t first  = 0;
  std::int64_t second = 0;
  std::size_t t       = 0;
  std::size_t t_prime = 0;
};

// Differences rho_y(z) - rho_y(Z) with z = gamma1(s), Z = gamma1(S), at the
// furthest certified y on each of gamma1 and gamma2.
HorofunctionSeparation horofunction_separation(CayleyBall const& ball,
                                               GeodesicPath const& gamma1,
                                               GeodesicPath const& gamma2,
                                               std::size_t s,
                                               std::size_t S);

}  // namespace morselab
