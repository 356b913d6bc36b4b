#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morselab/cayley.hpp"
#include "morselab/function_sample.hpp"
#include "morselab/rational.hpp"
#include "morselab/words.hpp"

namespace morselab {

// Probability measure on finitely many group elements, given as words.
// Whether the support generates the group as a semigroup is recorded as the
// caller's assertion only.
struct StepMeasure {
  std::vector<std::pair<Word, Rational>> support;
  bool generates_asserted = false;

  // Throws InvalidArgument unless probabilities are positive and sum to 1.
  void validate() const;
  std::size_t max_length() const;
  static StepMeasure uniform(std::vector<Word> words, bool generates = true);
};

// Finite-scale boundary measure: a probability vector on the sphere of
// radius k, indexed like ball.sphere(k).
struct BoundaryMeasure {
  std::size_t radius = 0;
  std::vector<VertexId> sphere;
  std::vector<Rational> mass;

  Rational const& at(VertexId v) const;
  bool operator==(BoundaryMeasure const&) const = default;
};

struct EmpiricalBoundaryMeasure {
  std::size_t radius = 0;
  std::vector<VertexId> sphere;
  std::vector<std::uint64_t> hits;  // per sphere vertex
  std::uint64_t walks     = 0;
  std::uint64_t exited    = 0;
  std::uint64_t unexited  = 0;      // walks still inside after all steps
  std::uint64_t seed      = 0;
  std::uint64_t total_steps = 0;    // summed over exited walks

  // Normalised over exited walks; all zeros when nothing exited.
  BoundaryMeasure to_measure() const;
  bool operator==(EmpiricalBoundaryMeasure const&) const = default;
};

// Walks multiply on the right by sampled support words, traced letter by
// letter; the exit point is the first vertex at distance k, even when it is
// reached in the middle of a step.
EmpiricalBoundaryMeasure sample_walks(CayleyBall const& ball,
                                      StepMeasure const& mu,
                                      std::size_t radius,
                                      std::size_t steps,
                                      std::uint64_t count,
                                      std::uint64_t seed,
                                      std::size_t jobs = 1);

// First-exit distribution from the identity by exact absorption.
BoundaryMeasure exit_distribution(CayleyBall const& ball,
                                  StepMeasure const& mu,
                                  std::size_t radius,
                                  std::size_t max_interior = 2000);

struct StationarityDefect {
  Rational defect;
  std::size_t classifiable = 0;
  std::size_t excluded     = 0;
  Rational excluded_mass;
  // Lipschitz constant of the defect in the l1 norm of nu: 1 + ||P||_1 for
  // the push-forward operator P.
  Rational lipschitz;
};

// Sum over sphere vertices v of |nu(v) - sum_g mu(g) nu^(g^-1 v)|, where
// nu^ extends nu off the sphere: a point inside gets the mass of its shadow
// in the shortlex tree, a point outside gets the mass of its radius-k
// ancestor split evenly over that ancestor's descendants at its distance.
// A vertex with some translate outside the ball is excluded.
StationarityDefect stationarity_defect(CayleyBall const& ball,
                                       BoundaryMeasure const& nu,
                                       StepMeasure const& mu);

// nu-mass of sphere points whose shortlex geodesic has intersection
// profile <= bound pointwise; nullopt stands for the empty predicate.
Rational morse_direction_frequency(CayleyBall const& ball,
                                   BoundaryMeasure const& nu,
                                   std::optional<FunctionSample> const& bound);

struct WorstGeodesic {
  VertexId endpoint = no_vertex;
  Word word;
  std::size_t rho = 0;  // rho(tmax)
};

// Sphere point of radius k whose shortlex geodesic maximises rho(tmax).
WorstGeodesic worst_geodesic(CayleyBall const& ball,
                             std::size_t radius,
                             std::size_t tmax);

// A path in the Cayley graph: a start element and a label.
struct LabelledPath {
  Word start;
  Word label;
  bool operator==(LabelledPath const&) const = default;
};

// alpha followed by the translate of beta that starts at alpha's end.
// Throws Uncertified if an endpoint lies outside the ball.
LabelledPath translated_concat(CayleyBall const& ball,
                               LabelledPath const& alpha,
                               LabelledPath const& beta);

struct QabSegment {
  char kind = 'g';  // 'g' for a gamma block, 'b' for a beta block
  std::size_t index = 0;  // 1-based block number of its kind
  std::size_t start = 0;  // positions along the path
  std::size_t end   = 0;
};

struct QabPath {
  Word label;
  std::vector<QabSegment> segments;
  std::vector<VertexId> vertices;  // reachable prefix inside the ball
  bool complete = false;
};

// gamma *_T beta *_T gamma ... with (blocks + 1) / 2 gamma blocks.
QabPath build_qab(CayleyBall const& ball,
                  GeodesicPath const& gamma,
                  GeodesicPath const& beta,
                  std::size_t blocks);

struct ProjectionDiameter {
  std::size_t diameter = 0;
  std::size_t lo = 0, hi = 0;  // extreme target indices in the projection
  VertexId lo_probe = no_vertex, hi_probe = no_vertex;
};

// Diameter of the union of closest-point projections of probe onto the
// geodesic target. Throws Uncertified.
ProjectionDiameter projection_diameter(CayleyBall const& ball,
                                       GeodesicPath const& target,
                                       std::vector<VertexId> const& probe);

}  // namespace morselab
