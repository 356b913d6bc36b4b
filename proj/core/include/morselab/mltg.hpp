#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "morselab/cayley.hpp"
#include "morselab/function_sample.hpp"
#include "morselab/metrics.hpp"
#include "morselab/rational.hpp"

namespace morselab {

// Local conditions standing in for "locally M-Morse Q-quasi-geodesic":
// every subword u of length <= L has |u| <= Q d(endpoints) and an
// intersection profile below bound.
struct LocalSpec {
  std::size_t L = 1;
  Rational Q{1};
  FunctionSample bound;
};

// Least integer L with L > Q (3C + Q + 2).
std::int64_t promotion_threshold(std::int64_t Q, std::int64_t C);

struct LocalWords {
  std::vector<Word> words;  // shortlex order
  bool truncated = false;
};

// Freely reduced words of the given length meeting the local conditions.
// Stops after budget words with truncated set.
LocalWords enumerate_local_words(CayleyBall const& ball,
                                 LocalSpec const& spec,
                                 std::size_t length,
                                 std::size_t budget);

struct GlobalAudit {
  // Least Q >= 1 with |t - s| / Q - Q <= d(w(s), w(t)) for all s < t.
  double q_prime = 1.0;
  std::size_t worst_s = 0, worst_t = 0;
  IntersectionProfile profile;
  std::size_t hausdorff = 0;  // to the shortlex geodesic between endpoints
};

GlobalAudit global_audit(CayleyBall const& ball,
                         WordView w,
                         LocalSpec const& spec);

struct Bridge {
  bool degenerate = true;  // no relator image met both geodesics
  VertexId junction = no_vertex;
  VertexId x = no_vertex;
  VertexId y = no_vertex;
  std::size_t x_pos = 0;  // index of x on eta_i
  std::size_t y_pos = 0;  // index of y on eta_{i+1}
  std::size_t score = 0;  // d(J, x) + d(J, y)
  std::optional<std::size_t> member;  // closure member read along the image
  VertexId image_start = no_vertex;   // where that member is read from
  std::size_t w_offset = 0, w_length = 0;
  GeodesicPath segment;  // [x, y] along the relator image
};

struct AuxPath {
  std::size_t L = 0;
  Word gamma;
  std::vector<VertexId> anchors;
  std::vector<GeodesicPath> etas;  // eta_i from anchors[i] to anchors[i+1]
  std::vector<Bridge> bridges;     // bridge i joins eta_i and eta_{i+1}
  GeodesicPath path;
  std::size_t skipped_images = 0;  // images leaving the ball
};

// gamma is read from the identity and must be 2L-locally geodesic.
// Throws StructureError when consecutive bridges overlap.
AuxPath build_aux_path(CayleyBall const& ball, WordView gamma, std::size_t L);

struct AuxAudit {
  IntersectionProfile profile;
  bool rho_ok = true;  // 3 rho(t) <= 2 t for every sampled t
  std::optional<std::size_t> first_violation;
  std::size_t hausdorff_gamma = 0;
  std::size_t hausdorff_sub   = 0;
  std::size_t sub_s = 0, sub_t = 0;  // pair attaining hausdorff_sub
};

AuxAudit audit_aux_path(AuxPath const& ap, CayleyBall const& ball);

// Hausdorff distance between two vertex sets, from certified distances.
std::size_t hausdorff_distance(DistanceTable& table,
                               std::vector<VertexId> const& a,
                               std::vector<VertexId> const& b);

}  // namespace morselab
