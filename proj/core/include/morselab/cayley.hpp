#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "morselab/presentation.hpp"
#include "morselab/smallcancel.hpp"
#include "morselab/words.hpp"

namespace morselab {

// A presentation that has passed C'(1/6), or has no relators. Dehn's
// algorithm and everything built on it only accept this type.
class VerifiedPresentation {
 public:
  static VerifiedPresentation verify(Presentation p);
  static std::optional<VerifiedPresentation> try_verify(Presentation p);

  Presentation const& presentation() const noexcept;
  Alphabet const& alphabet() const noexcept {
    return presentation().alphabet();
  }
  SymmetrizedClosure const& closure() const noexcept;

  // Trie over closure members. Each node records the shortest member
  // below it, which is all Dehn's algorithm needs.
  struct TrieNode {
    std::uint32_t min_length = 0;
    std::uint32_t member     = 0;
  };
  std::size_t trie_child(std::size_t node, Letter x) const noexcept;
  TrieNode const& trie_node(std::size_t node) const noexcept;
  static constexpr std::size_t no_node = static_cast<std::size_t>(-1);

 private:
  struct Data;
  static std::shared_ptr<Data const> make_data(Presentation p);
  explicit VerifiedPresentation(std::shared_ptr<Data const> d)
      : data_(std::move(d)) {}
  std::shared_ptr<Data const> data_;
};

Word dehn_reduce(VerifiedPresentation const& p, WordView w);
// Verifies p first; throws NotVerified if it is not C'(1/6).
Word dehn_reduce(Presentation const& p, WordView w);
bool represents_identity(VerifiedPresentation const& p, WordView w);

using VertexId = std::int32_t;
inline constexpr VertexId no_vertex = -1;

struct BallOptions {
  std::size_t max_vertices = std::size_t{1} << 24;
  // Confirm every edge found by relator tracing with Dehn's algorithm.
  bool verify_edges = true;
};

struct GeodesicPath {
  std::vector<VertexId> vertices;
  Word word;
  std::size_t length() const noexcept {
    return word.size();
  }
};

class CayleyBall {
 public:
  CayleyBall() = default;

  VerifiedPresentation const& presentation() const noexcept {
    return *presentation_;
  }
  Alphabet const& alphabet() const noexcept {
    return presentation_->alphabet();
  }
  std::size_t radius() const noexcept {
    return radius_;
  }
  std::size_t size() const noexcept {
    return dist0_.size();
  }
  std::size_t letters() const noexcept {
    return letters_;
  }
  static constexpr VertexId identity() noexcept {
    return 0;
  }

  std::size_t dist0(VertexId v) const {
    return dist0_.at(v);
  }
  VertexId parent(VertexId v) const {
    return parent_.at(v);
  }
  Letter parent_letter(VertexId v) const {
    return parent_letter_.at(v);
  }
  // v·x, or no_vertex if that element lies outside the ball.
  VertexId neighbor(VertexId v, Letter x) const noexcept {
    return edges_[static_cast<std::size_t>(v) * letters_ + x];
  }
  // Shortlex-least geodesic word from the identity.
  Word normal_form(VertexId v) const;
  // Follows w from the identity; nullopt if the path leaves the ball.
  std::optional<VertexId> find(WordView w) const;
  std::optional<VertexId> walk(VertexId from, WordView w) const;

  std::vector<std::size_t> const& sphere_sizes() const noexcept {
    return sphere_sizes_;
  }
  // Vertices of the sphere of radius k, in shortlex order.
  std::vector<VertexId> sphere(std::size_t k) const;

  // Path distances in the subgraph spanned by the ball (-1: unreachable).
  // The search stops at depth limit, or once stop has been reached.
  std::vector<std::int32_t> ball_distances(
      VertexId from,
      std::size_t limit = std::numeric_limits<std::size_t>::max(),
      VertexId stop = no_vertex) const;
  // A ball distance d(u,v) equals the true distance once
  // dist0(u) + dist0(v) + d <= 2 * radius: every geodesic then stays inside.
  bool certified(VertexId u, VertexId v, std::int32_t ball_distance) const;

  bool operator==(CayleyBall const& o) const;

 private:
  friend CayleyBall build_ball(VerifiedPresentation const&, std::size_t,
                               BallOptions const&);
  friend CayleyBall read_ball_snapshot(std::istream&);

  std::shared_ptr<VerifiedPresentation const> presentation_;
  std::size_t radius_  = 0;
  std::size_t letters_ = 0;
  std::vector<VertexId> parent_;
  std::vector<Letter> parent_letter_;
  std::vector<std::uint32_t> dist0_;
  std::vector<VertexId> edges_;
  std::vector<std::size_t> sphere_sizes_;
  std::vector<std::size_t> sphere_start_;
};

CayleyBall build_ball(VerifiedPresentation const& p,
                      std::size_t radius,
                      BallOptions const& options = {});
CayleyBall build_ball(Presentation const& p,
                      std::size_t radius,
                      BallOptions const& options = {});

// The path spelled by w from `from`; throws InvalidArgument if it leaves
// the ball.
GeodesicPath path_along(CayleyBall const& ball, VertexId from, WordView w);
// Throws Uncertified unless the ball certifies that path is geodesic.
void require_geodesic(CayleyBall const& ball, GeodesicPath const& path);

// Certified distance; throws Uncertified otherwise.
std::size_t distance(CayleyBall const& ball, VertexId u, VertexId v);
std::optional<std::size_t> try_distance(CayleyBall const& ball,
                                        VertexId u,
                                        VertexId v);

// Shortlex-least geodesic from u to v. Throws Uncertified if the ball
// cannot certify d(u, v).
GeodesicPath geodesic(CayleyBall const& ball, VertexId u, VertexId v);

// All points of target at minimal distance from x.
std::vector<VertexId> project(CayleyBall const& ball,
                              std::vector<VertexId> const& target,
                              VertexId x);

// Caches ball-distance rows; not thread safe.
class DistanceTable {
 public:
  explicit DistanceTable(CayleyBall const& ball) : ball_(&ball) {}
  // Only distances up to limit are computed; longer ones are uncertified.
  DistanceTable(CayleyBall const& ball, std::size_t limit)
      : ball_(&ball), limit_(limit) {}
  std::vector<std::int32_t> const& row(VertexId from);
  std::optional<std::size_t> try_distance(VertexId u, VertexId v);
  std::size_t distance(VertexId u, VertexId v);
  CayleyBall const& ball() const noexcept {
    return *ball_;
  }

 private:
  CayleyBall const* ball_;
  std::size_t limit_ = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::int32_t>> rows_;
};

void write_ball_snapshot(CayleyBall const& ball, std::ostream& out);
CayleyBall read_ball_snapshot(std::istream& in);

}  // namespace morselab
