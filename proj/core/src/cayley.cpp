#include "morselab/cayley.hpp"

#include <algorithm>
#include <limits>

#include "morselab/error.hpp"

namespace morselab {

struct VerifiedPresentation::Data {
  Presentation presentation;
  SymmetrizedClosure closure;
  std::size_t letters = 0;
  std::vector<std::size_t> children;  // node * letters + x
  std::vector<TrieNode> nodes;
};

std::shared_ptr<VerifiedPresentation::Data const>
VerifiedPresentation::make_data(Presentation p) {
  auto d          = std::make_shared<Data>();
  d->closure      = SymmetrizedClosure(p);
  d->letters      = p.alphabet().letters();
  d->presentation = std::move(p);
  auto const L    = d->letters;
  auto const none = VerifiedPresentation::no_node;
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  d->nodes.push_back({unset, 0});
  d->children.assign(L, none);
  auto const& ms = d->closure.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    auto len = static_cast<std::uint32_t>(ms[i].word.size());
    std::size_t node = 0;
    for (Letter x : ms[i].word) {
      auto& child = d->children[node * L + x];
      if (child == none) {
        child = d->nodes.size();
        d->nodes.push_back({unset, 0});
        d->children.resize(d->children.size() + L, none);
      }
      node = d->children[node * L + x];
      auto& n = d->nodes[node];
      if (len < n.min_length) {
        n.min_length = len;
        n.member     = static_cast<std::uint32_t>(i);
      }
    }
  }
  return d;
}

namespace {
  bool passes_gate(Presentation const& p) {
    return p.relators().empty()
           || check_cprime_lambda(p, Rational(1, 6)).pass;
  }
}  // namespace

VerifiedPresentation VerifiedPresentation::verify(Presentation p) {
  if (!passes_gate(p)) {
    throw NotVerified("presentation not verified C'(1/6)");
  }
  return VerifiedPresentation(make_data(std::move(p)));
}

std::optional<VerifiedPresentation>
VerifiedPresentation::try_verify(Presentation p) {
  if (!passes_gate(p)) {
    return std::nullopt;
  }
  return VerifiedPresentation(make_data(std::move(p)));
}

Presentation const& VerifiedPresentation::presentation() const noexcept {
  return data_->presentation;
}

SymmetrizedClosure const& VerifiedPresentation::closure() const noexcept {
  return data_->closure;
}

std::size_t VerifiedPresentation::trie_child(std::size_t node,
                                             Letter x) const noexcept {
  return data_->children[node * data_->letters + x];
}

VerifiedPresentation::TrieNode const&
VerifiedPresentation::trie_node(std::size_t node) const noexcept {
  return data_->nodes[node];
}

Word dehn_reduce(VerifiedPresentation const& p, WordView input) {
  Word w = free_reduce(input);
  auto const& ms = p.closure().members();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      std::size_t node = 0, best_len = 0;
      std::uint32_t best_member = 0;
      for (std::size_t d = 1; i + d <= w.size(); ++d) {
        node = p.trie_child(node, w[i + d - 1]);
        if (node == VerifiedPresentation::no_node) {
          break;
        }
        auto const& n = p.trie_node(node);
        if (2 * d > n.min_length) {
          best_len    = d;
          best_member = n.member;
        }
      }
      if (best_len == 0) {
        continue;
      }
      auto const& r = ms[best_member].word;
      Word next(w.begin(), w.begin() + i);
      for (auto k = r.size(); k > best_len; --k) {
        next.push_back(inverse(r[k - 1]));
      }
      next.insert(next.end(), w.begin() + i + best_len, w.end());
      w       = free_reduce(next);
      changed = true;
    }
  }
  return w;
}

Word dehn_reduce(Presentation const& p, WordView w) {
  return dehn_reduce(VerifiedPresentation::verify(p), w);
}

bool represents_identity(VerifiedPresentation const& p, WordView w) {
  return dehn_reduce(p, w).empty();
}

namespace {
  // For each letter s, the walks t^-1 for closure members r = s t.
  std::vector<std::vector<Word>> tracing_walks(VerifiedPresentation const& p) {
    std::vector<std::vector<Word>> out(p.alphabet().letters());
    for (auto const& m : p.closure().members()) {
      Word walk;
      for (auto k = m.word.size(); k > 1; --k) {
        walk.push_back(inverse(m.word[k - 1]));
      }
      out[m.word.front()].push_back(std::move(walk));
    }
    return out;
  }

  class BallBuilder {
   public:
    BallBuilder(CayleyBall& ball,
                std::vector<VertexId>& parent,
                std::vector<Letter>& parent_letter,
                std::vector<std::uint32_t>& dist0,
                std::vector<VertexId>& edges,
                VerifiedPresentation const& p,
                BallOptions const& options)
        : ball_(ball)
        , parent_(parent)
        , parent_letter_(parent_letter)
        , dist0_(dist0)
        , edges_(edges)
        , p_(p)
        , options_(options)
        , walks_(tracing_walks(p))
        , L_(p.alphabet().letters()) {}

    VertexId edge(VertexId v, Letter x) const {
      return edges_[static_cast<std::size_t>(v) * L_ + x];
    }

    VertexId trace(VertexId u, Letter s) const {
      for (auto const& walk : walks_[s]) {
        VertexId cur = u;
        for (Letter x : walk) {
          cur = edge(cur, x);
          if (cur == no_vertex) {
            break;
          }
        }
        if (cur != no_vertex) {
          return cur;
        }
      }
      return no_vertex;
    }

    void link(VertexId u, Letter s, VertexId y) {
      auto& back = edges_[static_cast<std::size_t>(y) * L_ + inverse(s)];
      if (back != no_vertex && back != u) {
        throw Error(ErrorKind::internal,
                    "inconsistent edge while building the ball");
      }
      if (options_.verify_edges) {
        Word w = ball_.normal_form(u);
        w.push_back(s);
        auto tail = inverse(ball_.normal_form(y));
        w.insert(w.end(), tail.begin(), tail.end());
        if (!represents_identity(p_, w)) {
          throw Error(ErrorKind::internal,
                      "relator tracing produced an edge Dehn rejects");
        }
      }
      edges_[static_cast<std::size_t>(u) * L_ + s] = y;
      back                                         = u;
    }

    VertexId add_vertex(VertexId u, Letter s, std::uint32_t d) {
      if (dist0_.size() >= options_.max_vertices) {
        throw BudgetExceeded("ball exceeds the cap of "
                             + std::to_string(options_.max_vertices)
                             + " vertices");
      }
      auto v = static_cast<VertexId>(dist0_.size());
      parent_.push_back(u);
      parent_letter_.push_back(s);
      dist0_.push_back(d);
      edges_.resize(edges_.size() + L_, no_vertex);
      edges_[static_cast<std::size_t>(u) * L_ + s]         = v;
      edges_[static_cast<std::size_t>(v) * L_ + inverse(s)] = u;
      return v;
    }

    // Edges from layer [lo, hi) to vertices already present.
    void close_layer(std::size_t lo, std::size_t hi) {
      for (bool changed = true; changed;) {
        changed = false;
        for (auto u = lo; u < hi; ++u) {
          for (Letter s = 0; s < L_; ++s) {
            auto v = static_cast<VertexId>(u);
            if (edge(v, s) != no_vertex) {
              continue;
            }
            auto y = trace(v, s);
            if (y != no_vertex) {
              link(v, s, y);
              changed = true;
            }
          }
        }
      }
    }

    void grow_layer(std::size_t lo, std::size_t hi, std::uint32_t d) {
      for (auto u = lo; u < hi; ++u) {
        auto v = static_cast<VertexId>(u);
        for (Letter s = 0; s < L_; ++s) {
          if (edge(v, s) != no_vertex) {
            continue;
          }
          auto y = trace(v, s);
          if (y != no_vertex) {
            link(v, s, y);
          } else {
            add_vertex(v, s, d);
          }
        }
      }
    }

   private:
    CayleyBall& ball_;
    std::vector<VertexId>& parent_;
    std::vector<Letter>& parent_letter_;
    std::vector<std::uint32_t>& dist0_;
    std::vector<VertexId>& edges_;
    VerifiedPresentation const& p_;
    BallOptions const& options_;
    std::vector<std::vector<Word>> walks_;
    Letter L_;
  };
}  // namespace

CayleyBall build_ball(VerifiedPresentation const& p,
                      std::size_t radius,
                      BallOptions const& options) {
  CayleyBall ball;
  ball.presentation_ = std::make_shared<VerifiedPresentation const>(p);
  ball.radius_       = radius;
  ball.letters_      = p.alphabet().letters();
  ball.parent_.push_back(no_vertex);
  ball.parent_letter_.push_back(0);
  ball.dist0_.push_back(0);
  ball.edges_.assign(ball.letters_, no_vertex);
  BallBuilder builder(ball, ball.parent_, ball.parent_letter_, ball.dist0_,
                      ball.edges_, p, options);
  std::size_t lo = 0, hi = 1;
  ball.sphere_start_.push_back(0);
  for (std::size_t k = 0;; ++k) {
    builder.close_layer(lo, hi);
    ball.sphere_sizes_.push_back(hi - lo);
    ball.sphere_start_.push_back(hi);
    if (k == radius) {
      break;
    }
    builder.grow_layer(lo, hi, static_cast<std::uint32_t>(k + 1));
    lo = hi;
    hi = ball.dist0_.size();
  }
  return ball;
}

CayleyBall build_ball(Presentation const& p,
                      std::size_t radius,
                      BallOptions const& options) {
  return build_ball(VerifiedPresentation::verify(p), radius, options);
}

Word CayleyBall::normal_form(VertexId v) const {
  Word w(dist0_.at(v));
  for (auto i = w.size(); i > 0; --i) {
    w[i - 1] = parent_letter_[v];
    v        = parent_[v];
  }
  return w;
}

std::optional<VertexId> CayleyBall::walk(VertexId from, WordView w) const {
  VertexId cur = from;
  for (Letter x : w) {
    if (x >= letters_) {
      throw InvalidArgument("letter outside the alphabet");
    }
    cur = neighbor(cur, x);
    if (cur == no_vertex) {
      return std::nullopt;
    }
  }
  return cur;
}

std::optional<VertexId> CayleyBall::find(WordView w) const {
  return walk(identity(), w);
}

std::vector<VertexId> CayleyBall::sphere(std::size_t k) const {
  if (k > radius_) {
    throw InvalidArgument("sphere beyond the ball radius");
  }
  std::vector<VertexId> out;
  for (auto v = sphere_start_[k]; v < sphere_start_[k + 1]; ++v) {
    out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::vector<std::int32_t> CayleyBall::ball_distances(VertexId from,
                                                     std::size_t limit,
                                                     VertexId stop) const {
  std::vector<std::int32_t> d(size(), -1);
  std::vector<VertexId> queue{from};
  d.at(from) = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto v = queue[head];
    if (v == stop || static_cast<std::size_t>(d[v]) >= limit) {
      break;
    }
    for (Letter x = 0; x < letters_; ++x) {
      auto y = neighbor(v, x);
      if (y != no_vertex && d[y] < 0) {
        d[y] = d[v] + 1;
        queue.push_back(y);
      }
    }
  }
  return d;
}

bool CayleyBall::certified(VertexId u,
                           VertexId v,
                           std::int32_t ball_distance) const {
  return ball_distance >= 0
         && dist0(u) + dist0(v) + static_cast<std::size_t>(ball_distance)
                <= 2 * radius_;
}

bool CayleyBall::operator==(CayleyBall const& o) const {
  return presentation().presentation() == o.presentation().presentation()
         && radius_ == o.radius_ && parent_ == o.parent_
         && parent_letter_ == o.parent_letter_ && dist0_ == o.dist0_
         && edges_ == o.edges_;
}

namespace {
  [[noreturn]] void throw_uncertified(CayleyBall const& ball,
                                      VertexId u,
                                      VertexId v) {
    throw Uncertified("distance between " + ball.alphabet().format(ball.normal_form(u))
                      + " and " + ball.alphabet().format(ball.normal_form(v))
                      + " is not certified by a ball of radius "
                      + std::to_string(ball.radius()));
  }

  void check_vertex(CayleyBall const& ball, VertexId v) {
    if (v < 0 || static_cast<std::size_t>(v) >= ball.size()) {
      throw InvalidArgument("vertex id out of range");
    }
  }
}  // namespace

std::optional<std::size_t> try_distance(CayleyBall const& ball,
                                        VertexId u,
                                        VertexId v) {
  check_vertex(ball, u);
  check_vertex(ball, v);
  auto d = ball.ball_distances(u)[v];
  if (!ball.certified(u, v, d)) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(d);
}

std::size_t distance(CayleyBall const& ball, VertexId u, VertexId v) {
  auto d = try_distance(ball, u, v);
  if (!d) {
    throw_uncertified(ball, u, v);
  }
  return *d;
}

GeodesicPath path_along(CayleyBall const& ball, VertexId from, WordView w) {
  check_vertex(ball, from);
  GeodesicPath path;
  path.vertices.push_back(from);
  for (Letter x : w) {
    if (x >= ball.letters()) {
      throw InvalidArgument("letter outside the alphabet");
    }
    auto next = ball.neighbor(path.vertices.back(), x);
    if (next == no_vertex) {
      throw InvalidArgument("path " + ball.alphabet().format(w)
                            + " leaves the ball");
    }
    path.vertices.push_back(next);
    path.word.push_back(x);
  }
  return path;
}

void require_geodesic(CayleyBall const& ball, GeodesicPath const& path) {
  if (path.vertices.empty()) {
    throw InvalidArgument("empty path");
  }
  auto d = try_distance(ball, path.vertices.front(), path.vertices.back());
  if (!d) {
    throw_uncertified(ball, path.vertices.front(), path.vertices.back());
  }
  if (*d != path.length()) {
    throw InvalidArgument("path " + ball.alphabet().format(path.word)
                          + " is not geodesic");
  }
}

GeodesicPath geodesic(CayleyBall const& ball, VertexId u, VertexId v) {
  check_vertex(ball, u);
  check_vertex(ball, v);
  // Everything closer to v than u is settled once u is dequeued.
  auto to_v = ball.ball_distances(v, std::numeric_limits<std::size_t>::max(), u);
  if (!ball.certified(u, v, to_v[u])) {
    throw_uncertified(ball, u, v);
  }
  GeodesicPath path;
  path.vertices.push_back(u);
  for (VertexId cur = u; cur != v;) {
    Letter x = 0;
    for (; x < ball.letters(); ++x) {
      auto y = ball.neighbor(cur, x);
      if (y != no_vertex && to_v[y] == to_v[cur] - 1) {
        break;
      }
    }
    cur = ball.neighbor(cur, x);
    path.word.push_back(x);
    path.vertices.push_back(cur);
  }
  return path;
}

std::vector<VertexId> project(CayleyBall const& ball,
                              std::vector<VertexId> const& target,
                              VertexId x) {
  if (target.empty()) {
    throw InvalidArgument("projection target is empty");
  }
  check_vertex(ball, x);
  auto d = ball.ball_distances(x);
  std::vector<VertexId> best;
  std::int32_t best_d = std::numeric_limits<std::int32_t>::max();
  for (auto t : target) {
    check_vertex(ball, t);
    if (!ball.certified(x, t, d[t])) {
      throw_uncertified(ball, x, t);
    }
    if (d[t] < best_d) {
      best_d = d[t];
      best.clear();
    }
    if (d[t] == best_d) {
      best.push_back(t);
    }
  }
  std::sort(best.begin(), best.end());
  best.erase(std::unique(best.begin(), best.end()), best.end());
  return best;
}

std::vector<std::int32_t> const& DistanceTable::row(VertexId from) {
  check_vertex(*ball_, from);
  if (rows_.size() != ball_->size()) {
    rows_.resize(ball_->size());
  }
  auto& r = rows_[from];
  if (r.empty()) {
    r = ball_->ball_distances(from, limit_);
  }
  return r;
}

std::optional<std::size_t> DistanceTable::try_distance(VertexId u,
                                                       VertexId v) {
  auto d = row(u)[v];
  if (!ball_->certified(u, v, d)) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(d);
}

std::size_t DistanceTable::distance(VertexId u, VertexId v) {
  auto d = try_distance(u, v);
  if (!d) {
    throw_uncertified(*ball_, u, v);
  }
  return *d;
}

// Snapshot layout, all integers little-endian:
//   "MLBALL\0\1" | u32 text length | presentation text | u32 radius
//   | u32 letters | u64 vertices | per vertex (i32 parent, u16 letter,
//   u32 dist0) | vertices * letters i32 edge targets
namespace {
  constexpr char snapshot_magic[8] = {'M', 'L', 'B', 'A', 'L', 'L', 0, 1};

  template <typename T>
  void put(std::ostream& out, T value) {
    using U = std::make_unsigned_t<T>;
    auto u  = static_cast<U>(value);
    char buf[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      buf[i] = static_cast<char>((u >> (8 * i)) & 0xff);
    }
    out.write(buf, sizeof(T));
  }

  template <typename T>
  T get(std::istream& in) {
    using U = std::make_unsigned_t<T>;
    unsigned char buf[sizeof(T)];
    if (!in.read(reinterpret_cast<char*>(buf), sizeof(T))) {
      throw Error(ErrorKind::io, "truncated ball snapshot");
    }
    U u = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      u |= static_cast<U>(static_cast<U>(buf[i]) << (8 * i));
    }
    return static_cast<T>(u);
  }
}  // namespace

void write_ball_snapshot(CayleyBall const& ball, std::ostream& out) {
  out.write(snapshot_magic, sizeof snapshot_magic);
  auto text = print_presentation(ball.presentation().presentation());
  put<std::uint32_t>(out, static_cast<std::uint32_t>(text.size()));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(ball.radius()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(ball.letters()));
  put<std::uint64_t>(out, ball.size());
  for (std::size_t v = 0; v < ball.size(); ++v) {
    auto id = static_cast<VertexId>(v);
    put<std::int32_t>(out, ball.parent(id));
    put<std::uint16_t>(out, ball.parent_letter(id));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(ball.dist0(id)));
  }
  for (std::size_t v = 0; v < ball.size(); ++v) {
    for (Letter x = 0; x < ball.letters(); ++x) {
      put<std::int32_t>(out, ball.neighbor(static_cast<VertexId>(v), x));
    }
  }
  if (!out) {
    throw Error(ErrorKind::io, "failed to write ball snapshot");
  }
}

CayleyBall read_ball_snapshot(std::istream& in) {
  char magic[sizeof snapshot_magic];
  if (!in.read(magic, sizeof magic)
      || !std::equal(magic, magic + sizeof magic, snapshot_magic)) {
    throw Error(ErrorKind::io, "not a ball snapshot");
  }
  auto len = get<std::uint32_t>(in);
  std::string text(len, '\0');
  if (!in.read(text.data(), len)) {
    throw Error(ErrorKind::io, "truncated ball snapshot");
  }
  CayleyBall ball;
  ball.presentation_ = std::make_shared<VerifiedPresentation const>(
      VerifiedPresentation::verify(parse_presentation(text).presentation));
  ball.radius_  = get<std::uint32_t>(in);
  ball.letters_ = get<std::uint32_t>(in);
  auto n        = get<std::uint64_t>(in);
  if (ball.letters_ != ball.alphabet().letters() || n == 0) {
    throw Error(ErrorKind::io, "corrupt ball snapshot header");
  }
  ball.sphere_sizes_.assign(ball.radius_ + 1, 0);
  for (std::uint64_t v = 0; v < n; ++v) {
    ball.parent_.push_back(get<std::int32_t>(in));
    ball.parent_letter_.push_back(get<std::uint16_t>(in));
    auto d = get<std::uint32_t>(in);
    if (d > ball.radius_ || (v > 0 && d < ball.dist0_.back())) {
      throw Error(ErrorKind::io, "corrupt ball snapshot vertex table");
    }
    ball.dist0_.push_back(d);
    ++ball.sphere_sizes_[d];
  }
  ball.edges_.resize(n * ball.letters_);
  for (auto& e : ball.edges_) {
    e = get<std::int32_t>(in);
    if (e < no_vertex || e >= static_cast<std::int64_t>(n)) {
      throw Error(ErrorKind::io, "corrupt ball snapshot edge table");
    }
  }
  ball.sphere_start_.push_back(0);
  for (auto s : ball.sphere_sizes_) {
    ball.sphere_start_.push_back(ball.sphere_start_.back() + s);
  }
  return ball;
}

}  // namespace morselab
