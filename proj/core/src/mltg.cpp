#include "morselab/mltg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "morselab/error.hpp"

namespace morselab {

std::int64_t promotion_threshold(std::int64_t Q, std::int64_t C) {
  if (Q < 1 || C < 0) {
    throw InvalidArgument("need Q >= 1 and C >= 0");
  }
  return Q * (3 * C + Q + 2) + 1;
}

namespace {
  std::size_t max_relator_length(CayleyBall const& ball) {
    return std::max<std::size_t>(
        1, ball.presentation().presentation().max_relator_length());
  }

  // Local conditions on the subwords of w ending at its last letter.
  bool suffix_ok(CayleyBall const& ball,
                 LocalSpec const& spec,
                 Word const& w) {
    auto const n = w.size();
    auto const W = std::min(spec.L, n);
    for (std::size_t len = 1; len <= W; ++len) {
      WordView u(w.data() + n - len, len);
      auto v = ball.find(u);
      if (!v) {
        throw Uncertified("subword leaves the ball");
      }
      auto d = static_cast<std::int64_t>(ball.dist0(*v));
      if (Rational(static_cast<std::int64_t>(len)) > spec.Q * Rational(d)) {
        return false;
      }
    }
    if (spec.bound.domain_max() == 0) {
      return true;
    }
    WordView window(w.data() + n - W, W);
    auto prof = intersection_function(ball.presentation().closure(),
                                      ball.letters(), window,
                                      spec.bound.domain_max());
    for (std::size_t t = 1; t <= prof.tmax; ++t) {
      if (Rational(static_cast<std::int64_t>(prof(t))) > spec.bound(t)) {
        return false;
      }
    }
    return true;
  }
}  // namespace

LocalWords enumerate_local_words(CayleyBall const& ball,
                                 LocalSpec const& spec,
                                 std::size_t length,
                                 std::size_t budget) {
  if (spec.L < 1 || spec.Q < Rational(1)) {
    throw InvalidArgument("local spec needs L >= 1 and Q >= 1");
  }
  if (std::min(spec.L, length) > ball.radius()) {
    throw Uncertified("scale L exceeds the ball radius");
  }
  LocalWords out;
  Word w;
  auto const letters = static_cast<Letter>(ball.letters());
  // Iterative DFS in lexicographic order.
  std::vector<Letter> next{0};
  while (!next.empty()) {
    if (w.size() == length) {
      if (out.words.size() == budget) {
        out.truncated = true;
        return out;
      }
      out.words.push_back(w);
      next.pop_back();
      if (!w.empty()) {
        w.pop_back();
      }
      continue;
    }
    auto& x = next.back();
    if (x == letters) {
      next.pop_back();
      if (!w.empty()) {
        w.pop_back();
      }
      continue;
    }
    Letter s = x++;
    if (!w.empty() && s == inverse(w.back())) {
      continue;
    }
    w.push_back(s);
    if (suffix_ok(ball, spec, w)) {
      next.push_back(0);
    } else {
      w.pop_back();
    }
  }
  return out;
}

std::size_t hausdorff_distance(DistanceTable& table,
                               std::vector<VertexId> const& a,
                               std::vector<VertexId> const& b) {
  std::size_t out = 0;
  std::vector<std::size_t> to_a(b.size(), std::numeric_limits<std::size_t>::max());
  for (auto x : a) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto d  = table.distance(x, b[j]);
      best    = std::min(best, d);
      to_a[j] = std::min(to_a[j], d);
    }
    out = std::max(out, best);
  }
  for (auto d : to_a) {
    out = std::max(out, d);
  }
  return out;
}

GlobalAudit global_audit(CayleyBall const& ball,
                         WordView w,
                         LocalSpec const&) {
  auto path = path_along(ball, CayleyBall::identity(), w);
  DistanceTable table(ball, w.size());
  GlobalAudit out;
  auto const& vs = path.vertices;
  for (std::size_t s = 0; s < vs.size(); ++s) {
    for (auto t = s + 1; t < vs.size(); ++t) {
      auto d     = static_cast<double>(table.distance(vs[s], vs[t]));
      auto delta = static_cast<double>(t - s);
      auto q     = (-d + std::sqrt(d * d + 4 * delta)) / 2;
      if (q > out.q_prime) {
        out.q_prime = q;
        out.worst_s = s;
        out.worst_t = t;
      }
    }
  }
  out.profile = intersection_function(ball.presentation().closure(),
                                      ball.letters(), w,
                                      max_relator_length(ball));
  auto g = geodesic(ball, vs.front(), vs.back());
  out.hausdorff = hausdorff_distance(table, vs, g.vertices);
  return out;
}

namespace {
  struct Candidate {
    std::size_t score = 0;
    std::tuple<std::size_t, std::size_t, bool, std::size_t, std::size_t,
               std::size_t>
        key;
    Bridge bridge;
  };

  Bridge find_bridge(CayleyBall const& ball,
                     GeodesicPath const& eta,
                     GeodesicPath const& next,
                     std::size_t& skipped) {
    auto const& closure = ball.presentation().closure();
    std::map<VertexId, std::size_t> on_eta, on_next;
    for (std::size_t k = 0; k < eta.vertices.size(); ++k) {
      on_eta[eta.vertices[k]] = k;
    }
    for (auto k = next.vertices.size(); k-- > 0;) {
      on_next[next.vertices[k]] = k;
    }
    auto const elen = eta.vertices.size() - 1;
    std::optional<Candidate> best;
    for (std::size_t k0 = 0; k0 < eta.vertices.size(); ++k0) {
      auto z = eta.vertices[k0];
      for (std::size_t mi = 0; mi < closure.size(); ++mi) {
        auto const& m = closure.members()[mi];
        auto const n  = m.word.size();
        std::vector<VertexId> cyc{z};
        for (auto x : m.word) {
          auto y = ball.neighbor(cyc.back(), x);
          if (y == no_vertex) {
            break;
          }
          cyc.push_back(y);
        }
        if (cyc.size() != n + 1) {
          ++skipped;
          continue;
        }
        if (cyc.back() != z) {
          throw Error(ErrorKind::internal, "relator image does not close");
        }
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t len = 0; 2 * len <= n; ++len) {
            // Closest points of W to the junction on each geodesic.
            std::optional<std::size_t> xi, yi, xw, yw;
            for (std::size_t j = 0; j <= len; ++j) {
              auto v = cyc[(a + j) % n];
              if (auto it = on_eta.find(v); it != on_eta.end()
                  && (!xi || it->second > *xi)) {
                xi = it->second;
                xw = j;
              }
              if (auto it = on_next.find(v); it != on_next.end()
                  && (!yi || it->second < *yi)) {
                yi = it->second;
                yw = j;
              }
            }
            if (!xi || !yi) {
              continue;
            }
            Candidate c;
            c.score = (elen - *xi) + *yi;
            c.key   = {m.relator, m.shift, m.inverted, k0, a, len};
            if (best
                && (c.score < best->score
                    || (c.score == best->score && c.key >= best->key))) {
              continue;
            }
            auto& b       = c.bridge;
            b.degenerate  = false;
            b.x           = eta.vertices[*xi];
            b.y           = next.vertices[*yi];
            b.x_pos       = *xi;
            b.y_pos       = *yi;
            b.score       = c.score;
            b.member      = mi;
            b.image_start = z;
            b.w_offset    = a;
            b.w_length    = len;
            Word seg;
            if (*xw <= *yw) {
              for (auto j = *xw; j < *yw; ++j) {
                seg.push_back(m.word[(a + j) % n]);
              }
            } else {
              for (auto j = *xw; j > *yw; --j) {
                seg.push_back(inverse(m.word[(a + j - 1) % n]));
              }
            }
            b.segment = path_along(ball, b.x, seg);
            best      = std::move(c);
          }
        }
      }
    }
    if (best) {
      return best->bridge;
    }
    Bridge b;
    b.x = b.y = eta.vertices.back();
    b.x_pos   = elen;
    b.y_pos   = 0;
    b.segment = path_along(ball, b.x, {});
    return b;
  }
}  // namespace

AuxPath build_aux_path(CayleyBall const& ball, WordView gamma, std::size_t L) {
  if (L < 1) {
    throw InvalidArgument("L must be at least 1");
  }
  AuxPath ap;
  ap.L     = L;
  ap.gamma.assign(gamma.begin(), gamma.end());
  auto g   = path_along(ball, CayleyBall::identity(), gamma);
  auto const n = gamma.size();
  DistanceTable table(ball);
  auto const W = std::min(2 * L, n);
  for (std::size_t s = 0; s + W <= n && W > 0; ++s) {
    if (table.distance(g.vertices[s], g.vertices[s + W]) != W) {
      throw InvalidArgument("gamma is not 2L-locally geodesic at position "
                            + std::to_string(s));
    }
  }
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i * L <= n; ++i) {
    pos.push_back(i * L);
  }
  if (pos.back() != n) {
    pos.push_back(n);
  }
  for (auto q : pos) {
    ap.anchors.push_back(g.vertices[q]);
  }
  for (std::size_t i = 0; i + 1 < ap.anchors.size(); ++i) {
    ap.etas.push_back(geodesic(ball, ap.anchors[i], ap.anchors[i + 1]));
  }
  if (ap.etas.empty()) {
    ap.path = g;
    return ap;
  }
  for (std::size_t i = 0; i + 1 < ap.etas.size(); ++i) {
    auto b     = find_bridge(ball, ap.etas[i], ap.etas[i + 1],
                             ap.skipped_images);
    b.junction = ap.anchors[i + 1];
    ap.bridges.push_back(std::move(b));
  }
  for (std::size_t i = 1; i < ap.bridges.size(); ++i) {
    if (ap.bridges[i - 1].y_pos > ap.bridges[i].x_pos) {
      throw StructureError("bridges " + std::to_string(i - 1) + " and "
                           + std::to_string(i) + " overlap on eta_"
                           + std::to_string(i));
    }
  }
  Word word;
  std::size_t from = 0;
  for (std::size_t i = 0; i < ap.etas.size(); ++i) {
    auto const& eta = ap.etas[i].word;
    auto to = i < ap.bridges.size() ? ap.bridges[i].x_pos : eta.size();
    word.insert(word.end(), eta.begin() + from, eta.begin() + to);
    if (i < ap.bridges.size()) {
      auto const& seg = ap.bridges[i].segment.word;
      word.insert(word.end(), seg.begin(), seg.end());
      from = ap.bridges[i].y_pos;
    }
  }
  ap.path = path_along(ball, CayleyBall::identity(), word);
  return ap;
}

AuxAudit audit_aux_path(AuxPath const& ap, CayleyBall const& ball) {
  AuxAudit out;
  out.profile = intersection_function(ball.presentation().closure(),
                                      ball.letters(), ap.path.word,
                                      max_relator_length(ball));
  for (std::size_t t = 1; t <= out.profile.tmax; ++t) {
    if (3 * out.profile(t) > 2 * t) {
      out.rho_ok          = false;
      out.first_violation = t;
      break;
    }
  }
  DistanceTable table(ball);
  auto const& pv = ap.path.vertices;
  auto g = path_along(ball, CayleyBall::identity(), ap.gamma);
  out.hausdorff_gamma = hausdorff_distance(table, pv, g.vertices);
  for (std::size_t s = 0; s < pv.size(); ++s) {
    for (auto t = s + 1; t < pv.size(); ++t) {
      std::vector<VertexId> sub(pv.begin() + s, pv.begin() + t + 1);
      auto geo = geodesic(ball, pv[s], pv[t]);
      auto h   = hausdorff_distance(table, sub, geo.vertices);
      if (h > out.hausdorff_sub) {
        out.hausdorff_sub = h;
        out.sub_s         = s;
        out.sub_t         = t;
      }
    }
  }
  return out;
}

}  // namespace morselab
