#include "morselab/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "morselab/error.hpp"
#include "morselab/substring.hpp"
#include "parallel.hpp"

namespace morselab {

namespace {
  // Closure indices ordered by (length, index).
  std::vector<std::size_t> by_length(SymmetrizedClosure const& closure) {
    std::vector<std::size_t> order(closure.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return closure.members()[a].word.size()
                              < closure.members()[b].word.size();
                     });
    return order;
  }

  template <typename Lcs>
  IntersectionProfile profile(SymmetrizedClosure const& closure,
                              WordView path,
                              std::size_t tmax,
                              Lcs&& lcs) {
    if (tmax < 1) {
      throw InvalidArgument("tmax must be at least 1");
    }
    IntersectionProfile out;
    out.tmax = tmax;
    out.rho.assign(tmax, 0);
    out.witnesses.resize(tmax);
    std::size_t best = 0;
    IntersectionWitness witness;
    auto order = by_length(closure);
    auto it    = order.begin();
    for (std::size_t t = 1; t <= tmax; ++t) {
      for (; it != order.end() && closure.members()[*it].word.size() <= t;
           ++it) {
        CommonSubword c = lcs(closure.members()[*it].word);
        if (c.length > best) {
          best           = c.length;
          witness.member = *it;
          witness.subword.assign(path.begin() + c.text_pos,
                                 path.begin() + c.text_pos + c.length);
        }
      }
      out.rho[t - 1]       = best;
      out.witnesses[t - 1] = witness;
    }
    return out;
  }
}  // namespace

IntersectionProfile intersection_function(SymmetrizedClosure const& closure,
                                          std::size_t letters,
                                          WordView path,
                                          std::size_t tmax) {
  SubwordIndex index(path, letters);
  return profile(closure, path, tmax,
                 [&](Word const& r) { return index.longest_common(r); });
}

IntersectionProfile intersection_function(Presentation const& p,
                                          WordView path,
                                          std::size_t tmax) {
  return intersection_function(SymmetrizedClosure(p), p.alphabet().letters(),
                               path, tmax);
}

IntersectionProfile intersection_function_dp(Presentation const& p,
                                             WordView path,
                                             std::size_t tmax) {
  return profile(SymmetrizedClosure(p), path, tmax, [&](Word const& r) {
    return longest_common_subword_dp(path, r);
  });
}

LocalIntersectionVerdict local_intersection_ok(Presentation const& p,
                                               WordView path,
                                               std::size_t L,
                                               FunctionSample const& bound) {
  LocalIntersectionVerdict v;
  auto const tmax = bound.domain_max();
  auto const W    = std::min(L, path.size());
  if (W == 0 || tmax == 0) {
    return v;
  }
  auto const windows = path.size() - W + 1;
  // at_len[a][n]: longest common subword of window a with a member of
  // length exactly n.
  std::vector<std::vector<std::size_t>> at_len(
      windows, std::vector<std::size_t>(tmax + 1, 0));
  SymmetrizedClosure closure(p);
  for (auto const& m : closure.members()) {
    if (m.word.size() > tmax) {
      continue;
    }
    SubwordIndex index(m.word, p.alphabet().letters());
    auto ms = index.matching_lengths(path);
    for (std::size_t a = 0; a < windows; ++a) {
      std::size_t best = 0;
      for (auto j = a; j < a + W; ++j) {
        best = std::max(best, std::min(ms[j], j - a + 1));
      }
      auto& slot = at_len[a][m.word.size()];
      slot       = std::max(slot, best);
    }
  }
  for (std::size_t a = 0; a < windows; ++a) {
    std::size_t rho = 0;
    for (std::size_t t = 1; t <= tmax; ++t) {
      rho = std::max(rho, at_len[a][t]);
      if (Rational(static_cast<std::int64_t>(rho)) > bound(t)) {
        v.pass          = false;
        v.window_start  = a;
        v.window_length = W;
        v.t             = t;
        v.rho           = rho;
        v.bound         = bound(t);
        return v;
      }
    }
  }
  return v;
}

namespace {
  struct Projection {
    std::int32_t distance = 0;  // d(y, gamma)
    std::size_t lo = 0, hi = 0;  // index range of the argmin set
    bool ok        = true;       // all d(y, gamma(i)) certified
  };

  std::vector<Projection> projections(CayleyBall const& ball,
                                      GeodesicPath const& gamma,
                                      unsigned jobs) {
    std::vector<std::vector<std::int32_t>> rows(gamma.vertices.size());
    detail::parallel_for(rows.size(), jobs, [&](unsigned, std::size_t i) {
      rows[i] = ball.ball_distances(gamma.vertices[i]);
    });
    std::vector<Projection> out(ball.size());
    for (std::size_t y = 0; y < ball.size(); ++y) {
      auto& pr    = out[y];
      pr.distance = std::numeric_limits<std::int32_t>::max();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        auto d = rows[i][y];
        if (!ball.certified(static_cast<VertexId>(y), gamma.vertices[i], d)) {
          pr.ok = false;
          break;
        }
        if (d < pr.distance) {
          pr.distance = d;
          pr.lo       = i;
        }
        if (d == pr.distance) {
          pr.hi = i;
        }
      }
    }
    return out;
  }

  void check_gamma(CayleyBall const& ball, GeodesicPath const& gamma) {
    if (gamma.vertices.empty()) {
      throw InvalidArgument("geodesic is empty");
    }
    require_geodesic(ball, gamma);
  }
}  // namespace

ContractionReport contraction_constant(CayleyBall const& ball,
                                       GeodesicPath const& gamma,
                                       unsigned jobs) {
  check_gamma(ball, gamma);
  auto proj = projections(ball, gamma, jobs);
  struct Partial {
    std::size_t best = 0, radius = 0, admissible = 0, skipped = 0;
    VertexId witness = no_vertex;
  };
  std::vector<Partial> parts(std::max(1u, jobs));
  detail::parallel_for(ball.size(), jobs, [&](unsigned w, std::size_t xi) {
    auto& part = parts[w];
    auto x     = static_cast<VertexId>(xi);
    if (!proj[xi].ok
        || ball.dist0(x) + static_cast<std::size_t>(proj[xi].distance)
               > ball.radius()) {
      ++part.skipped;
      return;
    }
    auto r = proj[xi].distance;
    // Closed ball of radius r about x, by a BFS cut off at depth r.
    std::vector<VertexId> queue{x};
    std::vector<std::int32_t> depth{0};
    std::vector<char> seen(ball.size(), 0);
    seen[xi] = 1;
    std::size_t lo = proj[xi].lo, hi = proj[xi].hi;
    bool ok = true;
    for (std::size_t head = 0; head < queue.size() && ok; ++head) {
      auto const& py = proj[queue[head]];
      if (!py.ok) {
        ok = false;
        break;
      }
      lo = std::min(lo, py.lo);
      hi = std::max(hi, py.hi);
      if (depth[head] == r) {
        continue;
      }
      for (Letter s = 0; s < ball.letters(); ++s) {
        auto y = ball.neighbor(queue[head], s);
        if (y != no_vertex && !seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
          depth.push_back(depth[head] + 1);
        }
      }
    }
    if (!ok) {
      ++part.skipped;
      return;
    }
    ++part.admissible;
    auto diam = hi - lo;
    if (part.witness == no_vertex || diam > part.best
        || (diam == part.best && x < part.witness)) {
      part.best    = diam;
      part.witness = x;
      part.radius  = static_cast<std::size_t>(r);
    }
  });
  ContractionReport report;
  report.scope_radius = ball.radius();
  for (auto const& part : parts) {
    report.admissible += part.admissible;
    report.skipped += part.skipped;
    if (part.witness == no_vertex) {
      continue;
    }
    if (report.witness == no_vertex || part.best > report.constant
        || (part.best == report.constant && part.witness < report.witness)) {
      report.constant       = part.best;
      report.witness        = part.witness;
      report.witness_radius = part.radius;
    }
  }
  return report;
}

BgiReport bgi_constant(CayleyBall const& ball,
                       GeodesicPath const& gamma,
                       unsigned jobs) {
  check_gamma(ball, gamma);
  auto proj = projections(ball, gamma, jobs);
  auto const n = ball.size();
  // Per d(gamma, lambda): the largest projection diameter and the
  // lexicographically first geodesic attaining it.
  struct Level {
    std::size_t diam = 0;
    std::pair<VertexId, VertexId> witness{no_vertex, no_vertex};
  };
  struct Partial {
    std::vector<Level> levels;
    std::size_t geodesics = 0, skipped = 0;
  };
  auto improve = [](Level& level, std::size_t diam,
                    std::pair<VertexId, VertexId> w) {
    if (level.witness.first == no_vertex || diam > level.diam
        || (diam == level.diam && w < level.witness)) {
      level.diam    = diam;
      level.witness = w;
    }
  };
  std::vector<Partial> parts(std::max(1u, jobs));
  detail::parallel_for(n, jobs, [&](unsigned w, std::size_t vi) {
    auto& part = parts[w];
    auto v     = static_cast<VertexId>(vi);
    auto row   = ball.ball_distances(v);
    // Aggregate projections along the shortlex geodesic u -> v, which
    // steps to the least letter decreasing the distance to v.
    struct Agg {
      std::int32_t distance;
      std::size_t lo, hi;
      bool ok;
    };
    std::vector<Agg> agg(n);
    std::vector<VertexId> order;
    order.reserve(n);
    for (std::size_t u = 0; u < n; ++u) {
      if (row[u] >= 0) {
        order.push_back(static_cast<VertexId>(u));
      }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return row[a] < row[b]; });
    for (auto u : order) {
      auto const& p = proj[u];
      Agg a{p.distance, p.lo, p.hi, p.ok};
      if (u != v) {
        for (Letter s = 0; s < ball.letters(); ++s) {
          auto y = ball.neighbor(u, s);
          if (y != no_vertex && row[y] == row[u] - 1) {
            auto const& b = agg[y];
            a.distance    = std::min(a.distance, b.distance);
            a.lo          = std::min(a.lo, b.lo);
            a.hi          = std::max(a.hi, b.hi);
            a.ok          = a.ok && b.ok;
            break;
          }
        }
      }
      agg[u] = a;
      if (!ball.certified(u, v, row[u])) {
        continue;
      }
      if (!a.ok) {
        ++part.skipped;
        continue;
      }
      ++part.geodesics;
      auto d = static_cast<std::size_t>(a.distance);
      if (part.levels.size() <= d) {
        part.levels.resize(d + 1);
      }
      improve(part.levels[d], a.hi - a.lo, {u, v});
    }
  });
  BgiReport report;
  report.scope_radius = ball.radius();
  std::vector<Level> levels;
  for (auto const& part : parts) {
    report.geodesics += part.geodesics;
    report.skipped += part.skipped;
    if (levels.size() < part.levels.size()) {
      levels.resize(part.levels.size());
    }
    for (std::size_t d = 0; d < part.levels.size(); ++d) {
      if (part.levels[d].witness.first != no_vertex) {
        improve(levels[d], part.levels[d].diam, part.levels[d].witness);
      }
    }
  }
  if (levels.empty()) {
    return report;
  }
  report.max_distance = levels.size() - 1;
  // suffix[D]: the level >= D with the largest diameter (least d on ties).
  std::vector<std::size_t> suffix(levels.size() + 1, levels.size());
  for (auto d = levels.size(); d-- > 0;) {
    suffix[d] = suffix[d + 1];
    if (levels[d].witness.first != no_vertex
        && (suffix[d] == levels.size()
            || levels[d].diam >= levels[suffix[d]].diam)) {
      suffix[d] = d;
    }
  }
  auto worst = [&](std::size_t D) -> std::size_t {
    return suffix[D] == levels.size() ? 0 : levels[suffix[D]].diam;
  };
  std::size_t D = 0;
  while (D < levels.size() && worst(D) > D) {
    ++D;
  }
  report.D       = D;
  report.bounded = D < levels.size();
  if (D > 0) {
    report.witness = levels[suffix[D - 1]].witness;
  }
  return report;
}

Rational relator_length_bound(FunctionSample const& gauge, std::size_t N) {
  if (N < 2) {
    throw InvalidArgument("N must be at least 2");
  }
  if (!gauge.defined_at(N)) {
    throw InvalidArgument("gauge is not sampled at N = " + std::to_string(N));
  }
  if (gauge(N) < Rational(0)) {
    throw InvalidArgument("gauge values must be nonnegative");
  }
  auto n = static_cast<std::int64_t>(N);
  return Rational(2 * n, n - 1) * gauge(N);
}

std::int64_t horofunction_value(CayleyBall const& ball,
                                VertexId y,
                                VertexId z) {
  auto dzy = distance(ball, z, y);
  return static_cast<std::int64_t>(dzy)
         - static_cast<std::int64_t>(ball.dist0(y));
}

HorofunctionSeparation horofunction_separation(CayleyBall const& ball,
                                               GeodesicPath const& gamma1,
                                               GeodesicPath const& gamma2,
                                               std::size_t s,
                                               std::size_t S) {
  for (auto const* g : {&gamma1, &gamma2}) {
    if (g->vertices.empty() || g->vertices.front() != CayleyBall::identity()) {
      throw InvalidArgument("geodesics must start at the identity");
    }
  }
  if (s > S || S >= gamma1.vertices.size()) {
    throw InvalidArgument("need s <= S <= |gamma1|");
  }
  auto z = gamma1.vertices[s], Z = gamma1.vertices[S];
  auto from_z = ball.ball_distances(z), from_Z = ball.ball_distances(Z);
  auto furthest = [&](GeodesicPath const& g, std::size_t& t) {
    for (auto i = g.vertices.size(); i-- > 0;) {
      auto y = g.vertices[i];
      if (ball.certified(z, y, from_z[y]) && ball.certified(Z, y, from_Z[y])) {
        t = i;
        return static_cast<std::int64_t>(from_z[y]) - from_Z[y];
      }
    }
    throw Uncertified("no certified point on the geodesic");
  };
  HorofunctionSeparation out;
  out.first  = furthest(gamma1, out.t);
  out.second = furthest(gamma2, out.t_prime);
  return out;
}

}  // namespace morselab
