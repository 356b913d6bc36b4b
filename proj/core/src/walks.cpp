#include "morselab/walks.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <random>

#include "morselab/error.hpp"
#include "morselab/metrics.hpp"
#include "parallel.hpp"

namespace morselab {

namespace {

using BigRational = boost::multiprecision::cpp_rational;

Rational abs_value(Rational const& x) {
  return x < Rational(0) ? -x : x;
}

std::int64_t narrow(boost::multiprecision::cpp_int const& x) {
  if (x > std::numeric_limits<std::int64_t>::max()
      || x < std::numeric_limits<std::int64_t>::min()) {
    throw BudgetExceeded("exact probability does not fit 64-bit rationals");
  }
  return x.convert_to<std::int64_t>();
}

// Index of each vertex within ball.sphere(k), or -1.
std::vector<std::int64_t> sphere_index(CayleyBall const& ball,
                                       std::vector<VertexId> const& sphere) {
  std::vector<std::int64_t> idx(ball.size(), -1);
  for (std::size_t i = 0; i < sphere.size(); ++i) {
    idx[sphere[i]] = static_cast<std::int64_t>(i);
  }
  return idx;
}

void require_radius(CayleyBall const& ball, std::size_t radius) {
  if (radius > ball.radius()) {
    throw Uncertified("exit radius " + std::to_string(radius)
                      + " exceeds ball radius "
                      + std::to_string(ball.radius()));
  }
}

}  // namespace

void StepMeasure::validate() const {
  if (support.empty()) {
    throw InvalidArgument("step measure has empty support");
  }
  Rational total = 0;
  for (auto const& [w, p] : support) {
    if (p <= Rational(0)) {
      throw InvalidArgument("step probabilities must be positive");
    }
    total += p;
  }
  if (total != Rational(1)) {
    throw InvalidArgument("step probabilities sum to "
                          + std::to_string(total.numerator()) + "/"
                          + std::to_string(total.denominator()));
  }
}

std::size_t StepMeasure::max_length() const {
  std::size_t m = 0;
  for (auto const& s : support) {
    m = std::max(m, s.first.size());
  }
  return m;
}

StepMeasure StepMeasure::uniform(std::vector<Word> words, bool generates) {
  StepMeasure mu;
  mu.generates_asserted = generates;
  auto const n          = static_cast<std::int64_t>(words.size());
  for (auto& w : words) {
    mu.support.emplace_back(std::move(w), Rational(1, n));
  }
  return mu;
}

Rational const& BoundaryMeasure::at(VertexId v) const {
  auto it = std::find(sphere.begin(), sphere.end(), v);
  if (it == sphere.end()) {
    throw InvalidArgument("vertex not on the measure's sphere");
  }
  return mass[static_cast<std::size_t>(it - sphere.begin())];
}

BoundaryMeasure EmpiricalBoundaryMeasure::to_measure() const {
  BoundaryMeasure m;
  m.radius = radius;
  m.sphere = sphere;
  m.mass.assign(sphere.size(), Rational(0));
  if (exited == 0) {
    return m;
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    m.mass[i] = Rational(static_cast<std::int64_t>(hits[i]),
                         static_cast<std::int64_t>(exited));
  }
  return m;
}

EmpiricalBoundaryMeasure sample_walks(CayleyBall const& ball,
                                      StepMeasure const& mu,
                                      std::size_t radius,
                                      std::size_t steps,
                                      std::uint64_t count,
                                      std::uint64_t seed,
                                      std::size_t jobs) {
  mu.validate();
  require_radius(ball, radius);
  for (auto const& [w, p] : mu.support) {
    for (Letter x : w) {
      if (x >= ball.letters()) {
        throw InvalidArgument("step word outside the alphabet");
      }
    }
  }
  std::vector<double> cumulative;
  double acc = 0;
  for (auto const& s : mu.support) {
    acc += boost::rational_cast<double>(s.second);
    cumulative.push_back(acc);
  }
  cumulative.back() = 1.0;

  EmpiricalBoundaryMeasure m;
  m.radius = radius;
  m.sphere = ball.sphere(radius);
  m.hits.assign(m.sphere.size(), 0);
  m.walks = count;
  m.seed  = seed;
  auto const idx = sphere_index(ball, m.sphere);

  std::vector<VertexId> exit(count, no_vertex);
  std::vector<std::uint32_t> used(count, 0);
  detail::parallel_for(
      count, static_cast<unsigned>(jobs), [&](unsigned, std::size_t i) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i),
                          static_cast<std::uint32_t>(i >> 32)};
        std::mt19937_64 rng(seq);
        VertexId pos = ball.identity();
        if (radius == 0) {
          exit[i] = pos;
          return;
        }
        for (std::size_t s = 0; s < steps; ++s) {
          double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
          auto k   = static_cast<std::size_t>(
              std::upper_bound(cumulative.begin(), cumulative.end(), u)
              - cumulative.begin());
          k = std::min(k, cumulative.size() - 1);
          for (Letter x : mu.support[k].first) {
            pos = ball.neighbor(pos, x);
            if (ball.dist0(pos) == radius) {
              exit[i] = pos;
              used[i] = static_cast<std::uint32_t>(s + 1);
              return;
            }
          }
        }
      });
  for (std::uint64_t i = 0; i < count; ++i) {
    if (exit[i] == no_vertex) {
      ++m.unexited;
    } else {
      ++m.exited;
      ++m.hits[static_cast<std::size_t>(idx[exit[i]])];
      m.total_steps += used[i];
    }
  }
  return m;
}

BoundaryMeasure exit_distribution(CayleyBall const& ball,
                                  StepMeasure const& mu,
                                  std::size_t radius,
                                  std::size_t max_interior) {
  mu.validate();
  require_radius(ball, radius);
  BoundaryMeasure out;
  out.radius = radius;
  out.sphere = ball.sphere(radius);
  out.mass.assign(out.sphere.size(), Rational(0));
  if (radius == 0) {
    out.mass[0] = 1;
    return out;
  }
  auto const idx = sphere_index(ball, out.sphere);
  // Interior vertices are exactly the ids below the first sphere vertex.
  std::size_t m = 0;
  while (m < ball.size() && ball.dist0(static_cast<VertexId>(m)) < radius) {
    ++m;
  }
  if (m > max_interior) {
    throw BudgetExceeded("absorption system has " + std::to_string(m)
                         + " interior states");
  }
  std::vector<std::vector<BigRational>> A(m, std::vector<BigRational>(m));
  std::vector<std::vector<BigRational>> R(m,
      std::vector<BigRational>(out.sphere.size()));
  for (std::size_t x = 0; x < m; ++x) {
    A[x][x] = 1;
    for (auto const& [w, p] : mu.support) {
      BigRational q(p.numerator(), p.denominator());
      auto pos  = static_cast<VertexId>(x);
      bool done = false;
      for (Letter l : w) {
        pos = ball.neighbor(pos, l);
        if (ball.dist0(pos) == radius) {
          R[x][static_cast<std::size_t>(idx[pos])] += q;
          done = true;
          break;
        }
      }
      if (!done) {
        A[x][static_cast<std::size_t>(pos)] -= q;
      }
    }
  }
  // Solve z^T A = e_0^T, then nu = z^T R.
  std::vector<std::vector<BigRational>> T(m, std::vector<BigRational>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      T[i][j] = A[j][i];
    }
    T[i][m] = i == 0 ? 1 : 0;
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (piv < m && T[piv][c] == 0) {
      ++piv;
    }
    if (piv == m) {
      throw InvalidArgument("walk cannot exit from some interior state");
    }
    std::swap(T[c], T[piv]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || T[r][c] == 0) {
        continue;
      }
      BigRational f = T[r][c] / T[c][c];
      for (std::size_t j = c; j <= m; ++j) {
        T[r][j] -= f * T[c][j];
      }
    }
  }
  for (std::size_t v = 0; v < out.sphere.size(); ++v) {
    BigRational s = 0;
    for (std::size_t x = 0; x < m; ++x) {
      if (R[x][v] != 0) {
        s += T[x][m] / T[x][x] * R[x][v];
      }
    }
    out.mass[v] = Rational(narrow(boost::multiprecision::numerator(s)),
                           narrow(boost::multiprecision::denominator(s)));
  }
  return out;
}

StationarityDefect stationarity_defect(CayleyBall const& ball,
                                       BoundaryMeasure const& nu,
                                       StepMeasure const& mu) {
  mu.validate();
  auto const k = nu.radius;
  require_radius(ball, k);
  if (nu.sphere != ball.sphere(k) || nu.mass.size() != nu.sphere.size()) {
    throw InvalidArgument("measure is not indexed by the ball's sphere");
  }
  auto const n   = ball.size();
  auto const idx = sphere_index(ball, nu.sphere);
  // Shadow masses inside, radius-k ancestors and level counts outside.
  std::vector<Rational> shadow(n, Rational(0));
  std::vector<VertexId> anc(n, no_vertex);
  for (std::size_t i = 0; i < nu.sphere.size(); ++i) {
    shadow[nu.sphere[i]] = nu.mass[i];
  }
  for (auto v = static_cast<VertexId>(n) - 1; v > 0; --v) {
    if (ball.dist0(v) <= k) {
      shadow[ball.parent(v)] += shadow[v];
    }
  }
  std::vector<std::vector<std::uint64_t>> below(
      ball.radius() + 1, std::vector<std::uint64_t>(nu.sphere.size(), 0));
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
    auto d = ball.dist0(v);
    if (d == k) {
      anc[v] = v;
    } else if (d > k) {
      anc[v] = anc[ball.parent(v)];
      ++below[d][static_cast<std::size_t>(idx[anc[v]])];
    }
  }
  StationarityDefect r;
  r.defect        = 0;
  r.excluded_mass = 0;
  std::vector<Rational> tag(n, Rational(0));  // pushed down to the sphere
  std::vector<Rational> col(nu.sphere.size(), Rational(0));
  for (std::size_t i = 0; i < nu.sphere.size(); ++i) {
    std::vector<std::pair<VertexId, Rational const*>> translates;
    bool ok = true;
    for (auto const& [g, p] : mu.support) {
      auto word = inverse(g);
      auto nf   = ball.normal_form(nu.sphere[i]);
      word.insert(word.end(), nf.begin(), nf.end());
      auto w = ball.find(word);
      if (!w) {
        ok = false;
        break;
      }
      translates.emplace_back(*w, &p);
    }
    if (!ok) {
      ++r.excluded;
      r.excluded_mass += nu.mass[i];
      continue;
    }
    ++r.classifiable;
    Rational push = 0;
    for (auto const& [w, p] : translates) {
      auto d = ball.dist0(w);
      if (d < k) {
        push += *p * shadow[w];
        tag[w] += *p;
      } else if (d == k) {
        push += *p * nu.mass[static_cast<std::size_t>(idx[w])];
        col[static_cast<std::size_t>(idx[w])] += *p;
      } else {
        auto a   = static_cast<std::size_t>(idx[anc[w]]);
        auto cnt = static_cast<std::int64_t>(below[d][a]);
        push += *p * nu.mass[a] / cnt;
        col[a] += *p / cnt;
      }
    }
    r.defect += abs_value(nu.mass[i] - push);
  }
  if (r.classifiable == 0) {
    throw Uncertified("no classifiable sphere vertices");
  }
  for (VertexId v = 1; v < static_cast<VertexId>(n); ++v) {
    if (ball.dist0(v) <= k) {
      tag[v] += tag[ball.parent(v)];
    }
  }
  Rational norm = 0;
  for (std::size_t i = 0; i < nu.sphere.size(); ++i) {
    norm = std::max(norm, col[i] + tag[nu.sphere[i]]);
  }
  r.lipschitz = 1 + norm;
  return r;
}

Rational morse_direction_frequency(CayleyBall const& ball,
                                   BoundaryMeasure const& nu,
                                   std::optional<FunctionSample> const& bound) {
  require_radius(ball, nu.radius);
  Rational total = 0;
  if (!bound) {
    return total;
  }
  auto const& p = ball.presentation().presentation();
  auto const tmax = bound->domain_max();
  for (std::size_t i = 0; i < nu.sphere.size(); ++i) {
    if (nu.mass[i] == Rational(0)) {
      continue;
    }
    auto prof = intersection_function(p, ball.normal_form(nu.sphere[i]), tmax);
    bool ok   = true;
    for (std::size_t t = 1; t <= tmax && ok; ++t) {
      ok = Rational(static_cast<std::int64_t>(prof(t))) <= (*bound)(t);
    }
    if (ok) {
      total += nu.mass[i];
    }
  }
  return total;
}

WorstGeodesic worst_geodesic(CayleyBall const& ball,
                             std::size_t radius,
                             std::size_t tmax) {
  require_radius(ball, radius);
  if (tmax == 0) {
    throw InvalidArgument("tmax must be positive");
  }
  auto const& p = ball.presentation().presentation();
  WorstGeodesic best;
  for (auto v : ball.sphere(radius)) {
    auto w   = ball.normal_form(v);
    auto rho = intersection_function(p, w, tmax)(tmax);
    if (best.endpoint == no_vertex || rho > best.rho) {
      best.endpoint = v;
      best.word     = std::move(w);
      best.rho      = rho;
    }
  }
  return best;
}

LabelledPath translated_concat(CayleyBall const& ball,
                               LabelledPath const& alpha,
                               LabelledPath const& beta) {
  auto require = [&](Word const& w, char const* what) {
    if (!ball.find(w)) {
      throw Uncertified(std::string(what) + " lies outside the ball");
    }
  };
  Word end = alpha.start;
  end.insert(end.end(), alpha.label.begin(), alpha.label.end());
  require(alpha.start, "start of alpha");
  require(end, "end of alpha");
  require(beta.start, "start of beta");
  LabelledPath out{alpha.start, alpha.label};
  out.label.insert(out.label.end(), beta.label.begin(), beta.label.end());
  end.insert(end.end(), beta.label.begin(), beta.label.end());
  require(end, "end of the concatenation");
  return out;
}

QabPath build_qab(CayleyBall const& ball,
                  GeodesicPath const& gamma,
                  GeodesicPath const& beta,
                  std::size_t blocks) {
  if (blocks < 3 || blocks % 2 == 0) {
    throw InvalidArgument("blocks must be odd and at least 3");
  }
  if (gamma.vertices.empty()) {
    throw InvalidArgument("gamma has no vertices");
  }
  QabPath q;
  for (std::size_t b = 0; b < blocks; ++b) {
    bool const is_gamma = b % 2 == 0;
    auto const& w       = is_gamma ? gamma.word : beta.word;
    QabSegment s{is_gamma ? 'g' : 'b', b / 2 + 1, q.label.size(), 0};
    q.label.insert(q.label.end(), w.begin(), w.end());
    s.end = q.label.size();
    q.segments.push_back(s);
  }
  VertexId pos = gamma.vertices.front();
  q.vertices.push_back(pos);
  for (Letter x : q.label) {
    pos = ball.neighbor(pos, x);
    if (pos == no_vertex) {
      return q;
    }
    q.vertices.push_back(pos);
  }
  q.complete = true;
  return q;
}

ProjectionDiameter projection_diameter(CayleyBall const& ball,
                                       GeodesicPath const& target,
                                       std::vector<VertexId> const& probe) {
  require_geodesic(ball, target);
  ProjectionDiameter r;
  if (probe.empty()) {
    return r;
  }
  bool first = true;
  for (auto x : probe) {
    auto row   = ball.ball_distances(x);
    auto best  = std::numeric_limits<std::int32_t>::max();
    std::vector<std::size_t> argmin;
    for (std::size_t i = 0; i < target.vertices.size(); ++i) {
      auto t = target.vertices[i];
      auto d = row[t];
      if (d < 0 || !ball.certified(t, x, d)) {
        throw Uncertified("distance from probe to target not certified");
      }
      if (d < best) {
        best = d;
        argmin.clear();
      }
      if (d == best) {
        argmin.push_back(i);
      }
    }
    if (first || argmin.front() < r.lo) {
      r.lo       = argmin.front();
      r.lo_probe = x;
    }
    if (first || argmin.back() > r.hi) {
      r.hi       = argmin.back();
      r.hi_probe = x;
    }
    first = false;
  }
  r.diameter = r.hi - r.lo;
  return r;
}

}  // namespace morselab
