#include "morselab/diagrams.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "morselab/error.hpp"
#include "morselab/smallcancel.hpp"

namespace morselab {

namespace {
  std::size_t edge_of(DartRef d) {
    return static_cast<std::size_t>(d > 0 ? d : -d) - 1;
  }
  std::size_t dart_index(DartRef d) {
    return 2 * edge_of(d) + (d < 0 ? 1 : 0);
  }
  DartRef dart_ref(std::size_t index) {
    auto e = static_cast<DartRef>(index / 2 + 1);
    return index % 2 == 0 ? e : -e;
  }
}  // namespace

std::size_t DiskDiagram::src(DartRef d) const {
  auto const& e = edges.at(edge_of(d));
  return d > 0 ? e.src : e.dst;
}

std::size_t DiskDiagram::dst(DartRef d) const {
  auto const& e = edges.at(edge_of(d));
  return d > 0 ? e.dst : e.src;
}

Letter DiskDiagram::label(DartRef d) const {
  auto const& e = edges.at(edge_of(d));
  return d > 0 ? e.label : inverse(e.label);
}

Word DiskDiagram::cycle_label(std::vector<DartRef> const& cycle) const {
  Word w;
  for (auto d : cycle) {
    w.push_back(label(d));
  }
  return w;
}

namespace {
  // Cycle id per dart: face index, or -1 for the boundary.
  struct DartTable {
    std::vector<std::int64_t> owner;
    std::vector<std::size_t> position;
    std::vector<std::size_t> next;  // successor dart within its cycle
  };

  DartTable dart_table(DiskDiagram const& d) {
    DartTable t;
    auto n = 2 * d.edges.size();
    t.owner.assign(n, -2);
    t.position.assign(n, 0);
    t.next.assign(n, 0);
    auto add = [&](std::vector<DartRef> const& c, std::int64_t owner) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        auto di        = dart_index(c[i]);
        t.owner[di]    = owner;
        t.position[di] = i;
        t.next[di]     = dart_index(c[(i + 1) % c.size()]);
      }
    };
    for (std::size_t f = 0; f < d.faces.size(); ++f) {
      add(d.faces[f], static_cast<std::int64_t>(f));
    }
    add(d.boundary, -1);
    return t;
  }

  std::vector<Arc> split_arcs(DiskDiagram const& d,
                              std::vector<DartRef> const& cycle,
                              std::vector<std::size_t> const& degree,
                              std::vector<char> const& on_boundary,
                              bool is_boundary) {
    std::vector<std::size_t> breaks;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (degree[d.src(cycle[i])] != 2) {
        breaks.push_back(i);
      }
    }
    if (breaks.empty() && !cycle.empty()) {
      breaks.push_back(0);
    }
    std::vector<Arc> arcs;
    for (std::size_t j = 0; j < breaks.size(); ++j) {
      Arc arc;
      arc.start = breaks[j];
      auto end  = j + 1 < breaks.size() ? breaks[j + 1]
                                        : breaks[0] + cycle.size();
      for (auto i = breaks[j]; i < end; ++i) {
        arc.darts.push_back(cycle[i % cycle.size()]);
      }
      arc.interior = !is_boundary && !on_boundary[edge_of(arc.darts[0])];
      arcs.push_back(std::move(arc));
    }
    return arcs;
  }

  ArcDecomposition decompose(DiskDiagram const& d) {
    ArcDecomposition out;
    out.degree.assign(d.vertices, 0);
    for (auto const& e : d.edges) {
      ++out.degree[e.src];
      ++out.degree[e.dst];
    }
    std::vector<char> on_boundary(d.edges.size(), 0);
    for (auto x : d.boundary) {
      on_boundary[edge_of(x)] = 1;
    }
    for (auto const& face : d.faces) {
      FaceArcs fa;
      fa.arcs = split_arcs(d, face, out.degree, on_boundary, false);
      for (auto const& a : fa.arcs) {
        ++(a.interior ? fa.interior_degree : fa.exterior_degree);
      }
      out.faces.push_back(std::move(fa));
    }
    out.boundary = split_arcs(d, d.boundary, out.degree, on_boundary, true);
    return out;
  }

  std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x         = parent[x];
    }
    return x;
  }
}  // namespace

DiagramVerdict validate_diagram(DiskDiagram const& d) {
  DiagramVerdict v;
  auto issue = [&](std::string where, std::string what) {
    v.issues.push_back({std::move(where), std::move(what)});
  };
  auto const E = d.edges.size();
  for (std::size_t k = 0; k < E; ++k) {
    auto const& e = d.edges[k];
    if (e.src >= d.vertices || e.dst >= d.vertices) {
      issue("edge " + std::to_string(k + 1), "endpoint out of range");
    }
    if (!d.alphabet.contains(e.label)) {
      issue("edge " + std::to_string(k + 1), "label outside the alphabet");
    }
  }
  std::vector<std::size_t> uses(2 * E, 0);
  auto scan = [&](std::vector<DartRef> const& c, std::string const& where) {
    for (auto x : c) {
      if (x == 0 || edge_of(x) >= E) {
        issue(where, "dart reference " + std::to_string(x) + " out of range");
        return false;
      }
      ++uses[dart_index(x)];
    }
    return true;
  };
  for (std::size_t f = 0; f < d.faces.size(); ++f) {
    if (d.faces[f].empty()) {
      issue("face " + std::to_string(f), "empty boundary cycle");
    }
    scan(d.faces[f], "face " + std::to_string(f));
  }
  scan(d.boundary, "boundary");
  if (!v.issues.empty()) {
    return v;
  }
  for (std::size_t i = 0; i < uses.size(); ++i) {
    if (uses[i] != 1) {
      issue("edge " + std::to_string(i / 2 + 1),
            "dart " + std::to_string(dart_ref(i)) + " used "
                + std::to_string(uses[i]) + " times");
    }
  }
  auto closed = [&](std::vector<DartRef> const& c, std::string const& where) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (d.dst(c[i]) != d.src(c[(i + 1) % c.size()])) {
        issue(where, "not a closed path at position " + std::to_string(i));
        return;
      }
    }
  };
  for (std::size_t f = 0; f < d.faces.size(); ++f) {
    closed(d.faces[f], "face " + std::to_string(f));
  }
  closed(d.boundary, "boundary");
  if (!v.issues.empty()) {
    return v;
  }
  // Each vertex link must be one cycle of the rotation phi(alpha(x)).
  auto table = dart_table(d);
  std::vector<std::vector<std::size_t>> out_darts(d.vertices);
  for (std::size_t i = 0; i < 2 * E; ++i) {
    out_darts[d.src(dart_ref(i))].push_back(i);
  }
  for (std::size_t x = 0; x < d.vertices; ++x) {
    auto const& ds = out_darts[x];
    if (ds.empty()) {
      if (d.vertices != 1 || E != 0) {
        issue("vertex " + std::to_string(x), "isolated vertex");
      }
      continue;
    }
    std::size_t count = 0;
    auto cur          = ds[0];
    do {
      cur = table.next[cur ^ 1];
      ++count;
    } while (cur != ds[0] && count <= ds.size());
    if (count != ds.size()) {
      issue("vertex " + std::to_string(x), "link is not a single cycle");
    }
  }
  std::vector<std::size_t> parent(d.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  for (auto const& e : d.edges) {
    parent[find_root(parent, e.src)] = find_root(parent, e.dst);
  }
  for (std::size_t x = 1; x < d.vertices; ++x) {
    if (find_root(parent, x) != find_root(parent, 0)) {
      issue("vertex " + std::to_string(x), "not connected to vertex 0");
      break;
    }
  }
  auto euler = static_cast<std::int64_t>(d.vertices)
               - static_cast<std::int64_t>(E)
               + static_cast<std::int64_t>(d.faces.size());
  if (d.vertices == 0 || euler != 1) {
    issue("diagram", "Euler characteristic V - E + F = "
                         + std::to_string(euler) + ", expected 1");
  }
  v.valid = v.issues.empty();
  if (!v.valid) {
    return v;
  }
  std::set<std::size_t> seen;
  bool repeats = false;
  for (auto x : d.boundary) {
    repeats = repeats || !seen.insert(d.src(x)).second;
  }
  v.simple = !d.faces.empty() && !repeats;
  v.arcs   = decompose(d);
  return v;
}

DiagramVerdict validate_diagram(DiskDiagram const& d, Presentation const& p) {
  auto v = validate_diagram(d);
  if (!(d.alphabet == p.alphabet())) {
    v.issues.push_back({"diagram", "alphabet differs from the presentation"});
    v.valid = false;
    return v;
  }
  if (!v.valid) {
    return v;
  }
  SymmetrizedClosure closure(p);
  for (std::size_t f = 0; f < d.faces.size(); ++f) {
    if (!closure.contains(d.face_label(f))) {
      v.issues.push_back({"face " + std::to_string(f),
                          "label " + d.alphabet.format(d.face_label(f))
                              + " is not in the symmetrised closure"});
    }
  }
  v.valid = v.issues.empty();
  if (!v.valid) {
    v.arcs.reset();
  }
  return v;
}

namespace {
  struct BigonContext {
    ArcDecomposition arcs;
    DartTable table;
    std::vector<std::size_t> side_of;  // per boundary position
  };

  BigonContext require_ngon(DiskDiagram const& d, std::size_t n) {
    auto v = validate_diagram(d);
    if (!v.valid) {
      throw StructureError("invalid diagram: " + v.issues.front().where + ": "
                           + v.issues.front().what);
    }
    if (!v.simple) {
      throw StructureError("diagram is not simple");
    }
    if (d.sides.size() != n) {
      throw InvalidArgument("diagram has " + std::to_string(d.sides.size())
                            + " sides, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (d.sides[j] >= d.boundary.size()
          || (j > 0 && d.sides[j] <= d.sides[j - 1])) {
        throw StructureError("side markers must be increasing boundary "
                             "positions");
      }
    }
    BigonContext ctx{std::move(*v.arcs), dart_table(d), {}};
    ctx.side_of.assign(d.boundary.size(), n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      auto end = j + 1 < n ? d.sides[j + 1] : d.boundary.size();
      for (auto i = d.sides[j]; i < end; ++i) {
        ctx.side_of[i] = j;
      }
    }
    return ctx;
  }

  // Sides met by a face along boundary edges.
  std::set<std::size_t> sides_touched(BigonContext const& ctx,
                                      std::vector<DartRef> const& darts) {
    std::set<std::size_t> out;
    for (auto x : darts) {
      auto rev = dart_index(x) ^ 1;
      if (ctx.table.owner[rev] == -1) {
        out.insert(ctx.side_of[ctx.table.position[rev]]);
      }
    }
    return out;
  }
}  // namespace

NgonVerdict ngon_conditions(DiskDiagram const& d, std::size_t n) {
  auto ctx = require_ngon(d, n);
  NgonVerdict v;
  for (std::size_t f = 0; f < d.faces.size(); ++f) {
    auto const& fa = ctx.arcs.faces[f];
    if (fa.exterior_degree == 0 && fa.arcs.size() < 7) {
      v.violations.push_back({f, 2, fa.interior_degree, fa.arcs.size()});
    }
    if (fa.exterior_degree == 1 && fa.interior_degree < 4) {
      auto ext = std::find_if(fa.arcs.begin(), fa.arcs.end(),
                              [](Arc const& a) { return !a.interior; });
      if (sides_touched(ctx, ext->darts).size() == 1) {
        v.violations.push_back({f, 1, fa.interior_degree, fa.arcs.size()});
      }
    }
  }
  v.pass = v.violations.empty();
  return v;
}

std::string to_string(BigonShape s) {
  switch (s) {
    case BigonShape::single_face:
      return "SINGLE_FACE";
    case BigonShape::i1:
      return "I1";
    case BigonShape::not_classified:
      return "NOT_CLASSIFIED";
  }
  return "?";
}

BigonClassification classify_bigon(DiskDiagram const& d) {
  auto ctx    = require_ngon(d, 2);
  auto verdict = ngon_conditions(d, 2);
  if (!verdict.pass) {
    auto const& x = verdict.violations.front();
    throw InvalidArgument("not a combinatorial geodesic bigon: face "
                          + std::to_string(x.face) + " violates condition "
                          + std::to_string(x.condition));
  }
  BigonClassification out;
  auto const F = d.faces.size();
  if (F == 1) {
    out.shape = BigonShape::single_face;
    out.chain = {0};
    return out;
  }
  auto fail = [&](std::size_t f, std::string reason) {
    out.shape       = BigonShape::not_classified;
    out.obstruction = f;
    out.reason      = std::move(reason);
    return out;
  };
  std::vector<std::map<std::size_t, std::size_t>> shared(F);
  for (std::size_t f = 0; f < F; ++f) {
    for (auto const& arc : ctx.arcs.faces[f].arcs) {
      if (!arc.interior) {
        continue;
      }
      auto g = ctx.table.owner[dart_index(arc.darts.front()) ^ 1];
      if (g == static_cast<std::int64_t>(f)) {
        return fail(f, "interior arc with the same face on both sides");
      }
      ++shared[f][static_cast<std::size_t>(g)];
    }
    auto touched = sides_touched(ctx, d.faces[f]);
    if (touched.size() != 2) {
      return fail(f, "face does not meet both sides");
    }
  }
  std::vector<std::size_t> ends;
  for (std::size_t f = 0; f < F; ++f) {
    if (shared[f].empty() || shared[f].size() > 2) {
      return fail(f, "face has " + std::to_string(shared[f].size())
                         + " neighbours in the chain");
    }
    for (auto [g, count] : shared[f]) {
      if (count != 1) {
        return fail(f, "consecutive faces share " + std::to_string(count)
                           + " interior arcs");
      }
    }
    if (shared[f].size() == 1) {
      ends.push_back(f);
    }
  }
  if (ends.size() != 2) {
    return fail(0, "face adjacency is not a path");
  }
  // Start from the end meeting side 0 earliest.
  auto first_position = [&](std::size_t f) {
    std::size_t best = d.boundary.size();
    for (auto x : d.faces[f]) {
      auto rev = dart_index(x) ^ 1;
      if (ctx.table.owner[rev] == -1) {
        auto p = (ctx.table.position[rev] + d.boundary.size() - d.sides[0])
                 % d.boundary.size();
        best = std::min(best, p);
      }
    }
    return best;
  };
  auto start = first_position(ends[0]) <= first_position(ends[1]) ? ends[0]
                                                                  : ends[1];
  std::vector<char> used(F, 0);
  for (auto cur = start;;) {
    out.chain.push_back(cur);
    used[cur] = 1;
    auto next = F;
    for (auto [g, count] : shared[cur]) {
      if (!used[g]) {
        next = g;
      }
    }
    if (next == F) {
      break;
    }
    cur = next;
  }
  if (out.chain.size() != F) {
    out.chain.clear();
    return fail(start, "face adjacency is not a path");
  }
  out.shape = BigonShape::i1;
  return out;
}

namespace {
  // Darts in canonical order from boundary dart 0, following the cycle
  // successor, the reversal and the cycle predecessor.
  std::vector<std::size_t> canonical_order(DiskDiagram const& d,
                                           DartTable const& t) {
    auto const n = t.next.size();
    std::vector<std::size_t> prev(n);
    for (std::size_t i = 0; i < n; ++i) {
      prev[t.next[i]] = i;
    }
    std::vector<std::size_t> order;
    if (d.boundary.empty()) {
      return order;
    }
    std::vector<char> seen(n, 0);
    auto root  = dart_index(d.boundary.front());
    seen[root] = 1;
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
      auto x = order[head];
      for (auto y : {t.next[x], x ^ 1, prev[x]}) {
        if (!seen[y]) {
          seen[y] = 1;
          order.push_back(y);
        }
      }
    }
    return order;
  }
}  // namespace

std::vector<std::uint32_t> canonical_code(DiskDiagram const& d) {
  auto t     = dart_table(d);
  auto order = canonical_order(d, t);
  std::vector<std::uint32_t> num(t.next.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    num[order[i]] = static_cast<std::uint32_t>(i);
  }
  std::vector<std::uint32_t> code;
  code.push_back(static_cast<std::uint32_t>(order.size()));
  code.push_back(static_cast<std::uint32_t>(d.faces.size()));
  for (auto x : order) {
    code.push_back(d.label(dart_ref(x)));
    code.push_back(num[t.next[x]]);
    code.push_back(num[x ^ 1]);
    code.push_back(t.owner[x] == -1 ? 1 : 0);
  }
  return code;
}

DiskDiagram canonical_form(DiskDiagram const& d) {
  auto t     = dart_table(d);
  auto order = canonical_order(d, t);
  DiskDiagram out;
  out.alphabet = d.alphabet;
  out.sides    = d.sides;
  if (order.empty()) {
    out.vertices = d.vertices;
    return out;
  }
  std::vector<std::int64_t> vertex(d.vertices, -1);
  std::vector<DartRef> ref(t.next.size(), 0);
  for (auto x : order) {
    auto r = dart_ref(x);
    for (auto v : {d.src(r), d.dst(r)}) {
      if (vertex[v] < 0) {
        vertex[v] = static_cast<std::int64_t>(out.vertices++);
      }
    }
    if (ref[x] == 0) {
      out.edges.push_back({static_cast<std::size_t>(vertex[d.src(r)]),
                           static_cast<std::size_t>(vertex[d.dst(r)]),
                           d.label(r)});
      auto k     = static_cast<DartRef>(out.edges.size());
      ref[x]     = k;
      ref[x ^ 1] = -k;
    }
  }
  std::vector<std::int64_t> face_rank(d.faces.size(), -1);
  std::int64_t next_rank = 0;
  for (auto x : order) {
    auto f = t.owner[x];
    if (f >= 0 && face_rank[f] < 0) {
      face_rank[f] = next_rank++;
    }
  }
  out.faces.resize(d.faces.size());
  for (std::size_t f = 0; f < d.faces.size(); ++f) {
    std::vector<DartRef> c;
    for (auto x : d.faces[f]) {
      c.push_back(ref[dart_index(x)]);
    }
    // Rotate to start at the dart seen first in canonical order.
    auto key = [&](DartRef r) {
      return 2 * (std::abs(r) - 1) + (r < 0 ? 1 : 0);
    };
    auto first = std::min_element(c.begin(), c.end(), [&](DartRef a,
                                                          DartRef b) {
      return key(a) < key(b);
    });
    std::rotate(c.begin(), first, c.end());
    out.faces[face_rank[f]] = std::move(c);
  }
  for (auto x : d.boundary) {
    out.boundary.push_back(ref[dart_index(x)]);
  }
  return out;
}

}  // namespace morselab
