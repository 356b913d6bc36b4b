#include <algorithm>
#include <atomic>
#include <map>
#include <optional>

#include "morselab/cayley.hpp"
#include "morselab/diagrams.hpp"
#include "morselab/error.hpp"
#include "morselab/smallcancel.hpp"
#include "parallel.hpp"

namespace morselab {

namespace {
  // A partial diagram grown inwards from its boundary. Holes are the
  // unfilled regions, as cycles of darts still waiting for a face.
  struct State {
    std::size_t vertices = 0;
    std::vector<DiagramEdge> edges;
    std::vector<char> edge_alive;
    std::vector<std::vector<DartRef>> faces;
    std::vector<DartRef> boundary;
    std::vector<std::vector<DartRef>> holes;

    std::size_t src(DartRef d) const {
      auto const& e = edges[std::abs(d) - 1];
      return d > 0 ? e.src : e.dst;
    }
    std::size_t dst(DartRef d) const {
      auto const& e = edges[std::abs(d) - 1];
      return d > 0 ? e.dst : e.src;
    }
    Letter label(DartRef d) const {
      auto const& e = edges[std::abs(d) - 1];
      return d > 0 ? e.label : inverse(e.label);
    }
    DartRef add_edge(std::size_t s, std::size_t t, Letter x) {
      edges.push_back({s, t, x});
      edge_alive.push_back(1);
      return static_cast<DartRef>(edges.size());
    }
    void merge_vertex(std::size_t from, std::size_t to) {
      if (from == to) {
        return;
      }
      for (auto& e : edges) {
        e.src = e.src == from ? to : e.src;
        e.dst = e.dst == from ? to : e.dst;
      }
    }
    void replace_dart(DartRef from, DartRef to) {
      auto fix = [&](std::vector<DartRef>& c) {
        std::replace(c.begin(), c.end(), from, to);
      };
      for (auto& f : faces) {
        fix(f);
      }
      fix(boundary);
      for (auto& h : holes) {
        fix(h);
      }
    }
  };

  // Splits a hole wherever it passes through a vertex twice: any filling
  // has a cut vertex there.
  void push_hole(State const& s,
                 std::vector<DartRef> hole,
                 std::vector<std::vector<DartRef>>& out) {
    if (hole.empty()) {
      return;
    }
    std::map<std::size_t, std::size_t> first;
    for (std::size_t j = 0; j < hole.size(); ++j) {
      auto [it, fresh] = first.emplace(s.src(hole[j]), j);
      if (!fresh) {
        auto i = it->second;
        std::vector<DartRef> inner(hole.begin() + i, hole.begin() + j);
        std::vector<DartRef> outer(hole.begin(), hole.begin() + i);
        outer.insert(outer.end(), hole.begin() + j, hole.end());
        push_hole(s, std::move(inner), out);
        push_hole(s, std::move(outer), out);
        return;
      }
    }
    out.push_back(std::move(hole));
  }

  class Search {
   public:
    Search(Presentation const& p, DiagramSearchOptions const& options)
        : p_(p)
        , closure_(p)
        , verified_(VerifiedPresentation::try_verify(p))
        , options_(options) {}

    State initial(WordView w) const {
      State s;
      s.vertices = w.size();
      std::vector<DartRef> hole;
      for (std::size_t i = 0; i < w.size(); ++i) {
        s.boundary.push_back(s.add_edge(i, (i + 1) % w.size(), w[i]));
      }
      for (auto i = w.size(); i-- > 0;) {
        hole.push_back(-s.boundary[i]);
      }
      push_hole(s, std::move(hole), s.holes);
      return s;
    }

    std::vector<State> children(State const& s) const {
      std::vector<State> out;
      auto const& h = s.holes.front();
      auto const n  = h.size();
      auto rest = [&](State& t) {
        t.holes.erase(t.holes.begin());
      };
      // Glue the root dart to a later dart with the inverse label.
      for (std::size_t k = 1; k < n; ++k) {
        if (s.label(h[k]) != inverse(s.label(h[0]))) {
          continue;
        }
        State t = s;
        rest(t);
        auto d1 = h[0], d2 = h[k];
        t.merge_vertex(t.src(d2), t.dst(d1));
        t.merge_vertex(t.dst(d2), t.src(d1));
        t.edge_alive[std::abs(d2) - 1] = 0;
        t.replace_dart(-d2, d1);
        std::vector<std::vector<DartRef>> fresh;
        push_hole(t, {h.begin() + 1, h.begin() + k}, fresh);
        push_hole(t, {h.begin() + k + 1, h.end()}, fresh);
        t.holes.insert(t.holes.begin(), fresh.begin(), fresh.end());
        out.push_back(std::move(t));
      }
      if (s.faces.size() < options_.max_faces) {
        attach(s, out);
      }
      // Identify the root vertex with another vertex of the hole.
      auto x = s.src(h[0]);
      for (std::size_t k = 1; k < n; ++k) {
        if (s.src(h[k]) == x) {
          continue;
        }
        State t = s;
        rest(t);
        t.merge_vertex(s.src(h[k]), x);
        std::vector<std::vector<DartRef>> fresh;
        push_hole(t, {h.begin(), h.begin() + k}, fresh);
        push_hole(t, {h.begin() + k, h.end()}, fresh);
        t.holes.insert(t.holes.begin(), fresh.begin(), fresh.end());
        out.push_back(std::move(t));
      }
      return out;
    }

    // Faces through the root dart: a run u of the hole around position 0
    // followed by a fresh path v, with u v in the closure.
    void attach(State const& s, std::vector<State>& out) const {
      auto const& h = s.holes.front();
      auto const n  = h.size();
      for (auto const& m : closure_.members()) {
        auto const& r = m.word;
        for (std::size_t j = 0; j < std::min(r.size(), n); ++j) {
          auto start = (n - j) % n;
          std::size_t match = 0;
          while (match < std::min(r.size(), n)
                 && s.label(h[(start + match) % n]) == r[match]) {
            ++match;
          }
          for (auto len = j + 1; len <= match; ++len) {
            State t = s;
            t.holes.erase(t.holes.begin());
            std::vector<DartRef> face;
            for (std::size_t i = 0; i < len; ++i) {
              face.push_back(h[(start + i) % n]);
            }
            auto from = t.dst(face.back()), to = t.src(face.front());
            std::vector<DartRef> remaining;
            for (auto i = len; i < n; ++i) {
              remaining.push_back(h[(start + i) % n]);
            }
            if (len == r.size()) {
              // u is the whole relator: close it up.
              t.merge_vertex(from, to);
            } else {
              auto cur = from;
              for (auto i = len; i < r.size(); ++i) {
                auto next = i + 1 == r.size() ? to : t.vertices++;
                face.push_back(t.add_edge(cur, next, r[i]));
                cur = next;
              }
              std::vector<DartRef> back;
              for (auto i = face.size(); i-- > len;) {
                back.push_back(-face[i]);
              }
              back.insert(back.end(), remaining.begin(), remaining.end());
              remaining = std::move(back);
            }
            t.faces.push_back(std::move(face));
            std::vector<std::vector<DartRef>> fresh;
            push_hole(t, std::move(remaining), fresh);
            t.holes.insert(t.holes.begin(), fresh.begin(), fresh.end());
            out.push_back(std::move(t));
          }
        }
      }
    }

    bool viable(State const& s) const {
      std::size_t needed = 0;
      for (auto const& h : s.holes) {
        Word w;
        for (auto x : h) {
          w.push_back(s.label(x));
        }
        auto core = cyclic_reduce(free_reduce(w)).core;
        if (!core.empty()) {
          ++needed;
          if (verified_ && !represents_identity(*verified_, core)) {
            return false;
          }
        }
      }
      return s.faces.size() + needed <= options_.max_faces;
    }

    void run(State const& s,
             std::map<std::vector<std::uint32_t>, DiskDiagram>& found) {
      if (++nodes_ > options_.max_nodes) {
        throw BudgetExceeded("diagram search exceeded "
                             + std::to_string(options_.max_nodes)
                             + " nodes");
      }
      if (!viable(s)) {
        return;
      }
      if (s.holes.empty()) {
        record(s, found);
        return;
      }
      for (auto const& t : children(s)) {
        run(t, found);
      }
    }

    void record(State const& s,
                std::map<std::vector<std::uint32_t>, DiskDiagram>& found)
        const {
      DiskDiagram d;
      d.alphabet = p_.alphabet();
      std::vector<std::int64_t> vmap(s.vertices, -1);
      std::vector<DartRef> emap(s.edges.size(), 0);
      for (std::size_t k = 0; k < s.edges.size(); ++k) {
        if (!s.edge_alive[k]) {
          continue;
        }
        auto e = s.edges[k];
        for (auto* v : {&e.src, &e.dst}) {
          if (vmap[*v] < 0) {
            vmap[*v] = static_cast<std::int64_t>(d.vertices++);
          }
          *v = static_cast<std::size_t>(vmap[*v]);
        }
        d.edges.push_back(e);
        emap[k] = static_cast<DartRef>(d.edges.size());
      }
      auto map_cycle = [&](std::vector<DartRef> const& c) {
        std::vector<DartRef> out;
        for (auto x : c) {
          auto k = emap[std::abs(x) - 1];
          out.push_back(x > 0 ? k : -k);
        }
        return out;
      };
      for (auto const& f : s.faces) {
        d.faces.push_back(map_cycle(f));
      }
      d.boundary = map_cycle(s.boundary);
      if (!validate_diagram(d, p_).valid) {
        return;
      }
      auto c = canonical_form(d);
      found.emplace(canonical_code(c), std::move(c));
    }

   private:
    Presentation const& p_;
    SymmetrizedClosure closure_;
    std::optional<VerifiedPresentation> verified_;
    DiagramSearchOptions options_;
    std::atomic<std::size_t> nodes_{0};
  };
}  // namespace

std::vector<DiskDiagram> search_small_diagrams(
    Presentation const& p,
    WordView boundary,
    DiagramSearchOptions const& options) {
  if (!is_freely_reduced(boundary)) {
    throw InvalidArgument("boundary word must be freely reduced");
  }
  for (auto x : boundary) {
    if (!p.alphabet().contains(x)) {
      throw InvalidArgument("boundary letter outside the alphabet");
    }
  }
  if (boundary.empty()) {
    DiskDiagram d;
    d.alphabet = p.alphabet();
    d.vertices = 1;
    return {d};
  }
  Search search(p, options);
  auto root = search.initial(boundary);
  std::vector<State> first;
  if (search.viable(root)) {
    first = search.children(root);
  }
  std::vector<std::map<std::vector<std::uint32_t>, DiskDiagram>> found(
      std::max(1u, options.jobs));
  detail::parallel_for(first.size(), options.jobs,
                       [&](unsigned w, std::size_t i) {
                         search.run(first[i], found[w]);
                       });
  std::map<std::vector<std::uint32_t>, DiskDiagram> all;
  for (auto& f : found) {
    all.merge(f);
  }
  std::vector<DiskDiagram> out;
  for (auto& [code, d] : all) {
    out.push_back(std::move(d));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](DiskDiagram const& a, DiskDiagram const& b) {
                     return a.faces.size() < b.faces.size();
                   });
  return out;
}

}  // namespace morselab
