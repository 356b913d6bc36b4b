#include "morselab/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "morselab/error.hpp"
#include "morselab/metrics.hpp"

namespace morselab {

Automaton::Automaton(Alphabet alphabet,
                     std::size_t states,
                     std::size_t initial,
                     std::vector<std::size_t> accept,
                     std::vector<AutomatonEdge> edges)
    : alphabet_(std::move(alphabet)),
      states_(states),
      initial_(initial),
      accept_(states, 0),
      edges_(std::move(edges)) {
  if (states_ == 0) {
    throw InvalidArgument("automaton needs at least one state");
  }
  if (initial_ >= states_) {
    throw InvalidArgument("initial state out of range");
  }
  for (auto q : accept) {
    if (q >= states_) {
      throw InvalidArgument("accept state out of range");
    }
    accept_[q] = 1;
  }
  for (auto const& e : edges_) {
    if (e.src >= states_ || e.dst >= states_) {
      throw InvalidArgument("edge endpoint out of range");
    }
    if (!alphabet_.contains(e.label)) {
      throw InvalidArgument("edge label outside the alphabet");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  offset_.assign(states_ + 1, 0);
  for (auto const& e : edges_) {
    ++offset_[e.src + 1];
  }
  for (std::size_t q = 0; q < states_; ++q) {
    offset_[q + 1] += offset_[q];
  }
}

std::vector<std::size_t> Automaton::accept_states() const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < states_; ++q) {
    if (accept_[q]) {
      out.push_back(q);
    }
  }
  return out;
}

bool Automaton::deterministic() const noexcept {
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].src == edges_[i - 1].src
        && edges_[i].label == edges_[i - 1].label) {
      return false;
    }
  }
  return true;
}

bool accepts(Automaton const& a, WordView w) {
  std::vector<char> cur(a.states(), 0), nxt(a.states(), 0);
  cur[a.initial()] = 1;
  for (Letter x : w) {
    if (!a.alphabet().contains(x)) {
      throw InvalidArgument("letter outside the automaton alphabet");
    }
    std::fill(nxt.begin(), nxt.end(), 0);
    bool any = false;
    for (std::size_t q = 0; q < a.states(); ++q) {
      if (!cur[q]) {
        continue;
      }
      auto [lo, hi] = a.out(q);
      for (auto i = lo; i < hi; ++i) {
        auto const& e = a.edges()[i];
        if (e.label == x) {
          nxt[e.dst] = 1;
          any        = true;
        }
      }
    }
    if (!any) {
      return false;
    }
    std::swap(cur, nxt);
  }
  for (std::size_t q = 0; q < a.states(); ++q) {
    if (cur[q] && a.accepting(q)) {
      return true;
    }
  }
  return false;
}

namespace {

// Geodesic continuations of v up to the given depth, serialised in DFS
// order with a terminator per node. The last layer is closed, so a missing
// neighbour of a radius-R vertex is a geodesic step out of the ball.
std::vector<Letter> cone_type(CayleyBall const& ball,
                              VertexId v,
                              std::size_t depth) {
  std::vector<Letter> code;
  auto const end = static_cast<Letter>(ball.letters());
  auto rec = [&](auto&& self, VertexId u, std::size_t left) -> void {
    if (left > 0) {
      bool const rim = ball.dist0(u) == ball.radius();
      for (std::size_t x = 0; x < ball.letters(); ++x) {
        auto w = ball.neighbor(u, static_cast<Letter>(x));
        if (rim && w == no_vertex) {
          code.push_back(static_cast<Letter>(x));
          code.push_back(end);
        } else if (w != no_vertex && ball.dist0(w) == ball.dist0(u) + 1) {
          code.push_back(static_cast<Letter>(x));
          self(self, w, left - 1);
        }
      }
    }
    code.push_back(end);
  };
  rec(rec, v, depth);
  return code;
}

}  // namespace

GeodesicAutomaton geodesic_automaton(CayleyBall const& ball,
                                     std::size_t horizon) {
  auto const R = ball.radius();
  if (horizon > R || horizon > R - horizon) {
    throw InvalidArgument("ball too small: horizon " + std::to_string(horizon)
                          + " needs radius >= " + std::to_string(2 * horizon));
  }
  // Last layer carrying a full cone type: a depth-h cone seen from distance
  // R - h + 1 ends with steps out of the closed ball.
  auto const top = horizon == 0 ? R : R - horizon + 1;
  std::vector<VertexId> verts;
  for (VertexId v = 0; v < static_cast<VertexId>(ball.size()); ++v) {
    if (ball.dist0(v) <= top) {
      verts.push_back(v);
    }
  }
  // Vertex ids are in BFS order, so verts is sorted by distance.
  std::vector<std::size_t> cls(ball.size(), 0);
  std::size_t classes = 0;
  {
    std::map<std::vector<Letter>, std::size_t> types;
    for (auto v : verts) {
      auto [it, fresh] = types.try_emplace(cone_type(ball, v, horizon), classes);
      if (fresh) {
        ++classes;
      }
      cls[v] = it->second;
    }
  }
  auto inner = [&](VertexId v) { return ball.dist0(v) < top; };
  for (;;) {
    // Inner vertices split by successor classes; last-layer vertices follow
    // the first inner vertex of their old class.
    std::map<std::vector<std::size_t>, std::size_t> sig;
    std::vector<std::size_t> next(ball.size(), 0);
    std::vector<std::size_t> rep(classes, SIZE_MAX);
    std::size_t fresh_count = 0;
    for (auto v : verts) {
      if (!inner(v)) {
        continue;
      }
      std::vector<std::size_t> s{cls[v]};
      for (std::size_t x = 0; x < ball.letters(); ++x) {
        auto w = ball.neighbor(v, static_cast<Letter>(x));
        s.push_back(w != no_vertex && ball.dist0(w) == ball.dist0(v) + 1
                        ? cls[w]
                        : SIZE_MAX);
      }
      auto [it, fresh] = sig.try_emplace(std::move(s), fresh_count);
      if (fresh) {
        ++fresh_count;
      }
      next[v] = it->second;
      if (rep[cls[v]] == SIZE_MAX) {
        rep[cls[v]] = it->second;
      }
    }
    std::map<std::size_t, std::size_t> orphan;
    for (auto v : verts) {
      if (inner(v)) {
        continue;
      }
      if (rep[cls[v]] != SIZE_MAX) {
        next[v] = rep[cls[v]];
      } else {
        auto [it, fresh] = orphan.try_emplace(cls[v], fresh_count);
        if (fresh) {
          ++fresh_count;
        }
        next[v] = it->second;
      }
    }
    bool const done = fresh_count == classes;
    classes         = fresh_count;
    cls             = std::move(next);
    if (done) {
      break;
    }
  }
  // Renumber by first appearance so the identity is state 0.
  std::vector<std::size_t> order(classes, SIZE_MAX);
  std::size_t n = 0;
  for (auto v : verts) {
    if (order[cls[v]] == SIZE_MAX) {
      order[cls[v]] = n++;
    }
  }
  GeodesicAutomaton g;
  g.horizon          = horizon;
  g.certified_length = top;
  std::vector<char> has_inner(classes, 0);
  std::vector<AutomatonEdge> edges;
  for (auto v : verts) {
    if (!inner(v)) {
      continue;
    }
    auto q = order[cls[v]];
    if (has_inner[q]) {
      continue;
    }
    has_inner[q] = 1;
    for (std::size_t x = 0; x < ball.letters(); ++x) {
      auto w = ball.neighbor(v, static_cast<Letter>(x));
      if (w != no_vertex && ball.dist0(w) == ball.dist0(v) + 1) {
        edges.push_back({q, static_cast<Letter>(x), order[cls[w]]});
      }
    }
  }
  g.stabilized = top == 0 ? false
                          : std::all_of(has_inner.begin(), has_inner.end(),
                                        [](char c) { return c != 0; });
  std::vector<std::size_t> all(classes);
  for (std::size_t q = 0; q < classes; ++q) {
    all[q] = q;
  }
  g.automaton =
      Automaton(ball.alphabet(), classes, 0, std::move(all), std::move(edges));
  return g;
}

Automaton window_product(Automaton const& a,
                         Presentation const& p,
                         std::size_t L,
                         FunctionSample const& bound,
                         std::size_t max_states) {
  if (L == 0) {
    throw InvalidArgument("window length must be positive");
  }
  if (!(p.alphabet() == a.alphabet())) {
    throw InvalidArgument("automaton and presentation alphabets differ");
  }
  std::map<Word, bool> memo;
  auto window_ok = [&](Word const& w) {
    auto it = memo.find(w);
    if (it == memo.end()) {
      it = memo.emplace(w, local_intersection_ok(p, w, L, bound).pass).first;
    }
    return it->second;
  };
  using Key = std::pair<std::size_t, Word>;
  std::map<Key, std::size_t> id;
  std::vector<Key const*> states;
  std::deque<std::size_t> queue;
  auto intern = [&](std::size_t q, Word suffix) {
    auto [it, fresh] = id.try_emplace(Key{q, std::move(suffix)}, states.size());
    if (fresh) {
      if (states.size() >= max_states) {
        throw BudgetExceeded("window product exceeds "
                             + std::to_string(max_states) + " states");
      }
      states.push_back(&it->first);
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern(a.initial(), {});
  std::vector<AutomatonEdge> edges;
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    auto const q      = states[s]->first;
    auto const suffix = states[s]->second;
    auto [lo, hi]     = a.out(q);
    for (auto i = lo; i < hi; ++i) {
      auto const& e = a.edges()[i];
      Word window   = suffix;
      window.push_back(e.label);
      if (!window_ok(window)) {
        continue;
      }
      if (window.size() >= L) {
        window.erase(window.begin());
      }
      auto t = intern(e.dst, std::move(window));
      edges.push_back({s, e.label, t});
    }
  }
  std::vector<std::size_t> accept;
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (a.accepting(states[s]->first)) {
      accept.push_back(s);
    }
  }
  return Automaton(a.alphabet(), states.size(), 0, std::move(accept),
                   std::move(edges));
}

std::vector<std::size_t> limit_liveness(Automaton const& a) {
  std::vector<char> live(a.states(), 0);
  for (std::size_t q = 0; q < a.states(); ++q) {
    live[q] = a.accepting(q) ? 1 : 0;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < a.states(); ++q) {
      if (!live[q]) {
        continue;
      }
      auto [lo, hi] = a.out(q);
      bool any      = false;
      for (auto i = lo; i < hi && !any; ++i) {
        any = live[a.edges()[i].dst] != 0;
      }
      if (!any) {
        live[q] = 0;
        changed = true;
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < a.states(); ++q) {
    if (live[q]) {
      out.push_back(q);
    }
  }
  return out;
}

Automaton determinize(Automaton const& a, std::size_t max_states) {
  using Set = std::vector<std::size_t>;
  std::map<Set, std::size_t> id;
  std::vector<Set> sets;
  auto intern = [&](Set s) {
    auto [it, fresh] = id.try_emplace(s, sets.size());
    if (fresh) {
      if (sets.size() >= max_states) {
        throw BudgetExceeded("determinisation exceeds "
                             + std::to_string(max_states) + " states");
      }
      sets.push_back(std::move(s));
    }
    return it->second;
  };
  intern({a.initial()});
  std::vector<AutomatonEdge> edges;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    std::vector<Set> by_label(a.alphabet().letters());
    for (auto q : sets[s]) {
      auto [lo, hi] = a.out(q);
      for (auto i = lo; i < hi; ++i) {
        by_label[a.edges()[i].label].push_back(a.edges()[i].dst);
      }
    }
    for (std::size_t x = 0; x < by_label.size(); ++x) {
      auto& t = by_label[x];
      if (t.empty()) {
        continue;
      }
      std::sort(t.begin(), t.end());
      t.erase(std::unique(t.begin(), t.end()), t.end());
      auto d = intern(std::move(t));
      edges.push_back({s, static_cast<Letter>(x), d});
    }
  }
  std::vector<std::size_t> accept;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (std::any_of(sets[s].begin(), sets[s].end(),
                    [&](std::size_t q) { return a.accepting(q); })) {
      accept.push_back(s);
    }
  }
  return Automaton(a.alphabet(), sets.size(), 0, std::move(accept),
                   std::move(edges));
}

LanguageReport count_accepted(Automaton const& a, std::size_t n) {
  auto const d = a.deterministic() ? a : determinize(a);
  LanguageReport r;
  std::vector<std::uint64_t> cur(d.states(), 0), nxt(d.states(), 0);
  cur[d.initial()] = 1;
  for (std::size_t k = 0;; ++k) {
    std::uint64_t total = 0;
    for (std::size_t q = 0; q < d.states(); ++q) {
      if (d.accepting(q) && __builtin_add_overflow(total, cur[q], &total)) {
        throw BudgetExceeded("accepted-word count overflows 64 bits");
      }
    }
    r.counts.push_back(total);
    if (k == n) {
      break;
    }
    std::fill(nxt.begin(), nxt.end(), 0);
    for (auto const& e : d.edges()) {
      if (__builtin_add_overflow(nxt[e.dst], cur[e.src], &nxt[e.dst])) {
        throw BudgetExceeded("accepted-word count overflows 64 bits");
      }
    }
    std::swap(cur, nxt);
  }
  // Trim to states that are reachable and co-reachable, then look for a
  // cycle among them.
  std::vector<char> reach(d.states(), 0), coreach(d.states(), 0);
  std::vector<std::size_t> stack{d.initial()};
  reach[d.initial()] = 1;
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    auto [lo, hi] = d.out(q);
    for (auto i = lo; i < hi; ++i) {
      auto t = d.edges()[i].dst;
      if (!reach[t]) {
        reach[t] = 1;
        stack.push_back(t);
      }
    }
  }
  for (std::size_t q = 0; q < d.states(); ++q) {
    coreach[q] = d.accepting(q) ? 1 : 0;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto const& e : d.edges()) {
      if (coreach[e.dst] && !coreach[e.src]) {
        coreach[e.src] = 1;
        changed        = true;
      }
    }
  }
  std::vector<char> useful(d.states(), 0);
  for (std::size_t q = 0; q < d.states(); ++q) {
    useful[q] = reach[q] && coreach[q];
  }
  r.empty = !useful[d.initial()];
  // Kahn's algorithm on the useful subgraph.
  std::vector<std::size_t> indeg(d.states(), 0);
  std::size_t remaining = 0;
  for (std::size_t q = 0; q < d.states(); ++q) {
    remaining += useful[q];
  }
  for (auto const& e : d.edges()) {
    if (useful[e.src] && useful[e.dst]) {
      ++indeg[e.dst];
    }
  }
  for (std::size_t q = 0; q < d.states(); ++q) {
    if (useful[q] && indeg[q] == 0) {
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    --remaining;
    auto [lo, hi] = d.out(q);
    for (auto i = lo; i < hi; ++i) {
      auto t = d.edges()[i].dst;
      if (useful[t] && --indeg[t] == 0) {
        stack.push_back(t);
      }
    }
  }
  r.infinite = remaining > 0;
  return r;
}

std::string to_dot(Automaton const& a) {
  std::ostringstream os;
  os << "digraph fsa {\n  rankdir=LR;\n  start [shape=point];\n";
  for (std::size_t q = 0; q < a.states(); ++q) {
    os << "  q" << q << " [shape=" << (a.accepting(q) ? "doublecircle" : "circle")
       << "];\n";
  }
  os << "  start -> q" << a.initial() << ";\n";
  for (auto const& e : a.edges()) {
    os << "  q" << e.src << " -> q" << e.dst << " [label=\""
       << a.alphabet().symbol(e.label) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace morselab
