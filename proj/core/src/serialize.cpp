#include "morselab/serialize.hpp"

#include "morselab/error.hpp"

namespace morselab {

namespace {

template <typename T>
T get(Json const& j, char const* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing JSON field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

Letter letter_from(Alphabet const& a, std::string const& s) {
  auto w = a.parse(s);
  if (w.size() != 1) {
    throw ParseError("expected a single letter, got '" + s + "'");
  }
  return w[0];
}

std::string letter_name(Alphabet const& a, Letter x) {
  return std::string(1, a.symbol(x));
}

Json vertex_list(std::vector<VertexId> const& v) {
  Json j = Json::array();
  for (auto x : v) {
    j.push_back(x);
  }
  return j;
}

}  // namespace

Json alphabet_to_json(Alphabet const& a) {
  return std::string(a.names().begin(), a.names().end());
}

Alphabet alphabet_from_json(Json const& j) {
  if (!j.is_string()) {
    throw ParseError("alphabet must be a string of generator names");
  }
  auto s = j.get<std::string>();
  return Alphabet(std::vector<char>(s.begin(), s.end()));
}

Json to_json(Presentation const& p) {
  Json j;
  j["generators"] = alphabet_to_json(p.alphabet());
  j["relators"]   = Json::array();
  for (auto const& r : p.relators()) {
    j["relators"].push_back(p.alphabet().format(r));
  }
  return j;
}

Json to_json(FunctionSample const& f) {
  Json j = Json::array();
  for (auto const& v : f.values()) {
    j.push_back(format_rational(v));
  }
  return j;
}

Json to_json(Alphabet const& a, PieceTable const& t) {
  Json j = Json::array();
  for (std::size_t i = 0; i < t.relators.size(); ++i) {
    auto const& r = t.relators[i];
    j.push_back({{"relator", i},
                 {"length", r.relator_length},
                 {"max_piece", r.max_piece},
                 {"piece", a.format(r.piece)},
                 {"ratio", format_rational(Rational(
                               static_cast<std::int64_t>(r.max_piece),
                               static_cast<std::int64_t>(r.relator_length)))}});
  }
  return j;
}

Json to_json(Alphabet const& a, SmallCancellationVerdict const& v) {
  Json j;
  j["verdict"] = v.pass ? "PASS" : "FAIL";
  if (v.witness) {
    auto const& w = *v.witness;
    j["witness"]  = {{"relator", w.relator},
                     {"relator_word", a.format(w.relator_word)},
                     {"piece", a.format(w.piece)},
                     {"piece_length", w.piece_length},
                     {"relator_length", w.relator_length}};
  } else {
    j["witness"] = nullptr;
  }
  if (!v.induced_bound.empty()) {
    j["induced_bound"] = Json::array();
    for (auto const& x : v.induced_bound) {
      j["induced_bound"].push_back(format_rational(x));
    }
  }
  return j;
}

Json to_json(Alphabet const& a,
             SymmetrizedClosure const& c,
             IntersectionProfile const& prof) {
  Json j = Json::array();
  for (std::size_t t = 1; t <= prof.tmax; ++t) {
    Json row{{"t", t}, {"rho", prof(t)}};
    if (t - 1 < prof.witnesses.size() && prof.witnesses[t - 1].member) {
      auto const& w  = prof.witnesses[t - 1];
      row["member"]  = a.format(c.members().at(*w.member).word);
      row["subword"] = a.format(w.subword);
    }
    j.push_back(std::move(row));
  }
  return j;
}

Json to_json(DiskDiagram const& d) {
  Json j;
  j["alphabet"] = alphabet_to_json(d.alphabet);
  j["vertices"] = Json::array();
  for (std::size_t v = 0; v < d.vertices; ++v) {
    j["vertices"].push_back(v);
  }
  j["edges"] = Json::array();
  for (auto const& e : d.edges) {
    j["edges"].push_back(
        {{"src", e.src}, {"dst", e.dst}, {"label", letter_name(d.alphabet, e.label)}});
  }
  j["faces"]    = d.faces;
  j["boundary"] = d.boundary;
  j["sides"]    = d.sides;
  return j;
}

DiskDiagram diagram_from_json(Json const& j) {
  DiskDiagram d;
  d.alphabet = alphabet_from_json(j.value("alphabet", Json()));
  auto const& vs = j.contains("vertices") ? j.at("vertices") : Json();
  if (vs.is_number_unsigned()) {
    d.vertices = vs.get<std::size_t>();
  } else if (vs.is_array()) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!vs[i].is_number_unsigned() || vs[i].get<std::size_t>() != i) {
        throw ParseError("vertex list must be 0, 1, ..., n-1");
      }
    }
    d.vertices = vs.size();
  } else {
    throw ParseError("missing JSON field 'vertices'");
  }
  for (auto const& e : get<Json>(j, "edges")) {
    DiagramEdge edge;
    edge.src   = get<std::size_t>(e, "src");
    edge.dst   = get<std::size_t>(e, "dst");
    edge.label = letter_from(d.alphabet, get<std::string>(e, "label"));
    if (edge.src >= d.vertices || edge.dst >= d.vertices) {
      throw ParseError("edge endpoint out of range");
    }
    d.edges.push_back(edge);
  }
  d.faces    = get<std::vector<std::vector<DartRef>>>(j, "faces");
  d.boundary = get<std::vector<DartRef>>(j, "boundary");
  d.sides    = j.contains("sides") ? get<std::vector<std::size_t>>(j, "sides")
                                   : std::vector<std::size_t>{};
  auto const ne = static_cast<DartRef>(d.edges.size());
  auto check    = [&](DartRef x) {
    if (x == 0 || x > ne || x < -ne) {
      throw ParseError("dart " + std::to_string(x) + " out of range");
    }
  };
  for (auto const& f : d.faces) {
    std::for_each(f.begin(), f.end(), check);
  }
  std::for_each(d.boundary.begin(), d.boundary.end(), check);
  return d;
}

Json to_json(Automaton const& a) {
  Json j;
  j["alphabet"]      = alphabet_to_json(a.alphabet());
  j["states"]        = a.states();
  j["initial"]       = a.initial();
  j["accepts"]       = a.accept_states();
  j["deterministic"] = a.deterministic();
  j["edges"]         = Json::array();
  for (auto const& e : a.edges()) {
    j["edges"].push_back({{"src", e.src},
                          {"label", letter_name(a.alphabet(), e.label)},
                          {"dst", e.dst}});
  }
  return j;
}

Automaton automaton_from_json(Json const& j) {
  auto alphabet = alphabet_from_json(j.value("alphabet", Json()));
  std::vector<AutomatonEdge> edges;
  for (auto const& e : get<Json>(j, "edges")) {
    edges.push_back({get<std::size_t>(e, "src"),
                     letter_from(alphabet, get<std::string>(e, "label")),
                     get<std::size_t>(e, "dst")});
  }
  Automaton a(alphabet, get<std::size_t>(j, "states"),
              get<std::size_t>(j, "initial"),
              get<std::vector<std::size_t>>(j, "accepts"), std::move(edges));
  if (j.contains("deterministic") && j.at("deterministic").get<bool>()
      && !a.deterministic()) {
    throw ParseError("automaton flagged deterministic has a repeated label");
  }
  return a;
}

StepMeasure step_measure_from_json(Json const& j, Alphabet const& a) {
  StepMeasure mu;
  for (auto const& s : get<Json>(j, "support")) {
    auto p = s.at("p");
    Rational q = p.is_string() ? parse_rational(p.get<std::string>())
                               : Rational(p.get<std::int64_t>());
    mu.support.emplace_back(a.parse(get<std::string>(s, "word")), q);
  }
  mu.generates_asserted = j.value("generates", false);
  mu.validate();
  return mu;
}

Json to_json(Alphabet const& a, StepMeasure const& mu) {
  Json j;
  j["support"] = Json::array();
  for (auto const& [w, p] : mu.support) {
    j["support"].push_back({{"word", a.format(w)}, {"p", format_rational(p)}});
  }
  j["generates"] = mu.generates_asserted;
  return j;
}

Json to_json(CayleyBall const& ball, BoundaryMeasure const& m) {
  Json j;
  j["radius"] = m.radius;
  j["mass"]   = Json::array();
  for (std::size_t i = 0; i < m.sphere.size(); ++i) {
    j["mass"].push_back(
        {{"vertex", ball.alphabet().format(ball.normal_form(m.sphere[i]))},
         {"mass", format_rational(m.mass[i])}});
  }
  return j;
}

Json to_json(CayleyBall const& ball, GeodesicPath const& path) {
  Json j;
  j["word"]     = ball.alphabet().format(path.word);
  j["length"]   = path.length();
  j["vertices"] = vertex_list(path.vertices);
  return j;
}

Json to_json(CayleyBall const& ball, AuxPath const& ap) {
  auto const& a = ball.alphabet();
  auto const& closure = ball.presentation().closure();
  Json j;
  j["L"]       = ap.L;
  j["gamma"]   = a.format(ap.gamma);
  j["anchors"] = vertex_list(ap.anchors);
  j["etas"]    = Json::array();
  for (auto const& e : ap.etas) {
    j["etas"].push_back(a.format(e.word));
  }
  j["bridges"] = Json::array();
  for (auto const& b : ap.bridges) {
    Json jb{{"degenerate", b.degenerate},
            {"junction", b.junction},
            {"x", b.x},
            {"y", b.y},
            {"x_pos", b.x_pos},
            {"y_pos", b.y_pos},
            {"score", b.score}};
    if (b.member) {
      jb["member"]   = a.format(closure.members().at(*b.member).word);
      jb["w_offset"] = b.w_offset;
      jb["w_length"] = b.w_length;
    }
    jb["segment"] = a.format(b.segment.word);
    j["bridges"].push_back(std::move(jb));
  }
  j["path"]           = a.format(ap.path.word);
  j["length"]         = ap.path.length();
  j["skipped_images"] = ap.skipped_images;
  return j;
}

Json to_json(Alphabet const& a, AuxAudit const& audit) {
  Json j;
  j["rho_ok"] = audit.rho_ok;
  j["first_violation"] =
      audit.first_violation ? Json(*audit.first_violation) : Json(nullptr);
  j["rho"] = audit.profile.rho;
  j["hausdorff_gamma"] = audit.hausdorff_gamma;
  j["hausdorff_sub"]   = audit.hausdorff_sub;
  j["sub_pair"]        = {audit.sub_s, audit.sub_t};
  (void)a;
  return j;
}

}  // namespace morselab
