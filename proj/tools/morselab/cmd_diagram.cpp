#include "common.hpp"
#include "morselab/diagrams.hpp"

namespace morselab::cli {

void add_diagram(CLI::App& app, Globals& g, int& rc) {
  auto* top = app.add_subcommand("diagram", "Disk diagram tools");
  top->require_subcommand(1);
  {
    auto* sub = top->add_subcommand("check", "Validate a diagram JSON file");
    auto file = std::make_shared<std::string>();
    auto pres = std::make_shared<std::string>();
    auto ngon = std::make_shared<std::size_t>(0);
    sub->add_option("file", *file, "Diagram JSON")->required();
    sub->add_option("--presentation", *pres,
                    "Also check face labels against this presentation");
    sub->add_option("--ngon", *ngon, "Check n-gon conditions with n sides");
    sub->callback([&g, &rc, file, pres, ngon] {
      auto d = diagram_from_json(read_json_file(*file));
      auto v = pres->empty() ? validate_diagram(d)
                             : validate_diagram(d, load_presentation(*pres));
      Json r;
      r["valid"]  = v.valid;
      r["simple"] = v.simple;
      r["issues"] = Json::array();
      for (auto const& i : v.issues) {
        r["issues"].push_back({{"where", i.where}, {"what", i.what}});
      }
      bool pass = v.valid;
      if (*ngon > 0 && v.valid && v.simple) {
        auto n  = ngon_conditions(d, *ngon);
        pass    = pass && n.pass;
        Json vs = Json::array();
        for (auto const& x : n.violations) {
          vs.push_back({{"face", x.face},
                        {"condition", x.condition},
                        {"interior_degree", x.interior_degree},
                        {"arcs", x.arcs}});
        }
        r["ngon"] = {{"n", *ngon}, {"pass", n.pass}, {"violations", vs}};
      }
      r["verdict"] = pass ? "PASS" : "FAIL";
      Json config{{"file", *file}};
      if (!pres->empty()) {
        config["presentation"] = *pres;
      }
      if (*ngon > 0) {
        config["ngon"] = *ngon;
      }
      emit_json(g, "diagram check", std::move(config), std::move(r));
      rc = pass ? ok : fail;
    });
  }
  {
    auto* sub = top->add_subcommand("classify", "Classify a geodesic bigon");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "Diagram JSON")->required();
    sub->callback([&g, &rc, file] {
      auto c = classify_bigon(diagram_from_json(read_json_file(*file)));
      Json r;
      r["shape"]       = to_string(c.shape);
      r["chain"]       = c.chain;
      r["obstruction"] = c.obstruction ? Json(*c.obstruction) : Json(nullptr);
      r["reason"]      = c.reason;
      emit_json(g, "diagram classify", {{"file", *file}}, std::move(r));
      rc = c.shape == BigonShape::not_classified ? fail : ok;
    });
  }
  {
    auto* sub = top->add_subcommand("search", "Enumerate small diagrams");
    auto file     = std::make_shared<std::string>();
    auto boundary = std::make_shared<std::string>();
    auto opts     = std::make_shared<DiagramSearchOptions>();
    sub->add_option("file", *file, "Presentation file")->required();
    sub->add_option("--boundary", *boundary, "Boundary word")->required();
    sub->add_option("--max-faces", opts->max_faces, "Face limit");
    sub->add_option("--max-nodes", opts->max_nodes, "Search node budget");
    sub->callback([&g, file, boundary, opts] {
      auto p = load_presentation(*file);
      auto o = *opts;
      o.jobs = g.jobs;
      auto ds = search_small_diagrams(p, parse_word(p.alphabet(), *boundary), o);
      Json r;
      r["count"]    = ds.size();
      r["diagrams"] = Json::array();
      for (auto const& d : ds) {
        r["diagrams"].push_back(to_json(d));
      }
      emit_json(g, "diagram search",
                {{"file", *file},
                 {"boundary", *boundary},
                 {"max_faces", opts->max_faces},
                 {"max_nodes", opts->max_nodes}},
                std::move(r));
    });
  }
}

}  // namespace morselab::cli
