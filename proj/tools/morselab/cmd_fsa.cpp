#include "common.hpp"
#include "morselab/automata.hpp"

namespace morselab::cli {

void add_fsa(CLI::App& app, Globals& g, int& rc) {
  auto* top = app.add_subcommand("fsa", "Finite state automata");
  top->require_subcommand(1);
  {
    auto* sub = top->add_subcommand("build", "Geodesic automaton, optionally windowed");
    auto file    = std::make_shared<std::string>();
    auto radius  = std::make_shared<std::size_t>(0);
    auto horizon = std::make_shared<std::size_t>(1);
    auto window  = std::make_shared<std::size_t>(0);
    auto bound   = std::make_shared<std::string>();
    auto dot     = std::make_shared<std::string>();
    auto states  = std::make_shared<std::size_t>(1'000'000);
    sub->add_option("file", *file, "Presentation file")->required();
    sub->add_option("--radius", *radius, "Ball radius")->required();
    sub->add_option("--horizon", *horizon, "Cone type depth");
    auto* w = sub->add_option("--window", *window, "Window length L");
    sub->add_option("--bound", *bound, "CSV intersection bound")->needs(w);
    sub->add_option("--dot", *dot, "Also write Graphviz DOT here");
    sub->add_option("--max-states", *states, "State budget for the product");
    sub->callback([&g, file, radius, horizon, window, bound, dot, states] {
      auto p    = load_presentation(*file);
      auto ball = load_ball(p, *radius, g);
      auto ga   = geodesic_automaton(ball, *horizon);
      Json config{{"file", *file}, {"radius", *radius}, {"horizon", *horizon}};
      Json r;
      r["certified_length"] = ga.certified_length;
      r["stabilized"]       = ga.stabilized;
      r["geodesic_states"]  = ga.automaton.states();
      auto a = ga.automaton;
      if (*window > 0) {
        auto fs = bound->empty() ? FunctionSample() : load_sample(*bound);
        a       = window_product(a, p, *window, fs, *states);
        config["window"] = *window;
        config["bound"]  = *bound;
        r["language"] =
            "geodesic words whose subwords of length <= window have "
            "intersection profile <= bound";
        r["product_states"] = a.states();
      } else {
        r["language"] = "geodesic words";
      }
      r["automaton"] = to_json(a);
      if (!dot->empty()) {
        write_file(*dot, to_dot(a));
      }
      emit_json(g, "fsa build", std::move(config), std::move(r));
    });
  }
  {
    auto* sub = top->add_subcommand("count", "Accepted words by length");
    auto file = std::make_shared<std::string>();
    auto n    = std::make_shared<std::size_t>(8);
    sub->add_option("--automaton", *file, "Automaton JSON")->required();
    sub->add_option("--n", *n, "Largest length");
    sub->callback([&g, file, n] {
      auto j = read_json_file(*file);
      // Accept either a bare automaton or a `fsa build` artifact.
      auto a = automaton_from_json(j.contains("result") ? j["result"]["automaton"] : j);
      auto c = count_accepted(a, *n);
      Json r;
      r["counts"]   = c.counts;
      r["empty"]    = c.empty;
      r["infinite"] = c.infinite;
      r["live"]     = limit_liveness(a);
      emit_json(g, "fsa count", {{"automaton", *file}, {"n", *n}}, std::move(r));
    });
  }
  {
    auto* sub = top->add_subcommand("check", "Does the automaton accept a word");
    auto file = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    sub->add_option("--automaton", *file, "Automaton JSON")->required();
    sub->add_option("--word", *word, "Word to read")->required();
    sub->callback([&g, &rc, file, word] {
      auto j = read_json_file(*file);
      auto a = automaton_from_json(j.contains("result") ? j["result"]["automaton"] : j);
      bool yes = accepts(a, parse_word(a.alphabet(), *word));
      emit_json(g, "fsa check", {{"automaton", *file}, {"word", *word}},
                {{"accepted", yes}, {"verdict", yes ? "PASS" : "FAIL"}});
      rc = yes ? ok : fail;
    });
  }
}

}  // namespace morselab::cli
