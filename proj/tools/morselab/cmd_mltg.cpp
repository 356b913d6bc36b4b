#include <algorithm>
#include <cstdio>

#include "common.hpp"
#include "morselab/error.hpp"
#include "morselab/mltg.hpp"

namespace morselab::cli {

namespace {

std::pair<std::size_t, std::size_t> parse_range(std::string const& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      auto v = std::stoul(s);
      return {v, v};
    }
    auto a = std::stoul(s.substr(0, dots));
    auto b = std::stoul(s.substr(dots + 2));
    if (a > b) {
      throw InvalidArgument("empty range '" + s + "'");
    }
    return {a, b};
  } catch (std::logic_error const&) {
    throw InvalidArgument("malformed range '" + s + "' (expected a..b)");
  }
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

void add_mltg(CLI::App& app, Globals& g, int& rc) {
  auto* top = app.add_subcommand("mltg", "Locally constrained words");
  top->require_subcommand(1);
  {
    auto* sub = top->add_subcommand("sweep", "Audit local words over a range of L (CSV)");
    auto file   = std::make_shared<std::string>();
    auto range  = std::make_shared<std::string>();
    auto len    = std::make_shared<std::size_t>(0);
    auto radius = std::make_shared<std::size_t>(0);
    auto Q      = std::make_shared<std::string>("1");
    auto bound  = std::make_shared<std::string>();
    auto budget = std::make_shared<std::size_t>(100000);
    sub->add_option("file", *file, "Presentation file")->required();
    sub->add_option("--L", *range, "Window range a..b")->required();
    sub->add_option("--len", *len, "Word length")->required();
    sub->add_option("--radius", *radius, "Ball radius")->required();
    sub->add_option("--Q", *Q, "Local quasi-geodesic constant");
    sub->add_option("--bound", *bound, "CSV intersection bound");
    sub->add_option("--max-words", *budget, "Word budget per L");
    sub->callback([&g, file, range, len, radius, Q, bound, budget] {
      auto [lo, hi] = parse_range(*range);
      auto ball     = load_ball(load_presentation(*file), *radius, g);
      LocalSpec spec;
      spec.Q = parse_rational(*Q);
      if (!bound->empty()) {
        spec.bound = load_sample(*bound);
      }
      std::vector<std::string> rows;
      for (auto L = lo; L <= hi; ++L) {
        spec.L     = L;
        auto words = enumerate_local_words(ball, spec, *len, *budget);
        double q   = 1.0;
        std::size_t rho = 0, haus = 0;
        for (auto const& w : words.words) {
          auto a = global_audit(ball, w, spec);
          q      = std::max(q, a.q_prime);
          if (a.profile.tmax > 0) {
            rho = std::max(rho, a.profile(a.profile.tmax));
          }
          haus = std::max(haus, a.hausdorff);
        }
        rows.push_back(std::to_string(L) + "," + std::to_string(words.words.size())
                       + "," + fixed(q) + "," + std::to_string(rho) + ","
                       + std::to_string(haus) + ","
                       + (words.truncated ? "1" : "0"));
      }
      Json config{{"file", *file},       {"L", *range},
                  {"len", *len},         {"radius", *radius},
                  {"Q", *Q},             {"bound", *bound},
                  {"max_words", *budget}};
      emit_csv(g, "mltg sweep", std::move(config),
               "L,words,max_q_prime,max_rho,max_hausdorff,truncated", rows);
    });
  }
  auto* sub  = app.add_subcommand("auxpath", "Build and audit an auxiliary path");
  auto file   = std::make_shared<std::string>();
  auto gamma  = std::make_shared<std::string>();
  auto L      = std::make_shared<std::size_t>(0);
  auto radius = std::make_shared<std::size_t>(0);
  sub->add_option("file", *file, "Presentation file")->required();
  sub->add_option("--gamma", *gamma, "Locally geodesic word")->required();
  sub->add_option("--L", *L, "Anchor spacing")->required()->check(CLI::PositiveNumber);
  sub->add_option("--radius", *radius, "Ball radius")->required();
  sub->callback([&g, &rc, file, gamma, L, radius] {
    auto ball  = load_ball(load_presentation(*file), *radius, g);
    auto ap    = build_aux_path(ball, parse_word(ball.alphabet(), *gamma), *L);
    auto audit = audit_aux_path(ap, ball);
    Json r;
    r["aux_path"] = to_json(ball, ap);
    r["audit"]    = to_json(ball.alphabet(), audit);
    r["verdict"]  = audit.rho_ok ? "PASS" : "FAIL";
    emit_json(g, "auxpath",
              {{"file", *file}, {"gamma", *gamma}, {"L", *L}, {"radius", *radius}},
              std::move(r));
    rc = audit.rho_ok ? ok : fail;
  });
}

}  // namespace morselab::cli
