#include "common.hpp"
#include "morselab/error.hpp"
#include "morselab/walks.hpp"

namespace morselab::cli {

namespace {

Json defect_json(StationarityDefect const& d) {
  return {{"defect", format_rational(d.defect)},
          {"defect_value", to_double(d.defect)},
          {"classifiable", d.classifiable},
          {"excluded", d.excluded},
          {"excluded_mass", format_rational(d.excluded_mass)},
          {"lipschitz", format_rational(d.lipschitz)}};
}

}  // namespace

void add_walk(CLI::App& app, Globals& g, int& rc) {
  (void)rc;
  {
    auto* sub = app.add_subcommand("walk", "Seeded random walks and first-exit measures");
    auto file   = std::make_shared<std::string>();
    auto mu     = std::make_shared<std::string>();
    auto steps  = std::make_shared<std::size_t>(0);
    auto count  = std::make_shared<std::uint64_t>(0);
    auto radius = std::make_shared<std::size_t>(0);
    auto ballr  = std::make_shared<std::size_t>(0);
    auto csv    = std::make_shared<std::string>();
    auto exact  = std::make_shared<bool>(false);
    sub->add_option("file", *file, "Presentation file")->required();
    sub->add_option("--mu", *mu, "Step measure JSON")->required();
    sub->add_option("--steps", *steps, "Steps per walk")->required();
    sub->add_option("--count", *count, "Number of walks")->required();
    sub->add_option("--radius", *radius, "Exit sphere radius")->required();
    sub->add_option("--ball-radius", *ballr,
                    "Ball radius (default: radius + longest step)");
    sub->add_option("--csv", *csv, "Write the per-vertex table here");
    sub->add_flag("--exact", *exact, "Also solve for the exact exit measure");
    sub->callback([&g, file, mu, steps, count, radius, ballr, csv, exact] {
      auto p    = load_presentation(*file);
      auto m    = step_measure_from_json(read_json_file(*mu), p.alphabet());
      auto R    = *ballr > 0 ? *ballr : *radius + m.max_length();
      auto ball = load_ball(p, R, g);
      auto e    = sample_walks(ball, m, *radius, *steps, *count, g.seed, g.jobs);
      auto nu   = e.to_measure();
      Json r;
      r["walks"]       = e.walks;
      r["exited"]      = e.exited;
      r["unexited"]    = e.unexited;
      r["total_steps"] = e.total_steps;
      r["measure"]     = to_json(ball, nu);
      if (e.exited > 0) {
        try {
          r["stationarity"] = defect_json(stationarity_defect(ball, nu, m));
        } catch (Uncertified const& err) {
          r["stationarity"] = {{"uncertified", err.what()}};
        }
      }
      if (*exact) {
        auto x     = exit_distribution(ball, m, *radius);
        r["exact"] = to_json(ball, x);
        try {
          r["exact_stationarity"] = defect_json(stationarity_defect(ball, x, m));
        } catch (Uncertified const& err) {
          r["exact_stationarity"] = {{"uncertified", err.what()}};
        }
      }
      Json config{{"file", *file},   {"mu", to_json(p.alphabet(), m)},
                  {"steps", *steps}, {"count", *count},
                  {"radius", *radius}, {"ball_radius", R},
                  {"exact", *exact}};
      if (!csv->empty()) {
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < nu.sphere.size(); ++i) {
          rows.push_back(ball.alphabet().format(ball.normal_form(nu.sphere[i]))
                         + "," + std::to_string(e.hits[i]) + ","
                         + format_rational(nu.mass[i]));
        }
        emit_csv(g, "walk", config, "vertex,hits,mass", rows, *csv);
      }
      emit_json(g, "walk", std::move(config), std::move(r));
    });
  }
  {
    auto* sub = app.add_subcommand("qab", "Alternating translated concatenation");
    auto file   = std::make_shared<std::string>();
    auto gamma  = std::make_shared<std::string>();
    auto beta   = std::make_shared<std::string>();
    auto blocks = std::make_shared<std::size_t>(3);
    auto radius = std::make_shared<std::size_t>(0);
    sub->add_option("file", *file, "Presentation file")->required();
    sub->add_option("--gamma", *gamma, "Geodesic word")->required();
    sub->add_option("--beta", *beta, "Geodesic word")->required();
    sub->add_option("--blocks", *blocks, "Odd number of blocks, at least 3");
    sub->add_option("--radius", *radius, "Ball radius")->required();
    sub->callback([&g, file, gamma, beta, blocks, radius] {
      auto ball = load_ball(load_presentation(*file), *radius, g);
      auto gp   = path_along(ball, CayleyBall::identity(),
                             parse_word(ball.alphabet(), *gamma));
      auto bp   = path_along(ball, CayleyBall::identity(),
                             parse_word(ball.alphabet(), *beta));
      require_geodesic(ball, gp);
      require_geodesic(ball, bp);
      auto q = build_qab(ball, gp, bp, *blocks);
      Json r;
      r["label"]     = ball.alphabet().format(q.label);
      r["complete"]  = q.complete;
      r["reachable"] = q.vertices.size() - 1;
      r["segments"]  = Json::array();
      for (auto const& s : q.segments) {
        r["segments"].push_back({{"kind", std::string(1, s.kind)},
                                 {"index", s.index},
                                 {"start", s.start},
                                 {"end", s.end}});
      }
      // Projection of everything before each later gamma block onto it.
      r["projections"] = Json::array();
      for (auto const& s : q.segments) {
        if (s.kind != 'g' || s.index < 2 || s.end >= q.vertices.size()) {
          continue;
        }
        GeodesicPath target;
        target.vertices.assign(q.vertices.begin() + static_cast<long>(s.start),
                               q.vertices.begin() + static_cast<long>(s.end) + 1);
        target.word.assign(q.label.begin() + static_cast<long>(s.start),
                           q.label.begin() + static_cast<long>(s.end));
        std::vector<VertexId> probe(q.vertices.begin(),
                                    q.vertices.begin() + static_cast<long>(s.start));
        Json row{{"block", s.index}};
        try {
          auto d        = projection_diameter(ball, target, probe);
          row["diameter"] = d.diameter;
          row["lo"]       = d.lo;
          row["hi"]       = d.hi;
        } catch (Uncertified const& err) {
          row["uncertified"] = err.what();
        }
        r["projections"].push_back(std::move(row));
      }
      emit_json(g, "qab",
                {{"file", *file},
                 {"gamma", *gamma},
                 {"beta", *beta},
                 {"blocks", *blocks},
                 {"radius", *radius}},
                std::move(r));
    });
  }
}

}  // namespace morselab::cli
