// pieces, check, ball, dist, geo, rho, contraction
#include <fstream>

#include "common.hpp"
#include "morselab/error.hpp"
#include "morselab/metrics.hpp"
#include "morselab/smallcancel.hpp"

namespace morselab::cli {

namespace {

CayleyBall load_snapshot(std::string const& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw Error(ErrorKind::io, "cannot open snapshot '" + path + "'");
  }
  return read_ball_snapshot(f);
}

VertexId locate(CayleyBall const& ball, std::string const& word) {
  auto v = ball.find(parse_word(ball.alphabet(), word));
  if (!v) {
    throw Uncertified("element '" + word + "' lies outside the ball");
  }
  return *v;
}

}  // namespace

void add_group(CLI::App& app, Globals& g, int& rc) {
  {
    auto* sub = app.add_subcommand("pieces", "Longest pieces of every relator");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "Presentation file")->required();
    sub->callback([&g, file] {
      auto p = load_presentation(*file);
      SymmetrizedClosure closure(p);
      Json r;
      r["presentation"] = to_json(p);
      r["closure_size"] = closure.size();
      r["pieces"]       = to_json(p.alphabet(), pieces(p, closure));
      emit_json(g, "pieces", {{"file", *file}}, std::move(r));
    });
  }
  {
    auto* sub = app.add_subcommand("check", "Small cancellation verdict");
    auto file   = std::make_shared<std::string>();
    auto lambda = std::make_shared<std::string>();
    auto fcsv   = std::make_shared<std::string>();
    sub->add_option("file", *file, "Presentation file")->required();
    auto* l = sub->add_option("--lambda", *lambda, "C'(lambda), e.g. 1/6");
    auto* f = sub->add_option("--f", *fcsv, "CSV samples of f for C'(1/f)");
    l->excludes(f);
    sub->callback([&g, &rc, file, lambda, fcsv] {
      if (lambda->empty() && fcsv->empty()) {
        throw InvalidArgument("check needs --lambda or --f");
      }
      auto p = load_presentation(*file);
      Json config{{"file", *file}};
      SmallCancellationVerdict v;
      if (!lambda->empty()) {
        auto q           = parse_rational(*lambda);
        config["lambda"] = format_rational(q);
        v                = check_cprime_lambda(p, q);
      } else {
        auto fs     = load_sample(*fcsv);
        config["f"] = to_json(fs);
        v           = check_cprime_f(p, fs);
      }
      emit_json(g, "check", std::move(config), to_json(p.alphabet(), v));
      rc = v.pass ? ok : fail;
    });
  }
  {
    auto* sub = app.add_subcommand("ball", "Sphere sizes of a Cayley ball (CSV)");
    auto file     = std::make_shared<std::string>();
    auto radius   = std::make_shared<std::size_t>(0);
    auto snapshot = std::make_shared<std::string>();
    sub->add_option("file", *file, "Presentation file")->required();
    sub->add_option("--radius", *radius, "Ball radius")->required();
    sub->add_option("--snapshot", *snapshot, "Write a binary ball snapshot");
    sub->callback([&g, file, radius, snapshot] {
      auto ball = load_ball(load_presentation(*file), *radius, g);
      if (!snapshot->empty()) {
        std::ofstream f(*snapshot, std::ios::binary);
        if (!f) {
          throw Error(ErrorKind::io, "cannot open '" + *snapshot + "'");
        }
        write_ball_snapshot(ball, f);
      }
      std::vector<std::string> rows;
      std::size_t total = 0;
      for (std::size_t k = 0; k < ball.sphere_sizes().size(); ++k) {
        total += ball.sphere_sizes()[k];
        rows.push_back(std::to_string(k) + ","
                       + std::to_string(ball.sphere_sizes()[k]) + ","
                       + std::to_string(total));
      }
      emit_csv(g, "ball", {{"file", *file}, {"radius", *radius}},
               "radius,sphere,ball", rows);
    });
  }
  for (bool geo : {false, true}) {
    auto* sub = app.add_subcommand(
        geo ? "geo" : "dist",
        geo ? "Shortlex geodesic between two elements of a snapshot"
            : "Certified distance between two elements of a snapshot");
    auto snapshot = std::make_shared<std::string>();
    auto from     = std::make_shared<std::string>();
    auto to       = std::make_shared<std::string>();
    sub->add_option("--snapshot", *snapshot, "Ball snapshot")->required();
    sub->add_option("--from", *from, "Word for the first element");
    sub->add_option("--to", *to, "Word for the second element")->required();
    sub->callback([&g, geo, snapshot, from, to] {
      auto ball = load_snapshot(*snapshot);
      auto u    = locate(ball, *from);
      auto v    = locate(ball, *to);
      Json config{{"snapshot", *snapshot}, {"from", *from}, {"to", *to}};
      Json r;
      if (geo) {
        r = to_json(ball, geodesic(ball, u, v));
      } else {
        r["distance"] = distance(ball, u, v);
      }
      emit_json(g, geo ? "geo" : "dist", std::move(config), std::move(r));
    });
  }
  {
    auto* sub = app.add_subcommand("rho", "Intersection function of a path (CSV)");
    auto file = std::make_shared<std::string>();
    auto tmax = std::make_shared<std::size_t>(0);
    auto path = std::make_shared<std::string>();
    sub->add_option("file", *file, "Presentation file")->required();
    sub->add_option("--tmax", *tmax, "Largest t")->required()->check(
        CLI::PositiveNumber);
    sub->add_option("--path", *path, "Path label")->required();
    sub->callback([&g, file, tmax, path] {
      auto p = load_presentation(*file);
      SymmetrizedClosure closure(p);
      auto w    = parse_word(p.alphabet(), *path);
      auto prof = intersection_function(closure, p.alphabet().letters(), w, *tmax);
      std::vector<std::string> rows;
      for (std::size_t t = 1; t <= *tmax; ++t) {
        std::string row = std::to_string(t) + "," + std::to_string(prof(t)) + ",";
        auto const& wit = prof.witnesses.at(t - 1);
        if (wit.member) {
          row += p.alphabet().format(closure.members().at(*wit.member).word)
                 + "," + p.alphabet().format(wit.subword);
        } else {
          row += ",";
        }
        rows.push_back(std::move(row));
      }
      emit_csv(g, "rho", {{"file", *file}, {"tmax", *tmax}, {"path", *path}},
               "t,rho,member,subword", rows);
    });
  }
  {
    auto* sub = app.add_subcommand(
        "contraction", "Contraction and bounded geodesic image constants");
    auto file   = std::make_shared<std::string>();
    auto word   = std::make_shared<std::string>();
    auto radius = std::make_shared<std::size_t>(0);
    sub->add_option("file", *file, "Presentation file")->required();
    sub->add_option("--geodesic", *word, "Geodesic word from the identity")
        ->required();
    sub->add_option("--radius", *radius, "Ball radius")->required();
    sub->callback([&g, file, word, radius] {
      auto ball  = load_ball(load_presentation(*file), *radius, g);
      auto gamma = path_along(ball, CayleyBall::identity(),
                              parse_word(ball.alphabet(), *word));
      require_geodesic(ball, gamma);
      auto c = contraction_constant(ball, gamma, g.jobs);
      auto b = bgi_constant(ball, gamma, g.jobs);
      Json r;
      r["geodesic"]    = to_json(ball, gamma);
      r["contraction"] = {{"constant", c.constant},
                          {"witness", c.witness == no_vertex
                                          ? Json(nullptr)
                                          : Json(ball.alphabet().format(
                                              ball.normal_form(c.witness)))},
                          {"witness_radius", c.witness_radius},
                          {"scope_radius", c.scope_radius},
                          {"admissible", c.admissible},
                          {"skipped", c.skipped}};
      r["bgi"] = {{"bounded", b.bounded},
                  {"D", b.D},
                  {"scope_radius", b.scope_radius},
                  {"geodesics", b.geodesics},
                  {"skipped", b.skipped},
                  {"max_distance", b.max_distance}};
      if (b.witness) {
        r["bgi"]["witness"] = {
            ball.alphabet().format(ball.normal_form(b.witness->first)),
            ball.alphabet().format(ball.normal_form(b.witness->second))};
      }
      emit_json(g, "contraction",
                {{"file", *file}, {"geodesic", *word}, {"radius", *radius}},
                std::move(r));
    });
  }
}

}  // namespace morselab::cli
