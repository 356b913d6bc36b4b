#include "common.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "morselab/error.hpp"

namespace morselab::cli {

namespace {

Json envelope(Globals const& g, std::string const& command, Json config) {
  config["seed"] = g.seed;
  Json j;
  j["tool"]        = "morselab";
  j["version"]     = MORSELAB_VERSION;
  j["command"]     = command;
  j["config_hash"] = config_hash(config);
  j["config"]      = std::move(config);
  return j;
}

void put(Globals const& g, std::string const& bytes) {
  if (g.out.empty()) {
    std::cout << bytes;
    std::cout.flush();
  } else {
    write_file(g.out, bytes);
  }
}

}  // namespace

std::string config_hash(Json const& config) {
  // FNV-1a over the canonical dump.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : config.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

void emit_json(Globals const& g,
               std::string const& command,
               Json config,
               Json result) {
  auto j      = envelope(g, command, std::move(config));
  j["result"] = std::move(result);
  put(g, j.dump(2) + "\n");
}

void emit_csv(Globals const& g,
              std::string const& command,
              Json config,
              std::string const& header,
              std::vector<std::string> const& rows,
              std::string const& path) {
  auto j = envelope(g, command, std::move(config));
  std::string text = "# morselab " + j["version"].get<std::string>() + " "
                     + command + " config " + j["config_hash"].get<std::string>()
                     + " seed " + std::to_string(g.seed) + "\n";
  text += header + "\n";
  for (auto const& r : rows) {
    text += r + "\n";
  }
  if (path.empty()) {
    put(g, text);
  } else {
    write_file(path, text);
  }
}

void write_file(std::string const& path, std::string const& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw Error(ErrorKind::io, "cannot open '" + path + "' for writing");
  }
  f << bytes;
  if (!f) {
    throw Error(ErrorKind::io, "write to '" + path + "' failed");
  }
}

std::string read_file(std::string const& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw Error(ErrorKind::io, "cannot open '" + path + "'");
  }
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

Json read_json_file(std::string const& path) {
  try {
    return Json::parse(read_file(path));
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Presentation load_presentation(std::string const& path) {
  auto parsed = parse_presentation(read_file(path));
  for (auto const& w : parsed.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  return parsed.presentation;
}

FunctionSample load_sample(std::string const& path) {
  return FunctionSample::parse_csv(read_file(path));
}

BallOptions ball_options(Globals const& g, std::size_t letters) {
  // Per vertex: the edge row plus parent, letter and distance.
  auto const per_vertex = 4 * letters + 12;
  BallOptions o;
  o.max_vertices = std::max<std::size_t>(1, g.budget_mb * (1u << 20) / per_vertex);
  return o;
}

CayleyBall load_ball(Presentation const& p, std::size_t radius, Globals const& g) {
  return build_ball(p, radius, ball_options(g, p.alphabet().letters()));
}

Word parse_word(Alphabet const& a, std::string const& text) {
  return a.parse(text);
}

}  // namespace morselab::cli
