#pragma once

#include <CLI11.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "morselab/cayley.hpp"
#include "morselab/function_sample.hpp"
#include "morselab/presentation.hpp"
#include "morselab/serialize.hpp"

namespace morselab::cli {

struct Globals {
  std::uint64_t seed    = 1;
  unsigned jobs         = 1;
  std::string out;
  std::size_t budget_mb = 1024;
};

// Exit codes.
inline constexpr int ok      = 0;
inline constexpr int fail    = 1;
inline constexpr int failure = 2;

// Everything a subcommand writes goes through here: JSON artifacts carry
// tool, version, config and its hash; CSV artifacts carry them in a leading
// comment line.
std::string config_hash(Json const& config);
void emit_json(Globals const& g,
               std::string const& command,
               Json config,
               Json result);
void emit_csv(Globals const& g,
              std::string const& command,
              Json config,
              std::string const& header,
              std::vector<std::string> const& rows,
              std::string const& path = {});
void write_file(std::string const& path, std::string const& bytes);
std::string read_file(std::string const& path);
Json read_json_file(std::string const& path);

Presentation load_presentation(std::string const& path);
FunctionSample load_sample(std::string const& path);
BallOptions ball_options(Globals const& g, std::size_t letters);
CayleyBall load_ball(Presentation const& p, std::size_t radius, Globals const& g);
Word parse_word(Alphabet const& a, std::string const& text);

void add_group(CLI::App& app, Globals& g, int& rc);
void add_diagram(CLI::App& app, Globals& g, int& rc);
void add_mltg(CLI::App& app, Globals& g, int& rc);
void add_fsa(CLI::App& app, Globals& g, int& rc);
void add_walk(CLI::App& app, Globals& g, int& rc);

}  // namespace morselab::cli
