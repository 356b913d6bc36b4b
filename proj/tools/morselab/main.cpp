#include <iostream>

#include "common.hpp"
#include "morselab/error.hpp"

namespace {

int error_record(char const* kind, std::string const& message) {
  morselab::Json j;
  j["tool"]  = "morselab";
  j["error"] = {{"kind", kind}, {"message", message}};
  std::cout << j.dump(2) << "\n";
  return morselab::cli::failure;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace morselab::cli;
  CLI::App app{"morselab: small cancellation and Morse boundary laboratory"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed recorded in every artifact");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--out", g.out, "Output file (default: stdout)");
  app.add_option("--budget-mb", g.budget_mb, "Memory budget for balls in MiB")
      ->check(CLI::PositiveNumber);

  int rc = ok;
  add_group(app, g, rc);
  add_diagram(app, g, rc);
  add_mltg(app, g, rc);
  add_fsa(app, g, rc);
  add_walk(app, g, rc);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    return error_record("usage", e.what());
  } catch (morselab::Error const& e) {
    return error_record(morselab::to_string(e.kind()), e.what());
  } catch (std::bad_alloc const&) {
    return error_record("budget", "out of memory");
  } catch (std::exception const& e) {
    return error_record("internal", e.what());
  }
  return rc;
}
