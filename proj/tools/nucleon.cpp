#include <cstdio>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include "commands.hpp"
#include "nucleon/error.hpp"
#include "nucleon/io.hpp"

namespace {

// Exit codes: 0 success, 2 invalid input or usage, 3 numerical guard.
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

int report(const char* kind, const std::string& reason, const std::string& message, int code) {
  std::fprintf(stderr, "nucleon: %s reason=%s %s\n", kind, reason.c_str(), message.c_str());
  return code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed-norm, time-frequency and nuclear-operator experiments"};
  app.require_subcommand(1);
  std::vector<nucleon::cli::Command> commands;
  nucleon::cli::register_commands(app, commands);

  if (argc > 1 && argv[1][0] != '-') {
    bool known = false;
    for (const auto& c : commands) known = known || c.app->get_name() == argv[1];
    if (!known) return report("error", "unknown_subcommand", std::string("'") + argv[1] + "'", kExitValidation);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (char& ch : msg) {
      if (ch == '\n') ch = ' ';
    }
    return report("error", "usage", msg, kExitValidation);
  }

  try {
    for (const auto& c : commands) {
      if (!c.app->parsed()) continue;
      const std::string artifact = c.action();
      if (c.output != nullptr && !c.output->empty()) {
        nucleon::io::write_atomic(*c.output, artifact);
      } else {
        std::fwrite(artifact.data(), 1, artifact.size(), stdout);
      }
      return 0;
    }
  } catch (const nucleon::ValidationError& e) {
    return report("error", e.reason(), e.what(), kExitValidation);
  } catch (const nucleon::NumericalError& e) {
    return report("numerical", e.reason(), e.what(), kExitNumerical);
  } catch (const nlohmann::json::exception& e) {
    return report("error", "malformed_json", e.what(), kExitValidation);
  } catch (const std::bad_alloc&) {
    return report("error", "out_of_memory", "allocation failed; reduce grid sizes", kExitNumerical);
  }
  return report("error", "unknown_subcommand", "no subcommand selected", kExitValidation);
}
