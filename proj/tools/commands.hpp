#pragma once

#include <functional>
#include <string>

#include "CLI11.hpp"

namespace nucleon::cli {

/// Each subcommand registers a parser and an action; the action returns the
/// artifact text to write (stdout when no --output is given).
struct Command {
  CLI::App* app = nullptr;
  std::function<std::string()> action;
  std::string* output = nullptr;
};

void register_commands(CLI::App& app, std::vector<Command>& commands);

} // namespace nucleon::cli
