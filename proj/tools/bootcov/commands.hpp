#pragma once

#include <CLI11.hpp>

namespace bootcov::cli {

struct Context {
  int argc = 0;
  char** argv = nullptr;
  int exit_code = 0;
};

void add_curve_commands(CLI::App& app, Context& ctx);
void add_table_commands(CLI::App& app, Context& ctx);
void add_compare_commands(CLI::App& app, Context& ctx);
void add_validate_command(CLI::App& app, Context& ctx);

}  // namespace bootcov::cli
