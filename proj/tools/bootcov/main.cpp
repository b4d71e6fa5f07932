#include <iostream>

#include <CLI11.hpp>

#include "bootcov/error.hpp"
#include "bootcov/version.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  bootcov::cli::Context ctx{argc, argv};
  CLI::App app{"Coverage probability and expected length of bootstrap confidence intervals"};
  app.set_version_flag("--version", bootcov::kVersion);
  app.require_subcommand(1);
  bootcov::cli::add_curve_commands(app, ctx);
  bootcov::cli::add_table_commands(app, ctx);
  bootcov::cli::add_compare_commands(app, ctx);
  bootcov::cli::add_validate_command(app, ctx);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const bootcov::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return ctx.exit_code;
}
