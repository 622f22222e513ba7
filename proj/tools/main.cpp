#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gnorm_app/config.hpp"
#include "gnorm_app/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"gnorm: G-normed space axioms, balls and fixed-point solvers"};
  app.set_version_flag("--version", "gnorm 0.1.0");

  gnorm::app::Invocation inv;
  std::string out_path;
  std::uint64_t seed = 0;

  app.add_option("command", inv.command, "check-axioms | check-gmetric | solve | estimate-k | "
                                         "ball-sample | jungck | expansive")
      ->required()
      ->check(CLI::IsMember(gnorm::app::known_commands()));
  app.add_option("--config", inv.config_path, "JSON run configuration")->required();
  auto* out_opt = app.add_option("--out", out_path, "write the report here instead of output.path");
  auto* seed_opt = app.add_option("--seed", seed, "override sampling.seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gnorm::app::kExitInputError;
  }
  if (*out_opt) inv.out_path = out_path;
  if (*seed_opt) inv.seed = seed;
  return gnorm::app::run(inv, std::cout, std::cerr);
}
