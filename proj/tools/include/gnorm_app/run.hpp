#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "gnorm/solvers.hpp"
#include "gnorm_app/config.hpp"

namespace gnorm::app {

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitInputError = 2 };

/// Builds a mapping on a space of dimension `dim`. Named built-ins are
/// scalar multiples of the identity plus a constant offset (plus the planar
/// rotation_scale); see docs/config.md for the list.
Mapping build_mapping(const MappingSpec& spec, std::size_t dim, const std::string& field);

struct Invocation {
  std::string command;  // empty: take it from the config
  std::string config_path;
  std::optional<std::string> out_path;
  std::optional<std::uint64_t> seed;
};

/// Executes one command. Reports go to the output path (or `out` when none
/// is set); diagnostics go to `err`. Never throws.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

/// `config_path` must name the command in its "command" field.
int run(const std::string& config_path);

/// Same as run() on an already-parsed config.
int execute(RunConfig config, std::ostream& out, std::ostream& err);

}  // namespace gnorm::app
