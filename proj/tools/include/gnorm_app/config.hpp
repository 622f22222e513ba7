#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gnorm/spaces.hpp"

namespace gnorm::app {

/// Config rejected; the message starts with the offending field path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field, const std::string& problem)
      : std::runtime_error(field + ": " + problem), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

inline const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> kCommands = {
      "check-axioms", "check-gmetric", "solve", "estimate-k", "ball-sample", "jungck", "expansive"};
  return kCommands;
}

/// Either a named built-in map or a row-major matrix plus optional offset.
struct MappingSpec {
  std::string builtin;
  std::vector<double> matrix;
  std::vector<double> offset;
  std::optional<double> k;
  std::optional<double> q;

  friend bool operator==(const MappingSpec&, const MappingSpec&) = default;
};

struct SolverSpec {
  double tol = 1e-10;
  std::size_t max_iter = 1000;
  std::vector<double> x0;  // empty: origin

  friend bool operator==(const SolverSpec&, const SolverSpec&) = default;
};

struct SamplingSpec {
  std::size_t n_samples = 10000;
  std::uint64_t seed = 0;

  friend bool operator==(const SamplingSpec&, const SamplingSpec&) = default;
};

struct BallSpec {
  std::vector<double> center;
  std::vector<double> anchor;
  double radius = 1.0;
  bool closed = false;

  friend bool operator==(const BallSpec&, const BallSpec&) = default;
};

struct OutputSpec {
  std::string path;  // empty: stdout
  std::string format = "json";

  friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

struct RunConfig {
  std::string command;
  SpaceSpec space;
  /// check-gmetric only: "derived" (from the space) or "rho".
  std::string gmetric = "derived";
  std::optional<MappingSpec> mapping;
  std::optional<MappingSpec> mapping_s;
  std::optional<double> q;
  SolverSpec solver;
  SamplingSpec sampling;
  std::optional<BallSpec> ball;
  OutputSpec output;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Throws ConfigError naming the offending field.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& config);

/// Checks the fields the command needs; throws ConfigError.
void validate_for_command(const RunConfig& config);

}  // namespace gnorm::app
