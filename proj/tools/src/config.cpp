#include "gnorm_app/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "gnorm/error.hpp"

namespace gnorm::app {
namespace {

using nlohmann::json;

std::string join(const std::string& parent, const std::string& key) {
  return parent.empty() ? key : parent + "." + key;
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* a) { return it.key() == a; })) {
      throw ConfigError(join(path, it.key()), "unknown field");
    }
  }
}

const json& object_at(const json& parent, const std::string& key, const std::string& path) {
  const json& j = parent.at(key);
  if (!j.is_object()) throw ConfigError(join(path, key), "expected an object");
  return j;
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(path, "expected a finite number");
  return v;
}

std::uint64_t unsigned_at(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw ConfigError(path, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path, "expected a string");
  return j.get<std::string>();
}

bool bool_at(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw ConfigError(path, "expected true or false");
  return j.get<bool>();
}

std::vector<double> numbers_at(const json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(number_at(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

SpaceSpec parse_space(const json& j, const std::string& path) {
  reject_unknown(j, path, {"kind", "dim", "p", "grid_size"});
  SpaceSpec spec;
  if (!j.contains("kind")) throw ConfigError(join(path, "kind"), "missing required field");
  const std::string kind = string_at(j["kind"], join(path, "kind"));
  try {
    spec.kind = space_kind_from_string(kind);
  } catch (const InputError&) {
    throw ConfigError(join(path, "kind"), "unknown space kind '" + kind + "'");
  }
  if (spec.kind == SpaceKind::custom) {
    throw ConfigError(join(path, "kind"), "custom spaces are not configurable");
  }
  if (j.contains("dim")) spec.dim = unsigned_at(j["dim"], join(path, "dim"));
  if (j.contains("grid_size")) spec.grid_size = unsigned_at(j["grid_size"], join(path, "grid_size"));
  if (j.contains("p")) {
    const json& p = j["p"];
    if (p.is_string() && (p == "inf" || p == "infinity")) {
      spec.p = kInfinityNorm;
    } else {
      spec.p = number_at(p, join(path, "p"));
    }
  }
  if (spec.kind == SpaceKind::grid_maxsum) {
    spec.dim = spec.grid_size;
    if (spec.grid_size < 2) throw ConfigError(join(path, "grid_size"), "must be at least 2");
  } else if (spec.dim < 1) {
    throw ConfigError(join(path, "dim"), "must be at least 1");
  }
  if (spec.kind == SpaceKind::sum_pnorm && !(spec.p >= 1.0)) {
    throw ConfigError(join(path, "p"), "must be >= 1");
  }
  return spec;
}

MappingSpec parse_mapping(const json& j, const std::string& path) {
  reject_unknown(j, path, {"builtin", "matrix", "offset", "k", "q"});
  MappingSpec m;
  if (j.contains("builtin")) m.builtin = string_at(j["builtin"], join(path, "builtin"));
  if (j.contains("matrix")) m.matrix = numbers_at(j["matrix"], join(path, "matrix"));
  if (j.contains("offset")) m.offset = numbers_at(j["offset"], join(path, "offset"));
  if (j.contains("k")) m.k = number_at(j["k"], join(path, "k"));
  if (j.contains("q")) m.q = number_at(j["q"], join(path, "q"));
  if (m.builtin.empty() == m.matrix.empty()) {
    throw ConfigError(path, "exactly one of 'builtin' or 'matrix' is required");
  }
  if (!m.builtin.empty() && !m.offset.empty()) {
    throw ConfigError(join(path, "offset"), "not allowed with a builtin mapping");
  }
  return m;
}

json mapping_to_json(const MappingSpec& m) {
  json j = json::object();
  if (!m.builtin.empty()) j["builtin"] = m.builtin;
  if (!m.matrix.empty()) j["matrix"] = m.matrix;
  if (!m.offset.empty()) j["offset"] = m.offset;
  if (m.k) j["k"] = *m.k;
  if (m.q) j["q"] = *m.q;
  return j;
}

RunConfig parse_root(const json& root) {
  if (!root.is_object()) throw ConfigError("<root>", "expected a JSON object");
  reject_unknown(root, "", {"command", "space", "gmetric", "mapping", "mapping_s", "q", "solver",
                            "sampling", "ball", "output"});
  RunConfig cfg;
  if (root.contains("command")) {
    cfg.command = string_at(root["command"], "command");
    const auto& cmds = known_commands();
    if (std::find(cmds.begin(), cmds.end(), cfg.command) == cmds.end()) {
      throw ConfigError("command", "unknown command '" + cfg.command + "'");
    }
  }
  if (!root.contains("space")) throw ConfigError("space", "missing required field");
  cfg.space = parse_space(object_at(root, "space", ""), "space");

  if (root.contains("gmetric")) {
    cfg.gmetric = string_at(root["gmetric"], "gmetric");
    if (cfg.gmetric != "derived" && cfg.gmetric != "rho") {
      throw ConfigError("gmetric", "expected 'derived' or 'rho'");
    }
  }
  if (root.contains("mapping")) {
    cfg.mapping = parse_mapping(object_at(root, "mapping", ""), "mapping");
  }
  if (root.contains("mapping_s")) {
    cfg.mapping_s = parse_mapping(object_at(root, "mapping_s", ""), "mapping_s");
  }
  if (root.contains("q")) cfg.q = number_at(root["q"], "q");

  if (root.contains("solver")) {
    const json& s = object_at(root, "solver", "");
    reject_unknown(s, "solver", {"tol", "max_iter", "x0"});
    if (s.contains("tol")) cfg.solver.tol = number_at(s["tol"], "solver.tol");
    if (s.contains("max_iter")) cfg.solver.max_iter = unsigned_at(s["max_iter"], "solver.max_iter");
    if (s.contains("x0")) cfg.solver.x0 = numbers_at(s["x0"], "solver.x0");
    if (!(cfg.solver.tol > 0.0)) throw ConfigError("solver.tol", "must be positive");
    if (cfg.solver.max_iter < 1) throw ConfigError("solver.max_iter", "must be at least 1");
  }
  if (root.contains("sampling")) {
    const json& s = object_at(root, "sampling", "");
    reject_unknown(s, "sampling", {"n_samples", "seed"});
    if (s.contains("n_samples")) {
      cfg.sampling.n_samples = unsigned_at(s["n_samples"], "sampling.n_samples");
    }
    if (s.contains("seed")) cfg.sampling.seed = unsigned_at(s["seed"], "sampling.seed");
    if (cfg.sampling.n_samples < 1) throw ConfigError("sampling.n_samples", "must be at least 1");
  }
  if (root.contains("ball")) {
    const json& b = object_at(root, "ball", "");
    reject_unknown(b, "ball", {"center", "anchor", "radius", "closed"});
    BallSpec ball;
    if (!b.contains("center")) throw ConfigError("ball.center", "missing required field");
    if (!b.contains("anchor")) throw ConfigError("ball.anchor", "missing required field");
    if (!b.contains("radius")) throw ConfigError("ball.radius", "missing required field");
    ball.center = numbers_at(b["center"], "ball.center");
    ball.anchor = numbers_at(b["anchor"], "ball.anchor");
    ball.radius = number_at(b["radius"], "ball.radius");
    if (b.contains("closed")) ball.closed = bool_at(b["closed"], "ball.closed");
    if (!(ball.radius > 0.0)) throw ConfigError("ball.radius", "must be positive");
    cfg.ball = ball;
  }
  if (root.contains("output")) {
    const json& o = object_at(root, "output", "");
    reject_unknown(o, "output", {"path", "format"});
    if (o.contains("path")) cfg.output.path = string_at(o["path"], "output.path");
    if (o.contains("format")) cfg.output.format = string_at(o["format"], "output.format");
    if (cfg.output.format != "json" && cfg.output.format != "csv") {
      throw ConfigError("output.format", "expected 'json' or 'csv'");
    }
  }
  return cfg;
}

void check_dim(const std::vector<double>& v, std::size_t dim, const std::string& field) {
  if (!v.empty() && v.size() != dim) {
    throw ConfigError(field, "expected " + std::to_string(dim) + " entries, got " +
                                 std::to_string(v.size()));
  }
}

void check_mapping_dims(const MappingSpec& m, std::size_t dim, const std::string& path) {
  if (!m.matrix.empty() && m.matrix.size() != dim * dim) {
    throw ConfigError(join(path, "matrix"), "expected " + std::to_string(dim * dim) +
                                                " row-major entries, got " +
                                                std::to_string(m.matrix.size()));
  }
  check_dim(m.offset, dim, join(path, "offset"));
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", std::string("malformed JSON: ") + e.what());
  }
  return parse_root(root);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<config>", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& c) {
  json j;
  if (!c.command.empty()) j["command"] = c.command;
  json space = {{"kind", to_string(c.space.kind)}, {"dim", c.space.dim}};
  if (c.space.kind == SpaceKind::sum_pnorm) {
    if (std::isinf(c.space.p)) {
      space["p"] = "inf";
    } else {
      space["p"] = c.space.p;
    }
  }
  if (c.space.kind == SpaceKind::grid_maxsum) space["grid_size"] = c.space.grid_size;
  j["space"] = space;
  j["gmetric"] = c.gmetric;
  if (c.mapping) j["mapping"] = mapping_to_json(*c.mapping);
  if (c.mapping_s) j["mapping_s"] = mapping_to_json(*c.mapping_s);
  if (c.q) j["q"] = *c.q;
  j["solver"] = {{"tol", c.solver.tol}, {"max_iter", c.solver.max_iter}, {"x0", c.solver.x0}};
  j["sampling"] = {{"n_samples", c.sampling.n_samples}, {"seed", c.sampling.seed}};
  if (c.ball) {
    j["ball"] = {{"center", c.ball->center},
                 {"anchor", c.ball->anchor},
                 {"radius", c.ball->radius},
                 {"closed", c.ball->closed}};
  }
  j["output"] = {{"path", c.output.path}, {"format", c.output.format}};
  return j.dump(2);
}

void validate_for_command(const RunConfig& c) {
  const std::size_t dim = c.space.dim;
  check_dim(c.solver.x0, dim, "solver.x0");
  if (c.mapping) check_mapping_dims(*c.mapping, dim, "mapping");
  if (c.mapping_s) check_mapping_dims(*c.mapping_s, dim, "mapping_s");

  const std::string& cmd = c.command;
  if (cmd == "solve" || cmd == "estimate-k" || cmd == "expansive" || cmd == "jungck") {
    if (!c.mapping) throw ConfigError("mapping", "required for command '" + cmd + "'");
  }
  if (cmd == "jungck") {
    if (!c.mapping_s) throw ConfigError("mapping_s", "required for command 'jungck'");
    if (!c.q) throw ConfigError("q", "required for command 'jungck'");
  }
  if (cmd == "ball-sample") {
    if (!c.ball) throw ConfigError("ball", "required for command 'ball-sample'");
    if (c.ball->center.size() != dim) {
      throw ConfigError("ball.center", "expected " + std::to_string(dim) + " entries");
    }
    if (c.ball->anchor.size() != dim) {
      throw ConfigError("ball.anchor", "expected " + std::to_string(dim) + " entries");
    }
  }
  if (cmd == "check-gmetric" && c.gmetric == "rho" && c.space.dim != 1) {
    throw ConfigError("gmetric", "the rho G-metric lives on the real line; set space.dim to 1");
  }
  const bool csv_ok = cmd == "solve" || cmd == "jungck" || cmd == "expansive" ||
                      cmd == "ball-sample" || cmd == "check-axioms" || cmd == "check-gmetric";
  if (c.output.format == "csv" && !csv_ok) {
    throw ConfigError("output.format", "csv is not available for command '" + cmd + "'");
  }
}

}  // namespace gnorm::app
