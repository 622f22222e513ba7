#include "gnorm_app/run.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "gnorm/error.hpp"
#include "gnorm/spaces.hpp"
#include "gnorm/topology.hpp"
#include "gnorm/verify.hpp"
#include "gnorm_app/report_io.hpp"

namespace gnorm::app {
namespace {

using nlohmann::json;

struct Builtin {
  const char* name;
  double scale;
  double shift;
  std::optional<double> k;
  std::optional<double> q;
};

// x ↦ scale·x + shift·(1,…,1). k and q are exact under every G-norm because
// the linear part is a multiple of the identity.
constexpr Builtin kBuiltins[] = {
    {"identity", 1.0, 0.0, std::nullopt, std::nullopt},
    {"halving", 0.5, 0.0, 0.5, std::nullopt},
    {"halving_shift", 0.5, 1.0, 0.5, std::nullopt},
    {"doubling", 2.0, 0.0, std::nullopt, 2.0},
    {"double_shift", 2.0, -2.0, std::nullopt, 2.0},
    {"tripling", 3.0, 0.0, std::nullopt, 3.0},
    {"triple_shift", 3.0, -4.0, std::nullopt, 3.0},
    {"shift_one", 1.0, 1.0, std::nullopt, std::nullopt},
};

Vector origin_or(const std::vector<double>& coords, std::size_t dim) {
  return coords.empty() ? Vector::zero(dim) : Vector(coords);
}

void write_report(const RunConfig& cfg, const std::string& body, std::ostream& out) {
  if (cfg.output.path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(cfg.output.path);
  if (!file) throw ConfigError("output.path", "cannot write '" + cfg.output.path + "'");
  file << body;
  if (!file) throw ConfigError("output.path", "write to '" + cfg.output.path + "' failed");
}

json header(const RunConfig& cfg) {
  json j;
  j["command"] = cfg.command;
  j["space"] = {{"kind", to_string(cfg.space.kind)}, {"dim", cfg.space.dim}};
  j["seed"] = cfg.sampling.seed;
  return j;
}

SolveConfig solve_config(const RunConfig& cfg) {
  return SolveConfig{cfg.solver.tol, cfg.solver.max_iter,
                     origin_or(cfg.solver.x0, cfg.space.dim)};
}

int axiom_command(const RunConfig& cfg, const std::vector<AxiomReport>& reports,
                  std::ostream& out) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed;
  std::string body;
  if (cfg.output.format == "csv") {
    std::ostringstream s;
    write_axiom_csv(reports, s);
    body = s.str();
  } else {
    json j = header(cfg);
    j["n_samples"] = cfg.sampling.n_samples;
    j["reports"] = to_json(reports);
    j["passed"] = ok;
    body = j.dump(2) + "\n";
  }
  write_report(cfg, body, out);
  if (!cfg.output.path.empty()) print_axiom_table(reports, out);
  return ok ? kExitOk : kExitVerificationFailed;
}

int solve_command(const RunConfig& cfg, const SolveReport& report, std::ostream& out) {
  std::string body;
  if (cfg.output.format == "csv") {
    std::ostringstream s;
    write_trace_csv(report, s);
    body = s.str();
  } else {
    json j = header(cfg);
    j["report"] = to_json(report);
    body = j.dump(2) + "\n";
  }
  write_report(cfg, body, out);
  if (!cfg.output.path.empty()) {
    out << report.method << ": " << (report.converged ? "converged" : "did not converge")
        << " after " << report.iterations << " iterations, residual "
        << format_double(report.final_residual) << '\n';
  }
  return report.converged ? kExitOk : kExitVerificationFailed;
}

}  // namespace

Mapping build_mapping(const MappingSpec& spec, std::size_t dim, const std::string& field) {
  std::optional<Mapping> m;
  if (!spec.builtin.empty()) {
    if (spec.builtin == "rotation_scale") {
      if (dim != 2) throw ConfigError(field + ".builtin", "rotation_scale needs dim = 2");
      m = Mapping::affine(Matrix(2, 2, {0.0, -3.0, 3.0, 0.0}), Vector::zero(2));
      // Exact for the Euclidean sum space; other spaces should pass q explicitly.
      m->known_q = 3.0;
    } else {
      for (const Builtin& b : kBuiltins) {
        if (spec.builtin != b.name) continue;
        m = Mapping::affine(Matrix::scaled_identity(dim, b.scale), Vector(dim, b.shift));
        m->known_k = b.k;
        m->known_q = b.q;
      }
    }
    if (!m) throw ConfigError(field + ".builtin", "unknown builtin mapping '" + spec.builtin + "'");
  } else {
    m = Mapping::affine(Matrix(dim, dim, spec.matrix), origin_or(spec.offset, dim));
  }
  if (spec.k) m->known_k = spec.k;
  if (spec.q) m->known_q = spec.q;
  return *m;
}

int execute(RunConfig cfg, std::ostream& out, std::ostream& err) {
  try {
    validate_for_command(cfg);
    const GNormSpace space = make_space(cfg.space);
    const std::size_t dim = space.dim();
    const std::size_t n = cfg.sampling.n_samples;
    const std::uint64_t seed = cfg.sampling.seed;
    const std::string& cmd = cfg.command;

    if (cmd == "check-axioms") {
      return axiom_command(cfg, check_gnorm_axioms(space, n, seed), out);
    }
    if (cmd == "check-gmetric") {
      const GMetric metric = cfg.gmetric == "rho" ? make_rho_oracle() : derived_gmetric_of(space);
      return axiom_command(cfg, check_gmetric_axioms(metric, n, seed), out);
    }
    if (cmd == "solve") {
      const Mapping t = build_mapping(*cfg.mapping, dim, "mapping");
      return solve_command(cfg, picard_solve(space, t, solve_config(cfg)), out);
    }
    if (cmd == "expansive") {
      const Mapping t = build_mapping(*cfg.mapping, dim, "mapping");
      return solve_command(cfg, expansive_solve(space, t, solve_config(cfg)), out);
    }
    if (cmd == "jungck") {
      const Mapping t = build_mapping(*cfg.mapping, dim, "mapping");
      const Mapping s = build_mapping(*cfg.mapping_s, dim, "mapping_s");
      return solve_command(cfg, jungck_solve(space, t, s, *cfg.q, solve_config(cfg)), out);
    }
    if (cmd == "estimate-k") {
      const Mapping t = build_mapping(*cfg.mapping, dim, "mapping");
      const double k = contraction_estimate(space, t, n, seed);
      json j = header(cfg);
      j["n_samples"] = n;
      j["k_estimate"] = k;
      j["is_contraction"] = k < 1.0;
      write_report(cfg, j.dump(2) + "\n", out);
      if (!cfg.output.path.empty()) out << "k_estimate " << format_double(k) << '\n';
      return kExitOk;
    }
    if (cmd == "ball-sample") {
      const Ball ball{Vector(cfg.ball->center), Vector(cfg.ball->anchor), cfg.ball->radius,
                      cfg.ball->closed};
      const BallSample sample = ball_sample(space, ball, n, seed);
      if (sample.empty) err << "ball-sample: no members found; the ball may be empty\n";
      std::string body;
      if (cfg.output.format == "csv") {
        std::ostringstream s;
        write_points_csv(sample.points, dim, s);
        body = s.str();
      } else {
        json j = header(cfg);
        j["sample"] = to_json(sample);
        body = j.dump(2) + "\n";
      }
      write_report(cfg, body, out);
      return kExitOk;
    }
    throw ConfigError("command", cmd.empty() ? "missing command" : "unknown command '" + cmd + "'");
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const RangeInclusionError& e) {
    err << "range inclusion violated: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = load_config(inv.config_path);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  if (!inv.command.empty()) cfg.command = inv.command;
  if (inv.out_path) cfg.output.path = *inv.out_path;
  if (inv.seed) cfg.sampling.seed = *inv.seed;
  return execute(std::move(cfg), out, err);
}

int run(const std::string& config_path) {
  return run(Invocation{"", config_path, std::nullopt, std::nullopt}, std::cout, std::cerr);
}

}  // namespace gnorm::app
