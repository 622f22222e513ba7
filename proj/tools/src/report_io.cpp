#include "gnorm_app/report_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <stdexcept>

namespace gnorm::app {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json to_json(const Vector& v) { return json(v.data()); }

json to_json(const AxiomReport& r) {
  json j;
  j["axiom"] = to_string(r.axiom);
  j["samples"] = r.samples;
  j["passed"] = r.passed;
  j["worst_violation"] = r.worst_violation;
  if (r.counterexample) {
    json vectors = json::array();
    for (const Vector& v : r.counterexample->vectors) vectors.push_back(to_json(v));
    j["counterexample"] = {{"vectors", vectors}, {"scalars", r.counterexample->scalars}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["seed"] = r.seed;
  return j;
}

json to_json(const std::vector<AxiomReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

json to_json(const SolveReport& r) {
  json j;
  j["method"] = r.method;
  j["fixed_point"] = to_json(r.fixed_point);
  j["iterations"] = r.iterations;
  j["final_residual"] = r.final_residual;
  j["converged"] = r.converged;
  j["bound_respected"] = r.bound_respected;
  j["k_used"] = r.k_used;
  j["k_estimated"] = r.k_estimated;
  j["affine_extension"] = r.affine_extension;
  j["residual_t"] = r.residual_t ? json(*r.residual_t) : json(nullptr);
  j["residual_s"] = r.residual_s ? json(*r.residual_s) : json(nullptr);
  j["commutativity_residual"] =
      r.commutativity_residual ? json(*r.commutativity_residual) : json(nullptr);
  json iterates = json::array();
  for (const Vector& v : r.trace.iterates) iterates.push_back(to_json(v));
  j["trace"] = {{"iterates", iterates},
                {"step_residuals", r.trace.step_residuals},
                {"apriori_bounds", r.trace.apriori_bounds}};
  j["notes"] = r.notes;
  return j;
}

json to_json(const BallSample& s) {
  json points = json::array();
  for (const Vector& v : s.points) points.push_back(to_json(v));
  return {{"points", points},
          {"attempts", s.attempts},
          {"acceptance_rate", s.acceptance_rate},
          {"empty", s.empty}};
}

void write_trace_csv(const SolveReport& report, std::ostream& out) {
  out << "n,residual,apriori_bound\n";
  const IterationTrace& t = report.trace;
  for (std::size_t n = 0; n < t.size(); ++n) {
    out << n << ',' << format_double(t.step_residuals[n]) << ','
        << format_double(t.apriori_bounds[n]) << '\n';
  }
}

void emit_trace_csv(const SolveReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_trace_csv(report, out);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

void write_points_csv(const std::vector<Vector>& points, std::size_t dim, std::ostream& out) {
  for (std::size_t i = 0; i < dim; ++i) out << (i ? "," : "") << 'x' << i;
  out << '\n';
  for (const Vector& p : points) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << format_double(p[i]);
    out << '\n';
  }
}

void write_axiom_csv(const std::vector<AxiomReport>& reports, std::ostream& out) {
  out << "axiom,samples,passed,worst_violation\n";
  for (const auto& r : reports) {
    out << to_string(r.axiom) << ',' << r.samples << ',' << (r.passed ? "true" : "false") << ','
        << format_double(r.worst_violation) << '\n';
  }
}

void print_axiom_table(const std::vector<AxiomReport>& reports, std::ostream& out) {
  out << std::left << std::setw(12) << "axiom" << std::setw(10) << "samples" << std::setw(8)
      << "result" << "worst_violation\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(12) << to_string(r.axiom) << std::setw(10) << r.samples
        << std::setw(8) << (r.passed ? "pass" : "FAIL") << format_double(r.worst_violation)
        << '\n';
  }
}

}  // namespace gnorm::app
