#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gnorm/solvers.hpp"
#include "gnorm/topology.hpp"
#include "gnorm/verify.hpp"

namespace gnorm::app {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const AxiomReport& report);
nlohmann::json to_json(const std::vector<AxiomReport>& reports);
nlohmann::json to_json(const SolveReport& report);
nlohmann::json to_json(const BallSample& sample);

/// Header "n,residual,apriori_bound", one row per iteration.
void write_trace_csv(const SolveReport& report, std::ostream& out);
/// Writes the trace CSV to `path`; throws std::runtime_error if unwritable.
void emit_trace_csv(const SolveReport& report, const std::string& path);

/// One row per point, columns x0..x{d-1}.
void write_points_csv(const std::vector<Vector>& points, std::size_t dim, std::ostream& out);

/// axiom,samples,passed,worst_violation
void write_axiom_csv(const std::vector<AxiomReport>& reports, std::ostream& out);

/// Fixed-width summary for terminals.
void print_axiom_table(const std::vector<AxiomReport>& reports, std::ostream& out);

}  // namespace gnorm::app
