#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <telegraph/oracle.hpp>

namespace telegraph
{

inline constexpr int config_schema_version = 1;

enum class report_kind
{
    deltas,
    errors,
    surface
};

enum class output_format
{
    csv,
    text
};

struct InlineProblem {
    double alpha = 0;
    double beta = 0;
    std::string forcing = "0";
    std::string nonlinearity = "0";
    std::string h0 = "0";
    std::string h1 = "0";
    Domain domain;
    std::optional<std::string> exact;
    std::optional<std::string> g0;
    std::optional<std::string> g1;
};

struct RunConfig {
    // exactly one of builtin / inline_problem is set
    std::optional<std::string> builtin;
    std::optional<InlineProblem> inline_problem;
    std::size_t order = 15;
    telegraph::backend backend = backend::symbolic;
    std::size_t grid_points = 64;
    // evaluation time for error tables (and the default surface time)
    double t = 1;
    std::vector<report_kind> reports{report_kind::deltas};
    output_format format = output_format::csv;
    double x_step = 0.001;
    // surface sample times; empty means {t}
    std::vector<double> surface_t;

    // Throws std::invalid_argument on violated invariants.
    void validate() const;
};

// Config file (JSON) <-> RunConfig. Unknown keys are rejected.
RunConfig config_from_json(const nlohmann::json &j);
nlohmann::json config_to_json(const RunConfig &c);

// Problem and (optional) exact solution described by a config.
struct ResolvedProblem {
    std::string label;
    TelegraphProblem problem;
    std::optional<expr> exact;
};

ResolvedProblem resolve_problem(const RunConfig &c);

// One named artifact (file name and full text content).
struct Artifact {
    std::string name;
    std::string content;
};

// Runs the configured solve and renders every requested report.
// Warnings (e.g. ignored boundary data) are appended to `warnings`.
std::vector<Artifact> run(const RunConfig &c, std::vector<std::string> &warnings);

// Fixed "%.17g" formatting used for every number in artifacts.
std::string format_double(double v);

// Command-line entry point; returns the process exit code
// (0 ok, 2 parse/config error, 3 numeric failure, 4 I/O failure).
int cli_main(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace telegraph
