#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <telegraph/solver.hpp>

namespace telegraph
{

struct BuiltinProblem {
    std::string name;
    std::string description;
    TelegraphProblem problem;
    // closed-form solution in (x, t)
    expr exact;
};

// example1, example2, example3. Each exact solution is checked against the
// PDE on first use (residual < 1e-10 at 100 seeded random points).
const BuiltinProblem &builtin_problem(std::string_view name);
std::vector<std::string> builtin_names();

// w_tt + 2 alpha w_t + beta^2 w - w_xx - h - g(w) for a closed-form w.
double exact_residual(const TelegraphProblem &problem, const expr &exact, double x, double t);

// Throws numeric_error if the residual reaches `tol` at one of `samples`
// points drawn uniformly from the problem's space-time domain.
void check_exact_solution(const TelegraphProblem &problem, const expr &exact, double tol = 1e-10,
                          int samples = 100, unsigned seed = 20240607);

// |partial sum up to order n - exact| at (x, t), evaluated in extended precision.
double abs_error(const SeriesSolution &sol, const expr &exact, double x, double t,
                 std::optional<std::size_t> n = std::nullopt);

// Closed-form truncation error of the built-in examples: spatial profile
// times the remainder of the scalar Taylor series in t after order n.
double truncation_remainder(std::string_view builtin, double x, double t, std::size_t n);

struct ErrorTable {
    double t_star = 1;
    std::vector<double> xs;
    std::vector<std::size_t> orders;
    // errors[row][col]: x = xs[row], n = orders[col]
    std::vector<std::vector<double>> errors;
};

inline const std::vector<double> &table_xs()
{
    static const std::vector<double> xs{0.1, 0.3, 0.5, 0.7, 0.9};
    return xs;
}

inline const std::vector<std::size_t> &table_orders()
{
    static const std::vector<std::size_t> orders{10, 11, 12, 13, 14, 15};
    return orders;
}

// Rows evaluated by truncating one solution; orders must be ascending and
// not exceed the solution's order.
ErrorTable error_table(const SeriesSolution &sol, const expr &exact, const std::vector<std::size_t> &orders,
                       const std::vector<double> &xs, double t_star);

// Solves once at the largest requested order.
ErrorTable error_table(const TelegraphProblem &problem, const expr &exact, const std::vector<std::size_t> &orders,
                       const std::vector<double> &xs, double t_star, const SolverOptions &options = {});

// Published absolute errors at t = 1 for the three examples, n = 10..15,
// x = 0.1, 0.3, ..., 0.9. Reference constants only; nothing here is recomputed.
struct PublishedRow {
    double x;
    std::array<double, 6> taylor;
    std::array<double, 6> adm;
    std::array<double, 6> ham;
};

const std::vector<PublishedRow> &published_errors(std::string_view builtin);

enum class boundary_source
{
    exact,
    series
};

struct FdSnapshot {
    std::vector<double> xs;
    std::vector<double> values;
    double t_end = 0;
    boundary_source boundary = boundary_source::exact;
};

// Explicit central differences in x and t:
//   w^{n+1}(1 + alpha dt) = 2 w^n - (1 - alpha dt) w^{n-1}
//                           + dt^2 (D2 w^n + h^n + g(w^n) - beta^2 w^n)
// first step from the Taylor expansion with w_tt(0) taken from the PDE.
// Boundary values come from `exact` when given, else from `series`.
// Requires dt <= dx; throws numeric_error on blow-up.
FdSnapshot fd_reference(const TelegraphProblem &problem, double dx, double dt, double t_end,
                        const std::optional<expr> &exact, const SeriesSolution *series = nullptr);

} // namespace telegraph
