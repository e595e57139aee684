#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <telegraph/expr.hpp>
#include <telegraph/nonlinearity.hpp>
#include <telegraph/spatial.hpp>

namespace telegraph
{

// w_tt + 2 alpha w_t + beta^2 w = w_xx + h(x,t) + g(w),
// w(x,0) = h0(x), w_t(x,0) = h1(x).
struct TelegraphProblem {
    double alpha = 0;
    double beta = 0;
    expr forcing;
    NonlinSpec nonlinearity;
    expr h0;
    expr h1;
    Domain domain;
    std::size_t order = 15;
    // Boundary traces w(x_lo,t), w(x_hi,t). Kept for reference only: the
    // series is an initial-value construction and never imposes them.
    std::optional<expr> g0;
    std::optional<expr> g1;

    // Throws std::invalid_argument on order < 2, t in h0/h1, bad domain.
    void validate() const;
};

enum class backend
{
    symbolic,
    grid
};

struct SolverOptions {
    telegraph::backend backend = backend::symbolic;
    std::size_t grid_points = 64;
};

// Plain coefficients c_0..c_N of w = sum c_k(x) t^k.
struct SeriesSolution {
    std::vector<SpatialField> coeffs;
    TelegraphProblem problem;
    telegraph::backend backend = backend::symbolic;
    std::shared_ptr<const ChebyshevGrid> grid;
    std::vector<std::string> warnings;

    std::size_t order() const noexcept
    {
        return coeffs.size() - 1;
    }
};

SeriesSolution solve(const TelegraphProblem &problem, const SolverOptions &options = {});

// Partial sum over c_0..c_n (n defaults to the full order).
real_ext eval_solution_ext(const SeriesSolution &sol, const real_ext &x, const real_ext &t,
                           std::optional<std::size_t> n = std::nullopt);
double eval_solution(const SeriesSolution &sol, double x, double t, std::optional<std::size_t> n = std::nullopt);

// Defect of the truncated series in the PDE at (x, t).
double residual(const SeriesSolution &sol, double x, double t);

} // namespace telegraph
