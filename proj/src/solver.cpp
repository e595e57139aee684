#include <telegraph/solver.hpp>

#include <stdexcept>

#include <telegraph/errors.hpp>

namespace telegraph
{

void TelegraphProblem::validate() const
{
    if (order < 2) {
        throw std::invalid_argument("truncation order must be at least 2");
    }
    if (h0.depends_on(var::t) || h1.depends_on(var::t)) {
        throw std::invalid_argument("initial data h0, h1 must not depend on t");
    }
    domain.validate();
}

SeriesSolution solve(const TelegraphProblem &problem, const SolverOptions &options)
{
    problem.validate();
    const std::size_t N = problem.order;

    SeriesSolution sol;
    sol.problem = problem;
    sol.backend = options.backend;
    if (problem.g0 || problem.g1) {
        sol.warnings.emplace_back("boundary conditions are recorded but not enforced by the series construction");
    }

    std::function<SpatialField(const expr &)> lift;
    if (options.backend == backend::grid) {
        sol.grid = ChebyshevGrid::get(options.grid_points, problem.domain.x_lo, problem.domain.x_hi);
        lift = [&](const expr &e) { return SpatialField::sample(e, sol.grid); };
    } else {
        lift = [](const expr &e) { return SpatialField::symbolic(e); };
    }

    std::vector<SpatialField> forcing;
    for (const auto &h : t_taylor_coeffs(problem.forcing, N)) {
        forcing.push_back(lift(h));
    }

    std::vector<SpatialField> c;
    c.reserve(N + 1);
    c.push_back(lift(problem.h0));
    c.push_back(lift(problem.h1));

    const real_ext alpha = problem.alpha;
    const real_ext beta2 = real_ext(problem.beta) * real_ext(problem.beta);
    const bool linear = problem.nonlinearity.is_zero();
    NonlinEvaluator<SpatialField> g(problem.nonlinearity);

    for (std::size_t k = 0; k + 2 <= N; ++k) {
        SpatialField G = real_ext(-2) * alpha * real_ext(k + 1) * c[k + 1];
        G = G + (-beta2) * c[k];
        G = G + d2x(c[k]);
        G = G + forcing[k];
        if (!linear) {
            G = G + g.term(k, std::span<const SpatialField>(c.data(), k + 1));
        }
        c.push_back(real_ext(1) / (real_ext(k + 1) * real_ext(k + 2)) * G);
        if (has_nonfinite(c.back())) {
            throw numeric_error("non-finite values in coefficient " + std::to_string(k + 2));
        }
    }
    sol.coeffs = std::move(c);
    return sol;
}

real_ext eval_solution_ext(const SeriesSolution &sol, const real_ext &x, const real_ext &t,
                           std::optional<std::size_t> n)
{
    const std::size_t top = std::min(n.value_or(sol.order()), sol.order());
    real_ext acc = eval_at_ext(sol.coeffs[top], x);
    for (std::size_t k = top; k-- > 0;) {
        acc = acc * t + eval_at_ext(sol.coeffs[k], x);
    }
    return acc;
}

double eval_solution(const SeriesSolution &sol, double x, double t, std::optional<std::size_t> n)
{
    return eval_solution_ext(sol, real_ext(x), real_ext(t), n).convert_to<double>();
}

double residual(const SeriesSolution &sol, double x, double t)
{
    const auto &p = sol.problem;
    const real_ext X = x;
    const real_ext T = t;
    real_ext w = 0, wt = 0, wtt = 0, wxx = 0;
    // powers of t built up front; t^{k-1}, t^{k-2} looked up by index
    std::vector<real_ext> tp(sol.coeffs.size() + 1, real_ext(1));
    for (std::size_t k = 1; k < tp.size(); ++k) {
        tp[k] = tp[k - 1] * T;
    }
    for (std::size_t k = 0; k < sol.coeffs.size(); ++k) {
        const real_ext ck = eval_at_ext(sol.coeffs[k], X);
        w += ck * tp[k];
        if (k >= 1) {
            wt += real_ext(k) * ck * tp[k - 1];
        }
        if (k >= 2) {
            wtt += real_ext(k) * real_ext(k - 1) * ck * tp[k - 2];
        }
        wxx += eval_at_ext(d2x(sol.coeffs[k]), X) * tp[k];
    }
    const real_ext alpha = p.alpha;
    const real_ext beta = p.beta;
    const real_ext h = eval_ext(p.forcing, X, T);
    const real_ext defect
        = wtt + 2 * alpha * wt + beta * beta * w - wxx - h - apply_nonlinearity(p.nonlinearity, w);
    return defect.convert_to<double>();
}

} // namespace telegraph
