#include <telegraph/oracle.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include <telegraph/errors.hpp>

namespace telegraph
{

namespace
{

struct exact_derivatives {
    expr w, wt, wtt, wxx;

    explicit exact_derivatives(const expr &e)
        : w(simplify(e)), wt(diff(e, var::t)), wtt(diff(wt, var::t)), wxx(diff(diff(e, var::x), var::x))
    {
    }

    real_ext residual(const TelegraphProblem &p, const real_ext &x, const real_ext &t) const
    {
        const real_ext alpha = p.alpha;
        const real_ext beta = p.beta;
        const real_ext v = eval_ext(w, x, t);
        return eval_ext(wtt, x, t) + 2 * alpha * eval_ext(wt, x, t) + beta * beta * v - eval_ext(wxx, x, t)
               - eval_ext(p.forcing, x, t) - apply_nonlinearity(p.nonlinearity, v);
    }
};

BuiltinProblem make_builtin(std::string name, std::string description, double alpha, double beta,
                           std::string_view forcing, std::string_view nonlinearity, std::string_view h0,
                           std::string_view h1, Domain domain, std::string_view exact)
{
    BuiltinProblem b;
    b.name = std::move(name);
    b.description = std::move(description);
    b.problem.alpha = alpha;
    b.problem.beta = beta;
    b.problem.forcing = parse_expr(forcing);
    b.problem.nonlinearity = parse_nonlinearity(nonlinearity);
    b.problem.h0 = parse_expr(h0);
    b.problem.h1 = parse_expr(h1);
    b.problem.domain = domain;
    b.problem.order = 15;
    b.exact = parse_expr(exact);
    check_exact_solution(b.problem, b.exact);
    return b;
}

const std::vector<BuiltinProblem> &registry()
{
    static const std::vector<BuiltinProblem> problems = [] {
        std::vector<BuiltinProblem> v;
        v.push_back(make_builtin("example1", "linear, alpha = 10, beta = 5, exact sinh(x) exp(-2t)", 10, 5,
                                 "(3 - 4*10 + 5^2)*exp(-2*t)*sinh(x)", "0", "sinh(x)", "-2*sinh(x)", {0, 1, 1},
                                 "sinh(x)*exp(-2*t)"));
        v.push_back(make_builtin("example2", "linear, alpha = 10, beta = 5, exact sin(x) cos(t)", 10, 5,
                                 "-2*10*sin(t)*sin(x) + 5^2*cos(t)*sin(x)", "0", "sin(x)", "0", {0, 1, 1},
                                 "sin(x)*cos(t)"));
        v.push_back(make_builtin("example3", "nonlinear g(w) = -2 sin(w), damping w_t, exact (1 - cos(pi x)) exp(-t)",
                                 0.5, 0, "-pi^2*exp(-t)*cos(pi*x) + 2*sin(exp(-t)*(1 - cos(pi*x)))", "-2*sin(w)",
                                 "1 - cos(pi*x)", "-(1 - cos(pi*x))", {0, 2, 1}, "(1 - cos(pi*x))*exp(-t)"));
        return v;
    }();
    return problems;
}

} // namespace

const BuiltinProblem &builtin_problem(std::string_view name)
{
    for (const auto &b : registry()) {
        if (b.name == name) {
            return b;
        }
    }
    throw std::invalid_argument("unknown builtin problem '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names()
{
    return {"example1", "example2", "example3"};
}

double exact_residual(const TelegraphProblem &problem, const expr &exact, double x, double t)
{
    return exact_derivatives(exact).residual(problem, x, t).convert_to<double>();
}

void check_exact_solution(const TelegraphProblem &problem, const expr &exact, double tol, int samples,
                          unsigned seed)
{
    const exact_derivatives d(exact);
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> ux(problem.domain.x_lo, problem.domain.x_hi);
    std::uniform_real_distribution<double> ut(0, problem.domain.T);
    for (int i = 0; i < samples; ++i) {
        const double x = ux(gen);
        const double t = ut(gen);
        const real_ext r = boost::multiprecision::fabs(d.residual(problem, x, t));
        if (!(r < tol)) {
            throw numeric_error("exact solution " + to_string(exact) + " leaves residual "
                                + std::to_string(r.convert_to<double>()) + " at (" + std::to_string(x) + ", "
                                + std::to_string(t) + ")");
        }
    }
}

double abs_error(const SeriesSolution &sol, const expr &exact, double x, double t, std::optional<std::size_t> n)
{
    const real_ext X = x;
    const real_ext T = t;
    return boost::multiprecision::fabs(eval_solution_ext(sol, X, T, n) - eval_ext(exact, X, T)).convert_to<double>();
}

double truncation_remainder(std::string_view builtin, double x, double t, std::size_t n)
{
    using boost::multiprecision::cos;
    using boost::multiprecision::exp;
    using boost::multiprecision::fabs;
    const real_ext X = x;
    const real_ext T = t;
    // scalar series a(t) = sum_k s_k t^k with known sum
    real_ext profile, full, partial = 0, term = 1;
    if (builtin == "example1") {
        profile = boost::multiprecision::sinh(X);
        full = exp(-2 * T);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k > 0) {
                term *= -2 * T / real_ext(k);
            }
            partial += term;
        }
    } else if (builtin == "example2") {
        profile = boost::multiprecision::sin(X);
        full = cos(T);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k > 0) {
                term *= T / real_ext(k);
            }
            if (k % 2 == 0) {
                partial += (k % 4 == 0) ? term : -term;
            }
        }
    } else if (builtin == "example3") {
        profile = 1 - cos(pi_ext() * X);
        full = exp(-T);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k > 0) {
                term *= -T / real_ext(k);
            }
            partial += term;
        }
    } else {
        throw std::invalid_argument("no closed-form remainder for '" + std::string(builtin) + "'");
    }
    return fabs(profile * (full - partial)).convert_to<double>();
}

ErrorTable error_table(const SeriesSolution &sol, const expr &exact, const std::vector<std::size_t> &orders,
                       const std::vector<double> &xs, double t_star)
{
    if (!std::is_sorted(orders.begin(), orders.end())) {
        throw std::invalid_argument("error_table: orders must be ascending");
    }
    if (!orders.empty() && orders.back() > sol.order()) {
        throw std::invalid_argument("error_table: order " + std::to_string(orders.back())
                                    + " exceeds the solution order " + std::to_string(sol.order()));
    }
    ErrorTable table;
    table.t_star = t_star;
    table.xs = xs;
    table.orders = orders;
    for (double x : xs) {
        std::vector<double> row;
        for (std::size_t n : orders) {
            row.push_back(abs_error(sol, exact, x, t_star, n));
        }
        table.errors.push_back(std::move(row));
    }
    return table;
}

ErrorTable error_table(const TelegraphProblem &problem, const expr &exact, const std::vector<std::size_t> &orders,
                       const std::vector<double> &xs, double t_star, const SolverOptions &options)
{
    TelegraphProblem p = problem;
    if (!orders.empty()) {
        p.order = std::max<std::size_t>(orders.back(), 2);
    }
    return error_table(solve(p, options), exact, orders, xs, t_star);
}

FdSnapshot fd_reference(const TelegraphProblem &problem, double dx, double dt, double t_end,
                        const std::optional<expr> &exact, const SeriesSolution *series)
{
    const auto &d = problem.domain;
    if (!(dx > 0) || !(dt > 0) || !(t_end > 0)) {
        throw std::invalid_argument("fd_reference needs positive dx, dt, t_end");
    }
    if (dt > dx * (1 + 1e-12)) {
        throw std::invalid_argument("fd_reference needs dt <= dx");
    }
    if (!exact && !series) {
        throw std::invalid_argument("fd_reference needs boundary data: an exact solution or a series solution");
    }
    const auto nx = static_cast<std::size_t>(std::lround((d.x_hi - d.x_lo) / dx));
    const auto steps = static_cast<std::size_t>(std::lround(t_end / dt));
    if (nx < 2 || steps < 1) {
        throw std::invalid_argument("fd_reference: grid too coarse");
    }
    const double h = (d.x_hi - d.x_lo) / static_cast<double>(nx);
    const double k = t_end / static_cast<double>(steps);

    FdSnapshot out;
    out.t_end = t_end;
    out.boundary = exact ? boundary_source::exact : boundary_source::series;
    out.xs.resize(nx + 1);
    for (std::size_t i = 0; i <= nx; ++i) {
        out.xs[i] = (i == nx) ? d.x_hi : d.x_lo + h * static_cast<double>(i);
    }
    auto boundary = [&](double x, double t) {
        return exact ? eval(*exact, x, t) : eval_solution(*series, x, t);
    };
    auto g = [&](double w) { return apply_nonlinearity(problem.nonlinearity, real_ext(w)).convert_to<double>(); };

    const double a = problem.alpha;
    const double b2 = problem.beta * problem.beta;
    std::vector<double> prev(nx + 1), cur(nx + 1), next(nx + 1);
    for (std::size_t i = 0; i <= nx; ++i) {
        cur[i] = eval(problem.h0, out.xs[i], 0);
    }
    double scale = 1;
    for (double v : cur) {
        scale = std::max(scale, std::fabs(v));
    }
    const double blowup = 1e8 * scale;

    auto lap = [&](const std::vector<double> &w, std::size_t i) { return (w[i - 1] - 2 * w[i] + w[i + 1]) / (h * h); };

    // first step: w(k) = w0 + k h1 + k^2/2 w_tt(0)
    for (std::size_t i = 1; i < nx; ++i) {
        const double x = out.xs[i];
        const double v1 = eval(problem.h1, x, 0);
        const double wtt = -2 * a * v1 - b2 * cur[i] + lap(cur, i) + eval(problem.forcing, x, 0) + g(cur[i]);
        next[i] = cur[i] + k * v1 + 0.5 * k * k * wtt;
    }
    next[0] = boundary(d.x_lo, k);
    next[nx] = boundary(d.x_hi, k);
    prev.swap(cur);
    cur.swap(next);

    for (std::size_t n = 1; n < steps; ++n) {
        const double t = k * static_cast<double>(n);
        for (std::size_t i = 1; i < nx; ++i) {
            const double rhs = lap(cur, i) + eval(problem.forcing, out.xs[i], t) + g(cur[i]) - b2 * cur[i];
            next[i] = (2 * cur[i] - (1 - a * k) * prev[i] + k * k * rhs) / (1 + a * k);
            if (!std::isfinite(next[i]) || std::fabs(next[i]) > blowup) {
                throw numeric_error("finite-difference reference blew up at t = " + std::to_string(t + k));
            }
        }
        next[0] = boundary(d.x_lo, t + k);
        next[nx] = boundary(d.x_hi, t + k);
        prev.swap(cur);
        cur.swap(next);
    }
    out.values = cur;
    return out;
}

} // namespace telegraph
