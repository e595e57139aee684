#include <doctest.h>

#include <cmath>

#include <telegraph/errors.hpp>
#include <telegraph/oracle.hpp>
#include <telegraph/solver.hpp>

using namespace telegraph;

namespace
{

double factorial(int k)
{
    double f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

TelegraphProblem zero_problem()
{
    TelegraphProblem p;
    p.alpha = 0.7;
    p.beta = 1.3;
    p.order = 10;
    return p;
}

} // namespace

TEST_CASE("Example 1 coefficients")
{
    const auto sol = solve(builtin_problem("example1").problem);
    REQUIRE(sol.order() == 15);
    for (int k = 0; k <= 6; ++k) {
        for (double x : {0.0, 0.25, 0.5, 1.0}) {
            const double a = factorial(k) * eval_at(sol.coeffs[k], x);
            CHECK(std::abs(a - std::pow(-2.0, k) * std::sinh(x)) <= 1e-12);
        }
    }
}

TEST_CASE("Example 2 coefficients")
{
    const auto sol = solve(builtin_problem("example2").problem);
    const double pattern[] = {1, 0, -1, 0, 1, 0, -1};
    for (int k = 0; k <= 6; ++k) {
        for (double x : {0.1, 0.5, 0.9}) {
            CHECK(std::abs(factorial(k) * eval_at(sol.coeffs[k], x) - pattern[k] * std::sin(x)) <= 1e-12);
        }
        if (k % 2) {
            CHECK(is_zero(sol.coeffs[k]));
        }
    }
}

TEST_CASE("Example 3 coefficients")
{
    const auto sol = solve(builtin_problem("example3").problem);
    for (int k = 0; k <= 6; ++k) {
        for (double x : {0.0, 0.3, 1.0, 1.7}) {
            const double a = factorial(k) * eval_at(sol.coeffs[k], x);
            CHECK(std::abs(a - (k % 2 ? -1 : 1) * (1 - std::cos(M_PI * x))) <= 1e-12);
        }
    }
}

TEST_CASE("zero problem")
{
    const auto sol = solve(zero_problem());
    for (const auto &c : sol.coeffs) {
        CHECK(is_zero(c));
    }
    CHECK(residual(sol, 0.4, 0.6) == 0);
}

TEST_CASE("initial data are copied exactly")
{
    for (const auto &name : builtin_names()) {
        const auto &b = builtin_problem(name);
        const auto sol = solve(b.problem);
        CHECK(sol.coeffs[0].as_symbolic().e == simplify(b.problem.h0));
        CHECK(sol.coeffs[1].as_symbolic().e == simplify(b.problem.h1));
        const auto grid_sol = solve(b.problem, {backend::grid, 64});
        const auto h0 = values_at_nodes(SpatialField::symbolic(b.problem.h0), *grid_sol.grid);
        CHECK(grid_sol.coeffs[0].as_grid().values == h0);
    }
}

TEST_CASE("evaluation")
{
    const auto sol = solve(builtin_problem("example1").problem);
    double partial = 0, term = 1;
    for (int k = 0; k <= 15; ++k) {
        partial += term;
        term *= -2.0 / (k + 1);
    }
    CHECK(eval_solution(sol, 0.5, 1) == doctest::Approx(std::sinh(0.5) * partial).epsilon(1e-14));
    CHECK(eval_solution(sol, 0.3, 0) == doctest::Approx(std::sinh(0.3)).epsilon(1e-15));

    const auto sol3 = solve(builtin_problem("example3").problem);
    CHECK(eval_solution(sol3, 1, 0) == doctest::Approx(2).epsilon(1e-15));
}

TEST_CASE("order 2")
{
    auto p = builtin_problem("example1").problem;
    p.order = 2;
    const auto sol = solve(p);
    CHECK(sol.order() == 2);
    CHECK(eval_solution(sol, 0.7, 0.3) == doctest::Approx(std::sinh(0.7) * (1 - 0.6 + 2 * 0.09)));
    CHECK(eval_solution(sol, 0, 0.8) == 0);
}

TEST_CASE("residual")
{
    const auto sol = solve(builtin_problem("example1").problem);
    CHECK(std::abs(residual(sol, 0.5, 0.1)) < 1e-12);
    auto p3 = builtin_problem("example3").problem;
    p3.order = 10;
    const auto sol3 = solve(p3);
    CHECK(std::abs(residual(sol3, 0.6, 0)) < 1e-10);
    // the defect grows like t^(N-1)
    CHECK(std::abs(residual(sol3, 0.6, 0.5)) > std::abs(residual(sol3, 0.6, 0.1)));
}

TEST_CASE("backend agreement at the nodes")
{
    for (const auto &name : builtin_names()) {
        const auto &p = builtin_problem(name).problem;
        const auto sym = solve(p);
        const auto grid = solve(p, {backend::grid, 64});
        for (std::size_t k = 0; k <= 12; ++k) {
            const auto a = values_at_nodes(sym.coeffs[k], *grid.grid);
            const auto &b = grid.coeffs[k].as_grid().values;
            for (std::size_t j = 0; j < a.size(); ++j) {
                CHECK(std::abs((a[j] - b[j]).convert_to<double>()) <= 1e-8);
            }
        }
    }
}

TEST_CASE("superposition for linear problems")
{
    TelegraphProblem a;
    a.alpha = 0.8;
    a.beta = 1.5;
    a.h0 = parse_expr("sin(x)");
    a.h1 = parse_expr("x^2");
    a.forcing = parse_expr("t*cos(x)");
    a.order = 12;
    TelegraphProblem b = a;
    b.h0 = parse_expr("x");
    b.h1 = parse_expr("exp(x)");
    b.forcing = parse_expr("exp(-t)*x");
    TelegraphProblem ab = a;
    ab.h0 = a.h0 + b.h0;
    ab.h1 = a.h1 + b.h1;
    ab.forcing = a.forcing + b.forcing;

    const auto sa = solve(a), sb = solve(b), sab = solve(ab);
    for (double x : {0.1, 0.5, 0.9}) {
        for (double t : {0.2, 0.7, 1.0}) {
            const double lhs = eval_solution(sab, x, t);
            const double rhs = eval_solution(sa, x, t) + eval_solution(sb, x, t);
            CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("nonlinear terms only see computed coefficients")
{
    // a cubic nonlinearity couples every lower order; the grid and symbolic
    // paths share the evaluator, which rejects anything but the prefix
    TelegraphProblem p;
    p.alpha = 0.5;
    p.h0 = parse_expr("sin(pi*x)");
    p.h1 = parse_expr("0");
    p.nonlinearity = parse_nonlinearity("0.3*w^3 - exp(w)");
    p.order = 8;
    const auto sym = solve(p);
    const auto grid = solve(p, {backend::grid, 64});
    for (std::size_t k = 0; k <= 8; ++k) {
        for (double x : {0.2, 0.5}) {
            CHECK(eval_at(sym.coeffs[k], x) == doctest::Approx(eval_at(grid.coeffs[k], x)).epsilon(1e-9));
        }
    }
    // defect of order t^(N-1): halving t divides it by about 2^7
    CHECK(std::abs(residual(sym, 0.4, 0.05)) > 60 * std::abs(residual(sym, 0.4, 0.025)));
}

TEST_CASE("validation and diagnostics")
{
    auto p = zero_problem();
    p.order = 1;
    CHECK_THROWS_AS(solve(p), std::invalid_argument);
    p = zero_problem();
    p.h0 = parse_expr("t");
    CHECK_THROWS_AS(solve(p), std::invalid_argument);
    p = zero_problem();
    p.domain = {1, 0, 1};
    CHECK_THROWS_AS(solve(p), std::invalid_argument);

    p = zero_problem();
    p.g0 = parse_expr("0");
    const auto sol = solve(p);
    CHECK(sol.warnings.size() == 1);
}
