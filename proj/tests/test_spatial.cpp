#include <doctest.h>

#include <cmath>

#include <telegraph/errors.hpp>
#include <telegraph/spatial.hpp>

using namespace telegraph;

namespace
{

SpatialField sym(const char *s)
{
    return SpatialField::symbolic(parse_expr(s));
}

double to_d(const real_ext &v)
{
    return v.convert_to<double>();
}

const Domain unit{0, 1, 1};
const Domain example3_domain{0, 2, 1};

} // namespace

TEST_CASE("symbolic d2x")
{
    CHECK(is_zero(d2x(sym("3.5"))));
    const auto f = d2x(sym("sinh(x)"));
    CHECK(f.as_symbolic().e == simplify(parse_expr("sinh(x)")));
    CHECK_THROWS_AS(sym("x*t"), std::invalid_argument);
}

TEST_CASE("grid d2x of sin on 64 nodes")
{
    const auto grid = ChebyshevGrid::get(64, 0, 1);
    const auto f = d2x(SpatialField::sample(parse_expr("sin(x)"), grid));
    double worst = 0;
    for (std::size_t j = 0; j < grid->size(); ++j) {
        const double x = to_d(grid->nodes()[j]);
        worst = std::max(worst, std::abs(to_d(f.as_grid().values[j]) + std::sin(x)));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("grid d2x is exact on low-degree polynomials")
{
    const auto grid = ChebyshevGrid::get(16, -1, 2);
    // degree 13 = M - 3
    const auto f = d2x(SpatialField::sample(parse_expr("x^13 - 2*x^7 + x^2"), grid));
    for (std::size_t j = 0; j < grid->size(); ++j) {
        const double x = to_d(grid->nodes()[j]);
        const double exact = 156 * std::pow(x, 11) - 84 * std::pow(x, 5) + 2;
        CHECK(std::abs(to_d(f.as_grid().values[j]) - exact) <= 1e-11 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("pointwise")
{
    CHECK(is_zero(pointwise(sym("0"), pointwise_fn::sin)));
    const auto s = pointwise(sym("1 - cos(pi*x)"), pointwise_fn::sin);
    CHECK(eval_at(s, 0.5) == doctest::Approx(std::sin(1.0)).epsilon(1e-15));

    const auto grid = ChebyshevGrid::get(64, 0, 2);
    const expr e = parse_expr("1 - cos(pi*x)");
    for (auto fn : {pointwise_fn::sin, pointwise_fn::cos, pointwise_fn::exp}) {
        const auto a = values_at_nodes(pointwise(SpatialField::symbolic(e), fn), *grid);
        const auto b = values_at_nodes(pointwise(SpatialField::sample(e, grid), fn), *grid);
        for (std::size_t j = 0; j < a.size(); ++j) {
            CHECK(std::abs(to_d(a[j] - b[j])) < 1e-14);
        }
    }
}

TEST_CASE("l2 norm")
{
    CHECK(l2_norm(sym("0"), unit) == 0);
    CHECK(l2_norm(sym("sinh(x)"), unit) == doctest::Approx(std::sqrt(std::sinh(2.0) / 4 - 0.5)).epsilon(1e-12));
    CHECK(l2_norm(sym("1 - cos(pi*x)"), example3_domain) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    const auto f = sym("sin(3*x) + x^2");
    CHECK(l2_norm(real_ext(-2.5) * f, unit) == doctest::Approx(2.5 * l2_norm(f, unit)).epsilon(1e-13));
}

TEST_CASE("evaluation")
{
    CHECK(eval_at(sym("sinh(x)"), 0.1) == doctest::Approx(0.10016675).epsilon(1e-8));
    CHECK(eval_at(sym("1 - cos(pi*x)"), 1.0) == doctest::Approx(2).epsilon(1e-15));

    const auto grid = ChebyshevGrid::get(32, 0, 1);
    const auto g = SpatialField::sample(parse_expr("exp(x)"), grid);
    CHECK(eval_at_ext(g, grid->nodes()[5]) == g.as_grid().values[5]);
    CHECK_THROWS_AS(eval_at(g, 1.5), domain_error);
}

TEST_CASE("sup norm")
{
    CHECK(sup_norm(sym("0"), unit) == 0);
    CHECK(sup_norm(sym("sin(x)"), unit) == doctest::Approx(std::sin(1.0)));
    CHECK(sup_norm(sym("sinh(x)"), unit) == doctest::Approx(1.1752012).epsilon(1e-7));
}

TEST_CASE("backend equivalence on smooth inputs")
{
    const char *inputs[] = {"sinh(x)", "sin(x)*cos(2*x)", "exp(-x)*x^3", "1 - cos(pi*x)", "cosh(x)^2 - x"};
    for (const Domain &d : {unit, example3_domain}) {
        const auto grid = ChebyshevGrid::get(64, d.x_lo, d.x_hi);
        for (const char *text : inputs) {
            const expr e = parse_expr(text);
            const auto s = SpatialField::symbolic(e);
            const auto g = SpatialField::sample(e, grid);
            CHECK(l2_norm(s, d) == doctest::Approx(l2_norm(g, d)).epsilon(1e-9));
            const auto a = values_at_nodes(d2x(s), *grid);
            const auto b = values_at_nodes(d2x(g), *grid);
            for (std::size_t j = 0; j < a.size(); ++j) {
                CHECK(std::abs(to_d(a[j] - b[j])) < 1e-9);
            }
            for (double x : {d.x_lo + 0.013, 0.5 * (d.x_lo + d.x_hi) + 0.1, d.x_hi - 0.02}) {
                CHECK(std::abs(eval_at(s, x) - eval_at(g, x)) < 1e-9);
            }
        }
    }
}

TEST_CASE("mixed backends are rejected")
{
    const auto grid = ChebyshevGrid::get(16, 0, 1);
    const auto g = SpatialField::sample(parse_expr("x"), grid);
    CHECK_THROWS_AS(g + sym("x"), backend_mismatch);
    CHECK_THROWS_AS(sym("x") * g, backend_mismatch);
    const auto other = SpatialField::sample(parse_expr("x"), ChebyshevGrid::get(17, 0, 1));
    CHECK_THROWS_AS(g + other, backend_mismatch);
}

TEST_CASE("grid cache hands out one instance")
{
    CHECK(ChebyshevGrid::get(40, 0, 1).get() == ChebyshevGrid::get(40, 0, 1).get());
    CHECK_THROWS_AS(ChebyshevGrid(4, 0, 1), std::invalid_argument);
}

TEST_CASE("adaptive Simpson")
{
    CHECK(quadrature::adaptive_simpson([](double x) { return std::exp(x); }, 0, 1)
          == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-12));
    CHECK_THROWS_AS(quadrature::adaptive_simpson([](double x) { return std::sin(1 / (x + 1e-9)); }, 0, 1, 1e-14, 3),
                    numeric_error);
}
