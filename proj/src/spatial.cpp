#include <telegraph/spatial.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <telegraph/errors.hpp>

namespace telegraph
{

void Domain::validate() const
{
    if (!(x_lo < x_hi)) {
        throw std::invalid_argument("domain needs x_lo < x_hi");
    }
    if (!(T > 0)) {
        throw std::invalid_argument("domain needs T > 0");
    }
}

SpatialField SpatialField::symbolic(const expr &e)
{
    if (e.depends_on(var::t)) {
        throw std::invalid_argument("spatial field expression depends on t: " + to_string(e));
    }
    return SpatialField(SymbolicField{simplify(e)});
}

SpatialField SpatialField::on_grid(std::shared_ptr<const ChebyshevGrid> grid, std::vector<real_ext> values)
{
    if (!grid) {
        throw std::invalid_argument("grid field without a grid");
    }
    if (values.size() != grid->size()) {
        throw std::invalid_argument("grid field value count does not match the grid");
    }
    return SpatialField(GridField{std::move(grid), std::move(values)});
}

SpatialField SpatialField::sample(const expr &e, std::shared_ptr<const ChebyshevGrid> grid)
{
    if (e.depends_on(var::t)) {
        throw std::invalid_argument("spatial field expression depends on t: " + to_string(e));
    }
    const expr s = simplify(e);
    std::vector<real_ext> v;
    v.reserve(grid->size());
    for (const auto &x : grid->nodes()) {
        v.push_back(eval_ext(s, x, real_ext(0)));
    }
    return on_grid(std::move(grid), std::move(v));
}

SpatialField SpatialField::constant_like(const real_ext &c) const
{
    if (is_symbolic()) {
        return SpatialField(SymbolicField{expr::constant(c)});
    }
    const auto &g = as_grid();
    return SpatialField(GridField{g.grid, std::vector<real_ext>(g.values.size(), c)});
}

namespace
{

const ChebyshevGrid &common_grid(const GridField &a, const GridField &b)
{
    if (a.grid != b.grid
        && (a.grid->size() != b.grid->size() || a.grid->lo() != b.grid->lo() || a.grid->hi() != b.grid->hi())) {
        throw backend_mismatch("grid fields live on different Chebyshev grids");
    }
    return *a.grid;
}

template <typename Op>
SpatialField combine(const SpatialField &a, const SpatialField &b, Op op, const char *name)
{
    if (a.is_symbolic() != b.is_symbolic()) {
        throw backend_mismatch(std::string(name) + ": cannot mix symbolic and grid fields");
    }
    if (a.is_symbolic()) {
        return SpatialField::symbolic(op(a.as_symbolic().e, b.as_symbolic().e));
    }
    const auto &ga = a.as_grid();
    const auto &gb = b.as_grid();
    common_grid(ga, gb);
    std::vector<real_ext> v(ga.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = op(ga.values[i], gb.values[i]);
    }
    return SpatialField::on_grid(ga.grid, std::move(v));
}

} // namespace

SpatialField operator+(const SpatialField &a, const SpatialField &b)
{
    return combine(
        a, b,
        [](const auto &u, const auto &v) {
            using T = std::decay_t<decltype(u)>;
            if constexpr (std::is_same_v<T, expr>) {
                return simplify(expr::add({u, v}));
            } else {
                return T(u + v);
            }
        },
        "add");
}

SpatialField operator*(const SpatialField &a, const SpatialField &b)
{
    return combine(
        a, b,
        [](const auto &u, const auto &v) {
            using T = std::decay_t<decltype(u)>;
            if constexpr (std::is_same_v<T, expr>) {
                return simplify(expr::mul({u, v}));
            } else {
                return T(u * v);
            }
        },
        "mul");
}

SpatialField operator*(const real_ext &s, const SpatialField &a)
{
    if (a.is_symbolic()) {
        return SpatialField::symbolic(expr::mul({expr::constant(s), a.as_symbolic().e}));
    }
    const auto &g = a.as_grid();
    std::vector<real_ext> v(g.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = s * g.values[i];
    }
    return SpatialField::on_grid(g.grid, std::move(v));
}

SpatialField d2x(const SpatialField &f)
{
    if (f.is_symbolic()) {
        return SpatialField::symbolic(diff(diff(f.as_symbolic().e, var::x), var::x));
    }
    const auto &g = f.as_grid();
    return SpatialField::on_grid(g.grid, g.grid->second_derivative(g.values));
}

SpatialField pointwise(const SpatialField &f, pointwise_fn fn)
{
    if (f.is_symbolic()) {
        const expr &e = f.as_symbolic().e;
        switch (fn) {
            case pointwise_fn::sin:
                return SpatialField::symbolic(expr::sin(e));
            case pointwise_fn::cos:
                return SpatialField::symbolic(expr::cos(e));
            case pointwise_fn::exp:
                return SpatialField::symbolic(expr::exp(e));
        }
    }
    const auto &g = f.as_grid();
    std::vector<real_ext> v(g.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        switch (fn) {
            case pointwise_fn::sin:
                v[i] = boost::multiprecision::sin(g.values[i]);
                break;
            case pointwise_fn::cos:
                v[i] = boost::multiprecision::cos(g.values[i]);
                break;
            case pointwise_fn::exp:
                v[i] = boost::multiprecision::exp(g.values[i]);
                break;
        }
    }
    return SpatialField::on_grid(g.grid, std::move(v));
}

namespace quadrature
{

namespace
{

double simpson_step(const std::function<double(double)> &f, double a, double b, double fa, double fm, double fb,
                    double whole, double eps, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15 * eps) {
        return left + right + delta / 15;
    }
    if (depth <= 0) {
        char where[96];
        std::snprintf(where, sizeof where, "[%.17g, %.17g]", a, b);
        throw numeric_error(std::string("adaptive Simpson did not converge on ") + where);
    }
    return simpson_step(f, a, m, fa, flm, fm, left, eps / 2, depth - 1)
           + simpson_step(f, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)> &f, double a, double b, double tol, int max_depth)
{
    constexpr int panels = 16;
    const double h = (b - a) / panels;
    std::vector<double> xs(2 * panels + 1), fs(2 * panels + 1);
    for (int i = 0; i <= 2 * panels; ++i) {
        xs[i] = (i == 2 * panels) ? b : a + 0.5 * h * i;
        fs[i] = f(xs[i]);
    }
    double coarse = 0;
    for (int p = 0; p < panels; ++p) {
        coarse += h / 6 * (fs[2 * p] + 4 * fs[2 * p + 1] + fs[2 * p + 2]);
    }
    if (!std::isfinite(coarse)) {
        throw numeric_error("integrand is not finite (coefficient overflows double precision)");
    }
    const double eps = tol * std::fabs(coarse) / panels;
    double total = 0;
    for (int p = 0; p < panels; ++p) {
        const double whole = h / 6 * (fs[2 * p] + 4 * fs[2 * p + 1] + fs[2 * p + 2]);
        total += simpson_step(f, xs[2 * p], xs[2 * p + 2], fs[2 * p], fs[2 * p + 1], fs[2 * p + 2], whole, eps,
                              max_depth);
    }
    return total;
}

} // namespace quadrature

double l2_norm(const SpatialField &f, const Domain &domain)
{
    if (f.is_symbolic()) {
        const expr &e = f.as_symbolic().e;
        if (e.is_constant()) {
            return std::fabs(e.approx()) * std::sqrt(domain.x_hi - domain.x_lo);
        }
        const double integral = quadrature::adaptive_simpson(
            [&](double x) {
                const double v = eval(e, x, 0);
                return v * v;
            },
            domain.x_lo, domain.x_hi);
        return std::sqrt(integral);
    }
    const auto &g = f.as_grid();
    if (g.grid->lo() != domain.x_lo || g.grid->hi() != domain.x_hi) {
        throw backend_mismatch("l2_norm: grid interval differs from the domain");
    }
    const auto &w = g.grid->quadrature_weights();
    real_ext acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        acc += w[i] * g.values[i] * g.values[i];
    }
    return boost::multiprecision::sqrt(acc).convert_to<double>();
}

real_ext eval_at_ext(const SpatialField &f, const real_ext &x)
{
    if (f.is_symbolic()) {
        return eval_ext(f.as_symbolic().e, x, real_ext(0));
    }
    const auto &g = f.as_grid();
    return g.grid->interpolate(g.values, x);
}

double eval_at(const SpatialField &f, double x)
{
    if (f.is_symbolic()) {
        return eval(f.as_symbolic().e, x, 0);
    }
    return eval_at_ext(f, real_ext(x)).convert_to<double>();
}

double sup_norm(const SpatialField &f, const Domain &domain)
{
    constexpr int samples = 2001;
    double best = 0;
    for (int i = 0; i < samples; ++i) {
        const double x = (i == samples - 1) ? domain.x_hi
                                            : domain.x_lo + (domain.x_hi - domain.x_lo) * i / (samples - 1);
        best = std::max(best, std::fabs(eval_at(f, x)));
    }
    return best;
}

std::vector<real_ext> values_at_nodes(const SpatialField &f, const ChebyshevGrid &grid)
{
    if (!f.is_symbolic() && f.as_grid().grid.get() == &grid) {
        return f.as_grid().values;
    }
    std::vector<real_ext> v;
    v.reserve(grid.size());
    for (const auto &x : grid.nodes()) {
        v.push_back(eval_at_ext(f, x));
    }
    return v;
}

bool is_zero(const SpatialField &f)
{
    if (f.is_symbolic()) {
        return f.as_symbolic().e.is_zero();
    }
    const auto &v = f.as_grid().values;
    return std::all_of(v.begin(), v.end(), [](const real_ext &x) { return boost::multiprecision::fabs(x) < 1e-14; });
}

bool has_nonfinite(const SpatialField &f)
{
    if (f.is_symbolic()) {
        return false;
    }
    const auto &v = f.as_grid().values;
    return std::any_of(v.begin(), v.end(), [](const real_ext &x) { return !boost::multiprecision::isfinite(x); });
}

} // namespace telegraph
