// Acceptance suite: one PASS/FAIL line per criterion, tolerances fixed here.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <telegraph/app.hpp>
#include <telegraph/convergence.hpp>
#include <telegraph/oracle.hpp>

#include "random_expr.hpp"

using namespace telegraph;
namespace fs = std::filesystem;
using big = boost::multiprecision::cpp_bin_float_50;

namespace
{

constexpr double delta_tol = 1e-8;
constexpr double delta_time_limit = 5.0;
constexpr double pattern_tol = 1e-10;
constexpr double remainder_rel_tol = 1e-12;
constexpr double published_ratio_lo = 0.1;
constexpr double published_ratio_hi = 10;
constexpr double bound_slack = 1e-12;
constexpr double backend_tol = 1e-8;
constexpr double grid_time_limit = 2.0;
constexpr double fd_series_tol = 1e-3;
constexpr double fd_ratio_lo = 3.6;
constexpr double fd_ratio_hi = 4.4;
constexpr int property_cases = 200;
constexpr double sin_cos_tol = 1e-12;
constexpr double exp_group_tol = 1e-13;
constexpr double assoc_rel_tol = 1e-14;
constexpr double diff_rel_tol = 1e-6;

int failures = 0;

void report(int id, const char *title, bool ok, const std::string &detail)
{
    std::printf("[%s] criterion %d, %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
    std::fflush(stdout);
    if (!ok) {
        ++failures;
    }
}

std::string fmt(const char *f, double a)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

big factorial(int k)
{
    big f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

void delta_reproduction()
{
    const double printed[3][3] = {{0.7745966694, 0.5634361702, 0.4409585516},
                                  {0.06211299938, 0.02773500981, 0.01561561843},
                                  {0.3872983346, 0.2817180849, 0.2204792759}};
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0;
    bool ok = true;
    int row = 0;
    for (const auto &name : builtin_names()) {
        for (std::size_t order : {8, 15}) {
            auto p = builtin_problem(name).problem;
            p.order = order;
            const auto r = analyze_convergence(solve(p));
            if (r.deltas.size() < 4) {
                ok = false;
                continue;
            }
            for (int n = 1; n <= 3; ++n) {
                worst = std::max(worst, std::abs(r.deltas[n].value - printed[row][n - 1]));
            }
        }
        ++row;
    }
    const double elapsed = seconds_since(t0);
    ok = ok && worst <= delta_tol && elapsed < delta_time_limit;
    report(1, "delta-ratio reproduction", ok,
           "9 printed values at N = 8 and N = 15, max |delta - printed| = " + fmt("%.2e", worst) + " (tol 1e-8); "
               + fmt("%.3f", elapsed) + " s (limit 5 s)");
}

void closed_form_recovery()
{
    double worst = 0;
    for (const auto &name : builtin_names()) {
        const auto &b = builtin_problem(name);
        const auto sol = solve(b.problem);
        const auto &d = b.problem.domain;
        for (int k = 0; k <= 8; ++k) {
            for (int s = 0; s <= 20; ++s) {
                const double x = d.x_lo + (d.x_hi - d.x_lo) * s / 20.0;
                const double a = (factorial(k) * big(eval_at(sol.coeffs[k], x))).convert_to<double>();
                double expected = 0;
                if (name == "example1") {
                    expected = std::pow(-2.0, k) * std::sinh(x);
                } else if (name == "example2") {
                    expected = (k % 2) ? 0 : ((k / 2) % 2 ? -1 : 1) * std::sin(x);
                } else {
                    expected = (k % 2 ? -1 : 1) * (1 - std::cos(M_PI * x));
                }
                worst = std::max(worst, std::abs(a - expected));
            }
        }
    }
    report(2, "closed-form recovery", worst <= pattern_tol,
           "k!c_k vs hand-derived a_k, k <= 8, 21 points per example, max error = " + fmt("%.2e", worst)
               + " (tol 1e-10)");
}

// Scalar oracle: profile(x) * |f(t) - sum_{k<=n} f_k t^k| in 50 digits, built
// from the scalar exact solutions e^{-2t}, cos t and e^{-t}.
double scalar_oracle(const std::string &name, double xd, double td, std::size_t n)
{
    const big x = xd, t = td;
    const big pi = boost::math::constants::pi<big>();
    big profile, exact, partial = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        big c;
        const int ki = static_cast<int>(k);
        if (name == "example1") {
            c = pow(big(-2), ki) / factorial(ki);
        } else if (name == "example2") {
            c = (k % 2) ? big(0) : big((k / 2) % 2 ? -1 : 1) / factorial(ki);
        } else {
            c = big(k % 2 ? -1 : 1) / factorial(ki);
        }
        partial += c * pow(t, ki);
    }
    if (name == "example1") {
        profile = sinh(x);
        exact = exp(-2 * t);
    } else if (name == "example2") {
        profile = sin(x);
        exact = cos(t);
    } else {
        profile = 1 - cos(pi * x);
        exact = exp(-t);
    }
    return (abs(profile * (exact - partial))).convert_to<double>();
}

void truncation_oracle()
{
    double worst_rel = 0;
    double ratio_lo = 1e300, ratio_hi = 0;
    for (const auto &name : builtin_names()) {
        const auto &b = builtin_problem(name);
        const auto sol = solve(b.problem);
        for (double x : table_xs()) {
            for (std::size_t n = 10; n <= 15; ++n) {
                const double ours = abs_error(sol, b.exact, x, 1, n);
                const double oracle = scalar_oracle(name, x, 1, n);
                worst_rel = std::max(worst_rel, std::abs(ours - oracle) / oracle);
            }
        }
        for (const auto &row : published_errors(name)) {
            for (std::size_t c = 0; c < 6; ++c) {
                const double ratio = row.taylor[c] / scalar_oracle(name, row.x, 1, 10 + c);
                ratio_lo = std::min(ratio_lo, ratio);
                ratio_hi = std::max(ratio_hi, ratio);
            }
        }
    }
    const bool ok = worst_rel <= remainder_rel_tol && ratio_lo >= published_ratio_lo && ratio_hi <= published_ratio_hi;
    report(3, "truncation-error oracle", ok,
           "abs_error vs 50-digit scalar remainder, N = 10..15, x = 0.1..0.9, 3 examples, max rel diff = "
               + fmt("%.2e", worst_rel) + " (tol 1e-12); published/oracle ratios in [" + fmt("%.3f", ratio_lo) + ", "
               + fmt("%.3f", ratio_hi) + "] (allowed [0.1, 10])");
}

void bound_soundness()
{
    double worst = -1e300;
    std::string rates;
    for (const auto &name : builtin_names()) {
        const auto sol = solve(builtin_problem(name).problem);
        const auto r = analyze_convergence(sol);
        rates += (rates.empty() ? "" : ", ") + fmt("%.4f", r.rate_max);
        for (std::size_t n = 1; n <= 15; ++n) {
            for (std::size_t m = 0; m < n; ++m) {
                const double measured = partial_sum_distance(sol, m, n);
                const double bound = partial_sum_bound(r.rate_max, m, n, r.w0_norm);
                worst = std::max(worst, measured - bound);
            }
        }
    }
    report(4, "convergence-bound soundness", worst <= bound_slack,
           "all 0 <= m < n <= 15, max(||S_n - S_m|| - bound) = " + fmt("%.2e", worst)
               + " (slack 1e-12); delta = largest per-order ratio: " + rates);
}

void backend_equivalence()
{
    double worst = 0, slowest = 0;
    for (const auto &name : builtin_names()) {
        const auto &p = builtin_problem(name).problem;
        const auto sym = solve(p);
        const auto t0 = std::chrono::steady_clock::now();
        const auto grid = solve(p, {backend::grid, 64});
        slowest = std::max(slowest, seconds_since(t0));
        for (std::size_t k = 0; k <= 12; ++k) {
            const auto a = values_at_nodes(sym.coeffs[k], *grid.grid);
            const auto &g = grid.coeffs[k].as_grid().values;
            for (std::size_t j = 0; j < a.size(); ++j) {
                worst = std::max(worst, std::abs((a[j] - g[j]).convert_to<double>()));
            }
        }
    }
    report(5, "backend equivalence", worst <= backend_tol && slowest < grid_time_limit,
           "64 Chebyshev nodes, k <= 12, max |grid - symbolic| = " + fmt("%.2e", worst) + " (tol 1e-8); slowest grid solve "
               + fmt("%.3f", slowest) + " s (limit 2 s)");
}

double fd_error(const std::string &name, double step)
{
    const auto &b = builtin_problem(name);
    const auto snap = fd_reference(b.problem, step, step, 0.5, b.exact);
    double worst = 0;
    for (std::size_t j = 0; j < snap.xs.size(); ++j) {
        worst = std::max(worst, std::abs(snap.values[j] - eval(b.exact, snap.xs[j], 0.5)));
    }
    return worst;
}

void fd_cross_check()
{
    const auto &b3 = builtin_problem("example3");
    const auto series = solve(b3.problem);
    const auto snap = fd_reference(b3.problem, 1.0 / 400, 1.0 / 400, 0.5, b3.exact);
    double gap = 0;
    for (std::size_t j = 1; j + 1 < snap.xs.size(); ++j) {
        gap = std::max(gap, std::abs(snap.values[j] - eval_solution(series, snap.xs[j], 0.5)));
    }
    const double r1 = fd_error("example1", 1.0 / 100) / fd_error("example1", 1.0 / 200);
    const double r2 = fd_error("example2", 1.0 / 100) / fd_error("example2", 1.0 / 200);
    const bool ok = gap <= fd_series_tol && r1 >= fd_ratio_lo && r1 <= fd_ratio_hi && r2 >= fd_ratio_lo
                    && r2 <= fd_ratio_hi;
    report(6, "finite-difference cross-check", ok,
           "example3 FD(1/400) vs N = 15 series at t = 0.5, sup interior = " + fmt("%.2e", gap)
               + " (tol 1e-3); halving ratios " + fmt("%.3f", r1) + ", " + fmt("%.3f", r2) + " (allowed [3.6, 4.4])");
}

void property_suites()
{
    using S = TimeSeries<double>;
    std::mt19937 rng(20240607);
    std::uniform_real_distribution<double> u(-1, 1);
    auto random_series = [&](std::size_t order) {
        std::vector<double> c(order + 1);
        for (auto &v : c) {
            v = u(rng);
        }
        return S(std::move(c));
    };

    double sc = 0, eg = 0, as = 0, df = 0;
    for (int n = 0; n < property_cases; ++n) {
        const std::size_t order = 1 + n % 10;
        const S a = random_series(order);
        auto [s, c] = ts_sin_cos(a);
        const S one = ts_add(ts_mul(s, s), ts_mul(c, c));
        const S g = ts_mul(ts_exp(a), ts_exp(ts_neg(a)));
        for (std::size_t k = 0; k <= order; ++k) {
            const double target = k == 0 ? 1 : 0;
            sc = std::max(sc, std::abs(one[k] - target));
            eg = std::max(eg, std::abs(g[k] - target));
        }
        const S b = random_series(order), w = random_series(order);
        const S l = ts_mul(ts_mul(a, b), w);
        const S r = ts_mul(a, ts_mul(b, w));
        for (std::size_t k = 0; k <= order; ++k) {
            as = std::max(as, std::abs(l[k] - r[k]) / std::max(1.0, std::abs(l[k])));
        }
    }

    testing::random_expr gen(4242);
    int trees = 0;
    while (trees < property_cases) {
        const expr e = gen(5);
        if (!testing::tame(e, gen)) {
            continue;
        }
        ++trees;
        const expr d = diff(e, var::t);
        for (int p = 0; p < 100; ++p) {
            const double x = gen.uniform(-1, 1);
            const double t = gen.uniform(-1, 1);
            const real_ext h = real_ext(1) / 1000000;
            const real_ext fd = (eval_ext(e, x, t + h) - eval_ext(e, x, t - h)) / (2 * h);
            const double dv = eval(d, x, t);
            df = std::max(df, std::abs(dv - fd.convert_to<double>()) / std::max(1.0, std::abs(dv)));
        }
    }
    const bool ok = sc <= sin_cos_tol && eg <= exp_group_tol && as <= assoc_rel_tol && df <= diff_rel_tol;
    report(7, "series-algebra property suites", ok,
           std::to_string(property_cases) + " cases each: sin^2+cos^2 " + fmt("%.1e", sc) + " (tol 1e-12), exp group "
               + fmt("%.1e", eg) + " (tol 1e-13), Cauchy associativity " + fmt("%.1e", as)
               + " rel (tol 1e-14), d/dt vs central difference " + fmt("%.1e", df) + " rel (tol 1e-6, 100 points per tree)");
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "telegraph");
    std::vector<char *> argv;
    for (auto &a : args) {
        argv.push_back(a.data());
    }
    std::ostringstream out, err;
    return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
}

void determinism()
{
    const auto root = fs::temp_directory_path() / "telegraph_acceptance";
    fs::remove_all(root);
    bool ok = true;
    int files = 0;
    for (const auto &name : builtin_names()) {
        for (const char *b : {"symbolic", "grid"}) {
            const auto first = root / (name + b + "_1");
            const auto second = root / (name + b + "_2");
            const auto third = root / (name + b + "_3");
            const std::vector<std::string> common{"--problem", name, "--backend", b, "--report", "all", "--x-step", "0.01"};
            auto a1 = common, a2 = common;
            a1.insert(a1.end(), {"--out", first.string()});
            a2.insert(a2.end(), {"--out", second.string()});
            ok = ok && run_cli(a1) == 0 && run_cli(a2) == 0
                 && run_cli({"--config", (first / "config.json").string(), "--out", third.string()}) == 0;
            for (const auto &entry : fs::directory_iterator(first)) {
                const auto f = entry.path().filename();
                const std::string ref = slurp(entry.path());
                ok = ok && ref == slurp(second / f) && ref == slurp(third / f);
                ++files;
            }
        }
    }
    fs::remove_all(root);
    report(8, "determinism", ok,
           std::to_string(files) + " artifacts from 6 configurations compared byte for byte across two runs and a "
                                   "config round trip");
}

} // namespace

int main()
{
    delta_reproduction();
    closed_form_recovery();
    truncation_oracle();
    bound_soundness();
    backend_equivalence();
    fd_cross_check();
    property_suites();
    determinism();
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
