#include <telegraph/convergence.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

namespace telegraph
{

double term_norm(const SeriesSolution &sol, std::size_t i)
{
    if (i >= sol.coeffs.size()) {
        throw std::out_of_range("term index beyond the truncation order");
    }
    const double T = sol.problem.domain.T;
    const double two_i1 = 2.0 * static_cast<double>(i) + 1.0;
    return l2_norm(sol.coeffs[i], sol.problem.domain) * std::sqrt(std::pow(T, two_i1) / two_i1);
}

ConvergenceReport analyze_convergence(const SeriesSolution &sol, double zero_threshold)
{
    ConvergenceReport r;
    for (std::size_t i = 0; i < sol.coeffs.size(); ++i) {
        r.term_norms.push_back(term_norm(sol, i));
    }
    const double largest = *std::max_element(r.term_norms.begin(), r.term_norms.end());
    r.zero_threshold = zero_threshold < 0 ? 1e-13 * largest : zero_threshold;
    r.w0_norm = r.term_norms.front();

    std::optional<std::size_t> prev;
    for (std::size_t i = 0; i < r.term_norms.size(); ++i) {
        if (r.term_norms[i] <= r.zero_threshold) {
            r.skipped.push_back(i);
            continue;
        }
        if (prev) {
            DeltaEntry d;
            d.i = *prev;
            d.j = i;
            d.value = r.term_norms[i] / r.term_norms[*prev];
            d.rate = std::pow(d.value, 1.0 / static_cast<double>(i - *prev));
            r.deltas.push_back(d);
        }
        prev = i;
    }
    for (std::size_t n = 0; n + 1 < r.term_norms.size(); ++n) {
        const double a = r.term_norms[n];
        r.strict_deltas.push_back(a == 0 ? 0.0 : r.term_norms[n + 1] / a);
    }
    r.vacuous = r.deltas.empty();
    for (const auto &d : r.deltas) {
        r.verdict = r.verdict && d.value < 1;
        r.delta_max = std::max(r.delta_max, d.value);
        r.rate_max = std::max(r.rate_max, d.rate);
    }
    return r;
}

std::optional<double> tail_bound(double delta, std::size_t m, std::size_t n, double w0_norm)
{
    if (n < m) {
        throw std::invalid_argument("tail_bound needs n >= m");
    }
    if (delta < 0 || delta >= 1) {
        return std::nullopt;
    }
    const double dm = static_cast<double>(m);
    const double span = static_cast<double>(n - m);
    return std::pow(delta, dm + 1) * (1 - std::pow(delta, span)) / (1 - delta) * w0_norm;
}

double partial_sum_bound(double delta, std::size_t m, std::size_t n, double w0_norm)
{
    if (n < m) {
        throw std::invalid_argument("partial_sum_bound needs n >= m");
    }
    double sum = 0;
    for (std::size_t i = m + 1; i <= n; ++i) {
        sum += std::pow(delta, static_cast<double>(i));
    }
    return sum * w0_norm;
}

double partial_sum_distance(const SeriesSolution &sol, std::size_t m, std::size_t n)
{
    if (n < m || n > sol.order()) {
        throw std::invalid_argument("partial_sum_distance needs m <= n <= N");
    }
    using rule = boost::math::quadrature::gauss<double, 40>;
    const auto &d = sol.problem.domain;

    // Gauss-Legendre nodes/weights on [a, b] (the library stores half the symmetric rule)
    auto nodes = [](double a, double b) {
        std::vector<std::pair<double, double>> out;
        const auto &xs = rule::abscissa();
        const auto &ws = rule::weights();
        const double h = 0.5 * (b - a);
        const double c = 0.5 * (b + a);
        for (std::size_t k = 0; k < xs.size(); ++k) {
            if (xs[k] == 0) {
                out.emplace_back(c, h * ws[k]);
            } else {
                out.emplace_back(c - h * xs[k], h * ws[k]);
                out.emplace_back(c + h * xs[k], h * ws[k]);
            }
        }
        return out;
    };
    const auto xq = nodes(d.x_lo, d.x_hi);
    const auto tq = nodes(0, d.T);

    double total = 0;
    std::vector<double> cx(n + 1);
    for (const auto &[x, wx] : xq) {
        for (std::size_t i = m + 1; i <= n; ++i) {
            cx[i] = eval_at(sol.coeffs[i], x);
        }
        for (const auto &[t, wt] : tq) {
            double s = 0;
            for (std::size_t i = n; i > m; --i) {
                s = s * t + cx[i];
            }
            s *= std::pow(t, static_cast<double>(m + 1));
            total += wx * wt * s * s;
        }
    }
    return std::sqrt(total);
}

} // namespace telegraph
