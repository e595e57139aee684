#pragma once

// Truncated power series in t over a generic coefficient algebra.
//
// A series of order N holds plain coefficients c_0..c_N, i.e. sum c_k t^k.
// The coefficient type C is described by coefficient_traits<C>, which must
// provide add, mul, scale (by an extended-precision scalar), pointwise
// sin/cos/exp and a zero test.

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <telegraph/errors.hpp>
#include <telegraph/expr.hpp>
#include <telegraph/real.hpp>

namespace telegraph
{

template <typename C>
struct coefficient_traits;

template <>
struct coefficient_traits<double> {
    static constexpr double zero_tolerance = 1e-14;

    static double zero_like(const double &)
    {
        return 0.0;
    }
    static bool is_zero(const double &c)
    {
        return std::fabs(c) < zero_tolerance;
    }
    static double add(const double &a, const double &b)
    {
        return a + b;
    }
    static double mul(const double &a, const double &b)
    {
        return a * b;
    }
    static double scale(const double &a, const real_ext &s)
    {
        return a * s.convert_to<double>();
    }
    static double sin(const double &a)
    {
        return std::sin(a);
    }
    static double cos(const double &a)
    {
        return std::cos(a);
    }
    static double exp(const double &a)
    {
        return std::exp(a);
    }
};

// x-only (or any) expressions; every result is kept in simplified form.
template <>
struct coefficient_traits<expr> {
    static expr zero_like(const expr &)
    {
        return expr::constant(0);
    }
    static bool is_zero(const expr &c)
    {
        return simplify(c).is_zero();
    }
    static expr add(const expr &a, const expr &b)
    {
        return simplify(expr::add({a, b}));
    }
    static expr mul(const expr &a, const expr &b)
    {
        return simplify(expr::mul({a, b}));
    }
    static expr scale(const expr &a, const real_ext &s)
    {
        return simplify(expr::mul({expr::constant(s), a}));
    }
    static expr sin(const expr &a)
    {
        return simplify(expr::sin(a));
    }
    static expr cos(const expr &a)
    {
        return simplify(expr::cos(a));
    }
    static expr exp(const expr &a)
    {
        return simplify(expr::exp(a));
    }
};

template <typename C>
class TimeSeries
{
public:
    using traits = coefficient_traits<C>;

    TimeSeries() = default;

    explicit TimeSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("TimeSeries needs at least one coefficient");
        }
    }

    // order N, every coefficient set to `fill`
    TimeSeries(std::size_t order, const C &fill) : coeffs_(order + 1, fill) {}

    std::size_t order() const noexcept
    {
        return coeffs_.size() - 1;
    }
    const C &operator[](std::size_t k) const
    {
        return coeffs_[k];
    }
    C &operator[](std::size_t k)
    {
        return coeffs_[k];
    }
    const std::vector<C> &coeffs() const noexcept
    {
        return coeffs_;
    }

private:
    std::vector<C> coeffs_;
};

namespace detail
{

template <typename C>
void require_same_order(const TimeSeries<C> &u, const TimeSeries<C> &v, const char *op)
{
    if (u.order() != v.order()) {
        throw order_mismatch(std::string(op) + ": orders " + std::to_string(u.order()) + " and "
                             + std::to_string(v.order()) + " differ");
    }
}

} // namespace detail

// Single-coefficient kernels. Each reads only entries 0..k of its inputs
// (and 0..k-1 of the series being built), which is what lets the solver
// grow a series one coefficient at a time.

// sum_{j=0..k} u_j v_{k-j}
template <typename C, typename U, typename V>
C cauchy_term(const U &u, const V &v, std::size_t k)
{
    using tr = coefficient_traits<C>;
    C acc = tr::mul(u[0], v[k]);
    for (std::size_t j = 1; j <= k; ++j) {
        acc = tr::add(acc, tr::mul(u[j], v[k - j]));
    }
    return acc;
}

// (1/k) sum_{j=1..k} j u_j w_{k-j}, k >= 1
template <typename C, typename U, typename W>
C weighted_term(const U &u, const W &w, std::size_t k)
{
    using tr = coefficient_traits<C>;
    C acc = tr::mul(u[1], w[k - 1]);
    for (std::size_t j = 2; j <= k; ++j) {
        acc = tr::add(acc, tr::scale(tr::mul(u[j], w[k - j]), real_ext(j)));
    }
    return tr::scale(acc, real_ext(1) / real_ext(k));
}

// Coefficient k of sin(u) and cos(u) given s, c filled up to k-1.
template <typename C, typename U, typename S>
std::pair<C, C> sin_cos_term(const U &u, const S &s, const S &c, std::size_t k)
{
    using tr = coefficient_traits<C>;
    if (k == 0) {
        return {tr::sin(u[0]), tr::cos(u[0])};
    }
    return {weighted_term<C>(u, c, k), tr::scale(weighted_term<C>(u, s, k), real_ext(-1))};
}

// Coefficient k of exp(u) given e filled up to k-1.
template <typename C, typename U, typename E>
C exp_term(const U &u, const E &e, std::size_t k)
{
    using tr = coefficient_traits<C>;
    if (k == 0) {
        return tr::exp(u[0]);
    }
    return weighted_term<C>(u, e, k);
}

template <typename C>
TimeSeries<C> ts_add(const TimeSeries<C> &u, const TimeSeries<C> &v)
{
    detail::require_same_order(u, v, "ts_add");
    std::vector<C> out;
    out.reserve(u.order() + 1);
    for (std::size_t k = 0; k <= u.order(); ++k) {
        out.push_back(coefficient_traits<C>::add(u[k], v[k]));
    }
    return TimeSeries<C>(std::move(out));
}

template <typename C>
TimeSeries<C> ts_scale(const TimeSeries<C> &u, const real_ext &s)
{
    std::vector<C> out;
    out.reserve(u.order() + 1);
    for (const auto &c : u.coeffs()) {
        out.push_back(coefficient_traits<C>::scale(c, s));
    }
    return TimeSeries<C>(std::move(out));
}

template <typename C>
TimeSeries<C> ts_neg(const TimeSeries<C> &u)
{
    return ts_scale(u, real_ext(-1));
}

// Coefficientwise product with another series (not the Cauchy product).
template <typename C>
TimeSeries<C> ts_scale(const TimeSeries<C> &u, const TimeSeries<C> &r)
{
    detail::require_same_order(u, r, "ts_scale");
    std::vector<C> out;
    out.reserve(u.order() + 1);
    for (std::size_t k = 0; k <= u.order(); ++k) {
        out.push_back(coefficient_traits<C>::mul(u[k], r[k]));
    }
    return TimeSeries<C>(std::move(out));
}

template <typename C>
TimeSeries<C> ts_mul(const TimeSeries<C> &u, const TimeSeries<C> &v)
{
    detail::require_same_order(u, v, "ts_mul");
    std::vector<C> out;
    out.reserve(u.order() + 1);
    for (std::size_t k = 0; k <= u.order(); ++k) {
        out.push_back(cauchy_term<C>(u, v, k));
    }
    return TimeSeries<C>(std::move(out));
}

template <typename C>
std::pair<TimeSeries<C>, TimeSeries<C>> ts_sin_cos(const TimeSeries<C> &u)
{
    std::vector<C> s, c;
    s.reserve(u.order() + 1);
    c.reserve(u.order() + 1);
    for (std::size_t k = 0; k <= u.order(); ++k) {
        auto [sk, ck] = sin_cos_term<C>(u, s, c, k);
        s.push_back(std::move(sk));
        c.push_back(std::move(ck));
    }
    return {TimeSeries<C>(std::move(s)), TimeSeries<C>(std::move(c))};
}

template <typename C>
TimeSeries<C> ts_exp(const TimeSeries<C> &u)
{
    std::vector<C> e;
    e.reserve(u.order() + 1);
    for (std::size_t k = 0; k <= u.order(); ++k) {
        e.push_back(exp_term<C>(u, e, k));
    }
    return TimeSeries<C>(std::move(e));
}

// Horner evaluation at t.
template <typename C>
C ts_eval(const TimeSeries<C> &u, const real_ext &t)
{
    using tr = coefficient_traits<C>;
    C acc = u[u.order()];
    for (std::size_t k = u.order(); k-- > 0;) {
        acc = tr::add(tr::scale(acc, t), u[k]);
    }
    return acc;
}

} // namespace telegraph
