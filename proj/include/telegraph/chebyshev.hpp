#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <telegraph/real.hpp>

namespace telegraph
{

// Chebyshev-Gauss-Lobatto collocation on [lo, hi].
//
// Nodes are stored in ascending order: x_j = lo + (hi - lo)(1 - cos(pi j / n)) / 2,
// j = 0..n, n = M - 1. All tables are built once in extended precision.
class ChebyshevGrid
{
public:
    ChebyshevGrid(std::size_t points, double lo, double hi);

    // Shared, lazily built instance per (points, lo, hi).
    static std::shared_ptr<const ChebyshevGrid> get(std::size_t points, double lo, double hi);

    std::size_t size() const noexcept
    {
        return nodes_.size();
    }
    double lo() const noexcept
    {
        return lo_;
    }
    double hi() const noexcept
    {
        return hi_;
    }
    const std::vector<real_ext> &nodes() const noexcept
    {
        return nodes_;
    }
    // Clenshaw-Curtis weights for integration over [lo, hi].
    const std::vector<real_ext> &quadrature_weights() const noexcept
    {
        return cc_weights_;
    }

    // Chebyshev expansion coefficients of the interpolant through `values`.
    std::vector<real_ext> coefficients(std::span<const real_ext> values) const;
    std::vector<real_ext> synthesize(std::span<const real_ext> coeffs) const;

    // Second derivative of the interpolant at the nodes. Expansion
    // coefficients below `chop_tolerance` relative to the largest one are
    // discarded first (trailing run only).
    std::vector<real_ext> second_derivative(std::span<const real_ext> values) const;

    // Barycentric interpolation; x must lie in [lo, hi].
    real_ext interpolate(std::span<const real_ext> values, const real_ext &x) const;

    static constexpr double chop_tolerance = 1e-26;

private:
    std::vector<real_ext> apply(const std::vector<real_ext> &matrix, std::span<const real_ext> v) const;

    double lo_;
    double hi_;
    std::vector<real_ext> nodes_;
    std::vector<real_ext> bary_;
    std::vector<real_ext> cc_weights_;
    // Row-major M x M tables.
    std::vector<real_ext> analysis_;
    std::vector<real_ext> synthesis_;
    std::vector<real_ext> d2_;
};

} // namespace telegraph
