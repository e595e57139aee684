#pragma once

#include <functional>
#include <memory>
#include <variant>
#include <vector>

#include <telegraph/chebyshev.hpp>
#include <telegraph/expr.hpp>
#include <telegraph/tseries.hpp>

namespace telegraph
{

struct Domain {
    double x_lo = 0;
    double x_hi = 1;
    double T = 1;

    // Throws std::invalid_argument unless x_lo < x_hi and T > 0.
    void validate() const;
};

// Function of x as an expression without t.
struct SymbolicField {
    expr e;
};

// Function of x as values on Chebyshev-Gauss-Lobatto nodes.
struct GridField {
    std::shared_ptr<const ChebyshevGrid> grid;
    std::vector<real_ext> values;
};

class SpatialField
{
public:
    // Throws std::invalid_argument if e depends on t.
    static SpatialField symbolic(const expr &e);
    static SpatialField on_grid(std::shared_ptr<const ChebyshevGrid> grid, std::vector<real_ext> values);
    // Samples an x-only expression at the grid nodes (explicit conversion).
    static SpatialField sample(const expr &e, std::shared_ptr<const ChebyshevGrid> grid);

    // Constant field on the same backend (and grid) as this one.
    SpatialField constant_like(const real_ext &c) const;

    bool is_symbolic() const noexcept
    {
        return std::holds_alternative<SymbolicField>(rep_);
    }
    const SymbolicField &as_symbolic() const
    {
        return std::get<SymbolicField>(rep_);
    }
    const GridField &as_grid() const
    {
        return std::get<GridField>(rep_);
    }

    friend SpatialField operator+(const SpatialField &a, const SpatialField &b);
    friend SpatialField operator*(const SpatialField &a, const SpatialField &b);
    friend SpatialField operator*(const real_ext &s, const SpatialField &a);

private:
    explicit SpatialField(std::variant<SymbolicField, GridField> rep) : rep_(std::move(rep)) {}

    std::variant<SymbolicField, GridField> rep_;
};

enum class pointwise_fn
{
    sin,
    cos,
    exp
};

SpatialField d2x(const SpatialField &f);
SpatialField pointwise(const SpatialField &f, pointwise_fn fn);

// sqrt(int f^2 dx) over the domain's x-interval. Symbolic fields use adaptive
// Simpson (tolerance 1e-12, depth <= 30); grid fields use Clenshaw-Curtis.
double l2_norm(const SpatialField &f, const Domain &domain);

double eval_at(const SpatialField &f, double x);
real_ext eval_at_ext(const SpatialField &f, const real_ext &x);

// max |f| over 2001 uniform points.
double sup_norm(const SpatialField &f, const Domain &domain);

// Values at the nodes of `grid` (the stored values for grid fields on it).
std::vector<real_ext> values_at_nodes(const SpatialField &f, const ChebyshevGrid &grid);

// Symbolic: structural zero. Grid: every |value| below 1e-14.
bool is_zero(const SpatialField &f);

// True if any grid value is NaN or infinite (always false for symbolic).
bool has_nonfinite(const SpatialField &f);

namespace quadrature
{

// Adaptive Simpson with Richardson correction. Tolerance is relative to the
// magnitude of a coarse initial estimate. Throws numeric_error if some
// subinterval has not converged at max_depth.
double adaptive_simpson(const std::function<double(double)> &f, double a, double b, double tol = 1e-12,
                        int max_depth = 30);

} // namespace quadrature

template <>
struct coefficient_traits<SpatialField> {
    static SpatialField zero_like(const SpatialField &ref)
    {
        return ref.constant_like(0);
    }
    static bool is_zero(const SpatialField &c)
    {
        return telegraph::is_zero(c);
    }
    static SpatialField add(const SpatialField &a, const SpatialField &b)
    {
        return a + b;
    }
    static SpatialField mul(const SpatialField &a, const SpatialField &b)
    {
        return a * b;
    }
    static SpatialField scale(const SpatialField &a, const real_ext &s)
    {
        return s * a;
    }
    static SpatialField sin(const SpatialField &a)
    {
        return pointwise(a, pointwise_fn::sin);
    }
    static SpatialField cos(const SpatialField &a)
    {
        return pointwise(a, pointwise_fn::cos);
    }
    static SpatialField exp(const SpatialField &a)
    {
        return pointwise(a, pointwise_fn::exp);
    }
};

} // namespace telegraph
