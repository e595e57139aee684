#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <telegraph/real.hpp>

namespace telegraph
{

enum class var
{
    x,
    t
};

// Immutable expression tree over the two independent variables x and t.
//
// Nodes are shared and never mutated, so copies are cheap and an Expr may be
// handed to any thread. Structural equality is exact: two trees compare
// equal iff they have the same shape and bit-identical constants.
class expr
{
public:
    enum class kind : std::uint8_t
    {
        constant,
        var_x,
        var_t,
        pi,
        add,
        mul,
        neg,
        pow,
        sin,
        cos,
        sinh,
        cosh,
        exp
    };

    // Defaults to the constant 0.
    expr();

    static expr constant(const real_ext &value);
    static expr x();
    static expr t();
    static expr pi();
    static expr add(std::vector<expr> terms);
    static expr mul(std::vector<expr> factors);
    static expr neg(expr arg);
    // exponent >= 1
    static expr pow(expr base, int exponent);
    static expr sin(expr arg);
    static expr cos(expr arg);
    static expr sinh(expr arg);
    static expr cosh(expr arg);
    static expr exp(expr arg);
    static expr unary(kind k, expr arg);

    kind type() const noexcept;
    // Only meaningful for constants.
    const real_ext &value() const noexcept;
    double approx() const noexcept;
    // Only meaningful for pow.
    int exponent() const noexcept;
    std::span<const expr> children() const noexcept;
    const expr &arg() const noexcept;

    std::size_t hash() const noexcept;
    // Tree size, shared subtrees counted once per reference (saturating).
    std::size_t size() const noexcept;
    bool depends_on(var v) const noexcept;
    bool is_constant() const noexcept;
    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    // Produced by simplify (used to skip re-normalisation).
    bool is_normal() const noexcept;
    const void *identity() const noexcept;

    friend bool operator==(const expr &a, const expr &b);

    friend expr operator+(const expr &a, const expr &b);
    friend expr operator-(const expr &a, const expr &b);
    friend expr operator*(const expr &a, const expr &b);
    friend expr operator-(const expr &a);

    struct node;

private:
    explicit expr(std::shared_ptr<const node> n);
    static expr make(kind k, real_ext value, int exponent, std::vector<expr> children, bool normal);

    std::shared_ptr<const node> node_;

    friend struct expr_factory;
};

struct expr_hash {
    std::size_t operator()(const expr &e) const noexcept
    {
        return e.hash();
    }
};

// Total order used for canonical term and factor ordering.
std::strong_ordering compare(const expr &a, const expr &b);

inline constexpr std::size_t max_expr_nodes = 1'000'000;

expr simplify(const expr &e);
expr diff(const expr &e, var v);
expr substitute_t(const expr &e, const real_ext &value);

template <typename Real>
Real eval_as(const expr &e, const Real &x, const Real &t);

// IEEE double evaluation.
double eval(const expr &e, double x, double t);
real_ext eval_ext(const expr &e, const real_ext &x, const real_ext &t);

// Plain Taylor coefficients in t about t = 0: entry k is
// simplify(d^k e / dt^k |_{t=0}) / k!, free of t. Computed by repeated
// symbolic differentiation.
std::vector<expr> t_taylor_coeffs(const expr &e, std::size_t order);

struct parse_options {
    std::string x_name = "x";
    // Empty disables the time variable.
    std::string t_name = "t";
};

// Infix grammar: + - * ^ (non-negative integer exponents), unary minus,
// sin cos sinh cosh exp, pi, x, t, decimal literals.
expr parse_expr(std::string_view text, const parse_options &opts = {});

std::string to_string(const expr &e);

namespace detail
{

// Rebuild a tree with fresh, un-normalised nodes.
expr clone_unnormalised(const expr &e);

} // namespace detail

} // namespace telegraph
