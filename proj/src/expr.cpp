#include <telegraph/expr.hpp>

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <unordered_map>
#include <utility>

#include <telegraph/errors.hpp>

namespace telegraph
{

struct expr::node {
    expr::kind k;
    real_ext value;
    double approx;
    int exponent;
    std::vector<expr> children;
    std::size_t hash;
    std::size_t size;
    bool has_x;
    bool has_t;
    bool normal;
};

namespace
{

std::size_t hash_combine(std::size_t seed, std::size_t v)
{
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_real(const real_ext &v)
{
    const double d = v.convert_to<double>();
    const double lo = (v - real_ext(d)).convert_to<double>();
    return hash_combine(std::hash<std::uint64_t>{}(std::bit_cast<std::uint64_t>(d)),
                        std::hash<std::uint64_t>{}(std::bit_cast<std::uint64_t>(lo)));
}

std::size_t saturating_add(std::size_t a, std::size_t b)
{
    return (a > std::numeric_limits<std::size_t>::max() - b) ? std::numeric_limits<std::size_t>::max() : a + b;
}

bool is_function(expr::kind k)
{
    switch (k) {
        case expr::kind::sin:
        case expr::kind::cos:
        case expr::kind::sinh:
        case expr::kind::cosh:
        case expr::kind::exp:
            return true;
        default:
            return false;
    }
}

void check_size(const expr &e)
{
    if (e.size() > max_expr_nodes) {
        throw expr_size_error("expression size " + std::to_string(e.size()) + " exceeds the cap of "
                              + std::to_string(max_expr_nodes) + " nodes");
    }
}

} // namespace

// Grants the simplifier access to normal-form node construction.
struct expr_factory {
    static expr make(expr::kind k, real_ext value, int exponent, std::vector<expr> children, bool normal)
    {
        return expr::make(k, std::move(value), exponent, std::move(children), normal);
    }

    static expr constant(const real_ext &v)
    {
        return make(expr::kind::constant, v, 0, {}, true);
    }
};

expr::expr() : expr(make(kind::constant, real_ext(0), 0, {}, true)) {}

expr::expr(std::shared_ptr<const node> n) : node_(std::move(n)) {}

expr expr::make(kind k, real_ext value, int exponent, std::vector<expr> children, bool normal)
{
    auto n = std::make_shared<node>();
    n->k = k;
    if (k == kind::constant && value == 0) {
        // Fold -0 into +0 so that structural equality matches numeric equality.
        value = 0;
    }
    n->value = value;
    n->approx = value.convert_to<double>();
    n->exponent = exponent;
    n->has_x = (k == kind::var_x);
    n->has_t = (k == kind::var_t);
    std::size_t h = hash_combine(std::hash<int>{}(static_cast<int>(k)), std::hash<int>{}(exponent));
    if (k == kind::constant) {
        h = hash_combine(h, hash_real(value));
    }
    std::size_t sz = 1;
    for (const auto &c : children) {
        h = hash_combine(h, c.hash());
        sz = saturating_add(sz, c.size());
        n->has_x = n->has_x || c.depends_on(var::x);
        n->has_t = n->has_t || c.depends_on(var::t);
    }
    n->hash = h;
    n->size = sz;
    n->normal = normal;
    n->children = std::move(children);
    return expr(std::shared_ptr<const node>(std::move(n)));
}

expr expr::constant(const real_ext &value)
{
    return make(kind::constant, value, 0, {}, true);
}

expr expr::x()
{
    static const expr v = make(kind::var_x, real_ext(0), 0, {}, true);
    return v;
}

expr expr::t()
{
    static const expr v = make(kind::var_t, real_ext(0), 0, {}, true);
    return v;
}

expr expr::pi()
{
    return make(kind::pi, real_ext(0), 0, {}, false);
}

expr expr::add(std::vector<expr> terms)
{
    if (terms.empty()) {
        return constant(0);
    }
    if (terms.size() == 1) {
        return terms.front();
    }
    return make(kind::add, real_ext(0), 0, std::move(terms), false);
}

expr expr::mul(std::vector<expr> factors)
{
    if (factors.empty()) {
        return constant(1);
    }
    if (factors.size() == 1) {
        return factors.front();
    }
    return make(kind::mul, real_ext(0), 0, std::move(factors), false);
}

expr expr::neg(expr arg)
{
    return make(kind::neg, real_ext(0), 0, {std::move(arg)}, false);
}

expr expr::pow(expr base, int exponent)
{
    if (exponent < 1) {
        throw std::invalid_argument("pow exponent must be >= 1");
    }
    return make(kind::pow, real_ext(0), exponent, {std::move(base)}, false);
}

expr expr::unary(kind k, expr arg)
{
    if (!is_function(k) && k != kind::neg) {
        throw std::invalid_argument("expr::unary: not a unary node kind");
    }
    return make(k, real_ext(0), 0, {std::move(arg)}, false);
}

expr expr::sin(expr arg)
{
    return unary(kind::sin, std::move(arg));
}
expr expr::cos(expr arg)
{
    return unary(kind::cos, std::move(arg));
}
expr expr::sinh(expr arg)
{
    return unary(kind::sinh, std::move(arg));
}
expr expr::cosh(expr arg)
{
    return unary(kind::cosh, std::move(arg));
}
expr expr::exp(expr arg)
{
    return unary(kind::exp, std::move(arg));
}

expr::kind expr::type() const noexcept
{
    return node_->k;
}
const real_ext &expr::value() const noexcept
{
    return node_->value;
}
double expr::approx() const noexcept
{
    return node_->approx;
}
int expr::exponent() const noexcept
{
    return node_->exponent;
}
std::span<const expr> expr::children() const noexcept
{
    return node_->children;
}
const expr &expr::arg() const noexcept
{
    return node_->children.front();
}
std::size_t expr::hash() const noexcept
{
    return node_->hash;
}
std::size_t expr::size() const noexcept
{
    return node_->size;
}
bool expr::depends_on(var v) const noexcept
{
    return v == var::x ? node_->has_x : node_->has_t;
}
bool expr::is_constant() const noexcept
{
    return node_->k == kind::constant;
}
bool expr::is_zero() const noexcept
{
    return is_constant() && node_->value == 0;
}
bool expr::is_one() const noexcept
{
    return is_constant() && node_->value == 1;
}
bool expr::is_normal() const noexcept
{
    return node_->normal;
}
const void *expr::identity() const noexcept
{
    return node_.get();
}

bool operator==(const expr &a, const expr &b)
{
    if (a.identity() == b.identity()) {
        return true;
    }
    if (a.hash() != b.hash() || a.type() != b.type() || a.exponent() != b.exponent()) {
        return false;
    }
    if (a.is_constant()) {
        return a.value() == b.value();
    }
    const auto ca = a.children();
    const auto cb = b.children();
    return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

expr operator+(const expr &a, const expr &b)
{
    return expr::add({a, b});
}
expr operator-(const expr &a, const expr &b)
{
    return expr::add({a, expr::neg(b)});
}
expr operator*(const expr &a, const expr &b)
{
    return expr::mul({a, b});
}
expr operator-(const expr &a)
{
    return expr::neg(a);
}

std::strong_ordering compare(const expr &a, const expr &b)
{
    if (a.identity() == b.identity()) {
        return std::strong_ordering::equal;
    }
    if (a.type() != b.type()) {
        return static_cast<int>(a.type()) <=> static_cast<int>(b.type());
    }
    if (a.is_constant()) {
        if (a.value() < b.value()) {
            return std::strong_ordering::less;
        }
        if (b.value() < a.value()) {
            return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }
    const auto ca = a.children();
    const auto cb = b.children();
    const auto n = std::min(ca.size(), cb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = compare(ca[i], cb[i]); c != 0) {
            return c;
        }
    }
    if (ca.size() != cb.size()) {
        return ca.size() <=> cb.size();
    }
    return a.exponent() <=> b.exponent();
}

// ---------------------------------------------------------------------------
// Simplification
//
// Normal form is a fully expanded sum of monomials:
//  - no neg or pi nodes; constants folded in extended precision;
//  - add: flattened, >= 2 terms, like terms collected, at most one constant,
//    ordered by the non-constant part of each term;
//  - mul: no sum among its factors (products are distributed over sums),
//    at most one leading constant (never 0 or 1), equal bases merged into
//    integer powers, ordered by base;
//  - pow: base is not a constant, sum, product or power;
//  - odd/even functions take arguments with a non-negative leading sign.
// ---------------------------------------------------------------------------

namespace
{

using kind = expr::kind;

// Like terms whose collected coefficient is this small relative to the
// largest contribution are cancellations down to rounding noise and are
// dropped. Extended precision leaves about 1e-34 of noise per operation;
// the solver recursion can amplify that by several orders of magnitude.
constexpr double cancellation_tolerance = 1e-24;

expr normal_node(kind k, std::vector<expr> children, int exponent = 0)
{
    return expr_factory::make(k, real_ext(0), exponent, std::move(children), true);
}

expr cst(const real_ext &v)
{
    return expr_factory::constant(v);
}

real_ext int_power(real_ext base, int n)
{
    real_ext result = 1;
    while (n > 0) {
        if (n & 1) {
            result *= base;
        }
        base *= base;
        n >>= 1;
    }
    return result;
}

struct split_term {
    real_ext coef;
    expr rest;
    bool has_rest;
};

// term = coef * rest, for a term in normal form.
split_term split_coefficient(const expr &term)
{
    if (term.is_constant()) {
        return {term.value(), expr{}, false};
    }
    if (term.type() == kind::mul && term.children().front().is_constant()) {
        const auto ch = term.children();
        if (ch.size() == 2) {
            return {ch[0].value(), ch[1], true};
        }
        return {ch[0].value(), normal_node(kind::mul, std::vector<expr>(ch.begin() + 1, ch.end())), true};
    }
    return {real_ext(1), term, true};
}

expr scale_term(const real_ext &coef, const expr &rest)
{
    if (coef == 1) {
        return rest;
    }
    std::vector<expr> f{cst(coef)};
    if (rest.type() == kind::mul) {
        f.insert(f.end(), rest.children().begin(), rest.children().end());
    } else {
        f.push_back(rest);
    }
    return normal_node(kind::mul, std::move(f));
}

expr simplify_add(const std::vector<expr> &terms);
expr simplify_mul(const std::vector<expr> &factors);
expr simplify_pow(const expr &base, int n);
expr simplify_func(kind k, const expr &a);

struct collected {
    real_ext sum = 0;
    real_ext largest = 0;

    void add(const real_ext &v)
    {
        sum += v;
        largest = std::max(largest, boost::multiprecision::fabs(v));
    }
    bool vanishes() const
    {
        return boost::multiprecision::fabs(sum) <= largest * real_ext(cancellation_tolerance);
    }
};

expr simplify_add(const std::vector<expr> &terms)
{
    std::vector<expr> flat;
    flat.reserve(terms.size());
    for (const auto &t : terms) {
        if (t.type() == kind::add) {
            flat.insert(flat.end(), t.children().begin(), t.children().end());
        } else {
            flat.push_back(t);
        }
    }

    collected constant;
    std::vector<std::pair<expr, collected>> groups;
    std::unordered_map<expr, std::size_t, expr_hash> index;
    for (const auto &t : flat) {
        auto s = split_coefficient(t);
        if (!s.has_rest) {
            constant.add(s.coef);
            continue;
        }
        auto [it, inserted] = index.try_emplace(s.rest, groups.size());
        if (inserted) {
            groups.emplace_back(s.rest, collected{});
        }
        groups[it->second].second.add(s.coef);
    }
    std::erase_if(groups, [](const auto &g) { return g.second.vanishes(); });
    std::sort(groups.begin(), groups.end(), [](const auto &a, const auto &b) { return compare(a.first, b.first) < 0; });

    std::vector<expr> out;
    out.reserve(groups.size() + 1);
    if (!constant.vanishes()) {
        out.push_back(cst(constant.sum));
    }
    for (const auto &[rest, c] : groups) {
        out.push_back(scale_term(c.sum, rest));
    }
    if (out.empty()) {
        return cst(0);
    }
    if (out.size() == 1) {
        return out.front();
    }
    return normal_node(kind::add, std::move(out));
}

// Product of normal factors none of which is a sum (products are flattened).
expr multiply_monomials(real_ext coef, const std::vector<expr> &flat)
{
    if (coef == 0) {
        return cst(0);
    }
    std::vector<std::pair<expr, int>> groups;
    std::unordered_map<expr, std::size_t, expr_hash> index;
    std::vector<expr> factors;
    factors.reserve(flat.size());
    for (const auto &f : flat) {
        if (f.type() == kind::mul) {
            factors.insert(factors.end(), f.children().begin(), f.children().end());
        } else {
            factors.push_back(f);
        }
    }
    for (const auto &f : factors) {
        if (f.is_constant()) {
            coef *= f.value();
            continue;
        }
        expr base = f;
        int e = 1;
        if (f.type() == kind::pow) {
            base = f.arg();
            e = f.exponent();
        }
        auto [it, inserted] = index.try_emplace(base, groups.size());
        if (inserted) {
            groups.emplace_back(base, e);
        } else {
            groups[it->second].second += e;
        }
    }
    if (coef == 0) {
        return cst(0);
    }
    std::sort(groups.begin(), groups.end(), [](const auto &a, const auto &b) { return compare(a.first, b.first) < 0; });

    std::vector<expr> out;
    out.reserve(groups.size() + 1);
    if (coef != 1) {
        out.push_back(cst(coef));
    }
    for (const auto &[base, e] : groups) {
        out.push_back(e == 1 ? base : normal_node(kind::pow, {base}, e));
    }
    if (out.empty()) {
        return cst(coef);
    }
    if (out.size() == 1) {
        return out.front();
    }
    return normal_node(kind::mul, std::move(out));
}

expr simplify_mul(const std::vector<expr> &factors)
{
    real_ext coef = 1;
    std::vector<expr> flat;
    std::vector<expr> sums;
    for (const auto &f : factors) {
        if (f.is_constant()) {
            coef *= f.value();
        } else if (f.type() == kind::mul) {
            for (const auto &g : f.children()) {
                if (g.is_constant()) {
                    coef *= g.value();
                } else {
                    flat.push_back(g);
                }
            }
        } else if (f.type() == kind::add) {
            sums.push_back(f);
        } else {
            flat.push_back(f);
        }
    }
    if (coef == 0) {
        return cst(0);
    }
    expr product = multiply_monomials(coef, flat);
    // distribute over the sums one at a time, collecting after each step
    for (const auto &s : sums) {
        std::vector<expr> left;
        if (product.type() == kind::add) {
            left.assign(product.children().begin(), product.children().end());
        } else {
            left.push_back(product);
        }
        std::vector<expr> terms;
        terms.reserve(left.size() * s.children().size());
        for (const auto &a : left) {
            const auto sa = split_coefficient(a);
            for (const auto &b : s.children()) {
                const auto sb = split_coefficient(b);
                std::vector<expr> f;
                if (sa.has_rest) {
                    f.push_back(sa.rest);
                }
                if (sb.has_rest) {
                    f.push_back(sb.rest);
                }
                terms.push_back(multiply_monomials(sa.coef * sb.coef, f));
            }
        }
        product = simplify_add(terms);
        check_size(product);
    }
    return product;
}

expr simplify_pow(const expr &base, int n)
{
    if (n == 0) {
        return cst(1);
    }
    if (n == 1) {
        return base;
    }
    switch (base.type()) {
        case kind::constant:
            return cst(int_power(base.value(), n));
        case kind::pow:
            return simplify_pow(base.arg(), base.exponent() * n);
        case kind::mul: {
            std::vector<expr> f;
            for (const auto &c : base.children()) {
                f.push_back(simplify_pow(c, n));
            }
            return simplify_mul(f);
        }
        case kind::add: {
            expr result = base;
            for (int i = 1; i < n; ++i) {
                result = simplify_mul({result, base});
            }
            return result;
        }
        default:
            return normal_node(kind::pow, {base}, n);
    }
}

bool negative_leading_sign(const expr &a)
{
    if (a.type() == kind::mul) {
        const auto &c = a.children().front();
        return c.is_constant() && c.value() < 0;
    }
    if (a.type() == kind::add) {
        return split_coefficient(a.children().front()).coef < 0;
    }
    return false;
}

real_ext apply_function(kind k, const real_ext &v)
{
    using boost::multiprecision::cos;
    using boost::multiprecision::cosh;
    using boost::multiprecision::exp;
    using boost::multiprecision::sin;
    using boost::multiprecision::sinh;
    switch (k) {
        case kind::sin:
            return sin(v);
        case kind::cos:
            return cos(v);
        case kind::sinh:
            return sinh(v);
        case kind::cosh:
            return cosh(v);
        case kind::exp:
            return exp(v);
        default:
            assert(false);
            return v;
    }
}

expr simplify_func(kind k, const expr &a)
{
    if (a.is_constant()) {
        return cst(apply_function(k, a.value()));
    }
    if (k != kind::exp && negative_leading_sign(a)) {
        auto flipped = simplify_mul({cst(-1), a});
        auto f = normal_node(k, {flipped});
        if (k == kind::sin || k == kind::sinh) {
            return simplify_mul({cst(-1), f});
        }
        return f;
    }
    return normal_node(k, {a});
}

class simplifier
{
public:
    expr run(const expr &e)
    {
        if (e.is_normal()) {
            return e;
        }
        if (auto it = memo_.find(e.identity()); it != memo_.end()) {
            return it->second;
        }
        expr out = dispatch(e);
        memo_.emplace(e.identity(), out);
        return out;
    }

private:
    expr dispatch(const expr &e)
    {
        switch (e.type()) {
            case kind::constant:
                return cst(e.value());
            case kind::var_x:
                return expr::x();
            case kind::var_t:
                return expr::t();
            case kind::pi:
                return cst(pi_ext());
            case kind::neg:
                return simplify_mul({cst(-1), run(e.arg())});
            case kind::add:
                return simplify_add(run_all(e));
            case kind::mul:
                return simplify_mul(run_all(e));
            case kind::pow:
                return simplify_pow(run(e.arg()), e.exponent());
            default:
                return simplify_func(e.type(), run(e.arg()));
        }
    }

    std::vector<expr> run_all(const expr &e)
    {
        std::vector<expr> out;
        out.reserve(e.children().size());
        for (const auto &c : e.children()) {
            out.push_back(run(c));
        }
        return out;
    }

    std::unordered_map<const void *, expr> memo_;
};

// Derivatives of normal-form trees, built directly in normal form.
class differentiator
{
public:
    explicit differentiator(var v) : v_(v) {}

    expr run(const expr &e)
    {
        if (!e.depends_on(v_)) {
            return cst(0);
        }
        if (auto it = memo_.find(e.identity()); it != memo_.end()) {
            return it->second;
        }
        expr out = dispatch(e);
        check_size(out);
        memo_.emplace(e.identity(), out);
        return out;
    }

private:
    expr dispatch(const expr &e)
    {
        switch (e.type()) {
            case kind::var_x:
            case kind::var_t:
                return cst(1);
            case kind::add: {
                std::vector<expr> d;
                for (const auto &c : e.children()) {
                    if (c.depends_on(v_)) {
                        d.push_back(run(c));
                    }
                }
                return simplify_add(d);
            }
            case kind::mul: {
                const auto ch = e.children();
                std::vector<expr> terms;
                for (std::size_t i = 0; i < ch.size(); ++i) {
                    if (!ch[i].depends_on(v_)) {
                        continue;
                    }
                    std::vector<expr> f(ch.begin(), ch.end());
                    f[i] = run(ch[i]);
                    terms.push_back(simplify_mul(f));
                }
                return simplify_add(terms);
            }
            case kind::pow: {
                const int n = e.exponent();
                return simplify_mul({cst(n), simplify_pow(e.arg(), n - 1), run(e.arg())});
            }
            case kind::sin:
                return simplify_mul({simplify_func(kind::cos, e.arg()), run(e.arg())});
            case kind::cos:
                return simplify_mul({cst(-1), simplify_func(kind::sin, e.arg()), run(e.arg())});
            case kind::sinh:
                return simplify_mul({simplify_func(kind::cosh, e.arg()), run(e.arg())});
            case kind::cosh:
                return simplify_mul({simplify_func(kind::sinh, e.arg()), run(e.arg())});
            case kind::exp:
                return simplify_mul({e, run(e.arg())});
            default:
                // constant, pi and neg never occur in normal form
                assert(false);
                return cst(0);
        }
    }

    var v_;
    std::unordered_map<const void *, expr> memo_;
};

class t_substituter
{
public:
    explicit t_substituter(const real_ext &value) : value_(cst(value)) {}

    expr run(const expr &e)
    {
        if (!e.depends_on(var::t)) {
            return e;
        }
        if (auto it = memo_.find(e.identity()); it != memo_.end()) {
            return it->second;
        }
        expr out;
        switch (e.type()) {
            case kind::var_t:
                out = value_;
                break;
            case kind::add:
                out = simplify_add(run_all(e));
                break;
            case kind::mul:
                out = simplify_mul(run_all(e));
                break;
            case kind::pow:
                out = simplify_pow(run(e.arg()), e.exponent());
                break;
            default:
                out = simplify_func(e.type(), run(e.arg()));
                break;
        }
        memo_.emplace(e.identity(), out);
        return out;
    }

private:
    std::vector<expr> run_all(const expr &e)
    {
        std::vector<expr> out;
        for (const auto &c : e.children()) {
            out.push_back(run(c));
        }
        return out;
    }

    expr value_;
    std::unordered_map<const void *, expr> memo_;
};

} // namespace

expr simplify(const expr &e)
{
    expr out = simplifier{}.run(e);
    check_size(out);
    return out;
}

expr diff(const expr &e, var v)
{
    return differentiator{v}.run(simplify(e));
}

expr substitute_t(const expr &e, const real_ext &value)
{
    return t_substituter{value}.run(simplify(e));
}

std::vector<expr> t_taylor_coeffs(const expr &e, std::size_t order)
{
    std::vector<expr> out;
    out.reserve(order + 1);
    expr d = simplify(e);
    real_ext factorial = 1;
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) {
            factorial *= static_cast<unsigned>(k);
        }
        out.push_back(simplify_mul({cst(1 / factorial), substitute_t(d, 0)}));
        if (k < order) {
            d = d.depends_on(var::t) ? diff(d, var::t) : cst(0);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

template <typename Real>
Real eval_as(const expr &e, const Real &x, const Real &t)
{
    using std::cos;
    using std::cosh;
    using std::exp;
    using std::sin;
    using std::sinh;
    switch (e.type()) {
        case kind::constant:
            if constexpr (std::is_same_v<Real, double>) {
                return e.approx();
            } else {
                return Real(e.value());
            }
        case kind::var_x:
            return x;
        case kind::var_t:
            return t;
        case kind::pi:
            if constexpr (std::is_same_v<Real, double>) {
                return 3.141592653589793238462643383279502884;
            } else {
                return Real(pi_ext());
            }
        case kind::add: {
            Real s = 0;
            for (const auto &c : e.children()) {
                s += eval_as<Real>(c, x, t);
            }
            return s;
        }
        case kind::mul: {
            Real p = 1;
            for (const auto &c : e.children()) {
                p *= eval_as<Real>(c, x, t);
            }
            return p;
        }
        case kind::neg:
            return -eval_as<Real>(e.arg(), x, t);
        case kind::pow: {
            Real base = eval_as<Real>(e.arg(), x, t);
            Real result = 1;
            int n = e.exponent();
            while (n > 0) {
                if (n & 1) {
                    result *= base;
                }
                base *= base;
                n >>= 1;
            }
            return result;
        }
        case kind::sin:
            return sin(eval_as<Real>(e.arg(), x, t));
        case kind::cos:
            return cos(eval_as<Real>(e.arg(), x, t));
        case kind::sinh:
            return sinh(eval_as<Real>(e.arg(), x, t));
        case kind::cosh:
            return cosh(eval_as<Real>(e.arg(), x, t));
        case kind::exp:
            return exp(eval_as<Real>(e.arg(), x, t));
    }
    return Real(0);
}

template double eval_as<double>(const expr &, const double &, const double &);
template real_ext eval_as<real_ext>(const expr &, const real_ext &, const real_ext &);

double eval(const expr &e, double x, double t)
{
    return eval_as<double>(e, x, t);
}

real_ext eval_ext(const expr &e, const real_ext &x, const real_ext &t)
{
    return eval_as<real_ext>(e, x, t);
}

namespace detail
{

expr clone_unnormalised(const expr &e)
{
    std::vector<expr> ch;
    for (const auto &c : e.children()) {
        ch.push_back(clone_unnormalised(c));
    }
    return expr_factory::make(e.type(), e.value(), e.exponent(), std::move(ch), false);
}

} // namespace detail

} // namespace telegraph
