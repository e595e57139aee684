#include <telegraph/expr.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>

#include <telegraph/errors.hpp>

namespace telegraph
{

namespace
{

class parser
{
public:
    parser(std::string_view text, const parse_options &opts) : s_(text), opts_(opts) {}

    expr parse()
    {
        expr e = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) {
            throw parse_error("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        }
        return e;
    }

private:
    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            throw parse_error(std::string("expected '") + c + "'", pos_);
        }
    }

    expr parse_sum()
    {
        std::vector<expr> terms{parse_product()};
        for (;;) {
            if (accept('+')) {
                terms.push_back(parse_product());
            } else if (accept('-')) {
                terms.push_back(expr::neg(parse_product()));
            } else {
                break;
            }
        }
        return expr::add(std::move(terms));
    }

    expr parse_product()
    {
        std::vector<expr> factors{parse_unary()};
        while (accept('*')) {
            factors.push_back(parse_unary());
        }
        return expr::mul(std::move(factors));
    }

    expr parse_unary()
    {
        if (accept('-')) {
            return expr::neg(parse_unary());
        }
        if (accept('+')) {
            return parse_unary();
        }
        return parse_power();
    }

    expr parse_power()
    {
        expr base = parse_primary();
        skip_ws();
        const std::size_t at = pos_;
        if (!accept('^')) {
            return base;
        }
        expr e = simplify(parse_unary());
        if (!e.is_constant()) {
            throw parse_error("exponent must be a constant", at);
        }
        const double v = e.approx();
        if (v < 0 || v != std::floor(v) || v > 64) {
            throw parse_error("exponent must be a non-negative integer up to 64", at);
        }
        const int n = static_cast<int>(v);
        if (n == 0) {
            return expr::constant(1);
        }
        return expr::pow(base, n);
    }

    expr parse_primary()
    {
        skip_ws();
        if (pos_ >= s_.size()) {
            throw parse_error("unexpected end of input", pos_);
        }
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            expr e = parse_sum();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view name = s_.substr(start, pos_ - start);
            if (name == opts_.x_name) {
                return expr::x();
            }
            if (!opts_.t_name.empty() && name == opts_.t_name) {
                return expr::t();
            }
            if (name == "pi") {
                return expr::pi();
            }
            expr::kind k;
            if (name == "sin") {
                k = expr::kind::sin;
            } else if (name == "cos") {
                k = expr::kind::cos;
            } else if (name == "sinh") {
                k = expr::kind::sinh;
            } else if (name == "cosh") {
                k = expr::kind::cosh;
            } else if (name == "exp") {
                k = expr::kind::exp;
            } else {
                throw parse_error("unknown identifier '" + std::string(name) + "'", start);
            }
            expect('(');
            expr a = parse_sum();
            expect(')');
            return expr::unary(k, a);
        }
        throw parse_error("unexpected '" + std::string(1, c) + "'", pos_);
    }

    expr parse_number()
    {
        const std::size_t start = pos_;
        bool digits = false;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
            digits = true;
        }
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
                digits = true;
            }
        }
        if (!digits) {
            throw parse_error("malformed number", start);
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) {
                ++p;
            }
            if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
                while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
                    ++p;
                }
                pos_ = p;
            } else {
                throw parse_error("malformed exponent in number", pos_);
            }
        }
        return expr::constant(real_ext(std::string(s_.substr(start, pos_ - start))));
    }

    std::string_view s_;
    const parse_options &opts_;
    std::size_t pos_ = 0;
};

// Precedence levels for printing.
constexpr int prec_sum = 1;
constexpr int prec_product = 2;
constexpr int prec_unary = 3;
constexpr int prec_atom = 5;

std::string format_number(const real_ext &v)
{
    const double d = v.convert_to<double>();
    if (d == std::floor(d) && std::fabs(d) < 1e15) {
        return std::to_string(static_cast<long long>(d));
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
}

std::string print(const expr &e, int parent);

// Prints a term with its sign pulled out: returns true if the term was negative.
bool print_signed_term(const expr &e, std::string &out)
{
    if (e.is_constant() && e.value() < 0) {
        out = format_number(-e.value());
        return true;
    }
    if (e.type() == expr::kind::neg) {
        out = print(e.arg(), prec_product);
        return true;
    }
    if (e.type() == expr::kind::mul && e.children().front().is_constant() && e.children().front().value() < 0) {
        const auto ch = e.children();
        std::vector<expr> rest(ch.begin() + 1, ch.end());
        const real_ext c = -ch.front().value();
        if (c != 1) {
            rest.insert(rest.begin(), expr::constant(c));
        }
        out = print(expr::mul(std::move(rest)), prec_product);
        return true;
    }
    out = print(e, prec_sum);
    return false;
}

std::string wrap(std::string s, int own, int parent)
{
    return own < parent ? "(" + s + ")" : s;
}

std::string print(const expr &e, int parent)
{
    using kind = expr::kind;
    switch (e.type()) {
        case kind::constant:
            return wrap(format_number(e.value()), e.value() < 0 ? prec_unary : prec_atom, parent);
        case kind::var_x:
            return "x";
        case kind::var_t:
            return "t";
        case kind::pi:
            return "pi";
        case kind::add: {
            std::string s;
            bool first = true;
            for (const auto &c : e.children()) {
                std::string term;
                const bool negative = print_signed_term(c, term);
                if (first) {
                    s = negative ? "-" + term : term;
                } else {
                    s += negative ? " - " : " + ";
                    s += term;
                }
                first = false;
            }
            return wrap(s, prec_sum, parent);
        }
        case kind::mul: {
            const auto ch = e.children();
            if (ch.size() >= 2 && ch.front().is_constant() && ch.front().value() == -1) {
                std::vector<expr> rest(ch.begin() + 1, ch.end());
                return wrap("-" + print(expr::mul(std::move(rest)), prec_unary), prec_unary, parent);
            }
            std::string s;
            for (std::size_t i = 0; i < ch.size(); ++i) {
                if (i > 0) {
                    s += "*";
                }
                s += print(ch[i], prec_unary);
            }
            return wrap(s, prec_product, parent);
        }
        case kind::neg:
            return wrap("-" + print(e.arg(), prec_unary), prec_unary, parent);
        case kind::pow:
            return wrap(print(e.arg(), prec_atom) + "^" + std::to_string(e.exponent()), prec_atom - 1, parent);
        case kind::sin:
            return "sin(" + print(e.arg(), 0) + ")";
        case kind::cos:
            return "cos(" + print(e.arg(), 0) + ")";
        case kind::sinh:
            return "sinh(" + print(e.arg(), 0) + ")";
        case kind::cosh:
            return "cosh(" + print(e.arg(), 0) + ")";
        case kind::exp:
            return "exp(" + print(e.arg(), 0) + ")";
    }
    return {};
}

} // namespace

expr parse_expr(std::string_view text, const parse_options &opts)
{
    return parser(text, opts).parse();
}

std::string to_string(const expr &e)
{
    return print(e, 0);
}

} // namespace telegraph
