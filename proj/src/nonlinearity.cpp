#include <telegraph/nonlinearity.hpp>

#include <cstdio>

#include <telegraph/errors.hpp>

namespace telegraph
{

NonlinSpec NonlinSpec::power(int m, double scale)
{
    if (m < 2) {
        throw std::invalid_argument("power nonlinearity needs an exponent >= 2");
    }
    return {kind::power, scale, m, {}};
}

bool NonlinSpec::is_zero() const
{
    switch (k) {
        case kind::zero:
            return true;
        case kind::sum:
            for (const auto &t : terms) {
                if (!t.is_zero()) {
                    return false;
                }
            }
            return true;
        default:
            return scale == 0;
    }
}

namespace
{

NonlinSpec match_term(const expr &term, std::string_view text)
{
    real_ext coef = 1;
    expr rest = term;
    if (term.type() == expr::kind::mul && term.children().front().is_constant()) {
        coef = term.children().front().value();
        const auto ch = term.children();
        rest = ch.size() == 2 ? ch[1] : simplify(expr::mul(std::vector<expr>(ch.begin() + 1, ch.end())));
    }
    const double c = coef.convert_to<double>();
    const expr w = expr::x();
    if (rest == w) {
        return NonlinSpec::linear(c);
    }
    if (rest.type() == expr::kind::pow && rest.arg() == w) {
        return NonlinSpec::power(rest.exponent(), c);
    }
    if (rest.type() == expr::kind::sin && rest.arg() == w) {
        return NonlinSpec::sin_w(c);
    }
    if (rest.type() == expr::kind::cos && rest.arg() == w) {
        return NonlinSpec::cos_w(c);
    }
    if (rest.type() == expr::kind::exp && rest.arg() == w) {
        return NonlinSpec::exp_w(c);
    }
    throw parse_error("nonlinearity term '" + to_string(term)
                      + "' is not one of c*w, c*w^m, c*sin(w), c*cos(w), c*exp(w) in '" + std::string(text) + "'");
}

std::string format_scale(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

NonlinSpec parse_nonlinearity(std::string_view text)
{
    parse_options opts;
    opts.x_name = "w";
    opts.t_name.clear();
    // w is parsed into the x slot; x and t are then unknown identifiers
    const expr e = simplify(parse_expr(text, opts));
    if (e.is_zero()) {
        return NonlinSpec::zero();
    }
    if (e.is_constant()) {
        throw parse_error("constant terms are outside the nonlinearity grammar; put them in the forcing");
    }
    if (e.type() != expr::kind::add) {
        return match_term(e, text);
    }
    std::vector<NonlinSpec> terms;
    for (const auto &t : e.children()) {
        if (t.is_constant()) {
            throw parse_error("constant terms are outside the nonlinearity grammar; put them in the forcing");
        }
        terms.push_back(match_term(t, text));
    }
    return NonlinSpec::sum(std::move(terms));
}

std::string to_string(const NonlinSpec &g)
{
    switch (g.k) {
        case NonlinSpec::kind::zero:
            return "0";
        case NonlinSpec::kind::linear:
            return format_scale(g.scale) + "*w";
        case NonlinSpec::kind::power:
            return format_scale(g.scale) + "*w^" + std::to_string(g.m);
        case NonlinSpec::kind::sin_w:
            return format_scale(g.scale) + "*sin(w)";
        case NonlinSpec::kind::cos_w:
            return format_scale(g.scale) + "*cos(w)";
        case NonlinSpec::kind::exp_w:
            return format_scale(g.scale) + "*exp(w)";
        case NonlinSpec::kind::sum: {
            if (g.terms.empty()) {
                return "0";
            }
            std::string s;
            for (std::size_t i = 0; i < g.terms.size(); ++i) {
                if (i > 0) {
                    s += " + ";
                }
                s += "(" + to_string(g.terms[i]) + ")";
            }
            return s;
        }
    }
    return "0";
}

real_ext apply_nonlinearity(const NonlinSpec &g, const real_ext &w)
{
    const real_ext s = g.scale;
    switch (g.k) {
        case NonlinSpec::kind::zero:
            return 0;
        case NonlinSpec::kind::linear:
            return s * w;
        case NonlinSpec::kind::power: {
            real_ext p = 1;
            for (int i = 0; i < g.m; ++i) {
                p *= w;
            }
            return s * p;
        }
        case NonlinSpec::kind::sin_w:
            return s * boost::multiprecision::sin(w);
        case NonlinSpec::kind::cos_w:
            return s * boost::multiprecision::cos(w);
        case NonlinSpec::kind::exp_w:
            return s * boost::multiprecision::exp(w);
        case NonlinSpec::kind::sum: {
            real_ext acc = 0;
            for (const auto &t : g.terms) {
                acc += apply_nonlinearity(t, w);
            }
            return acc;
        }
    }
    return 0;
}

} // namespace telegraph
