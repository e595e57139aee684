#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <telegraph/tseries.hpp>

namespace telegraph
{

// g(w) as a small closed grammar; every variant has a series composition rule.
struct NonlinSpec {
    enum class kind
    {
        zero,
        linear,
        power,
        sin_w,
        cos_w,
        exp_w,
        sum
    };

    kind k = kind::zero;
    // lambda for linear, scale factor otherwise
    double scale = 0;
    // exponent for power (>= 2)
    int m = 0;
    std::vector<NonlinSpec> terms;

    static NonlinSpec zero()
    {
        return {};
    }
    static NonlinSpec linear(double lambda)
    {
        return {kind::linear, lambda, 0, {}};
    }
    static NonlinSpec power(int m, double scale);
    static NonlinSpec sin_w(double scale)
    {
        return {kind::sin_w, scale, 0, {}};
    }
    static NonlinSpec cos_w(double scale)
    {
        return {kind::cos_w, scale, 0, {}};
    }
    static NonlinSpec exp_w(double scale)
    {
        return {kind::exp_w, scale, 0, {}};
    }
    static NonlinSpec sum(std::vector<NonlinSpec> terms)
    {
        return {kind::sum, 0, 0, std::move(terms)};
    }

    bool is_zero() const;
};

// Accepts expressions in w such as "-2*sin(w)", "0.5*w^3 + exp(w)", "0".
// Anything outside the grammar (constants, sin(2*w), x or t) is a parse_error.
NonlinSpec parse_nonlinearity(std::string_view text);

// Text that parse_nonlinearity maps back to the same spec.
std::string to_string(const NonlinSpec &g);

// g evaluated at a scalar value of w.
real_ext apply_nonlinearity(const NonlinSpec &g, const real_ext &w);

// Builds the series coefficients [g(W)]_k one order at a time.
//
// term(k, w) receives exactly the prefix w[0..k] of the series W and
// returns [g(W)]_k; calls must come in order k = 0, 1, 2, ...
template <typename C>
class NonlinEvaluator
{
public:
    explicit NonlinEvaluator(const NonlinSpec &spec) : spec_(spec)
    {
        for (const auto &t : spec_.terms) {
            children_.push_back(std::make_unique<NonlinEvaluator>(t));
        }
    }

    C term(std::size_t k, std::span<const C> w)
    {
        using tr = coefficient_traits<C>;
        if (w.size() != k + 1) {
            throw std::invalid_argument("NonlinEvaluator::term: expected the prefix w[0..k]");
        }
        switch (spec_.k) {
            case NonlinSpec::kind::zero:
                return tr::zero_like(w[0]);
            case NonlinSpec::kind::linear:
                return tr::scale(w[k], real_ext(spec_.scale));
            case NonlinSpec::kind::power: {
                // powers_[j] holds the series of w^(j+2)
                powers_.resize(static_cast<std::size_t>(spec_.m - 1));
                const std::vector<C> base(w.begin(), w.end());
                for (std::size_t j = 0; j < powers_.size(); ++j) {
                    const std::vector<C> &prev = (j == 0) ? base : powers_[j - 1];
                    powers_[j].push_back(cauchy_term<C>(prev, base, k));
                }
                return tr::scale(powers_.back()[k], real_ext(spec_.scale));
            }
            case NonlinSpec::kind::sin_w:
            case NonlinSpec::kind::cos_w: {
                auto [sk, ck] = sin_cos_term<C>(w, s_, c_, k);
                s_.push_back(std::move(sk));
                c_.push_back(std::move(ck));
                const C &v = (spec_.k == NonlinSpec::kind::sin_w) ? s_[k] : c_[k];
                return tr::scale(v, real_ext(spec_.scale));
            }
            case NonlinSpec::kind::exp_w:
                s_.push_back(exp_term<C>(w, s_, k));
                return tr::scale(s_[k], real_ext(spec_.scale));
            case NonlinSpec::kind::sum: {
                C acc = tr::zero_like(w[0]);
                for (auto &child : children_) {
                    acc = tr::add(acc, child->term(k, w));
                }
                return acc;
            }
        }
        return tr::zero_like(w[0]);
    }

private:
    NonlinSpec spec_;
    std::vector<std::unique_ptr<NonlinEvaluator>> children_;
    std::vector<std::vector<C>> powers_;
    std::vector<C> s_;
    std::vector<C> c_;
};

} // namespace telegraph
