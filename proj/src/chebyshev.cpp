#include <telegraph/chebyshev.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include <telegraph/errors.hpp>

namespace telegraph
{

namespace
{

// cos(pi * m / n) with the argument reduced exactly.
real_ext cos_pi_ratio(long long m, long long n)
{
    m %= 2 * n;
    return boost::multiprecision::cos(pi_ext() * real_ext(m) / real_ext(n));
}

} // namespace

ChebyshevGrid::ChebyshevGrid(std::size_t points, double lo, double hi) : lo_(lo), hi_(hi)
{
    if (points < 8) {
        throw std::invalid_argument("Chebyshev grid needs at least 8 points");
    }
    if (!(lo < hi)) {
        throw std::invalid_argument("Chebyshev grid needs lo < hi");
    }
    const std::size_t M = points;
    const long long n = static_cast<long long>(M) - 1;
    const real_ext half_width = (real_ext(hi) - real_ext(lo)) / 2;
    const real_ext mid = (real_ext(hi) + real_ext(lo)) / 2;

    // reference nodes s_j = -cos(pi j / n), written with sin for symmetry
    std::vector<real_ext> s(M);
    nodes_.resize(M);
    for (std::size_t j = 0; j < M; ++j) {
        s[j] = boost::multiprecision::sin(pi_ext() * real_ext(2 * static_cast<long long>(j) - n) / real_ext(2 * n));
        nodes_[j] = mid + half_width * s[j];
    }
    nodes_.front() = real_ext(lo);
    nodes_.back() = real_ext(hi);

    bary_.resize(M);
    for (std::size_t j = 0; j < M; ++j) {
        bary_[j] = (j % 2 == 0) ? 1 : -1;
    }
    bary_.front() /= 2;
    bary_.back() /= 2;

    // T_p(s_j) = (-1)^p cos(p j pi / n)
    synthesis_.assign(M * M, real_ext(0));
    analysis_.assign(M * M, real_ext(0));
    for (std::size_t j = 0; j < M; ++j) {
        for (std::size_t p = 0; p < M; ++p) {
            real_ext tp = cos_pi_ratio(static_cast<long long>(p * j), n);
            if (p % 2 == 1) {
                tp = -tp;
            }
            synthesis_[j * M + p] = tp;
            real_ext w = real_ext(2) / real_ext(n);
            if (j == 0 || j == M - 1) {
                w /= 2;
            }
            if (p == 0 || p == M - 1) {
                w /= 2;
            }
            analysis_[p * M + j] = w * tp;
        }
    }

    // First-derivative matrix on the reference interval, then D2 = D * D.
    std::vector<real_ext> c(M, real_ext(1));
    c.front() = 2;
    c.back() = 2;
    std::vector<real_ext> D(M * M, real_ext(0));
    for (std::size_t i = 0; i < M; ++i) {
        real_ext diag = 0;
        for (std::size_t j = 0; j < M; ++j) {
            if (i == j) {
                continue;
            }
            const real_ext sign = ((i + j) % 2 == 0) ? 1 : -1;
            D[i * M + j] = sign * (c[i] / c[j]) / (s[i] - s[j]);
            diag -= D[i * M + j];
        }
        D[i * M + i] = diag;
    }
    const real_ext scale = 1 / (half_width * half_width);
    d2_.assign(M * M, real_ext(0));
    for (std::size_t i = 0; i < M; ++i) {
        for (std::size_t k = 0; k < M; ++k) {
            const real_ext dik = D[i * M + k];
            if (dik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < M; ++j) {
                d2_[i * M + j] += dik * D[k * M + j];
            }
        }
        for (std::size_t j = 0; j < M; ++j) {
            d2_[i * M + j] *= scale;
        }
    }

    // Clenshaw-Curtis weights (symmetric, so node ordering does not matter).
    cc_weights_.assign(M, real_ext(0));
    const real_ext nn = real_ext(n) * real_ext(n);
    const real_ext end_weight = (n % 2 == 0) ? 1 / (nn - 1) : 1 / nn;
    cc_weights_.front() = end_weight * half_width;
    cc_weights_.back() = end_weight * half_width;
    for (long long j = 1; j < n; ++j) {
        real_ext v = 1;
        const long long kmax = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
        for (long long k = 1; k <= kmax; ++k) {
            v -= 2 * cos_pi_ratio(2 * k * j, n) / real_ext(4 * k * k - 1);
        }
        if (n % 2 == 0) {
            v -= cos_pi_ratio(n * j, n) / (nn - 1);
        }
        cc_weights_[static_cast<std::size_t>(j)] = 2 * v / real_ext(n) * half_width;
    }
}

std::shared_ptr<const ChebyshevGrid> ChebyshevGrid::get(std::size_t points, double lo, double hi)
{
    static std::mutex mutex;
    static std::map<std::tuple<std::size_t, double, double>, std::shared_ptr<const ChebyshevGrid>> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[{points, lo, hi}];
    if (!slot) {
        slot = std::make_shared<const ChebyshevGrid>(points, lo, hi);
    }
    return slot;
}

std::vector<real_ext> ChebyshevGrid::apply(const std::vector<real_ext> &matrix, std::span<const real_ext> v) const
{
    const std::size_t M = size();
    if (v.size() != M) {
        throw backend_mismatch("vector length does not match the Chebyshev grid");
    }
    std::vector<real_ext> out(M, real_ext(0));
    for (std::size_t i = 0; i < M; ++i) {
        real_ext acc = 0;
        for (std::size_t j = 0; j < M; ++j) {
            acc += matrix[i * M + j] * v[j];
        }
        out[i] = acc;
    }
    return out;
}

std::vector<real_ext> ChebyshevGrid::coefficients(std::span<const real_ext> values) const
{
    return apply(analysis_, values);
}

std::vector<real_ext> ChebyshevGrid::synthesize(std::span<const real_ext> coeffs) const
{
    return apply(synthesis_, coeffs);
}

std::vector<real_ext> ChebyshevGrid::second_derivative(std::span<const real_ext> values) const
{
    auto a = coefficients(values);
    real_ext largest = 0;
    for (const auto &v : a) {
        largest = std::max(largest, boost::multiprecision::fabs(v));
    }
    const real_ext cutoff = largest * real_ext(chop_tolerance);
    std::size_t keep = a.size();
    while (keep > 0 && boost::multiprecision::fabs(a[keep - 1]) <= cutoff) {
        --keep;
    }
    for (std::size_t p = keep; p < a.size(); ++p) {
        a[p] = 0;
    }
    return apply(d2_, synthesize(a));
}

real_ext ChebyshevGrid::interpolate(std::span<const real_ext> values, const real_ext &x) const
{
    if (values.size() != size()) {
        throw backend_mismatch("vector length does not match the Chebyshev grid");
    }
    if (x < real_ext(lo_) || x > real_ext(hi_)) {
        throw domain_error("evaluation point outside the grid domain");
    }
    real_ext num = 0;
    real_ext den = 0;
    for (std::size_t j = 0; j < size(); ++j) {
        const real_ext d = x - nodes_[j];
        if (d == 0) {
            return values[j];
        }
        const real_ext w = bary_[j] / d;
        num += w * values[j];
        den += w;
    }
    return num / den;
}

} // namespace telegraph
