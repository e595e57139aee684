#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <telegraph/solver.hpp>

namespace telegraph
{

// Ratio of consecutive nonzero term norms, ||w_j|| / ||w_i||.
struct DeltaEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    double value = 0;
    // value^(1/(j-i)): the per-order decay rate across skipped zero terms
    double rate = 0;
};

struct ConvergenceReport {
    // ||w_i|| = ||c_i t^i|| in L2 over (x_lo, x_hi) x (0, T), i = 0..N
    std::vector<double> term_norms;
    double zero_threshold = 0;
    // indices whose norm is at or below zero_threshold
    std::vector<std::size_t> skipped;
    // over consecutive nonzero terms, zero terms skipped; deltas[n] is delta_n
    std::vector<DeltaEntry> deltas;
    // ||w_{n+1}|| / ||w_n|| for n = 0..N-1, with 0 where ||w_n|| = 0
    std::vector<double> strict_deltas;
    // every delta < 1 (vacuously true when fewer than two nonzero terms)
    bool verdict = true;
    bool vacuous = false;
    double delta_max = 0;
    double rate_max = 0;
    double w0_norm = 0;
};

double term_norm(const SeriesSolution &sol, std::size_t i);

// zero_threshold < 0 selects the default 1e-13 * max term norm.
ConvergenceReport analyze_convergence(const SeriesSolution &sol, double zero_threshold = -1);

// delta^(m+1) (1 - delta^(n-m)) / (1 - delta) * ||w_0||; requires n >= m.
// Empty when delta >= 1: the geometric argument then certifies nothing.
std::optional<double> tail_bound(double delta, std::size_t m, std::size_t n, double w0_norm);

// sum_{i=m+1..n} delta^i ||w_0||, the same finite sum without the delta < 1
// requirement. Bounds ||S_n - S_m|| whenever ||w_i|| <= delta^i ||w_0|| for all i.
double partial_sum_bound(double delta, std::size_t m, std::size_t n, double w0_norm);

// ||S_n - S_m|| in L2 over the space-time domain, S_k = sum_{i<=k} c_i t^i,
// by tensor Gauss-Legendre quadrature.
double partial_sum_distance(const SeriesSolution &sol, std::size_t m, std::size_t n);

} // namespace telegraph
