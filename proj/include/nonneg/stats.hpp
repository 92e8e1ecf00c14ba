#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace nonneg {

// Welford accumulator.
struct RunningStat {
    long long n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }

    double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
    double stddev() const { return std::sqrt(variance()); }
    double se_mean() const { return n > 0 ? stddev() / std::sqrt(static_cast<double>(n)) : 0.0; }

    void merge(const RunningStat& o) {
        if (o.n == 0) return;
        if (n == 0) { *this = o; return; }
        const double na = static_cast<double>(n), nb = static_cast<double>(o.n);
        const double delta = o.mean - mean;
        const double nt = na + nb;
        mean += delta * nb / nt;
        m2 += o.m2 + delta * delta * na * nb / nt;
        n += o.n;
    }
};

// Neumaier compensated summation. Needed where weights grow geometrically and
// cancellation between increments is severe.
struct NeumaierSum {
    double s = 0.0;
    double c = 0.0;

    void add(double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }

    double value() const { return s + c; }
};

// Wilson score interval lower bound for a binomial proportion.
inline double wilson_lower(long long successes, long long trials, double z) {
    if (trials <= 0) return 0.0;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = p + z2 / (2.0 * n);
    const double rad = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    return (center - rad) / denom;
}

// Wald check: |phat - p0| <= z * sqrt(p0 (1-p0) / n).
inline bool binomial_ci_contains(double p0, long long successes, long long trials, double z) {
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    return std::abs(phat - p0) <= z * std::sqrt(p0 * (1.0 - p0) / n);
}

// z quantiles used throughout: 4-sigma for unbiasedness gates, 2.5758 for 99%
// binomial intervals.
inline constexpr double kZ99 = 2.5758293035489004;

// Effective sample size from the autocorrelation function, Geyer initial
// positive sequence: sum consecutive lag pairs while their sum stays positive.
double ess_geyer(std::span<const double> chain);

// Standard error of the chain mean by batch means (sqrt(n) batches).
double batch_means_se(std::span<const double> chain);

}  // namespace nonneg
