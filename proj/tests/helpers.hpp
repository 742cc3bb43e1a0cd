#ifndef TRANSMUTE_TESTS_HELPERS_HPP
#define TRANSMUTE_TESTS_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace testutil {

// Small deterministic generator for property tests (xorshift128+).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : s0_(seed ^ 0x9e3779b97f4a7c15ULL), s1_(seed + 1) {
        for (int i = 0; i < 8; ++i)
            next_u64();
    }

    std::uint64_t next_u64() {
        std::uint64_t x = s0_;
        const std::uint64_t y = s1_;
        s0_ = y;
        x ^= x << 23;
        s1_ = x ^ y ^ (x >> 17) ^ (y >> 26);
        return s1_ + y;
    }

    double uniform(double lo, double hi) {
        const double u = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
        return lo + (hi - lo) * u;
    }

  private:
    std::uint64_t s0_, s1_;
};

// Independent bisection oracle (no Newton, no closed forms).
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double tol = 1e-15) {
    double flo = f(lo);
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Two-sided Kolmogorov-Smirnov statistic of a sample against a CDF.
inline double ks_statistic(std::vector<double> xs,
                           const std::function<double(double)>& cdf) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max(d, std::abs((static_cast<double>(i) + 1.0) / n - f));
        d = std::max(d, std::abs(static_cast<double>(i) / n - f));
    }
    return d;
}

// Asymptotic two-sided KS critical value at significance alpha.
inline double ks_critical(std::size_t n, double alpha) {
    return std::sqrt(0.5 * std::log(2.0 / alpha)) / std::sqrt(static_cast<double>(n));
}

inline double central_diff(const std::function<double(double)>& f, double x,
                           double h = 1e-5) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace testutil

#endif
