#include "transmute/moments.hpp"

#include <algorithm>
#include <cmath>

namespace transmute {

namespace {

const double kSqrtPi = std::sqrt(M_PI);

std::array<double, 4> raw_moments_normal_unchecked(double a1, double a2) {
    return {a1 / kSqrtPi, 1.0 + std::sqrt(3.0) * a2 / (2.0 * M_PI),
            2.5 * a1 / kSqrtPi, 3.0 + 13.0 * a2 / (2.0 * M_PI * std::sqrt(3.0))};
}

// Standardized skewness / excess kurtosis of the transmuted normal without
// the validity gate, for use inside the calibration solver.
std::pair<double, double> shape_moments_unchecked(double a1, double a2) {
    const MomentSummary m = MomentSummary::from_raw(raw_moments_normal_unchecked(a1, a2));
    return {m.skewness, m.excess_kurtosis};
}

// Largest admissible |alpha1| for a given alpha2 (the region is symmetric).
double alpha1_extent(double a2) {
    double lo = 0.0;
    double hi = 2.0 + std::max(0.0, a2) / 2.0;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (validate_params(mid, a2).valid)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

Calibration project_valid(Calibration c) {
    c.alpha2 = std::clamp(c.alpha2, -2.0, 4.0);
    const double extent = alpha1_extent(c.alpha2);
    c.alpha1 = std::clamp(c.alpha1, -extent, extent);
    return c;
}

}  // namespace

MomentSummary MomentSummary::from_raw(const std::array<double, 4>& raw) {
    MomentSummary m;
    m.raw = raw;
    const double m1 = raw[0], m2 = raw[1], m3 = raw[2], m4 = raw[3];
    m.mean = m1;
    m.variance = m2 - m1 * m1;
    const double mu3 = m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1;
    const double mu4 =
        m4 - 4.0 * m1 * m3 + 6.0 * m1 * m1 * m2 - 3.0 * m1 * m1 * m1 * m1;
    m.skewness = mu3 / std::pow(m.variance, 1.5);
    m.excess_kurtosis = mu4 / (m.variance * m.variance) - 3.0;
    return m;
}

MomentSummary analytic_moments_normal(double alpha1, double alpha2) {
    ValidityReport rep = validate_params(alpha1, alpha2);
    if (!rep.valid)
        throw InvalidMapError("analytic moments: parameters outside the valid region",
                              std::move(rep));
    return MomentSummary::from_raw(raw_moments_normal_unchecked(alpha1, alpha2));
}

double quadrature_raw_moment(const BaseDistribution& d, int k,
                             const numeric::QuadratureSpec& spec) {
    if (k < 0)
        throw std::invalid_argument("quadrature_raw_moment: k must be >= 0");
    if (k > d.max_finite_moment())
        throw MomentError("moment E[X^" + std::to_string(k) + "] of " + d.name() +
                          " does not exist");
    const Interval s = d.support();
    return numeric::integrate(
        [&d, k](double x) { return std::pow(x, k) * d.pdf(x); }, s.lo, s.hi, spec);
}

MomentSummary quadrature_moments(const BaseDistribution& d,
                                 const numeric::QuadratureSpec& spec) {
    std::array<double, 4> raw;
    for (int k = 1; k <= 4; ++k)
        raw[k - 1] = quadrature_raw_moment(d, k, spec);
    return MomentSummary::from_raw(raw);
}

MomentSummary sample_moments(const std::vector<double>& xs) {
    std::array<double, 4> raw{0.0, 0.0, 0.0, 0.0};
    for (double x : xs) {
        const double x2 = x * x;
        raw[0] += x;
        raw[1] += x2;
        raw[2] += x2 * x;
        raw[3] += x2 * x2;
    }
    const double n = static_cast<double>(xs.size());
    for (double& r : raw)
        r /= n;
    return MomentSummary::from_raw(raw);
}

double StandardizedForm::pdf(double x) const {
    return sigma * underlying->pdf(sigma * x + mu);
}

StandardizedForm skew_normal_standardize(double lambda) {
    if (std::abs(lambda) > 1.0)
        throw std::invalid_argument("skew_normal_standardize: |lambda| must be <= 1");
    StandardizedForm f;
    f.mu = -lambda / kSqrtPi;
    f.sigma = std::sqrt(1.0 - lambda * lambda / M_PI);
    f.underlying = std::make_shared<TransmutedDistribution>(
        std::make_shared<NormalBase>(), std::make_shared<QuadraticRTM>(lambda));
    return f;
}

Calibration calibrate(const CalibrationTarget& target) {
    if (!std::isfinite(target.skewness) || !std::isfinite(target.excess_kurtosis))
        throw std::invalid_argument("calibrate: target must be finite");

    auto residual = [&target](const Calibration& c) {
        const auto [skew, exk] = shape_moments_unchecked(c.alpha1, c.alpha2);
        return std::array<double, 2>{skew - target.skewness,
                                     exk - target.excess_kurtosis};
    };
    auto norm = [](const std::array<double, 2>& r) {
        return std::max(std::abs(r[0]), std::abs(r[1]));
    };

    // Damped Newton with iterates projected onto the valid region.
    auto newton = [&](Calibration x) {
        std::array<double, 2> r = residual(x);
        const double fd_h = 1e-6;
        for (int iter = 0; iter < 100 && norm(r) > 1e-12; ++iter) {
            // Finite-difference Jacobian, stepping toward the interior so the
            // probe points stay inside the valid region.
            const double h1 = x.alpha1 > 0.0 ? -fd_h : fd_h;
            const double h2 = x.alpha2 > 0.0 ? -fd_h : fd_h;
            const auto r1 = residual({x.alpha1 + h1, x.alpha2});
            const auto r2 = residual({x.alpha1, x.alpha2 + h2});
            const double j11 = (r1[0] - r[0]) / h1, j12 = (r2[0] - r[0]) / h2;
            const double j21 = (r1[1] - r[1]) / h1, j22 = (r2[1] - r[1]) / h2;
            const double det = j11 * j22 - j12 * j21;
            if (std::abs(det) < 1e-14)
                break;
            const double d1 = (-r[0] * j22 + r[1] * j12) / det;
            const double d2 = (-r[1] * j11 + r[0] * j21) / det;

            double damp = 1.0;
            bool accepted = false;
            for (int k = 0; k < 40; ++k, damp *= 0.5) {
                Calibration cand =
                    project_valid({x.alpha1 + damp * d1, x.alpha2 + damp * d2});
                const auto rc = residual(cand);
                if (norm(rc) < norm(r)) {
                    const bool converged =
                        std::abs(cand.alpha1 - x.alpha1) < 1e-10 &&
                        std::abs(cand.alpha2 - x.alpha2) < 1e-10;
                    x = cand;
                    r = rc;
                    accepted = true;
                    if (converged)
                        iter = 100;
                    break;
                }
            }
            if (!accepted)
                break;  // stuck on the region boundary
        }
        return std::pair<Calibration, double>{x, norm(r)};
    };

    // The shape-moment map is not injective and projected Newton can pin
    // itself to the region boundary, so run it from the best grid seeds and
    // keep the overall winner.
    std::vector<std::pair<double, Calibration>> seeds;
    seeds.emplace_back(norm(residual({0.0, 0.0})), Calibration{0.0, 0.0});
    for (int j = 0; j <= 24; ++j) {
        const double a2 = -1.95 + (3.95 + 1.95) * j / 24.0;
        const double ext = 0.95 * alpha1_extent(a2);
        for (int i = 0; i <= 24; ++i) {
            const Calibration cand{-ext + 2.0 * ext * i / 24.0, a2};
            seeds.emplace_back(norm(residual(cand)), cand);
        }
    }
    std::sort(seeds.begin(), seeds.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // The target can have several preimages; among converged solutions return
    // the canonical one closest to the identity map (alpha1 = alpha2 = 0).
    Calibration x = seeds.front().second;
    double best = seeds.front().first;
    for (std::size_t s = 0; s < seeds.size() && s < 8; ++s) {
        const auto [cand, res] = newton(seeds[s].second);
        const double d_cand = cand.alpha1 * cand.alpha1 + cand.alpha2 * cand.alpha2;
        const double d_best = x.alpha1 * x.alpha1 + x.alpha2 * x.alpha2;
        const bool both_converged = res <= 1e-10 && best <= 1e-10;
        if ((both_converged && d_cand < d_best) || (!both_converged && res < best)) {
            best = res;
            x = cand;
        }
    }
    const std::array<double, 2> r = residual(x);

    if (norm(r) > 1e-8) {
        const auto [skew, exk] = shape_moments_unchecked(x.alpha1, x.alpha2);
        throw UnreachableTargetError(
            "calibrate: target (skew=" + std::to_string(target.skewness) +
                ", exkurt=" + std::to_string(target.excess_kurtosis) +
                ") unreachable; nearest attainable (skew=" + std::to_string(skew) +
                ", exkurt=" + std::to_string(exk) + ") at (alpha1=" +
                std::to_string(x.alpha1) + ", alpha2=" + std::to_string(x.alpha2) + ")",
            x, {skew, exk});
    }
    return x;
}

Calibration calibrate_raw(double mean, double second_moment) {
    Calibration c{mean * kSqrtPi,
                  (second_moment - 1.0) * 2.0 * M_PI / std::sqrt(3.0)};
    ValidityReport rep = validate_params(c.alpha1, c.alpha2);
    if (!rep.valid)
        throw InvalidMapError("calibrate_raw: implied parameters are inadmissible",
                              std::move(rep));
    return c;
}

}  // namespace transmute
