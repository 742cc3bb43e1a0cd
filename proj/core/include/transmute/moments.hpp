#ifndef TRANSMUTE_MOMENTS_HPP
#define TRANSMUTE_MOMENTS_HPP

#include <array>
#include <memory>
#include <stdexcept>

#include "transmute/numeric.hpp"
#include "transmute/transmuted.hpp"

namespace transmute {

struct MomentSummary {
    std::array<double, 4> raw{};  // E[X^k], k = 1..4
    double mean = 0.0;
    double variance = 0.0;
    double skewness = 0.0;
    double excess_kurtosis = 0.0;

    static MomentSummary from_raw(const std::array<double, 4>& raw);
};

struct MomentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed-form raw moments of the transmuted standard normal:
// E[X]   = a1/sqrt(pi)          E[X^2] = 1 + sqrt(3) a2 / (2 pi)
// E[X^3] = 5 a1 / (2 sqrt(pi))  E[X^4] = 3 + 13 a2 / (2 pi sqrt(3))
// Throws InvalidMapError when (a1, a2) is not an admissible map.
MomentSummary analytic_moments_normal(double alpha1, double alpha2);

// E[X^k] by quadrature of x^k * pdf over the support. Throws MomentError
// when the distribution has no finite k-th moment (Cauchy base).
double quadrature_raw_moment(const BaseDistribution& d, int k,
                             const numeric::QuadratureSpec& spec = {});

MomentSummary quadrature_moments(const BaseDistribution& d,
                                 const numeric::QuadratureSpec& spec = {});

// Empirical raw moments and summary of a sample.
MomentSummary sample_moments(const std::vector<double>& xs);

// Affine shift/scale taking the skew-normal (quadratic map, |lambda| <= 1,
// normal base) to zero mean and unit variance: (X - mu)/sigma with
// mu = -lambda/sqrt(pi), sigma = sqrt(1 - lambda^2/pi).
struct StandardizedForm {
    double mu;
    double sigma;
    std::shared_ptr<const TransmutedDistribution> underlying;

    double pdf(double x) const;
};

StandardizedForm skew_normal_standardize(double lambda);

struct CalibrationTarget {
    double skewness;
    double excess_kurtosis;
};

struct Calibration {
    double alpha1;
    double alpha2;
};

struct UnreachableTargetError : std::runtime_error {
    UnreachableTargetError(const std::string& msg, Calibration nearest_params,
                           CalibrationTarget nearest_moments)
        : std::runtime_error(msg), nearest(nearest_params),
          attained(nearest_moments) {}
    Calibration nearest;
    CalibrationTarget attained;
};

// Damped 2-D Newton on (alpha1, alpha2) matching the standardized skewness
// and excess kurtosis of analytic_moments_normal; iterates projected onto
// the valid region. Throws UnreachableTargetError with the nearest
// attainable values when the target lies outside the moment envelope.
Calibration calibrate(const CalibrationTarget& target);

// Affine solve for raw-moment targets (E[X], E[X^2]); the Table of moments
// is linear in the parameters, so this is exact. Result is validity-checked.
Calibration calibrate_raw(double mean, double second_moment);

}  // namespace transmute

#endif
