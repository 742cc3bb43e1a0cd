#ifndef TRANSMUTE_RTM_HPP
#define TRANSMUTE_RTM_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace transmute {

struct ClipInterval {
    double lo;
    double hi;
};

// Admissibility verdict for a map of the unit interval. min_slope/argmin
// describe the slope minimum over the non-clipped portion of [0,1];
// clip_intervals lists where the raw polynomial leaves [0,1].
struct ValidityReport {
    bool valid = false;
    double min_slope = 0.0;
    double argmin = 0.0;
    std::pair<double, double> endpoint_slopes{0.0, 0.0};
    std::vector<ClipInterval> clip_intervals;
};

struct InvalidMapError : std::invalid_argument {
    InvalidMapError(const std::string& msg, ValidityReport r)
        : std::invalid_argument(msg), report(std::move(r)) {}
    ValidityReport report;
};

// Monotone map of [0,1] onto itself. forward(0)=0 and forward(1)=1 exactly;
// on the non-clipped portion inverse is the exact inverse of forward.
class RankTransmutationMap {
  public:
    virtual ~RankTransmutationMap() = default;

    virtual double forward(double u) const = 0;
    virtual double inverse(double p) const = 0;
    virtual double derivative(double u) const = 0;
    virtual bool clip_mode() const = 0;
    virtual ValidityReport validity() const = 0;

    // Sub-interval of [0,1] on which the map is strictly interior (outside
    // it the clipped map sits at 0 or 1).
    virtual ClipInterval active_interval() const { return {0.0, 1.0}; }

    virtual std::string name() const = 0;
};

using MapPtr = std::shared_ptr<const RankTransmutationMap>;

// Raw polynomial family P(z) = z - z(1-z)(a1 + (z-1/2) a2) and its slope.
double poly_forward(double alpha1, double alpha2, double z);
double poly_derivative(double alpha1, double alpha2, double z);

// Admissibility of the raw (unclipped) polynomial: slope checked at the
// endpoints, the midpoint, and the interior vertex of the slope quadratic.
ValidityReport validate_params(double alpha1, double alpha2);

// Admissibility after projecting the raw polynomial onto [0,1].
ValidityReport validate_params_clipped(double alpha1, double alpha2);

double quadratic_forward(double lambda, double u, bool clip = false);

// Inverse of u + lambda u(1-u) in the cancellation-free form
// 2u / (1 + lambda + sqrt((1+lambda)^2 - 4 lambda u)); identity at lambda=0.
double quadratic_inverse(double lambda, double u);

// Clipped symmetric cubic map, u - gamma u(1-u)(u-1/2) projected onto [0,1].
double scrtm_forward(double gamma, double u);

struct RegionRow {
    double alpha2;
    double alpha1_min;
    double alpha1_max;
};

// Extreme admissible alpha1 per alpha2, by bisection to 1e-8. Grid values
// whose alpha1 section is empty (alpha2 outside [-2,4]) yield NaN bounds.
std::vector<RegionRow> trace_region(const std::vector<double>& alpha2_grid);

class PolynomialRTM : public RankTransmutationMap {
  public:
    PolynomialRTM(double alpha1, double alpha2, bool clip = false);

    double forward(double u) const override;
    double inverse(double p) const override;
    double derivative(double u) const override;
    bool clip_mode() const override { return clip_; }
    ValidityReport validity() const override { return report_; }
    ClipInterval active_interval() const override { return {active_lo_, active_hi_}; }
    std::string name() const override;

    double alpha1() const { return a1_; }
    double alpha2() const { return a2_; }

  private:
    double a1_;
    double a2_;
    bool clip_;
    ValidityReport report_;
    double active_lo_ = 0.0;
    double active_hi_ = 1.0;
};

// u + lambda u(1-u); stored as PolynomialRTM(-lambda, 0).
class QuadraticRTM final : public PolynomialRTM {
  public:
    explicit QuadraticRTM(double lambda, bool clip = false);
    double lambda() const { return -alpha1(); }
    std::string name() const override;
};

// Symmetric cubic map (always clipped). gamma > 4 breaks monotonicity at the
// interior fixed point 1/2 and is rejected.
class SymmetricCubicRTM final : public PolynomialRTM {
  public:
    explicit SymmetricCubicRTM(double gamma);
    double gamma() const { return alpha2(); }
    std::string name() const override;
};

}  // namespace transmute

#endif
