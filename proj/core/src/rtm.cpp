#include "transmute/rtm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "transmute/numeric.hpp"

namespace transmute {

namespace {

constexpr double kSlopeTol = 1e-14;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Interior critical points of the slope quadratic
// P'(z) = 3 a2 z^2 + (2 a1 - 3 a2) z + (1 - a1 + a2/2).
std::vector<double> slope_roots_inside(double a1, double a2) {
    std::vector<double> out;
    for (double r : numeric::solve_quadratic(3.0 * a2, 2.0 * a1 - 3.0 * a2,
                                             1.0 - a1 + 0.5 * a2)) {
        if (r > 0.0 && r < 1.0)
            out.push_back(r);
    }
    return out;
}

void track_min(double& min_slope, double& argmin, double a1, double a2, double z) {
    const double s = poly_derivative(a1, a2, z);
    if (s < min_slope) {
        min_slope = s;
        argmin = z;
    }
}

struct ClipAnalysis {
    ValidityReport report;
    double active_lo = 0.0;
    double active_hi = 1.0;
};

ClipAnalysis analyze_clipped(double a1, double a2) {
    ClipAnalysis out;
    ValidityReport& rep = out.report;
    rep.endpoint_slopes = {poly_derivative(a1, a2, 0.0), poly_derivative(a1, a2, 1.0)};

    // A decreasing stretch of the raw polynomial is harmless only when it
    // lies entirely at or below 0, or at or above 1, so that the projection
    // flattens it instead of folding the map.
    std::vector<double> knots{0.0};
    for (double c : slope_roots_inside(a1, a2))
        knots.push_back(c);
    knots.push_back(1.0);
    std::sort(knots.begin(), knots.end());
    bool ok = true;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double s = knots[i], e = knots[i + 1];
        if (poly_derivative(a1, a2, 0.5 * (s + e)) < -kSlopeTol) {
            if (!(poly_forward(a1, a2, s) <= kSlopeTol ||
                  poly_forward(a1, a2, e) >= 1.0 - kSlopeTol))
                ok = false;
        }
    }

    // Raw zero level: P(z) = z * Q(z); raw unit level: P(z) - 1 = (z-1) * R(z).
    double alo = 0.0, ahi = 1.0;
    for (double r : numeric::solve_quadratic(a2, a1 - 1.5 * a2, 1.0 - a1 + 0.5 * a2)) {
        if (r > 1e-12 && r < 1.0 - 1e-12)
            alo = std::max(alo, r);
    }
    for (double r : numeric::solve_quadratic(a2, a1 - 0.5 * a2, 1.0)) {
        if (r > 1e-12 && r < 1.0 - 1e-12)
            ahi = std::min(ahi, r);
    }
    if (!(alo < ahi))
        ok = false;

    double min_slope = std::numeric_limits<double>::infinity();
    double argmin = alo;
    track_min(min_slope, argmin, a1, a2, alo);
    track_min(min_slope, argmin, a1, a2, ahi);
    track_min(min_slope, argmin, a1, a2, 0.5 * (alo + ahi));
    for (double c : slope_roots_inside(a1, a2)) {
        if (c > alo && c < ahi)
            track_min(min_slope, argmin, a1, a2, c);
    }
    rep.min_slope = min_slope;
    rep.argmin = argmin;
    rep.valid = ok && min_slope >= -kSlopeTol;
    if (alo > kSlopeTol)
        rep.clip_intervals.push_back({0.0, alo});
    if (ahi < 1.0 - kSlopeTol)
        rep.clip_intervals.push_back({ahi, 1.0});
    out.active_lo = alo;
    out.active_hi = ahi;
    return out;
}

}  // namespace

double poly_forward(double alpha1, double alpha2, double z) {
    return z - z * (1.0 - z) * (alpha1 + (z - 0.5) * alpha2);
}

double poly_derivative(double alpha1, double alpha2, double z) {
    return 1.0 - alpha1 * (1.0 - 2.0 * z) + alpha2 * (3.0 * z * z - 3.0 * z + 0.5);
}

ValidityReport validate_params(double alpha1, double alpha2) {
    ValidityReport rep;
    rep.endpoint_slopes = {poly_derivative(alpha1, alpha2, 0.0),
                           poly_derivative(alpha1, alpha2, 1.0)};
    double min_slope = std::numeric_limits<double>::infinity();
    double argmin = 0.0;
    for (double z : {0.0, 0.5, 1.0})
        track_min(min_slope, argmin, alpha1, alpha2, z);
    if (alpha2 != 0.0) {
        const double vertex = 0.5 - alpha1 / (3.0 * alpha2);
        if (vertex > 0.0 && vertex < 1.0)
            track_min(min_slope, argmin, alpha1, alpha2, vertex);
    }
    rep.min_slope = min_slope;
    rep.argmin = argmin;
    rep.valid = min_slope >= -kSlopeTol;
    return rep;
}

ValidityReport validate_params_clipped(double alpha1, double alpha2) {
    return analyze_clipped(alpha1, alpha2).report;
}

double quadratic_forward(double lambda, double u, bool clip) {
    if (!clip && std::abs(lambda) > 1.0)
        throw InvalidMapError("quadratic map: |lambda| > 1 requires clip mode",
                              validate_params(-lambda, 0.0));
    const double raw = poly_forward(-lambda, 0.0, u);
    return clip ? std::clamp(raw, 0.0, 1.0) : raw;
}

double quadratic_inverse(double lambda, double u) {
    const double opl = 1.0 + lambda;
    const double disc = std::max(opl * opl - 4.0 * lambda * u, 0.0);
    const double denom = opl + std::sqrt(disc);
    if (denom == 0.0)
        return 0.0;
    return 2.0 * u / denom;
}

double scrtm_forward(double gamma, double u) {
    if (gamma > 4.0)
        throw InvalidMapError(
            "symmetric cubic map: gamma > 4 is non-monotone at u = 1/2",
            validate_params_clipped(0.0, gamma));
    return std::clamp(poly_forward(0.0, gamma, u), 0.0, 1.0);
}

std::vector<RegionRow> trace_region(const std::vector<double>& alpha2_grid) {
    std::vector<RegionRow> rows;
    rows.reserve(alpha2_grid.size());
    for (double a2 : alpha2_grid) {
        if (!validate_params(0.0, a2).valid) {
            rows.push_back({a2, kNaN, kNaN});
            continue;
        }
        auto boundary = [a2](double sign) {
            double lo = 0.0;  // valid
            double hi = sign * (2.0 + std::max(0.0, a2) / 2.0);
            double lo_a = 0.0, hi_a = std::abs(hi);
            while (hi_a - lo_a > 1e-8) {
                const double mid = 0.5 * (lo_a + hi_a);
                if (validate_params(sign * mid, a2).valid)
                    lo_a = mid;
                else
                    hi_a = mid;
            }
            (void)lo;
            return sign * 0.5 * (lo_a + hi_a);
        };
        rows.push_back({a2, boundary(-1.0), boundary(+1.0)});
    }
    return rows;
}

PolynomialRTM::PolynomialRTM(double alpha1, double alpha2, bool clip)
    : a1_(alpha1), a2_(alpha2), clip_(clip) {
    if (!std::isfinite(alpha1) || !std::isfinite(alpha2))
        throw std::invalid_argument("polynomial map: parameters must be finite");
    if (clip_) {
        ClipAnalysis analysis = analyze_clipped(a1_, a2_);
        report_ = analysis.report;
        active_lo_ = analysis.active_lo;
        active_hi_ = analysis.active_hi;
    } else {
        report_ = validate_params(a1_, a2_);
    }
    if (!report_.valid)
        throw InvalidMapError("polynomial map: parameters (" + std::to_string(a1_) +
                                  ", " + std::to_string(a2_) +
                                  ") do not give a monotone map" +
                                  (clip_ ? " even after clipping" : ""),
                              report_);
}

double PolynomialRTM::forward(double u) const {
    return std::clamp(poly_forward(a1_, a2_, u), 0.0, 1.0);
}

double PolynomialRTM::derivative(double u) const {
    if (clip_ && (u < active_lo_ || u > active_hi_))
        return 0.0;
    return poly_derivative(a1_, a2_, u);
}

double PolynomialRTM::inverse(double p) const {
    if (p <= 0.0)
        return active_lo_;
    if (p >= 1.0)
        return active_hi_;
    if (a1_ == 0.0 && a2_ == 0.0)
        return p;
    if (a2_ == 0.0)
        return std::clamp(quadratic_inverse(-a1_, p), active_lo_, active_hi_);

    double best = kNaN;
    double best_res = std::numeric_limits<double>::infinity();
    if (std::abs(a2_) > 1e-7) {
        const double c2 = (a1_ - 1.5 * a2_) / a2_;
        const double c1 = (1.0 - a1_ + 0.5 * a2_) / a2_;
        const double c0 = -p / a2_;
        for (double r : numeric::solve_cubic_monic(c2, c1, c0)) {
            if (r < active_lo_ - 1e-9 || r > active_hi_ + 1e-9)
                continue;
            double z = std::clamp(r, active_lo_, active_hi_);
            // Sharpen against the factored polynomial.
            for (int i = 0; i < 2; ++i) {
                const double f = poly_forward(a1_, a2_, z) - p;
                const double d = poly_derivative(a1_, a2_, z);
                if (f == 0.0 || d <= 0.0)
                    break;
                z = std::clamp(z - f / d, active_lo_, active_hi_);
            }
            const double res = std::abs(poly_forward(a1_, a2_, z) - p);
            if (res < best_res) {
                best = z;
                best_res = res;
            }
        }
    }
    if (std::isfinite(best) && best_res <= 1e-13)
        return best;

    // Ill-conditioned closed form: safeguarded bracketed solve.
    const double f_lo = poly_forward(a1_, a2_, active_lo_) - p;
    const double f_hi = poly_forward(a1_, a2_, active_hi_) - p;
    if (f_lo >= 0.0)
        return active_lo_;
    if (f_hi <= 0.0)
        return active_hi_;
    auto f = [this, p](double z) { return poly_forward(a1_, a2_, z) - p; };
    auto df = [this](double z) { return poly_derivative(a1_, a2_, z); };
    return numeric::solve_monotone(f, {active_lo_, active_hi_, f_lo, f_hi}, 1e-15, df);
}

std::string PolynomialRTM::name() const {
    return "poly(a1=" + std::to_string(a1_) + ",a2=" + std::to_string(a2_) +
           (clip_ ? ",clip)" : ")");
}

QuadraticRTM::QuadraticRTM(double lambda, bool clip)
    : PolynomialRTM(-lambda, 0.0, clip) {}

std::string QuadraticRTM::name() const {
    return "quad(lambda=" + std::to_string(lambda()) +
           (clip_mode() ? ",clip)" : ")");
}

SymmetricCubicRTM::SymmetricCubicRTM(double gamma) : PolynomialRTM(0.0, gamma, true) {}

std::string SymmetricCubicRTM::name() const {
    return "cubic(gamma=" + std::to_string(gamma()) + ")";
}

}  // namespace transmute
