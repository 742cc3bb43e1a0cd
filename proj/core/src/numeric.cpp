#include "transmute/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace transmute::numeric {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310005024;

// (G7, K15) Gauss-Kronrod pair on [-1, 1], abscissae in decreasing order.
constexpr double kXgk[8] = {
    0.99145537112081263920685469752633,
    0.94910791234275852452618968404785,
    0.86486442335976907278971278864093,
    0.74153118559939443986386477328079,
    0.58608723546769113029414483825873,
    0.40584515137739716690660641207696,
    0.20778495500789846760068940377324,
    0.0,
};
constexpr double kWgk[8] = {
    0.02293532201052922496373200805897,
    0.06309209262997855329070066318921,
    0.10479001032225018383987632254152,
    0.14065325971552591874518959051023,
    0.16900472663926790282658342659855,
    0.19035057806478540991325640242101,
    0.20443294007529889241416199923465,
    0.20948214108472782801299917489171,
};
constexpr double kWg[4] = {
    0.12948496616886969327061143267908,
    0.27970539148927666790146777142378,
    0.38183005050511894495036977548898,
    0.41795918367346938775510204081633,
};

struct Segment {
    double a, b;
    double integral;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(center - half * kXgk[i]);
        fv[14 - i] = f(center + half * kXgk[i]);
    }
    fv[7] = f(center);
    double kronrod = kWgk[7] * fv[7];
    double gauss = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kronrod += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1)
            gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

double adaptive(const std::function<double(double)>& f, double a, double b,
                const QuadratureSpec& spec) {
    // Start from several panels so a narrow feature between the nodes of a
    // single 15-point rule cannot masquerade as an already-converged zero.
    std::priority_queue<Segment> heap;
    double total = 0.0;
    double total_err = 0.0;
    const int panels = 8;
    for (int i = 0; i < panels; ++i) {
        Segment s = gauss_kronrod(f, a + (b - a) * i / panels,
                                  a + (b - a) * (i + 1) / panels);
        total += s.integral;
        total_err += s.error;
        heap.push(s);
    }
    for (int n = 0; n < spec.max_subdivisions; ++n) {
        if (total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
            return total;
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = gauss_kronrod(f, worst.a, mid);
        Segment right = gauss_kronrod(f, mid, worst.b);
        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    if (total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
        return total;
    throw QuadratureError("integrate: tolerance not met after " +
                          std::to_string(spec.max_subdivisions) + " subdivisions");
}

double guarded(const std::function<double(double)>& f, double x) {
    const double v = f(x);
    return std::isfinite(v) ? v : 0.0;
}

}  // namespace

double erf(double x) { return std::erf(x); }

double erfc(double x) { return std::erfc(x); }

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / kSqrt2Pi; }

double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

namespace {

// Acklam's rational approximation, |relative error| < 1.15e-9 before polish.
double normal_quantile_estimate(double p) {
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("normal_quantile: p must lie in (0,1)");
    if (p == 0.5)
        return 0.0;
    // Work in the lower half so the antisymmetry holds by construction.
    if (p > 0.5)
        return -normal_quantile(1.0 - p);
    double x = normal_quantile_estimate(p);
    // One Halley step against the erfc-based CDF; skipped where exp(x^2/2)
    // would overflow (the estimate is already adequate that deep in the tail).
    if (0.5 * x * x < 700.0) {
        const double e = normal_cdf(x) - p;
        const double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
        x -= u / (1.0 + 0.5 * x * u);
    }
    return x;
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec) {
    if (spec.abs_tol <= 0 || spec.rel_tol <= 0 || spec.max_subdivisions < 1)
        throw std::invalid_argument("integrate: malformed QuadratureSpec");
    if (lo == hi)
        return 0.0;
    if (lo > hi)
        return -integrate(f, hi, lo, spec);
    const bool lo_inf = std::isinf(lo);
    const bool hi_inf = std::isinf(hi);
    if (lo_inf && hi_inf) {
        auto g = [&f](double t) {
            const double s = 1.0 - t * t;
            return guarded(f, t / s) * (1.0 + t * t) / (s * s);
        };
        return adaptive(g, -1.0, 1.0, spec);
    }
    if (hi_inf) {
        auto g = [&f, lo](double t) {
            const double s = 1.0 - t;
            return guarded(f, lo + t / s) / (s * s);
        };
        return adaptive(g, 0.0, 1.0, spec);
    }
    if (lo_inf) {
        auto g = [&f, hi](double t) {
            const double s = 1.0 - t;
            return guarded(f, hi - t / s) / (s * s);
        };
        return adaptive(g, 0.0, 1.0, spec);
    }
    return adaptive(f, lo, hi, spec);
}

double solve_monotone(const std::function<double(double)>& f, RootBracket bracket,
                      double tol, const std::function<double(double)>& derivative) {
    double a = bracket.lo, b = bracket.hi;
    double fa = bracket.f_lo, fb = bracket.f_hi;
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b) || fa * fb > 0.0)
        throw std::invalid_argument("solve_monotone: invalid bracket");
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    double x = 0.5 * (a + b);
    for (int iter = 0; iter < 200; ++iter) {
        const double fx = f(x);
        if (std::abs(fx) <= tol)
            return x;
        if ((fx < 0.0) == (fa < 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        if (b - a <= tol)
            return 0.5 * (a + b);
        double cand = std::numeric_limits<double>::quiet_NaN();
        if (derivative) {
            const double dfx = derivative(x);
            if (dfx != 0.0)
                cand = x - fx / dfx;
        }
        if (!std::isfinite(cand) && fb != fa)
            cand = (a * fb - b * fa) / (fb - fa);  // secant through the bracket
        x = (std::isfinite(cand) && cand > a && cand < b) ? cand : 0.5 * (a + b);
    }
    return 0.5 * (a + b);
}

std::vector<double> solve_quadratic(double a, double b, double c) {
    const double mag = std::max({std::abs(a), std::abs(b), std::abs(c)});
    if (mag == 0.0)
        return {};
    if (std::abs(a) <= 1e-14 * mag) {
        if (b == 0.0)
            return {};
        return {-c / b};
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0)
        return {};
    if (disc == 0.0)
        return {-b / (2.0 * a)};
    const double sd = std::sqrt(disc);
    const double q = -0.5 * (b + (b >= 0.0 ? sd : -sd));
    std::vector<double> roots;
    roots.push_back(q / a);
    if (q != 0.0)
        roots.push_back(c / q);
    else
        roots.push_back(-b / a - q / a);
    std::sort(roots.begin(), roots.end());
    if (roots.size() == 2 && roots[0] == roots[1])
        roots.pop_back();
    return roots;
}

namespace {

double cubic_value(double z, double c2, double c1, double c0) {
    return ((z + c2) * z + c1) * z + c0;
}

double cubic_slope(double z, double c2, double c1) {
    return (3.0 * z + 2.0 * c2) * z + c1;
}

}  // namespace

std::vector<double> solve_cubic_monic(double c2, double c1, double c0) {
    // Depressed form t^3 + p t + q with z = t - c2/3.
    const double shift = c2 / 3.0;
    const double p = c1 - c2 * shift;
    const double q = c0 + shift * (2.0 * shift * shift - c1);
    const double half_q = 0.5 * q;
    const double third_p = p / 3.0;
    const double disc = half_q * half_q + third_p * third_p * third_p;
    const double disc_scale =
        std::max({std::abs(half_q * half_q), std::abs(third_p * third_p * third_p), 1e-300});

    std::vector<double> ts;
    if (std::abs(disc) <= 1e-12 * disc_scale) {
        // Repeated roots: a double and a simple root, or a triple root.
        if (std::abs(p) <= 1e-14 * std::max(1.0, std::cbrt(std::abs(q)))) {
            ts = {0.0};
        } else {
            ts = {3.0 * q / p, -1.5 * q / p};
        }
    } else if (disc < 0.0) {
        // Three distinct real roots: trigonometric branch (p < 0 here).
        const double m = 2.0 * std::sqrt(-third_p);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        ts = {m * std::cos(theta), m * std::cos(theta - 2.0 * M_PI / 3.0),
              m * std::cos(theta - 4.0 * M_PI / 3.0)};
    } else {
        // One real root: Cardano with the cancellation-free cube root pairing.
        const double big = std::abs(half_q) + std::sqrt(disc);
        const double a_term = (q >= 0.0 ? -1.0 : 1.0) * std::cbrt(big);
        const double b_term = a_term != 0.0 ? -third_p / a_term : 0.0;
        ts = {a_term + b_term};
    }

    std::vector<double> roots;
    roots.reserve(ts.size());
    for (double t : ts) {
        double z = t - shift;
        // Newton polish against the original cubic.
        for (int i = 0; i < 3; ++i) {
            const double fz = cubic_value(z, c2, c1, c0);
            const double dz = cubic_slope(z, c2, c1);
            if (fz == 0.0 || dz == 0.0)
                break;
            const double step = fz / dz;
            if (!std::isfinite(step))
                break;
            z -= step;
        }
        roots.push_back(z);
    }
    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots) {
        if (out.empty() || std::abs(r - out.back()) > 1e-8 * (1.0 + std::abs(r)))
            out.push_back(r);
    }
    return out;
}

}  // namespace transmute::numeric
