#ifndef TRANSMUTE_NUMERIC_HPP
#define TRANSMUTE_NUMERIC_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace transmute::numeric {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 400;
};

// Sign-change bracket for root solving. f_lo * f_hi <= 0 must hold.
struct RootBracket {
    double lo;
    double hi;
    double f_lo;
    double f_hi;
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double erf(double x);
double erfc(double x);

double normal_pdf(double x);
double normal_cdf(double x);

// Inverse of normal_cdf, defined on (0,1). Throws std::domain_error otherwise.
double normal_quantile(double p);

// Adaptive Gauss-Kronrod (G7,K15) quadrature. Infinite endpoints are
// handled by a rational change of variable, so any absolutely integrable
// weight works (not just Gaussian ones). Throws QuadratureError when the
// subdivision budget runs out before the tolerance is met.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec = {});

// Root of a continuous monotone f inside the bracket. Bisection safeguarded
// with secant steps; an optional derivative enables Newton steps. Never
// leaves the current bracket. Throws std::invalid_argument if the bracket
// invariant is violated.
double solve_monotone(const std::function<double(double)>& f, RootBracket bracket,
                      double tol,
                      const std::function<double(double)>& derivative = {});

// All distinct real roots of z^3 + c2 z^2 + c1 z + c0 = 0, ascending.
// Closed-form trigonometric/Cardano branches plus a Newton polish.
std::vector<double> solve_cubic_monic(double c2, double c1, double c0);

// Real roots of a z^2 + b z + c = 0 in ascending order; degenerates to the
// linear case when |a| is negligible. An identically-zero equation yields
// no roots.
std::vector<double> solve_quadratic(double a, double b, double c);

}  // namespace transmute::numeric

#endif
