#include "transmute/base_dist.hpp"

#include <cmath>
#include <stdexcept>

#include "transmute/numeric.hpp"

namespace transmute {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_prob(double p, const char* who) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error(std::string(who) + ": p must lie in (0,1)");
}

}  // namespace

double UniformBase::pdf(double x) const { return (x >= 0.0 && x <= 1.0) ? 1.0 : 0.0; }

double UniformBase::cdf(double x) const {
    if (x <= 0.0)
        return 0.0;
    return x >= 1.0 ? 1.0 : x;
}

double UniformBase::quantile(double p) const {
    check_prob(p, "uniform quantile");
    return p;
}

ExponentialBase::ExponentialBase(double rate) : rate_(rate) {
    if (!(rate > 0.0) || !std::isfinite(rate))
        throw std::invalid_argument("exponential: rate beta must be positive");
}

double ExponentialBase::pdf(double x) const {
    return x < 0.0 ? 0.0 : rate_ * std::exp(-rate_ * x);
}

double ExponentialBase::cdf(double x) const {
    return x <= 0.0 ? 0.0 : -std::expm1(-rate_ * x);
}

double ExponentialBase::quantile(double p) const {
    check_prob(p, "exponential quantile");
    return -std::log1p(-p) / rate_;
}

Interval ExponentialBase::support() const { return {0.0, kInf}; }

std::string ExponentialBase::name() const {
    return "exp(beta=" + std::to_string(rate_) + ")";
}

double NormalBase::pdf(double x) const { return numeric::normal_pdf(x); }

double NormalBase::cdf(double x) const { return numeric::normal_cdf(x); }

double NormalBase::quantile(double p) const {
    check_prob(p, "normal quantile");
    return numeric::normal_quantile(p);
}

Interval NormalBase::support() const { return {-kInf, kInf}; }

double CauchyBase::pdf(double x) const { return 1.0 / (M_PI * (1.0 + x * x)); }

double CauchyBase::cdf(double x) const {
    // atan2 form keeps the symmetry cdf(-x) = 1 - cdf(x) tight in the tails.
    return 0.5 + std::atan(x) / M_PI;
}

double CauchyBase::quantile(double p) const {
    check_prob(p, "cauchy quantile");
    return std::tan(M_PI * (p - 0.5));
}

Interval CauchyBase::support() const { return {-kInf, kInf}; }

}  // namespace transmute
