#ifndef TRANSMUTE_BASE_DIST_HPP
#define TRANSMUTE_BASE_DIST_HPP

#include <limits>
#include <memory>
#include <string>

namespace transmute {

struct Interval {
    double lo;
    double hi;
};

// Continuous univariate law with density, CDF and quantile on an explicit
// support. Implementations are immutable and freely shareable across threads.
class BaseDistribution {
  public:
    virtual ~BaseDistribution() = default;

    virtual double pdf(double x) const = 0;
    virtual double cdf(double x) const = 0;

    // Inverse CDF on (0,1); throws std::domain_error outside.
    virtual double quantile(double p) const = 0;

    virtual Interval support() const = 0;

    // Largest k for which E[|X|^k] is finite (INT_MAX when all moments exist).
    virtual int max_finite_moment() const { return std::numeric_limits<int>::max(); }

    virtual std::string name() const = 0;
};

using BaseDistPtr = std::shared_ptr<const BaseDistribution>;

// Standard uniform on [0,1].
class UniformBase final : public BaseDistribution {
  public:
    double pdf(double x) const override;
    double cdf(double x) const override;
    double quantile(double p) const override;
    Interval support() const override { return {0.0, 1.0}; }
    std::string name() const override { return "uniform"; }
};

class ExponentialBase final : public BaseDistribution {
  public:
    explicit ExponentialBase(double rate);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double quantile(double p) const override;
    Interval support() const override;
    double rate() const { return rate_; }
    std::string name() const override;

  private:
    double rate_;
};

// Standard normal.
class NormalBase final : public BaseDistribution {
  public:
    double pdf(double x) const override;
    double cdf(double x) const override;
    double quantile(double p) const override;
    Interval support() const override;
    std::string name() const override { return "normal"; }
};

// Standard Cauchy; no finite moments.
class CauchyBase final : public BaseDistribution {
  public:
    double pdf(double x) const override;
    double cdf(double x) const override;
    double quantile(double p) const override;
    Interval support() const override;
    int max_finite_moment() const override { return 0; }
    std::string name() const override { return "cauchy"; }
};

}  // namespace transmute

#endif
