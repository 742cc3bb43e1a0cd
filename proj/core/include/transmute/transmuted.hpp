#ifndef TRANSMUTE_TRANSMUTED_HPP
#define TRANSMUTE_TRANSMUTED_HPP

#include <cstdint>
#include <vector>

#include "transmute/base_dist.hpp"
#include "transmute/rtm.hpp"

namespace transmute {

// Base distribution composed with a rank transmutation map:
// cdf = map.forward(base.cdf(x)), pdf = base.pdf(x) * map.derivative(base.cdf(x)).
// For clipped maps the reported support shrinks to the truncation points.
class TransmutedDistribution final : public BaseDistribution {
  public:
    TransmutedDistribution(BaseDistPtr base, MapPtr map);

    double pdf(double x) const override;
    double cdf(double x) const override;
    double quantile(double p) const override;
    Interval support() const override;
    int max_finite_moment() const override { return base_->max_finite_moment(); }
    std::string name() const override;

    const BaseDistribution& base() const { return *base_; }
    const RankTransmutationMap& map() const { return *map_; }

  private:
    BaseDistPtr base_;
    MapPtr map_;
};

// Counter-based uniform stream: (seed, stream_id, index) fully determine the
// draw, so parallel sampling just uses distinct stream_ids.
struct SampleStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

// Uniform variate in the open interval (0,1).
double uniform_open01(const SampleStream& stream, std::uint64_t index);

// n inverse-transform samples; deterministic given (seed, stream_id).
std::vector<double> sample(const BaseDistribution& d, const SampleStream& stream,
                           std::size_t n);

// Azzalini skew-normal density 2 phi(x) Phi(alpha x); comparison curve only.
double azzalini_pdf(double alpha, double x);

}  // namespace transmute

#endif
