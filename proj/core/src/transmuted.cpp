#include "transmute/transmuted.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "transmute/numeric.hpp"

namespace transmute {

TransmutedDistribution::TransmutedDistribution(BaseDistPtr base, MapPtr map)
    : base_(std::move(base)), map_(std::move(map)) {
    if (!base_ || !map_)
        throw std::invalid_argument("transmuted: base and map must be non-null");
}

double TransmutedDistribution::pdf(double x) const {
    return base_->pdf(x) * map_->derivative(base_->cdf(x));
}

double TransmutedDistribution::cdf(double x) const {
    return map_->forward(base_->cdf(x));
}

double TransmutedDistribution::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("transmuted quantile: p must lie in (0,1)");
    double u = map_->inverse(p);
    // Keep the base quantile call inside its open domain; u can only touch
    // 0 or 1 here through rounding or a saturated (clipped) map.
    u = std::clamp(u, std::numeric_limits<double>::min(),
                   std::nextafter(1.0, 0.0));
    return base_->quantile(u);
}

Interval TransmutedDistribution::support() const {
    Interval s = base_->support();
    const ClipInterval active = map_->active_interval();
    if (active.lo > 0.0)
        s.lo = base_->quantile(active.lo);
    if (active.hi < 1.0)
        s.hi = base_->quantile(active.hi);
    return s;
}

std::string TransmutedDistribution::name() const {
    return map_->name() + " over " + base_->name();
}

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdULL;
    z ^= z >> 33;
    z *= 0xc4ceb9fe1a85ec53ULL;
    z ^= z >> 33;
    return z;
}

}  // namespace

double uniform_open01(const SampleStream& stream, std::uint64_t index) {
    std::uint64_t h = mix64(stream.seed + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (stream.stream_id + 0xbf58476d1ce4e5b9ULL));
    h = mix64(h ^ (index + 0x94d049bb133111ebULL));
    // 53 random bits centred in each cell keeps the value strictly in (0,1).
    return (static_cast<double>(h >> 11) + 0.5) * 0x1p-53;
}

std::vector<double> sample(const BaseDistribution& d, const SampleStream& stream,
                           std::size_t n) {
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(d.quantile(uniform_open01(stream, i)));
    return out;
}

double azzalini_pdf(double alpha, double x) {
    return 2.0 * numeric::normal_pdf(x) * numeric::normal_cdf(alpha * x);
}

}  // namespace transmute
