#include <doctest.h>

#include <cmath>
#include <memory>

#include "helpers.hpp"
#include "transmute/numeric.hpp"
#include "transmute/transmuted.hpp"

using namespace transmute;

namespace {

TransmutedDistribution make(BaseDistPtr base, double a1, double a2, bool clip = false) {
    return {std::move(base), std::make_shared<PolynomialRTM>(a1, a2, clip)};
}

}  // namespace

TEST_CASE("transmuted cdf") {
    // uniform base + quadratic map: cdf = (1+lambda) x - lambda x^2
    auto uni = std::make_shared<UniformBase>();
    for (double lam : {-1.0, -0.3, 0.5, 1.0}) {
        TransmutedDistribution d(uni, std::make_shared<QuadraticRTM>(lam));
        for (int i = 0; i <= 40; ++i) {
            const double x = i / 40.0;
            const double expect = (1.0 + lam) * x - lam * x * x;
            CHECK(std::abs(d.cdf(x) - expect) <= 1e-15);
        }
    }
    auto d = make(std::make_shared<NormalBase>(), -1.5, 1.0);
    CHECK(d.cdf(0.0) == doctest::Approx(0.875).epsilon(1e-14));
}

TEST_CASE("transmuted pdf") {
    auto d = TransmutedDistribution(std::make_shared<ExponentialBase>(1.0),
                                    std::make_shared<QuadraticRTM>(0.5));
    CHECK(d.pdf(0.0) == doctest::Approx(1.5).epsilon(1e-14));

    // at the median of the base the quadratic slope is 1 for every lambda
    auto normal = std::make_shared<NormalBase>();
    for (double lam : {-1.0, -0.25, 0.0, 0.6, 1.0}) {
        TransmutedDistribution t(normal, std::make_shared<QuadraticRTM>(lam));
        CHECK(t.pdf(0.0) == doctest::Approx(normal->pdf(0.0)).epsilon(1e-14));
    }

    TransmutedDistribution t1(normal, std::make_shared<QuadraticRTM>(1.0));
    CHECK(t1.pdf(1.0) == doctest::Approx(0.07677985348512666).epsilon(1e-13));
}

TEST_CASE("transmuted quantile") {
    auto normal = std::make_shared<NormalBase>();
    TransmutedDistribution t1(normal, std::make_shared<QuadraticRTM>(1.0));
    CHECK(t1.quantile(0.5) == doctest::Approx(-0.5449521356173603).epsilon(1e-12));

    auto d = make(std::make_shared<UniformBase>(), 1.0, 0.0);  // square map
    CHECK(d.quantile(0.25) == doctest::Approx(0.5).epsilon(1e-13));

    for (const auto& cfg : {make(normal, 0.7, 0.4), make(normal, 0.0, -1.5),
                            make(std::make_shared<ExponentialBase>(2.0), -0.8, 0.9)}) {
        for (int i = 1; i < 200; ++i) {
            const double p = i / 200.0;
            CHECK(std::abs(cfg.cdf(cfg.quantile(p)) - p) <= 1e-9);
        }
    }
}

TEST_CASE("pdf matches finite difference of cdf") {
    auto d = make(std::make_shared<NormalBase>(), -1.2, 0.8);
    for (double x : {-2.0, -0.7, 0.0, 0.4, 1.9}) {
        const double fd = testutil::central_diff([&d](double t) { return d.cdf(t); }, x);
        CHECK(std::abs(d.pdf(x) - fd) <= 1e-6);
    }
}

TEST_CASE("pdf normalization by quadrature") {
    std::vector<TransmutedDistribution> cfgs;
    cfgs.push_back(make(std::make_shared<NormalBase>(), 1.0, 0.5));
    cfgs.push_back(make(std::make_shared<ExponentialBase>(0.5), 0.0, 4.0));
    cfgs.push_back(make(std::make_shared<CauchyBase>(), -1.0, 0.0));
    cfgs.push_back(make(std::make_shared<NormalBase>(), -2.0, 0.0, true));
    for (const auto& d : cfgs) {
        const auto s = d.support();
        const double mass =
            numeric::integrate([&d](double x) { return d.pdf(x); }, s.lo, s.hi);
        CHECK(std::abs(mass - 1.0) <= 1e-9);
    }
}

TEST_CASE("clipped map truncates the support") {
    // lambda = 2 clipped: P(z) = z + 2z(1-z) reaches 1 at z = 1/2, so the
    // transmuted normal is supported on (-inf, 0].
    auto d = TransmutedDistribution(std::make_shared<NormalBase>(),
                                    std::make_shared<QuadraticRTM>(2.0, true));
    CHECK(std::abs(d.support().hi) <= 1e-9);
    CHECK(d.cdf(0.1) == 1.0);
    CHECK(d.pdf(0.1) == 0.0);
    const double mass =
        numeric::integrate([&d](double x) { return d.pdf(x); }, d.support().lo, 0.0);
    CHECK(std::abs(mass - 1.0) <= 1e-9);
}

TEST_CASE("counter-based sampling") {
    SampleStream s{1234, 0};
    auto normal = std::make_shared<NormalBase>();

    CHECK(sample(*normal, s, 0).empty());

    // identity map over uniform reproduces the raw stream
    auto id = make(std::make_shared<UniformBase>(), 0.0, 0.0);
    auto xs = sample(id, s, 64);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        CHECK(xs[i] == uniform_open01(s, i));
        CHECK(xs[i] > 0.0);
        CHECK(xs[i] < 1.0);
    }

    auto a = sample(*normal, s, 100);
    auto b = sample(*normal, s, 100);
    CHECK(a == b);  // bitwise deterministic

    auto c = sample(*normal, SampleStream{1234, 1}, 100);
    CHECK(a != c);
    auto e = sample(*normal, SampleStream{99, 0}, 100);
    CHECK(a != e);
}

TEST_CASE("sampled distribution matches the cdf (KS)") {
    const std::size_t n = 10000;
    auto d = make(std::make_shared<NormalBase>(), 1.0, 0.0);
    auto xs = sample(d, SampleStream{2024, 0}, n);
    const double ks =
        testutil::ks_statistic(xs, [&d](double x) { return d.cdf(x); });
    CHECK(ks <= testutil::ks_critical(n, 0.001));
}

TEST_CASE("azzalini reference density") {
    CHECK(azzalini_pdf(0.0, 1.3) == doctest::Approx(NormalBase{}.pdf(1.3)).epsilon(1e-15));
    CHECK(azzalini_pdf(4.0, 0.0) == doctest::Approx(NormalBase{}.pdf(0.0)).epsilon(1e-15));
    CHECK(azzalini_pdf(1.0, 1.0) == doctest::Approx(0.40716159555316004).epsilon(1e-14));
}
