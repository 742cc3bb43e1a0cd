#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "helpers.hpp"
#include "transmute/base_dist.hpp"
#include "transmute/numeric.hpp"

using namespace transmute;

namespace {

std::vector<BaseDistPtr> all_bases() {
    return {std::make_shared<UniformBase>(), std::make_shared<ExponentialBase>(0.7),
            std::make_shared<NormalBase>(), std::make_shared<CauchyBase>()};
}

}  // namespace

TEST_CASE("cdf point values") {
    CHECK(NormalBase{}.cdf(0.0) == 0.5);
    CHECK(ExponentialBase{1.0}.cdf(std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(UniformBase{}.cdf(0.3) == 0.3);
    CHECK(UniformBase{}.cdf(-1.0) == 0.0);
    CHECK(UniformBase{}.cdf(2.0) == 1.0);
    CHECK(ExponentialBase{1.0}.cdf(-3.0) == 0.0);
}

TEST_CASE("quantile point values") {
    CHECK(UniformBase{}.quantile(0.75) == 0.75);
    CHECK(ExponentialBase{2.0}.quantile(-std::expm1(-2.0)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(CauchyBase{}.quantile(0.75) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(CauchyBase{}.quantile(0.5) == doctest::Approx(0.0).scale(1.0).epsilon(1e-16));
}

TEST_CASE("pdf point values") {
    CHECK(ExponentialBase{1.0}.pdf(-1.0) == 0.0);
    CHECK(NormalBase{}.pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-15));
    CHECK(UniformBase{}.pdf(0.5) == 1.0);
    CHECK(UniformBase{}.pdf(1.5) == 0.0);
}

TEST_CASE("constructor and domain errors") {
    CHECK_THROWS_AS(ExponentialBase{0.0}, std::invalid_argument);
    CHECK_THROWS_AS(ExponentialBase{-2.0}, std::invalid_argument);
    for (const auto& d : all_bases()) {
        CHECK_THROWS_AS(d->quantile(0.0), std::domain_error);
        CHECK_THROWS_AS(d->quantile(1.0), std::domain_error);
        CHECK_THROWS_AS(d->quantile(-0.5), std::domain_error);
    }
}

TEST_CASE("pdf integrates to one over the support") {
    for (const auto& d : all_bases()) {
        const Interval s = d->support();
        const double mass = numeric::integrate(
            [&d](double x) { return d->pdf(x); }, s.lo, s.hi);
        CHECK(std::abs(mass - 1.0) <= 1e-10);
    }
}

TEST_CASE("quantile/cdf roundtrip on a p-grid") {
    for (const auto& d : all_bases()) {
        for (int i = 0; i < 1000; ++i) {
            const double p = 1e-6 + (1.0 - 2e-6) * i / 999.0;
            CHECK(std::abs(d->cdf(d->quantile(p)) - p) <= 1e-9);
        }
    }
}

TEST_CASE("symmetric bases: cdf(-x) = 1 - cdf(x)") {
    const NormalBase normal;
    const CauchyBase cauchy;
    for (int i = 0; i <= 200; ++i) {
        const double x = -6.0 + 12.0 * i / 200.0;
        CHECK(std::abs(normal.cdf(-x) - (1.0 - normal.cdf(x))) <= 1e-14);
        CHECK(std::abs(cauchy.cdf(-x) - (1.0 - cauchy.cdf(x))) <= 1e-14);
    }
}

TEST_CASE("pdf is the derivative of cdf") {
    for (const auto& d : all_bases()) {
        // interior points clear of support edges
        for (double p : {0.12, 0.3, 0.5, 0.7, 0.88}) {
            const double x = d->quantile(p);
            const double fd =
                testutil::central_diff([&d](double t) { return d->cdf(t); }, x);
            CHECK(std::abs(d->pdf(x) - fd) <= 1e-6);
        }
    }
}

TEST_CASE("moment existence flags") {
    CHECK(CauchyBase{}.max_finite_moment() == 0);
    CHECK(NormalBase{}.max_finite_moment() > 4);
    CHECK(ExponentialBase{1.0}.max_finite_moment() > 4);
}
