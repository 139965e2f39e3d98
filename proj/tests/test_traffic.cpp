#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hetperf/linkbudget.hpp"
#include "hetperf/numerics.hpp"
#include "hetperf/traffic.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>

using namespace hetperf;

static double rel_err(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

static const Hotspot kRef{0.44, 2.0 * M_PI / 3.0, 0.2};
static const double kR = cell_radius(1.0);

TEST_CASE("density has the Gaussian profile around the center") {
    const double peak = 1.0 / (2.0 * M_PI * 0.04);
    CHECK(rel_err(traffic_density({0.44, 2.0 * M_PI / 3.0}, kRef), peak) < 1e-12);
    // one sigma radially outward
    CHECK(rel_err(traffic_density({0.64, 2.0 * M_PI / 3.0}, kRef),
                  peak * std::exp(-0.5)) < 1e-12);
    // only the angle difference matters
    const Hotspot rot{0.44, 0.3, 0.2};
    CHECK(traffic_density({0.2, 0.3 + 1.1}, rot) ==
          doctest::Approx(traffic_density({0.2, 0.3 - 1.1}, rot)).epsilon(1e-14));
    // against the raw cartesian form
    const double d2 = 0.3 * 0.3 + 0.44 * 0.44 -
                      2.0 * 0.3 * 0.44 * std::cos(1.0 - kRef.theta_h_rad);
    CHECK(rel_err(traffic_density({0.3, 1.0}, kRef),
                  peak * std::exp(-d2 / (2.0 * 0.04))) < 1e-12);
    CHECK_THROWS_AS((void)traffic_density({-0.1, 0.0}, kRef), std::invalid_argument);
}

TEST_CASE("radial kernel equals the angle-integrated density") {
    for (double r : {0.05, 0.2, 0.44, 0.52}) {
        const double raw = oracle::simpson(
            [&](double th) { return traffic_density({r, th}, kRef) * r; },
            0.0, 2.0 * M_PI, 4096);
        CHECK(rel_err(radial_kernel(r, kRef), raw) < 1e-9);
    }
    CHECK(radial_kernel(0.0, kRef) == 0.0);
    // stays finite where the naive exp(x) I0(x) split would overflow
    const Hotspot sharp{0.5, 0.0, 1e-3};
    CHECK(std::isfinite(radial_kernel(0.5, sharp)));
    CHECK(radial_kernel(0.5, sharp) > 0.0);
}

TEST_CASE("region mass matches raw 2-d quadrature and caps at one") {
    validate_hotspot(kRef, kR);
    const double s0 = region_mass(kRef, kR);
    const double raw = oracle::simpson2d(
        [&](double r, double th) { return traffic_density({r, th}, kRef) * r; },
        0.0, kR, 0.0, 2.0 * M_PI, 512, 512);
    CHECK(rel_err(s0, raw) < 1e-6);
    CHECK(s0 > 0.0);
    CHECK(s0 < 1.0);
    CHECK(region_mass(kRef, 0.46) < s0); // monotone in the region radius
    // the whole plane carries unit mass
    CHECK(rel_err(region_mass(kRef, kRef.r_h_km + 8.0 * kRef.sigma_km), 1.0) < 1e-9);
}

TEST_CASE("hotspot validation rejects out-of-region and degenerate inputs") {
    CHECK_THROWS_AS(validate_hotspot({0.6, 0.0, 0.2}, kR), std::invalid_argument);
    CHECK_THROWS_AS(validate_hotspot({-0.1, 0.0, 0.2}, kR), std::invalid_argument);
    CHECK_THROWS_AS(validate_hotspot({0.3, 0.0, 0.0}, kR), std::invalid_argument);
    CHECK_THROWS_AS(validate_hotspot({0.3, 0.0, -1.0}, kR), std::invalid_argument);
    validate_hotspot({kR, 1.0, 0.2}, kR); // boundary center is fine
}

TEST_CASE("sampler is deterministic and honors the disk") {
    const auto a = sample_hotspot(kRef, kR, 5000, 42);
    const auto b = sample_hotspot(kRef, kR, 5000, 42);
    REQUIRE(a.points.size() == 5000);
    CHECK(a.attempts == b.attempts);
    bool identical = true;
    for (size_t i = 0; i < a.points.size(); ++i)
        identical = identical && a.points[i].r_km == b.points[i].r_km &&
                    a.points[i].theta_rad == b.points[i].theta_rad;
    CHECK(identical);
    const auto c = sample_hotspot(kRef, kR, 5000, 43);
    CHECK(c.attempts != a.attempts); // different stream
    for (const auto& p : a.points)
        CHECK(p.r_km <= kR);
    CHECK(a.attempts >= a.points.size());
}

TEST_CASE("sample mean honors the central limit bound for an interior hotspot") {
    // well inside the disk: truncation bias is ~exp(-21), far below the CLT band
    const Hotspot inner{0.2, 1.0, 0.05};
    const size_t n = 10000;
    const auto s = sample_hotspot(inner, kR, n, 7);
    double mx = 0.0, my = 0.0;
    for (const auto& p : s.points) {
        mx += p.r_km * std::cos(p.theta_rad);
        my += p.r_km * std::sin(p.theta_rad);
    }
    mx /= n;
    my /= n;
    const double band = 4.0 * inner.sigma_km / std::sqrt(double(n));
    CHECK(std::abs(mx - 0.2 * std::cos(1.0)) < band);
    CHECK(std::abs(my - 0.2 * std::sin(1.0)) < band);
}

TEST_CASE("acceptance fraction estimates the region mass") {
    const auto s = sample_hotspot(kRef, kR, 200000, 11);
    const double s0 = region_mass(kRef, kR);
    const double frac = double(s.points.size()) / double(s.attempts);
    const double se = std::sqrt(s0 * (1.0 - s0) / double(s.attempts));
    CHECK(std::abs(frac - s0) < 4.0 * se);
}

TEST_CASE("radial histogram passes a chi-square test against the marginal") {
    const double s0 = region_mass(kRef, kR);
    auto cdf = [&](double r) {
        return integrate([&](double t) { return radial_kernel(t, kRef); }, 0.0, r)
                   .value / s0;
    };
    const int bins = 20;
    std::vector<double> edges(bins + 1);
    edges[0] = 0.0;
    edges[bins] = kR;
    for (int i = 1; i < bins; ++i)
        edges[i] = invert_monotone(cdf, double(i) / bins, 0.0, kR).x;

    const size_t n = 100000;
    const auto s = sample_hotspot(kRef, kR, n, 2024);
    std::vector<double> counts(bins, 0.0);
    for (const auto& p : s.points) {
        const auto it = std::upper_bound(edges.begin() + 1, edges.end(), p.r_km);
        counts[std::min<std::ptrdiff_t>(it - edges.begin() - 1, bins - 1)] += 1.0;
    }
    const double expected = double(n) / bins;
    double chi2 = 0.0;
    for (double c : counts)
        chi2 += (c - expected) * (c - expected) / expected;
    CHECK(chi2 < 43.8202); // chi-square(19) at p = 0.001
}

TEST_CASE("pathological rejection rate raises instead of spinning") {
    // spread much wider than a tiny region: acceptance far below 1%
    const Hotspot wide{0.005, 0.0, 0.2};
    CHECK_THROWS_AS((void)sample_hotspot(wide, 0.01, 2000, 3), std::runtime_error);
}
