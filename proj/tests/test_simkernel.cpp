#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hetperf/evaluator.hpp"
#include "hetperf/simkernel.hpp"
#include "oracles.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

using namespace hetperf;

static const NetworkModel kModel = build_network_model(RadioParams{});
static const LinkCurve kCurve = default_link_curve();
static const Hotspot kRef{0.44, 2.0 * M_PI / 3.0, 0.2};

static bool same_result(const McResult& a, const McResult& b) {
    return a.eta_m == b.eta_m && a.eta_s == b.eta_s && a.eta == b.eta &&
           a.mu == b.mu && a.se_eta_m == b.se_eta_m && a.se_eta_s == b.se_eta_s &&
           a.se_eta == b.se_eta && a.se_mu == b.se_mu && a.n == b.n &&
           a.attempts == b.attempts;
}

TEST_CASE("derived stream seeds are distinct and stable") {
    CHECK(derive_stream_seed(1, 0) == derive_stream_seed(1, 0));
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 200; ++i)
        seen.insert(derive_stream_seed(1, i));
    CHECK(seen.size() == 200);
    CHECK(derive_stream_seed(1, 0) != derive_stream_seed(2, 0));
}

TEST_CASE("identical specs reproduce bitwise, regardless of worker count") {
    McSpec spec;
    spec.n_samples = 65536; // four batches
    spec.seed = 17;
    const Placement sc = Placement::at(0.5, kRef.theta_h_rad);
    const McResult a = mc_evaluate(kRef, sc, kModel, kCurve, spec);
    const McResult b = mc_evaluate(kRef, sc, kModel, kCurve, spec);
    CHECK(same_result(a, b));
    spec.workers = 4;
    const McResult c = mc_evaluate(kRef, sc, kModel, kCurve, spec);
    CHECK(same_result(a, c));
    McSpec other = spec;
    other.seed = 18;
    CHECK_FALSE(same_result(a, mc_evaluate(kRef, sc, kModel, kCurve, other)));
}

TEST_CASE("tier accounting is exclusive and consistent") {
    McSpec spec;
    spec.n_samples = 30000;
    spec.seed = 5;
    const McResult r =
        mc_evaluate(kRef, Placement::at(0.44, kRef.theta_h_rad), kModel, kCurve, spec);
    CHECK(r.n == 30000);
    CHECK(r.attempts >= r.n);
    CHECK(std::abs(r.eta - (r.eta_m + r.eta_s)) < 1e-12 * r.eta);
    CHECK(r.mu > 0.0);
    CHECK(r.mu < 1.0);
    CHECK(r.eta_s > 0.0);
    CHECK(r.eta <= kCurve.eta0_mbps);

    const McResult none =
        mc_evaluate(kRef, Placement::absent(), kModel, kCurve, spec);
    CHECK(none.mu == 0.0);
    CHECK(none.eta_s == 0.0);
    CHECK(none.se_eta_s == 0.0);
    CHECK(none.eta == none.eta_m);
}

TEST_CASE("no sample associates to a small cell whose wedge misses the disk") {
    McSpec spec;
    spec.n_samples = 20000;
    spec.seed = 9;
    // r1 > R: the power comparison cannot favor the small cell inside the disk
    const McResult r =
        mc_evaluate(kRef, Placement::at(0.8, kRef.theta_h_rad), kModel, kCurve, spec);
    CHECK(r.mu == 0.0);
    CHECK(r.eta_s == 0.0);
}

TEST_CASE("standard errors shrink like sqrt(n)") {
    McSpec small, large;
    small.n_samples = 16384;
    small.seed = 33;
    large.n_samples = 4 * 16384;
    large.seed = 33;
    const Placement sc = Placement::at(0.5, kRef.theta_h_rad);
    const McResult a = mc_evaluate(kRef, sc, kModel, kCurve, small);
    const McResult b = mc_evaluate(kRef, sc, kModel, kCurve, large);
    const double ratio = a.se_eta / b.se_eta;
    CHECK(ratio > 1.5);
    CHECK(ratio < 2.6);
    CHECK(a.se_mu / b.se_mu > 1.5);
    CHECK(a.se_mu / b.se_mu < 2.6);
}

TEST_CASE("per-tier pathloss exponents shift the small-cell share") {
    McSpec common, tiered;
    common.n_samples = 30000;
    common.seed = 21;
    tiered = common;
    tiered.per_tier_exponents = true;
    const Placement sc = Placement::at(0.44, kRef.theta_h_rad);
    const McResult a = mc_evaluate(kRef, sc, kModel, kCurve, common);
    const McResult b = mc_evaluate(kRef, sc, kModel, kCurve, tiered);
    CHECK(a.mu != b.mu);
    // the gentler small-cell slope weakens its short-range edge (d < 1 km)
    CHECK(b.mu < a.mu);
    CHECK(std::abs(a.mu - b.mu) < 0.2);
}

TEST_CASE("monte carlo agrees with the closed forms at unit-test precision") {
    McSpec spec;
    spec.n_samples = 50000;
    spec.seed = 2;
    const Placement sc = Placement::at(0.5, kRef.theta_h_rad);
    const McResult mc = mc_evaluate(kRef, sc, kModel, kCurve, spec);
    const EvalResult an = eval_scenario3(kRef, sc, kModel, kCurve);
    CHECK(std::abs(an.eta_mbps - mc.eta) <
          std::max(0.02 * mc.eta, 4.0 * mc.se_eta));
    CHECK(std::abs(an.mu - mc.mu) < std::max(0.01, 4.0 * mc.se_mu));
}

TEST_CASE("absorption confidence interval") {
    McResult r;
    r.n = 1000;
    r.mu = 0.0;
    const auto zero = absorption_interval(r, 0.95);
    CHECK(zero.lo == 0.0);
    CHECK(zero.hi == doctest::Approx(0.003).epsilon(1e-12)); // rule of three
    CHECK_FALSE(zero.normal_ok);

    r.mu = 1.0;
    const auto one = absorption_interval(r, 0.95);
    CHECK(one.hi == 1.0);
    CHECK(one.lo == doctest::Approx(0.997).epsilon(1e-12));
    CHECK_FALSE(one.normal_ok);

    r.mu = 0.3;
    r.se_mu = std::sqrt(0.3 * 0.7 / 1000.0);
    const auto mid = absorption_interval(r, 0.95);
    CHECK(mid.normal_ok);
    CHECK(mid.lo == doctest::Approx(0.3 - oracle::kZ_0_975 * r.se_mu).epsilon(1e-9));
    CHECK(mid.hi == doctest::Approx(0.3 + oracle::kZ_0_975 * r.se_mu).epsilon(1e-9));

    r.mu = 0.001; // 1 success in 1000: normal approximation flagged
    r.se_mu = std::sqrt(0.001 * 0.999 / 1000.0);
    CHECK_FALSE(absorption_interval(r, 0.95).normal_ok);

    CHECK_THROWS_AS((void)absorption_interval(r, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)absorption_interval(r, 1.0), std::invalid_argument);
    McResult empty;
    CHECK_THROWS_AS((void)absorption_interval(empty, 0.95), std::invalid_argument);
}

TEST_CASE("sample floor is enforced") {
    McSpec spec;
    spec.n_samples = 10;
    CHECK_THROWS_AS(
        (void)mc_evaluate(kRef, Placement::absent(), kModel, kCurve, spec),
        std::invalid_argument);
}
