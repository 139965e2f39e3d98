#pragma once

#include "hetperf/evaluator.hpp"

#include <cstdint>

namespace hetperf {

struct McSpec {
    std::size_t n_samples = 100000;
    std::uint64_t seed = 1;
    int ring_count = 30;
    // Use the small-cell pathloss slope on small-cell links instead of the
    // common macro exponent assumed by the closed forms.
    bool per_tier_exponents = false;
    int workers = 1; // parallelism only; results do not depend on it
};

struct McResult {
    double eta_m = 0.0, eta_s = 0.0, eta = 0.0, mu = 0.0;
    double se_eta_m = 0.0, se_eta_s = 0.0, se_eta = 0.0, se_mu = 0.0;
    std::size_t n = 0;
    std::uint64_t attempts = 0;
};

/// Brute-force estimate of the same quantities as the scenario evaluators:
/// sample users from the hotspot, associate by strongest received power
/// over the explicit lattice, and average link throughput per tier.
McResult mc_evaluate(const Hotspot& hs, const Placement& sc, const NetworkModel& model,
                     const LinkCurve& curve, const McSpec& spec);

struct AbsorptionInterval {
    double lo = 0.0, hi = 0.0;
    bool normal_ok = true;
};

/// Confidence interval for mu; rule-of-three fallback at the degenerate
/// endpoints where the normal approximation breaks down.
AbsorptionInterval absorption_interval(const McResult& result, double confidence);

/// Decorrelated per-stream seed for batch or case `index` under `base`.
std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t index);

} // namespace hetperf
