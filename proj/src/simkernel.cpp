#include "hetperf/simkernel.hpp"

#include "hetperf/hexnet.hpp"
#include "hetperf/numerics.hpp"
#include "sitesum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hetperf {

std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t index) {
    // splitmix64 finalizer over a golden-ratio stride
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

// Fixed batch size: each batch owns a derived RNG stream and a slot in the
// partial-sum array, so totals are identical for any worker count.
constexpr std::size_t kBatch = 16384;

struct BatchSums {
    double tm = 0, tm2 = 0, ts = 0, ts2 = 0, t = 0, t2 = 0;
    std::uint64_t sc_count = 0;
    std::uint64_t attempts = 0;
};

} // namespace

McResult mc_evaluate(const Hotspot& hs, const Placement& sc, const NetworkModel& model,
                     const LinkCurve& curve, const McSpec& spec) {
    if (spec.n_samples < 1000)
        throw std::invalid_argument("mc_evaluate: need at least 1000 samples");
    validate_hotspot(hs, model.cell_radius_km);

    const HexLattice lattice(model.delta_km, spec.ring_count);
    std::vector<double> xs(lattice.sites.size()), ys(lattice.sites.size());
    for (std::size_t i = 0; i < lattice.sites.size(); ++i) {
        xs[i] = lattice.sites[i].x_km;
        ys[i] = lattice.sites[i].y_km;
    }

    const bool has_sc = sc.position.has_value();
    const double sx = has_sc ? sc.position->r_km * std::cos(sc.position->theta_rad) : 0.0;
    const double sy = has_sc ? sc.position->r_km * std::sin(sc.position->theta_rad) : 0.0;
    const double b = model.b;
    const double bs = spec.per_tier_exponents ? model.b_small : model.b;

    const std::size_t n_batches = (spec.n_samples + kBatch - 1) / kBatch;
    std::vector<BatchSums> partial(n_batches);

    auto run_batch = [&](std::size_t bi) {
        const std::size_t count = std::min(kBatch, spec.n_samples - bi * kBatch);
        const auto sample = sample_hotspot(hs, model.cell_radius_km, count,
                                           derive_stream_seed(spec.seed, bi));
        BatchSums s;
        s.attempts = sample.attempts;
        for (const PolarPoint& p : sample.points) {
            const double x = p.r_km * std::cos(p.theta_rad);
            const double y = p.r_km * std::sin(p.theta_rad);
            // All powers relative to the macro link budget at 1 km.
            const double others = site_sum_pow(xs.data(), ys.data(), xs.size(), x, y, -b);
            const double r2 = std::max(x * x + y * y, 1e-300);
            const double sig_m = std::pow(r2, -b);
            double sig_s = 0.0;
            if (has_sc) {
                const double dx = x - sx, dy = y - sy;
                const double d2 = std::max(dx * dx + dy * dy, 1e-300);
                sig_s = model.alpha * std::pow(d2, -bs);
            }
            double tput_m = 0.0, tput_s = 0.0;
            if (has_sc && sig_s > sig_m) {
                ++s.sc_count;
                tput_s = link_throughput(
                    curve, sig_s / (sig_m + others + model.noise_over_macro));
            } else {
                tput_m = link_throughput(
                    curve, sig_m / (sig_s + others + model.noise_over_macro));
            }
            s.tm += tput_m;
            s.tm2 += tput_m * tput_m;
            s.ts += tput_s;
            s.ts2 += tput_s * tput_s;
            const double tot = tput_m + tput_s;
            s.t += tot;
            s.t2 += tot * tot;
        }
        partial[bi] = s;
    };

    const std::size_t workers =
        std::min<std::size_t>(std::max(1, spec.workers), n_batches);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n_batches; ++i)
            run_batch(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < n_batches;
                     i = next.fetch_add(1))
                    run_batch(i);
            });
        for (auto& th : pool)
            th.join();
    }

    BatchSums tot;
    for (const BatchSums& s : partial) { // fixed-order reduction
        tot.tm += s.tm;
        tot.tm2 += s.tm2;
        tot.ts += s.ts;
        tot.ts2 += s.ts2;
        tot.t += s.t;
        tot.t2 += s.t2;
        tot.sc_count += s.sc_count;
        tot.attempts += s.attempts;
    }

    const double n = double(spec.n_samples);
    auto mean_se = [&](double sum, double sum2, double& mean, double& se) {
        mean = sum / n;
        const double var = std::max(0.0, (sum2 - sum * sum / n) / (n - 1.0));
        se = std::sqrt(var / n);
    };
    McResult out;
    out.n = spec.n_samples;
    out.attempts = tot.attempts;
    mean_se(tot.tm, tot.tm2, out.eta_m, out.se_eta_m);
    mean_se(tot.ts, tot.ts2, out.eta_s, out.se_eta_s);
    mean_se(tot.t, tot.t2, out.eta, out.se_eta);
    out.mu = double(tot.sc_count) / n;
    out.se_mu = std::sqrt(out.mu * (1.0 - out.mu) / n);
    return out;
}

AbsorptionInterval absorption_interval(const McResult& result, double confidence) {
    if (!(confidence > 0.0) || !(confidence < 1.0))
        throw std::invalid_argument("absorption_interval: require 0 < confidence < 1");
    if (result.n == 0)
        throw std::invalid_argument("absorption_interval: empty result");
    const double n = double(result.n);
    if (result.mu <= 0.0)
        return {0.0, 3.0 / n, false}; // rule of three
    if (result.mu >= 1.0)
        return {1.0 - 3.0 / n, 1.0, false};
    const double z = normal_quantile(0.5 + 0.5 * confidence);
    AbsorptionInterval out;
    out.lo = std::max(0.0, result.mu - z * result.se_mu);
    out.hi = std::min(1.0, result.mu + z * result.se_mu);
    out.normal_ok = result.mu * n >= 5.0 && (1.0 - result.mu) * n >= 5.0;
    return out;
}

} // namespace hetperf
