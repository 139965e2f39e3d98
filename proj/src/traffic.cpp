#include "hetperf/traffic.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hetperf {

void validate_hotspot(const Hotspot& hs, double region_radius_km) {
    if (!(region_radius_km > 0.0))
        throw std::invalid_argument("validate_hotspot: region radius must be positive");
    if (!(hs.r_h_km >= 0.0) || !(hs.r_h_km <= region_radius_km))
        throw std::invalid_argument("validate_hotspot: center must lie inside the region");
    if (!(hs.sigma_km > 0.0))
        throw std::invalid_argument("validate_hotspot: spread must be positive");
    if (!std::isfinite(hs.theta_h_rad))
        throw std::invalid_argument("validate_hotspot: angle must be finite");
}

double traffic_density(const PolarPoint& p, const Hotspot& hs) {
    if (!(p.r_km >= 0.0))
        throw std::invalid_argument("traffic_density: require r >= 0");
    const double s2 = hs.sigma_km * hs.sigma_km;
    const double dr = p.r_km - hs.r_h_km;
    // |m - m_h|^2 split so the exponent never goes positive.
    const double expo = -(dr * dr +
                          2.0 * p.r_km * hs.r_h_km *
                              (1.0 - std::cos(p.theta_rad - hs.theta_h_rad))) /
                        (2.0 * s2);
    return std::exp(expo) / (2.0 * M_PI * s2);
}

double radial_kernel(double r_km, const Hotspot& hs) {
    if (!(r_km >= 0.0))
        throw std::invalid_argument("radial_kernel: require r >= 0");
    const double s2 = hs.sigma_km * hs.sigma_km;
    const double dr = r_km - hs.r_h_km;
    return r_km / s2 * std::exp(-dr * dr / (2.0 * s2)) *
           bessel_i0_scaled(r_km * hs.r_h_km / s2);
}

double region_mass(const Hotspot& hs, double region_radius_km,
                   const QuadratureSpec& spec) {
    validate_hotspot(hs, region_radius_km);
    const double breaks[] = {hs.r_h_km - 3.0 * hs.sigma_km, hs.r_h_km - hs.sigma_km,
                             hs.r_h_km, hs.r_h_km + hs.sigma_km,
                             hs.r_h_km + 3.0 * hs.sigma_km};
    const auto q = integrate_panels([&](double r) { return radial_kernel(r, hs); },
                                    0.0, region_radius_km, breaks, spec);
    if (!q.converged)
        throw std::runtime_error("region_mass: radial integral did not converge");
    return q.value;
}

HotspotSample sample_hotspot(const Hotspot& hs, double region_radius_km,
                             std::size_t n, std::uint64_t seed) {
    validate_hotspot(hs, region_radius_km);
    const double cx = hs.r_h_km * std::cos(hs.theta_h_rad);
    const double cy = hs.r_h_km * std::sin(hs.theta_h_rad);
    const double R2 = region_radius_km * region_radius_km;
    std::mt19937_64 rng(seed);
    auto uniform = [&] { return double(rng() >> 11) * 0x1.0p-53; };

    HotspotSample out;
    out.points.reserve(n);
    while (out.points.size() < n) {
        // Box-Muller on raw uniforms keeps the stream engine-defined only.
        const double u1 = uniform();
        const double u2 = uniform();
        const double rad = std::sqrt(-2.0 * std::log(1.0 - u1));
        const double ang = 2.0 * M_PI * u2;
        const double x = cx + hs.sigma_km * rad * std::cos(ang);
        const double y = cy + hs.sigma_km * rad * std::sin(ang);
        ++out.attempts;
        if (x * x + y * y <= R2)
            out.points.push_back({std::hypot(x, y), std::atan2(y, x)});
        else if (out.attempts > 100000 && out.points.size() * 100 < out.attempts)
            throw std::runtime_error("sample_hotspot: acceptance rate below 1%");
    }
    return out;
}

} // namespace hetperf
