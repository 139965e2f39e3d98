#include "hetperf/hexnet.hpp"

#include <cmath>
#include <stdexcept>

namespace hetperf {

HexLattice::HexLattice(double delta, int rings) : delta_km(delta), ring_count(rings) {
    if (!(delta > 0.0))
        throw std::invalid_argument("HexLattice: require delta > 0");
    if (rings < 10)
        throw std::invalid_argument("HexLattice: require ring_count >= 10");
    const double sq32 = std::sqrt(3.0) / 2.0;
    sites.reserve(size_t(3) * rings * (rings + 1));
    for (int u = -rings; u <= rings; ++u) {
        for (int v = -rings; v <= rings; ++v) {
            if (u == 0 && v == 0)
                continue;
            const int ring = (std::abs(u) + std::abs(v) + std::abs(u + v)) / 2;
            if (ring > rings)
                continue;
            sites.push_back({delta * (u + 0.5 * v), delta * sq32 * v});
        }
    }
}

double omega(double b) {
    if (!(b > 1.0))
        throw std::invalid_argument("omega: require b > 1");
    return std::pow(3.0, -b) * riemann_zeta(b) *
           (hurwitz_zeta(b, 1.0 / 3.0) - hurwitz_zeta(b, 2.0 / 3.0));
}

double interference_factor(double r_km, const NetworkModel& model) {
    if (!(r_km >= 0.0) || !(r_km < model.delta_km))
        throw std::invalid_argument("interference_factor: require 0 <= r < delta");
    const double x = r_km / model.delta_km;
    if (x == 0.0)
        return 0.0;
    const double b = model.b;
    const double x2 = x * x;
    const double nearest = (1.0 + (1.0 - b) * (1.0 - b) * x2) /
                           std::pow(1.0 - x2, 2.0 * b - 1.0);
    return 6.0 * std::pow(x2, b) * (nearest + model.omega_b - 1.0);
}

LatticeSum lattice_interference(double r_km, double theta_rad,
                                const HexLattice& lattice, double b) {
    if (!(r_km >= 0.0) || !(r_km < 0.8 * lattice.delta_km))
        throw std::invalid_argument("lattice_interference: require 0 <= r < 0.8 delta");
    if (!(b > 1.0))
        throw std::invalid_argument("lattice_interference: require b > 1");
    const double px = r_km * std::cos(theta_rad);
    const double py = r_km * std::sin(theta_rad);
    LatticeSum out;
    if (r_km == 0.0)
        return out; // signal ratio vanishes with the serving distance
    const double r2b = std::pow(r_km * r_km, b);
    for (const Site& s : lattice.sites) {
        const double dx = s.x_km - px;
        const double dy = s.y_km - py;
        out.value += r2b * std::pow(dx * dx + dy * dy, -b);
    }
    // Ring k > N sites (6k of them) sit at least k delta sqrt(3)/2 - r away.
    const double apothem = lattice.delta_km * std::sqrt(3.0) / 2.0;
    for (int k = lattice.ring_count + 1; k < lattice.ring_count + 200000; ++k) {
        const double dmin = apothem * k - r_km;
        const double term = 6.0 * k * r2b * std::pow(dmin * dmin, -b);
        out.tail_bound += term;
        if (term < 1e-18 * (out.value + out.tail_bound))
            break;
    }
    return out;
}

double macro_degradation(double r_km, const NetworkModel& model) {
    return interference_factor(r_km, model) +
           model.noise_over_macro * std::pow(r_km * r_km, model.b);
}

InvertResult macro_degradation_inverse(double y, const NetworkModel& model) {
    if (!(y >= 0.0))
        throw std::invalid_argument("macro_degradation_inverse: require y >= 0");
    return invert_monotone([&](double r) { return macro_degradation(r, model); },
                           y, 0.0, model.cell_radius_km);
}

} // namespace hetperf
