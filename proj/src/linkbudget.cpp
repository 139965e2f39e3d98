#include "hetperf/linkbudget.hpp"

#include "hetperf/hexnet.hpp"

#include <cmath>
#include <stdexcept>

namespace hetperf {

namespace {

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

} // namespace

double cell_radius(double delta_km) {
    if (!(delta_km > 0.0))
        throw std::invalid_argument("cell_radius: require delta > 0");
    // Hexagonal cell area delta^2 sqrt(3)/2 spread over a disk.
    return delta_km * std::sqrt(std::sqrt(3.0) / (2.0 * M_PI));
}

NetworkModel build_network_model(const RadioParams& radio) {
    if (!(radio.inter_site_distance_km > 0.0))
        throw std::invalid_argument("build_network_model: inter-site distance must be positive");
    if (!(radio.bandwidth_hz > 0.0))
        throw std::invalid_argument("build_network_model: bandwidth must be positive");
    if (!(radio.macro_pathloss_slope_db_per_decade > 20.0) ||
        !(radio.small_pathloss_slope_db_per_decade > 20.0))
        throw std::invalid_argument(
            "build_network_model: pathloss slope must exceed 20 dB/decade (exponent > 1)");

    NetworkModel m;
    m.delta_km = radio.inter_site_distance_km;
    m.cell_radius_km = cell_radius(m.delta_km);
    m.b = radio.macro_pathloss_slope_db_per_decade / 20.0;
    m.b_small = radio.small_pathloss_slope_db_per_decade / 20.0;

    const double common_db = radio.ue_antenna_gain_db - radio.body_loss_db;
    m.p_macro_lin = dbm_to_mw(radio.macro_power_dbm + radio.macro_antenna_gain_dbi +
                              common_db - radio.macro_pathloss_intercept_db);
    m.p_small_lin = dbm_to_mw(radio.small_power_dbm + radio.small_antenna_gain_dbi +
                              common_db - radio.small_pathloss_intercept_db);
    m.alpha = m.p_small_lin / m.p_macro_lin;
    if (!(m.alpha > 0.0) || !(m.alpha < 1.0))
        throw std::invalid_argument(
            "build_network_model: small-cell link budget must stay below the macro one");

    const double noise_dbm = radio.noise_density_dbm_per_hz +
                             10.0 * std::log10(radio.bandwidth_hz) + radio.noise_figure_db;
    m.noise_over_macro = dbm_to_mw(noise_dbm) / m.p_macro_lin;
    m.omega_b = omega(m.b);
    return m;
}

LinkCurve make_link_curve(double k1, double k2, double w_mbps, double eta0_mbps) {
    if (!(k1 > 0.0) || !(k2 > 0.0) || !(w_mbps > 0.0) || !(eta0_mbps > 0.0))
        throw std::invalid_argument("make_link_curve: parameters must be positive");
    LinkCurve c{k1, k2, w_mbps, eta0_mbps, 0.0};
    c.rho_cap = std::expm1(eta0_mbps / (k1 * w_mbps)) / k2;
    return c;
}

LinkCurve default_link_curve() { return make_link_curve(0.85, 1.9, 20.0, 98.0); }

double link_throughput(const LinkCurve& curve, double sinr_linear) {
    if (std::isnan(sinr_linear) || sinr_linear < 0.0)
        throw std::invalid_argument("link_throughput: SINR must be >= 0");
    if (std::isinf(sinr_linear))
        return curve.eta0_mbps;
    return std::min(curve.k1 * curve.w_mbps * std::log1p(curve.k2 * sinr_linear),
                    curve.eta0_mbps);
}

} // namespace hetperf
