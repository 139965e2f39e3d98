#pragma once

namespace hetperf {

/// Radio-layer inputs in engineering units (dBm, dBi, dB, Hz, km).
struct RadioParams {
    double macro_power_dbm = 46.0;
    double small_power_dbm = 30.0;
    double macro_antenna_gain_dbi = 18.0;
    double small_antenna_gain_dbi = 6.0;
    double ue_antenna_gain_db = 0.0;
    double body_loss_db = 2.0;
    double macro_pathloss_intercept_db = 151.0; // at 1 km
    double small_pathloss_intercept_db = 148.0;
    double macro_pathloss_slope_db_per_decade = 37.6;
    double small_pathloss_slope_db_per_decade = 36.7;
    double noise_density_dbm_per_hz = -174.0;
    double noise_figure_db = 8.0;
    double bandwidth_hz = 20e6;
    double inter_site_distance_km = 1.0;
};

/// Everything downstream math needs, folded to linear scale. Received power
/// from a cell at distance d km is p_*_lin * d^-2b (pathloss intercepts,
/// antenna gains, and body loss are absorbed into p_*_lin).
struct NetworkModel {
    double delta_km = 0.0;       // inter-site distance
    double cell_radius_km = 0.0; // disk of equal area to the hexagonal cell
    double b = 0.0;              // macro pathloss exponent, slope / 20
    double b_small = 0.0;        // small-cell pathloss exponent
    double p_macro_lin = 0.0;    // mW at 1 km
    double p_small_lin = 0.0;
    double alpha = 0.0;          // p_small_lin / p_macro_lin
    double noise_over_macro = 0.0; // noise power / p_macro_lin, km^2b units
    double omega_b = 0.0;        // lattice constant for the interference row sums
};

/// Radius of the disk with the area of one hexagonal cell of pitch delta.
double cell_radius(double delta_km);

NetworkModel build_network_model(const RadioParams& radio);

/// Throughput curve eta(sinr) = min(k1 W log(1 + k2 sinr), eta0) and the
/// SINR rho_cap where the cap engages.
struct LinkCurve {
    double k1 = 0.0;
    double k2 = 0.0;
    double w_mbps = 0.0;
    double eta0_mbps = 0.0;
    double rho_cap = 0.0;
};

LinkCurve make_link_curve(double k1, double k2, double w_mbps, double eta0_mbps);
LinkCurve default_link_curve();

double link_throughput(const LinkCurve& curve, double sinr_linear);

} // namespace hetperf
