#pragma once

#include "hetperf/linkbudget.hpp"
#include "hetperf/numerics.hpp"

#include <vector>

namespace hetperf {

struct Site {
    double x_km = 0.0;
    double y_km = 0.0;
};

/// Interfering macro sites of a triangular lattice with pitch delta_km,
/// all rings up to ring_count, origin excluded.
struct HexLattice {
    double delta_km;
    int ring_count;
    std::vector<Site> sites;

    explicit HexLattice(double delta_km, int ring_count = 30);
};

/// Lattice constant entering the closed-form row sums of the interference
/// field; depends only on the pathloss exponent b > 1.
double omega(double b);

/// Closed-form other-cell interference at radius r from the serving site,
/// normalized by the serving signal (angle-averaged). Requires 0 <= r < delta.
double interference_factor(double r_km, const NetworkModel& model);

struct LatticeSum {
    double value = 0.0;      // truncated explicit sum over the lattice
    double tail_bound = 0.0; // upper bound on the omitted rings
};

/// Brute-force interference-to-signal ratio at polar position (r, theta),
/// summing the explicit lattice. Used to validate interference_factor.
LatticeSum lattice_interference(double r_km, double theta_rad,
                                const HexLattice& lattice, double b);

/// g(r): interference factor plus thermal noise, both relative to the
/// serving macro signal. Strictly increasing on [0, delta).
double macro_degradation(double r_km, const NetworkModel& model);

/// Solve macro_degradation(r) = y on [0, cell_radius]; clamps outside.
InvertResult macro_degradation_inverse(double y, const NetworkModel& model);

} // namespace hetperf
