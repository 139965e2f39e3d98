#pragma once

#include "hetperf/numerics.hpp"

#include <cstdint>
#include <vector>

namespace hetperf {

struct PolarPoint {
    double r_km = 0.0;
    double theta_rad = 0.0;
};

/// Gaussian traffic hotspot: center in polar coordinates plus spread.
struct Hotspot {
    double r_h_km = 0.0;
    double theta_h_rad = 0.0;
    double sigma_km = 0.0;
};

/// Center inside the disk of the given radius, positive spread.
void validate_hotspot(const Hotspot& hs, double region_radius_km);

/// Gaussian surface density (per km^2) of the hotspot at a point.
double traffic_density(const PolarPoint& p, const Hotspot& hs);

/// Angle-integrated radial mass density: integral of traffic_density over
/// the circle of radius r, times r. Stable for sigma << r via the scaled
/// Bessel factor.
double radial_kernel(double r_km, const Hotspot& hs);

/// Fraction of the hotspot's total traffic falling inside the disk.
double region_mass(const Hotspot& hs, double region_radius_km,
                   const QuadratureSpec& spec = {});

struct HotspotSample {
    std::vector<PolarPoint> points;
    std::uint64_t attempts = 0; // Gaussian draws including rejected ones
};

/// Draw n points from the hotspot distribution conditioned on the disk,
/// by rejection. Deterministic for a fixed seed.
HotspotSample sample_hotspot(const Hotspot& hs, double region_radius_km,
                             std::size_t n, std::uint64_t seed);

} // namespace hetperf
