#pragma once

#include "hetperf/linkbudget.hpp"
#include "hetperf/numerics.hpp"
#include "hetperf/traffic.hpp"

#include <cmath>
#include <filesystem>
#include <string>

namespace hetperf {

/// Full run configuration; defaults reproduce the reference parameter set.
struct AppConfig {
    RadioParams radio;
    Hotspot hotspot{0.44, 2.0 * M_PI / 3.0, 0.2};
    double k1 = 0.85;
    double k2 = 1.9;
    double w_mbps = 20.0;
    double eta0_mbps = 98.0;
    QuadratureSpec numerics;
};

/// Parse INI text with sections [radio], [hotspot], [linkcurve], [numerics].
/// Unknown sections or keys and malformed values are rejected.
AppConfig parse_config(const std::string& text);

AppConfig load_config(const std::filesystem::path& path);

/// Serialize with full precision; parse_config(dump_config(c)) reproduces c.
std::string dump_config(const AppConfig& cfg);

LinkCurve link_curve_from(const AppConfig& cfg);

} // namespace hetperf
