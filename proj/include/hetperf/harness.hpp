#pragma once

#include "hetperf/config.hpp"
#include "hetperf/evaluator.hpp"
#include "hetperf/simkernel.hpp"

#include <string>
#include <vector>

namespace hetperf {

enum class SweepVariable {
    hotspot_radius,
    hotspot_angle,
    small_radius,
    small_angle,
};

struct SweepSpec {
    SweepVariable variable = SweepVariable::hotspot_radius;
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
    // For hotspot sweeps: positioning errors between hotspot and small cell,
    // applied along the swept coordinate (km for radius, rad for angle).
    // A scenario-1 baseline row plus one row per offset is emitted per value.
    std::vector<double> error_offsets{0.0};
    double error_sign = 1.0;
    Hotspot hotspot;       // coordinates not being swept
    PolarPoint placement;  // fixed small-cell coordinates for small_* sweeps
};

struct SweepRow {
    double rh_km = 0.0;
    double theta_h_rad = 0.0;
    bool has_sc = false;
    double rs_km = 0.0;
    double theta_s_rad = 0.0;
    int scenario = 1;
    bool ok = false;
    EvalResult result;
    std::string error; // failure reason; empty when ok
};

std::vector<SweepRow> run_sweep(const SweepSpec& sweep, const AppConfig& cfg,
                                int workers = 1);

/// Fixed-layout CSV with %.9g cells; byte-stable for identical inputs.
std::string rows_to_csv(const std::vector<SweepRow>& rows);

struct ValidationSpec {
    std::vector<double> rh_values{0.2, 0.35, 0.44, 0.52};
    std::vector<double> offsets_km{0.0, 0.06, 0.12};
    double theta_rad = M_PI / 3.0;
    double error_sign = 1.0;
    double eta_rel_tol = 0.02;  // analytic vs MC, whichever of the two
    double se_multiple = 3.0;   //   bounds is looser
    double mu_abs_tol = 0.01;
    McSpec mc;
};

struct ValidationRow {
    double rh_km = 0.0;
    double rs_km = 0.0;
    EvalResult analytic;
    McResult mc;
    bool eta_ok = false;
    bool mu_ok = false;
};

struct ValidationReport {
    std::vector<ValidationRow> rows;
    bool pass = true;
};

/// Cross-check the closed forms against the Monte Carlo kernel on a grid of
/// hotspot radii and positioning errors.
ValidationReport run_validate(const AppConfig& cfg, const ValidationSpec& spec);

std::string report_to_text(const ValidationReport& report);

} // namespace hetperf
