#pragma once

#include "hetperf/linkbudget.hpp"
#include "hetperf/traffic.hpp"

#include <optional>

namespace hetperf {

/// Candidate small-cell position; empty means no small cell deployed.
struct Placement {
    std::optional<PolarPoint> position;

    static Placement absent() { return {}; }
    static Placement at(double r_s_km, double theta_s_rad) {
        return {PolarPoint{r_s_km, theta_s_rad}};
    }
};

struct EvalResult {
    double eta_m_mbps = 0.0; // macro tier share of mean user throughput
    double eta_s_mbps = 0.0; // small-cell share
    double eta_mbps = 0.0;   // total
    double mu = 0.0;         // fraction of traffic served by the small cell
    double gain = 0.0;       // relative eta improvement over the macro-only case
};

/// cos bound h(r) of the association boundary: the small cell at radius
/// r_s wins at (r, theta) iff cos(theta - theta_s) > h(r). Clamped to
/// [-1, 1]; r = 0 or r_s = 0 degenerate to 1 (macro always wins).
double association_cos_bound(double r_km, double r_s_km, const NetworkModel& model);

/// Radial span [r1, r2] outside which the association wedge is empty.
struct WedgeRadii {
    double r1_km = 0.0;
    double r2_km = 0.0;
};
WedgeRadii wedge_radii(double r_s_km, const NetworkModel& model);

/// Downlink SINR of the macro link at a point, with the small cell (if
/// present) counted as interference.
double sinr_macro(const PolarPoint& p, const Placement& sc, const NetworkModel& model);

/// Downlink SINR of the small-cell link; requires a present placement.
double sinr_small(const PolarPoint& p, const Placement& sc, const NetworkModel& model);

/// Macro-only network.
EvalResult eval_scenario1(const Hotspot& hs, const NetworkModel& model,
                          const LinkCurve& curve, const QuadratureSpec& spec = {});

/// Small cell exactly on the hotspot center.
EvalResult eval_scenario2(const Hotspot& hs, const NetworkModel& model,
                          const LinkCurve& curve, const QuadratureSpec& spec = {});

/// Small cell at an arbitrary position (mispositioned deployment).
EvalResult eval_scenario3(const Hotspot& hs, const Placement& sc,
                          const NetworkModel& model, const LinkCurve& curve,
                          const QuadratureSpec& spec = {});

/// Traffic fraction absorbed by the small cell; 0 for an absent placement.
double absorption(const Hotspot& hs, const Placement& sc, const NetworkModel& model,
                  const QuadratureSpec& spec = {});

/// Relative throughput gain of `result` over `baseline`.
double offloading_gain(const EvalResult& result, const EvalResult& baseline);

} // namespace hetperf
