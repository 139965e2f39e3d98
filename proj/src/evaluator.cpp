#include "hetperf/evaluator.hpp"

#include "hetperf/hexnet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hetperf {

double association_cos_bound(double r_km, double r_s_km, const NetworkModel& model) {
    if (!(r_km >= 0.0) || !(r_s_km >= 0.0))
        throw std::invalid_argument("association_cos_bound: require r, r_s >= 0");
    if (r_km == 0.0 || r_s_km == 0.0)
        return 1.0; // h -> +inf: the small cell never wins
    const double a = std::pow(model.alpha, 1.0 / model.b); // d^2 < a r^2 region
    const double h = (r_s_km * r_s_km + (1.0 - a) * r_km * r_km) /
                     (2.0 * r_km * r_s_km);
    return std::clamp(h, -1.0, 1.0);
}

WedgeRadii wedge_radii(double r_s_km, const NetworkModel& model) {
    if (!(r_s_km >= 0.0))
        throw std::invalid_argument("wedge_radii: require r_s >= 0");
    const double s = std::pow(model.alpha, 1.0 / (2.0 * model.b));
    return {r_s_km / (1.0 + s), r_s_km / (1.0 - s)};
}

namespace {

double sc_over_macro(const PolarPoint& p, const PolarPoint& sc, const NetworkModel& model) {
    // alpha (r^2 / d^2)^b: small-cell received power over the serving macro's.
    const double d2 = p.r_km * p.r_km + sc.r_km * sc.r_km -
                      2.0 * p.r_km * sc.r_km * std::cos(p.theta_rad - sc.theta_rad);
    if (d2 <= 0.0)
        return std::numeric_limits<double>::infinity();
    return model.alpha * std::pow(p.r_km * p.r_km / d2, model.b);
}

} // namespace

double sinr_macro(const PolarPoint& p, const Placement& sc, const NetworkModel& model) {
    double denom = macro_degradation(p.r_km, model);
    if (sc.position)
        denom += sc_over_macro(p, *sc.position, model);
    if (denom == 0.0)
        return std::numeric_limits<double>::infinity();
    return 1.0 / denom;
}

double sinr_small(const PolarPoint& p, const Placement& sc, const NetworkModel& model) {
    if (!sc.position)
        throw std::invalid_argument("sinr_small: no small cell placed");
    return sc_over_macro(p, *sc.position, model) /
           (macro_degradation(p.r_km, model) + 1.0);
}

namespace {

// Angular half-width of the small-cell association wedge at radius r.
double wedge_angle(double r, double rs, const NetworkModel& model) {
    return std::acos(association_cos_bound(r, rs, model));
}

std::vector<double> hotspot_breaks(const Hotspot& hs) {
    const double s = hs.sigma_km;
    return {hs.r_h_km - 3.0 * s, hs.r_h_km - s, hs.r_h_km,
            hs.r_h_km + s, hs.r_h_km + 3.0 * s};
}

// Geometry and density factors shared by the nested polar integrals.
struct PolarField {
    const Hotspot& hs;
    const PolarPoint& sc;
    const NetworkModel& model;
    QuadratureSpec outer_spec;
    QuadratureSpec inner_spec;
    double sig2, delta_ang, peak, s0;

    PolarField(const Hotspot& h, const PolarPoint& s, const NetworkModel& m,
               const QuadratureSpec& spec)
        : hs(h), sc(s), model(m), outer_spec(spec),
          inner_spec{0.1 * spec.rel_tol, 0.1 * spec.abs_tol, spec.max_subdivisions},
          sig2(h.sigma_km * h.sigma_km),
          delta_ang(std::remainder(h.theta_h_rad - s.theta_rad, 2.0 * M_PI)),
          peak(std::abs(delta_ang)),
          s0(region_mass(h, m.cell_radius_km, spec)) {}

    double radial_weight(double r) const {
        const double dr = r - hs.r_h_km;
        return r * std::exp(-dr * dr / (2.0 * sig2));
    }

    // Folded angular density factor at offset phi from the small cell.
    double angular_density(double scale, double phi) const {
        return std::exp(-scale * (1.0 - std::cos(phi - delta_ang))) +
               std::exp(-scale * (1.0 - std::cos(phi + delta_ang)));
    }

    // Integrate angular_density * term(phi) over [phi_lo, phi_hi] at radius r.
    template <class Term>
    double inner(double r, double phi_lo, double phi_hi,
                 std::span<const double> extra_breaks, Term&& term) const {
        if (!(phi_hi > phi_lo))
            return 0.0;
        const double scale = r * hs.r_h_km / sig2;
        const double w = 1.0 / std::sqrt(std::max(scale, 1.0));
        std::vector<double> breaks = {peak - 6.0 * w, peak - w, peak,
                                      peak + w, peak + 6.0 * w};
        breaks.insert(breaks.end(), extra_breaks.begin(), extra_breaks.end());
        const auto q = integrate_panels(
            [&](double phi) { return angular_density(scale, phi) * term(phi); },
            phi_lo, phi_hi, breaks, inner_spec);
        if (!q.converged)
            throw std::runtime_error(
                "scenario evaluation: angular integral did not converge");
        return q.value;
    }

    // Integrate radial_weight * per_radius(r) and normalize to a mass share.
    template <class PerRadius>
    double outer(double a, double b, std::span<const double> breaks,
                 PerRadius&& per_radius) const {
        const auto q = integrate_panels(
            [&](double r) { return radial_weight(r) * per_radius(r); },
            a, b, breaks, outer_spec);
        if (!q.converged)
            throw std::runtime_error(
                "scenario evaluation: radial integral did not converge");
        return q.value / (2.0 * M_PI * sig2 * s0);
    }
};

double absorption_mass(const PolarField& f, double lo, double hi) {
    if (!(hi > lo))
        return 0.0;
    const auto breaks = hotspot_breaks(f.hs);
    return f.outer(lo, hi, breaks, [&](double r) {
        return f.inner(r, 0.0, wedge_angle(r, f.sc.r_km, f.model), {},
                       [](double) { return 1.0; });
    });
}

struct ScenarioTerms {
    double eta_m = 0.0;
    double eta_s = 0.0;
    double mu = 0.0;
};

// Nested polar integration of throughput and load against the hotspot
// density, with the association wedge carving the angular range.
ScenarioTerms scenario_with_small_cell(const Hotspot& hs, const PolarPoint& sc,
                                       const NetworkModel& model, const LinkCurve& curve,
                                       const QuadratureSpec& spec) {
    const double R = model.cell_radius_km;
    const double rs = sc.r_km;
    const PolarField f(hs, sc, model, spec);

    const WedgeRadii wr = wedge_radii(rs, model);
    const double lo = std::clamp(wr.r1_km, 0.0, R);
    const double hi = std::clamp(wr.r2_km, 0.0, R);

    std::vector<double> outer_breaks = hotspot_breaks(hs);
    outer_breaks.push_back(lo);
    outer_breaks.push_back(hi);
    outer_breaks.push_back(macro_degradation_inverse(1.0 / curve.rho_cap, model).x);

    auto t_small = [&](double r, double phi) {
        const double d2 = r * r + rs * rs - 2.0 * r * rs * std::cos(phi);
        if (d2 <= 0.0)
            return std::numeric_limits<double>::infinity();
        return model.alpha * std::pow(r * r / d2, model.b);
    };
    // Angles where a throughput cap boundary crosses the inner range: the
    // relative small-cell power t passes t_at_cap while the point nears the
    // small cell. Feeding the kink to the quadrature keeps panels cheap.
    auto cap_break = [&](double r, double t_at_cap, std::vector<double>& breaks) {
        if (!(t_at_cap > 0.0) || rs == 0.0 || r == 0.0)
            return;
        const double d2 = r * r * std::pow(model.alpha / t_at_cap, 1.0 / model.b);
        const double c = (r * r + rs * rs - d2) / (2.0 * r * rs);
        if (c > -1.0 && c < 1.0)
            breaks.push_back(std::acos(c));
    };

    ScenarioTerms out;
    out.eta_m = f.outer(0.0, R, outer_breaks, [&](double r) {
        const double g = macro_degradation(r, model);
        std::vector<double> kinks;
        cap_break(r, 1.0 / curve.rho_cap - g, kinks);
        return f.inner(r, wedge_angle(r, rs, model), M_PI, kinks, [&](double phi) {
            const double denom = g + t_small(r, phi);
            const double sinr = denom > 0.0 ? 1.0 / denom
                                            : std::numeric_limits<double>::infinity();
            return link_throughput(curve, sinr);
        });
    });
    out.eta_s = f.outer(lo, hi, outer_breaks, [&](double r) {
        const double g = macro_degradation(r, model);
        std::vector<double> kinks;
        cap_break(r, curve.rho_cap * (g + 1.0), kinks);
        return f.inner(r, 0.0, wedge_angle(r, rs, model), kinks, [&](double phi) {
            return link_throughput(curve, t_small(r, phi) / (g + 1.0));
        });
    });
    out.mu = absorption_mass(f, lo, hi);
    return out;
}

} // namespace

EvalResult eval_scenario1(const Hotspot& hs, const NetworkModel& model,
                          const LinkCurve& curve, const QuadratureSpec& spec) {
    const double R = model.cell_radius_km;
    validate_hotspot(hs, R);
    const double s0 = region_mass(hs, R, spec);

    std::vector<double> breaks = hotspot_breaks(hs);
    breaks.push_back(macro_degradation_inverse(1.0 / curve.rho_cap, model).x);
    const auto q = integrate_panels(
        [&](double r) {
            return radial_kernel(r, hs) *
                   link_throughput(curve, sinr_macro({r, 0.0}, Placement::absent(), model));
        },
        0.0, R, breaks, spec);
    if (!q.converged)
        throw std::runtime_error("scenario evaluation: radial integral did not converge");

    EvalResult out;
    out.eta_m_mbps = q.value / s0;
    out.eta_mbps = out.eta_m_mbps;
    return out;
}

EvalResult eval_scenario2(const Hotspot& hs, const NetworkModel& model,
                          const LinkCurve& curve, const QuadratureSpec& spec) {
    return eval_scenario3(hs, Placement::at(hs.r_h_km, hs.theta_h_rad), model, curve, spec);
}

EvalResult eval_scenario3(const Hotspot& hs, const Placement& sc,
                          const NetworkModel& model, const LinkCurve& curve,
                          const QuadratureSpec& spec) {
    if (!sc.position)
        return eval_scenario1(hs, model, curve, spec);
    validate_hotspot(hs, model.cell_radius_km);
    if (!(sc.position->r_km >= 0.0) || !std::isfinite(sc.position->theta_rad))
        throw std::invalid_argument("eval_scenario3: bad small-cell position");

    const EvalResult base = eval_scenario1(hs, model, curve, spec);
    const ScenarioTerms t = scenario_with_small_cell(hs, *sc.position, model, curve, spec);

    EvalResult out;
    out.eta_m_mbps = t.eta_m;
    out.eta_s_mbps = t.eta_s;
    out.eta_mbps = t.eta_m + t.eta_s;
    out.mu = t.mu;
    out.gain = offloading_gain(out, base);
    return out;
}

double absorption(const Hotspot& hs, const Placement& sc, const NetworkModel& model,
                  const QuadratureSpec& spec) {
    if (!sc.position)
        return 0.0;
    validate_hotspot(hs, model.cell_radius_km);
    const PolarField f(hs, *sc.position, model, spec);
    const WedgeRadii wr = wedge_radii(sc.position->r_km, model);
    return absorption_mass(f, std::clamp(wr.r1_km, 0.0, model.cell_radius_km),
                           std::clamp(wr.r2_km, 0.0, model.cell_radius_km));
}

double offloading_gain(const EvalResult& result, const EvalResult& baseline) {
    if (!(baseline.eta_mbps > 0.0))
        throw std::invalid_argument("offloading_gain: baseline throughput must be positive");
    return (result.eta_mbps - baseline.eta_mbps) / baseline.eta_mbps;
}

} // namespace hetperf
