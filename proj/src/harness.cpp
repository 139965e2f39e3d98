#include "hetperf/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace hetperf {

namespace {

std::vector<double> sweep_values(const SweepSpec& s) {
    if (!(s.step > 0.0) || !(s.stop >= s.start) || !std::isfinite(s.start) ||
        !std::isfinite(s.stop))
        throw std::invalid_argument("run_sweep: bad start/stop/step");
    std::vector<double> v;
    const int n = int(std::floor((s.stop - s.start) / s.step + 1e-9)) + 1;
    v.reserve(n);
    for (int i = 0; i < n; ++i)
        v.push_back(s.start + i * s.step);
    return v;
}

SweepRow eval_row(const Hotspot& hs, const std::optional<PolarPoint>& sc, int scenario,
                  const NetworkModel& model, const LinkCurve& curve,
                  const QuadratureSpec& qspec) {
    SweepRow row;
    row.rh_km = hs.r_h_km;
    row.theta_h_rad = hs.theta_h_rad;
    row.scenario = scenario;
    if (sc) {
        row.has_sc = true;
        row.rs_km = sc->r_km;
        row.theta_s_rad = sc->theta_rad;
    }
    try {
        row.result = sc ? eval_scenario3(hs, Placement{*sc}, model, curve, qspec)
                        : eval_scenario1(hs, model, curve, qspec);
        row.ok = true;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& sweep, const AppConfig& cfg,
                                int workers) {
    const NetworkModel model = build_network_model(cfg.radio);
    const LinkCurve curve = link_curve_from(cfg);
    const std::vector<double> values = sweep_values(sweep);
    const bool sweeps_hotspot = sweep.variable == SweepVariable::hotspot_radius ||
                                sweep.variable == SweepVariable::hotspot_angle;

    std::vector<std::vector<SweepRow>> groups(values.size());
    auto run_value = [&](std::size_t vi) {
        const double v = values[vi];
        Hotspot hs = sweep.hotspot;
        PolarPoint sc = sweep.placement;
        switch (sweep.variable) {
        case SweepVariable::hotspot_radius: hs.r_h_km = v; break;
        case SweepVariable::hotspot_angle: hs.theta_h_rad = v; break;
        case SweepVariable::small_radius: sc.r_km = v; break;
        case SweepVariable::small_angle: sc.theta_rad = v; break;
        }
        auto& rows = groups[vi];
        if (sweeps_hotspot) {
            rows.push_back(eval_row(hs, std::nullopt, 1, model, curve, cfg.numerics));
            for (double e : sweep.error_offsets) {
                PolarPoint pos{hs.r_h_km, hs.theta_h_rad};
                if (sweep.variable == SweepVariable::hotspot_radius)
                    pos.r_km += sweep.error_sign * e;
                else
                    pos.theta_rad += sweep.error_sign * e;
                rows.push_back(eval_row(hs, pos, e == 0.0 ? 2 : 3, model, curve,
                                        cfg.numerics));
            }
        } else {
            if (vi == 0) // shared macro-only baseline, emitted once
                rows.push_back(eval_row(hs, std::nullopt, 1, model, curve, cfg.numerics));
            const bool on_hotspot = sc.r_km == hs.r_h_km && sc.theta_rad == hs.theta_h_rad;
            rows.push_back(eval_row(hs, sc, on_hotspot ? 2 : 3, model, curve,
                                    cfg.numerics));
        }
    };

    const std::size_t nworkers =
        std::min<std::size_t>(std::max(1, workers), values.size());
    if (nworkers <= 1) {
        for (std::size_t i = 0; i < values.size(); ++i)
            run_value(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (std::size_t w = 0; w < nworkers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < values.size();
                     i = next.fetch_add(1))
                    run_value(i);
            });
        for (auto& th : pool)
            th.join();
    }

    std::vector<SweepRow> out;
    for (auto& g : groups)
        out.insert(out.end(), g.begin(), g.end());
    return out;
}

namespace {

std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "rh_km,theta_h_rad,rs_km,theta_s_rad,scenario,"
                      "eta_m,eta_s,eta,mu,gain,error\n";
    for (const SweepRow& r : rows) {
        out += fmt_num(r.rh_km);
        out += ',';
        out += fmt_num(r.theta_h_rad);
        out += ',';
        if (r.has_sc) {
            out += fmt_num(r.rs_km);
            out += ',';
            out += fmt_num(r.theta_s_rad);
        } else {
            out += ',';
        }
        out += ',';
        out += std::to_string(r.scenario);
        out += ',';
        if (r.ok) {
            out += fmt_num(r.result.eta_m_mbps);
            out += ',';
            out += fmt_num(r.result.eta_s_mbps);
            out += ',';
            out += fmt_num(r.result.eta_mbps);
            out += ',';
            out += fmt_num(r.result.mu);
            out += ',';
            out += fmt_num(r.result.gain);
            out += ',';
        } else {
            out += ",,,,,";
            out += csv_escape(r.error);
        }
        out += '\n';
    }
    return out;
}

ValidationReport run_validate(const AppConfig& cfg, const ValidationSpec& spec) {
    const NetworkModel model = build_network_model(cfg.radio);
    const LinkCurve curve = link_curve_from(cfg);

    ValidationReport rep;
    std::uint64_t idx = 0;
    for (double rh : spec.rh_values) {
        for (double off : spec.offsets_km) {
            const Hotspot hs{rh, spec.theta_rad, cfg.hotspot.sigma_km};
            const double rs = rh + spec.error_sign * off;
            const Placement sc = Placement::at(rs, spec.theta_rad);

            ValidationRow row;
            row.rh_km = rh;
            row.rs_km = rs;
            row.analytic = eval_scenario3(hs, sc, model, curve, cfg.numerics);
            McSpec mcs = spec.mc;
            mcs.seed = derive_stream_seed(spec.mc.seed, idx++);
            row.mc = mc_evaluate(hs, sc, model, curve, mcs);

            row.eta_ok = std::abs(row.analytic.eta_mbps - row.mc.eta) <=
                         std::max(spec.eta_rel_tol * std::abs(row.mc.eta),
                                  spec.se_multiple * row.mc.se_eta);
            row.mu_ok = std::abs(row.analytic.mu - row.mc.mu) <=
                        std::max(spec.mu_abs_tol, spec.se_multiple * row.mc.se_mu);
            rep.pass = rep.pass && row.eta_ok && row.mu_ok;
            rep.rows.push_back(row);
        }
    }
    return rep;
}

std::string report_to_text(const ValidationReport& report) {
    std::string out = "  rh_km   rs_km    eta_closed      eta_mc   se_eta  "
                      "mu_closed    mu_mc    se_mu   eta   mu\n";
    char buf[160];
    for (const ValidationRow& r : report.rows) {
        std::snprintf(buf, sizeof buf,
                      "%7.3f %7.3f %13.6f %11.6f %8.4f %10.6f %8.6f %8.6f  %4s %4s\n",
                      r.rh_km, r.rs_km, r.analytic.eta_mbps, r.mc.eta, r.mc.se_eta,
                      r.analytic.mu, r.mc.mu, r.mc.se_mu, r.eta_ok ? "ok" : "FAIL",
                      r.mu_ok ? "ok" : "FAIL");
        out += buf;
    }
    out += report.pass ? "PASS\n" : "FAIL\n";
    return out;
}

} // namespace hetperf
