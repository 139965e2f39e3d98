#include "hetperf/config.hpp"
#include "hetperf/evaluator.hpp"
#include "hetperf/harness.hpp"
#include "hetperf/simkernel.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

namespace {

using namespace hetperf;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary); // binary: keep LF endings
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::string fmt(const char* f, double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

struct EvalOptions {
    int scenario = 3;
    std::optional<double> rh, theta_h, sigma, rs, theta_s;
    bool with_mc = false;
    bool as_json = false;
};

std::string eval_report(const AppConfig& cfg, const EvalOptions& opt,
                        std::uint64_t seed, std::size_t samples, int workers) {
    const NetworkModel model = build_network_model(cfg.radio);
    const LinkCurve curve = link_curve_from(cfg);

    Hotspot hs = cfg.hotspot;
    if (opt.rh) hs.r_h_km = *opt.rh;
    if (opt.theta_h) hs.theta_h_rad = *opt.theta_h;
    if (opt.sigma) hs.sigma_km = *opt.sigma;

    Placement sc = Placement::absent();
    if (opt.scenario == 2)
        sc = Placement::at(hs.r_h_km, hs.theta_h_rad);
    else if (opt.scenario == 3)
        sc = Placement::at(opt.rs ? *opt.rs : hs.r_h_km,
                           opt.theta_s ? *opt.theta_s : hs.theta_h_rad);

    EvalResult res;
    switch (opt.scenario) {
    case 1: res = eval_scenario1(hs, model, curve, cfg.numerics); break;
    case 2: res = eval_scenario2(hs, model, curve, cfg.numerics); break;
    default: res = eval_scenario3(hs, sc, model, curve, cfg.numerics); break;
    }

    std::optional<McResult> mc;
    if (opt.with_mc) {
        McSpec mcs;
        mcs.n_samples = samples;
        mcs.seed = seed;
        mcs.workers = workers;
        mc = mc_evaluate(hs, sc, model, curve, mcs);
    }

    if (opt.as_json) {
        nlohmann::json j{
            {"scenario", opt.scenario},
            {"hotspot", {{"r_h_km", hs.r_h_km},
                         {"theta_h_rad", hs.theta_h_rad},
                         {"sigma_km", hs.sigma_km}}},
            {"eta_m_mbps", res.eta_m_mbps},
            {"eta_s_mbps", res.eta_s_mbps},
            {"eta_mbps", res.eta_mbps},
            {"mu", res.mu},
            {"gain", res.gain},
        };
        if (sc.position)
            j["small_cell"] = {{"r_s_km", sc.position->r_km},
                               {"theta_s_rad", sc.position->theta_rad}};
        if (mc) {
            j["mc"] = {{"eta_m_mbps", mc->eta_m}, {"eta_s_mbps", mc->eta_s},
                       {"eta_mbps", mc->eta},     {"mu", mc->mu},
                       {"se_eta", mc->se_eta},    {"se_mu", mc->se_mu},
                       {"n", mc->n}};
        }
        return j.dump(2) + "\n";
    }

    std::string out;
    out += "scenario " + std::to_string(opt.scenario) + "\n";
    out += "hotspot    r=" + fmt("%.9g", hs.r_h_km) + " km  theta=" +
           fmt("%.9g", hs.theta_h_rad) + " rad  sigma=" + fmt("%.9g", hs.sigma_km) +
           " km\n";
    if (sc.position)
        out += "small cell r=" + fmt("%.9g", sc.position->r_km) + " km  theta=" +
               fmt("%.9g", sc.position->theta_rad) + " rad\n";
    out += "eta_m " + fmt("%.9g", res.eta_m_mbps) + " Mbps\n";
    out += "eta_s " + fmt("%.9g", res.eta_s_mbps) + " Mbps\n";
    out += "eta   " + fmt("%.9g", res.eta_mbps) + " Mbps\n";
    out += "mu    " + fmt("%.9g", res.mu) + "\n";
    out += "gain  " + fmt("%.9g", res.gain) + "\n";
    if (mc) {
        out += "monte carlo (n=" + std::to_string(mc->n) + ")\n";
        out += "  eta   " + fmt("%.9g", mc->eta) + " +/- " + fmt("%.3g", mc->se_eta) +
               " Mbps\n";
        out += "  mu    " + fmt("%.9g", mc->mu) + " +/- " + fmt("%.3g", mc->se_mu) + "\n";
        const auto ci = absorption_interval(*mc, 0.95);
        out += "  mu 95% ci [" + fmt("%.9g", ci.lo) + ", " + fmt("%.9g", ci.hi) + "]" +
               (ci.normal_ok ? "" : " (small-count fallback)") + "\n";
    }
    return out;
}

// Sweep presets mirroring the reference experiment families.
SweepSpec fig3_spec(const AppConfig& cfg, const NetworkModel& model, double sign) {
    SweepSpec s;
    s.variable = SweepVariable::hotspot_radius;
    s.start = 0.05;
    s.stop = model.cell_radius_km;
    s.step = 0.05;
    s.error_offsets = {0.0, 0.06, 0.12};
    s.error_sign = sign;
    s.hotspot = cfg.hotspot;
    s.hotspot.theta_h_rad = M_PI / 3.0;
    return s;
}

SweepSpec fig4_spec(const AppConfig& cfg, double sign) {
    SweepSpec s;
    s.variable = SweepVariable::hotspot_angle;
    s.start = 0.0;
    s.stop = 2.0 * M_PI;
    s.step = 2.0 * M_PI / 30.0;
    s.error_offsets = {0.0, M_PI / 6.0, M_PI / 3.0};
    s.error_sign = sign;
    s.hotspot = cfg.hotspot;
    s.hotspot.r_h_km = 0.4;
    return s;
}

std::vector<SweepRow> fig56_rows(const AppConfig& cfg, const NetworkModel& model,
                                 bool vary_radius, int workers) {
    const PolarPoint centers[] = {{0.35, M_PI / 6.0}, {0.52, M_PI / 2.0}};
    std::vector<SweepRow> all;
    for (const PolarPoint& c : centers) {
        SweepSpec s;
        s.hotspot = cfg.hotspot;
        s.hotspot.r_h_km = c.r_km;
        s.hotspot.theta_h_rad = c.theta_rad;
        s.placement = {c.r_km, c.theta_rad};
        if (vary_radius) {
            s.variable = SweepVariable::small_radius;
            s.start = 0.05;
            s.stop = model.cell_radius_km;
            s.step = (s.stop - s.start) / 29.0; // 30 points
        } else {
            s.variable = SweepVariable::small_angle;
            s.start = c.theta_rad;
            s.stop = c.theta_rad + M_PI;
            s.step = M_PI / 29.0;
        }
        auto rows = run_sweep(s, cfg, workers);
        all.insert(all.end(), rows.begin(), rows.end());
    }
    return all;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Downlink throughput of a hexagonal macro network with a "
                 "traffic hotspot and one small cell"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand name

    std::string config_path, out_path;
    std::uint64_t seed = 1;
    std::size_t samples = 200000;
    int workers = 1;
    app.add_option("--config", config_path, "INI config file");
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--seed", seed, "Monte Carlo seed");
    app.add_option("--samples", samples, "Monte Carlo sample count");
    app.add_option("--workers", workers, "worker threads (results unaffected)");

    EvalOptions eopt;
    auto* eval = app.add_subcommand("eval", "evaluate one configuration");
    eval->add_option("--scenario", eopt.scenario, "1 macro-only, 2 on-spot, 3 displaced")
        ->check(CLI::Range(1, 3));
    double rh = 0, th = 0, sg = 0, rs = 0, ts = 0;
    auto* orh = eval->add_option("--rh", rh, "hotspot radius [km]");
    auto* oth = eval->add_option("--theta-h", th, "hotspot angle [rad]");
    auto* osg = eval->add_option("--sigma", sg, "hotspot spread [km]");
    auto* ors = eval->add_option("--rs", rs, "small-cell radius [km]");
    auto* ots = eval->add_option("--theta-s", ts, "small-cell angle [rad]");
    eval->add_flag("--mc", eopt.with_mc, "also run the Monte Carlo cross-check");
    eval->add_flag("--json", eopt.as_json, "JSON output");

    auto* sweep = app.add_subcommand("sweep", "sweep one coordinate to CSV");
    std::string variable = "rh", sign_str = "+";
    SweepSpec sspec;
    sweep->add_option("--variable", variable, "rh | theta-h | rs | theta-s")
        ->check(CLI::IsMember({"rh", "theta-h", "rs", "theta-s"}));
    sweep->add_option("--start", sspec.start, "first value")->required();
    sweep->add_option("--stop", sspec.stop, "last value (inclusive)")->required();
    sweep->add_option("--step", sspec.step, "increment")->required();
    sweep->add_option("--errors", sspec.error_offsets,
                      "positioning errors for hotspot sweeps")
        ->delimiter(',');
    sweep->add_option("--error-sign", sign_str, "apply errors outward (+) or inward (-)")
        ->check(CLI::IsMember({"+", "-"}));
    double srs = -1, sts = std::numeric_limits<double>::quiet_NaN();
    sweep->add_option("--rs", srs, "fixed small-cell radius for theta-s sweeps");
    sweep->add_option("--theta-s", sts, "fixed small-cell angle for rs sweeps");

    auto* validate = app.add_subcommand(
        "validate", "closed forms vs Monte Carlo on the reference grid");
    bool per_tier = false;
    validate->add_flag("--per-tier-exponents", per_tier,
                       "small-cell links use their own pathloss slope");

    auto* fig3 = app.add_subcommand("fig3", "gain vs hotspot radius, radial errors");
    std::string f3sign = "+";
    fig3->add_option("--error-sign", f3sign, "radial error direction")
        ->check(CLI::IsMember({"+", "-"}));
    auto* fig4 = app.add_subcommand("fig4", "gain vs hotspot angle, angular errors");
    auto* fig5 = app.add_subcommand("fig5", "gain vs small-cell radius, two hotspots");
    auto* fig6 = app.add_subcommand("fig6", "gain vs small-cell angle, two hotspots");
    auto* dump = app.add_subcommand("dump-config", "print the effective config");

    CLI11_PARSE(app, argc, argv);

    try {
        const AppConfig cfg =
            config_path.empty() ? AppConfig{} : load_config(config_path);
        const NetworkModel model = build_network_model(cfg.radio);

        if (eval->parsed()) {
            if (orh->count()) eopt.rh = rh;
            if (oth->count()) eopt.theta_h = th;
            if (osg->count()) eopt.sigma = sg;
            if (ors->count()) eopt.rs = rs;
            if (ots->count()) eopt.theta_s = ts;
            write_output(out_path, eval_report(cfg, eopt, seed, samples, workers));
        } else if (sweep->parsed()) {
            sspec.hotspot = cfg.hotspot;
            sspec.error_sign = sign_str == "-" ? -1.0 : 1.0;
            sspec.placement = {cfg.hotspot.r_h_km, cfg.hotspot.theta_h_rad};
            if (srs >= 0) sspec.placement.r_km = srs;
            if (!std::isnan(sts)) sspec.placement.theta_rad = sts;
            if (variable == "rh") sspec.variable = SweepVariable::hotspot_radius;
            else if (variable == "theta-h") sspec.variable = SweepVariable::hotspot_angle;
            else if (variable == "rs") sspec.variable = SweepVariable::small_radius;
            else sspec.variable = SweepVariable::small_angle;
            write_output(out_path, rows_to_csv(run_sweep(sspec, cfg, workers)));
        } else if (validate->parsed()) {
            ValidationSpec vspec;
            vspec.mc.n_samples = samples;
            vspec.mc.seed = seed;
            vspec.mc.workers = workers;
            vspec.mc.per_tier_exponents = per_tier;
            const ValidationReport rep = run_validate(cfg, vspec);
            write_output(out_path, report_to_text(rep));
            return rep.pass ? 0 : 1;
        } else if (fig3->parsed()) {
            const auto spec = fig3_spec(cfg, model, f3sign == "-" ? -1.0 : 1.0);
            write_output(out_path, rows_to_csv(run_sweep(spec, cfg, workers)));
        } else if (fig4->parsed()) {
            write_output(out_path, rows_to_csv(run_sweep(fig4_spec(cfg, 1.0), cfg, workers)));
        } else if (fig5->parsed()) {
            write_output(out_path, rows_to_csv(fig56_rows(cfg, model, true, workers)));
        } else if (fig6->parsed()) {
            write_output(out_path, rows_to_csv(fig56_rows(cfg, model, false, workers)));
        } else if (dump->parsed()) {
            write_output(out_path, dump_config(cfg));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
