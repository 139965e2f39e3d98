#include "hetperf/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hetperf {

namespace {

struct Field {
    const char* section;
    const char* key;
    double* value;
};

// One registry drives parsing and dumping, so the two cannot drift apart.
std::vector<Field> field_registry(AppConfig& cfg) {
    auto& r = cfg.radio;
    return {
        {"radio", "macro_power_dbm", &r.macro_power_dbm},
        {"radio", "small_power_dbm", &r.small_power_dbm},
        {"radio", "macro_antenna_gain_dbi", &r.macro_antenna_gain_dbi},
        {"radio", "small_antenna_gain_dbi", &r.small_antenna_gain_dbi},
        {"radio", "ue_antenna_gain_db", &r.ue_antenna_gain_db},
        {"radio", "body_loss_db", &r.body_loss_db},
        {"radio", "macro_pathloss_intercept_db", &r.macro_pathloss_intercept_db},
        {"radio", "small_pathloss_intercept_db", &r.small_pathloss_intercept_db},
        {"radio", "macro_pathloss_slope_db_per_decade", &r.macro_pathloss_slope_db_per_decade},
        {"radio", "small_pathloss_slope_db_per_decade", &r.small_pathloss_slope_db_per_decade},
        {"radio", "noise_density_dbm_per_hz", &r.noise_density_dbm_per_hz},
        {"radio", "noise_figure_db", &r.noise_figure_db},
        {"radio", "bandwidth_hz", &r.bandwidth_hz},
        {"radio", "inter_site_distance_km", &r.inter_site_distance_km},
        {"hotspot", "r_h_km", &cfg.hotspot.r_h_km},
        {"hotspot", "theta_h_rad", &cfg.hotspot.theta_h_rad},
        {"hotspot", "sigma_km", &cfg.hotspot.sigma_km},
        {"linkcurve", "k1", &cfg.k1},
        {"linkcurve", "k2", &cfg.k2},
        {"linkcurve", "w_mbps", &cfg.w_mbps},
        {"linkcurve", "eta0_mbps", &cfg.eta0_mbps},
        {"numerics", "rel_tol", &cfg.numerics.rel_tol},
        {"numerics", "abs_tol", &cfg.numerics.abs_tol},
    };
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& s, int line_no) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (trim(s.substr(pos)).empty())
            return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("config line " + std::to_string(line_no) +
                                ": bad numeric value '" + s + "'");
}

} // namespace

AppConfig parse_config(const std::string& text) {
    AppConfig cfg;
    auto fields = field_registry(cfg);

    std::istringstream in(text);
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find_first_of("#;"); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("config line " + std::to_string(line_no) +
                                            ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "radio" && section != "hotspot" && section != "linkcurve" &&
                section != "numerics")
                throw std::invalid_argument("config line " + std::to_string(line_no) +
                                            ": unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": key outside any section");

        if (section == "numerics" && key == "max_subdivisions") {
            const double v = parse_number(value, line_no);
            if (v < 1.0 || v != double(int(v)))
                throw std::invalid_argument("config line " + std::to_string(line_no) +
                                            ": max_subdivisions must be a positive integer");
            cfg.numerics.max_subdivisions = int(v);
            continue;
        }
        bool found = false;
        for (auto& f : fields) {
            if (section == f.section && key == f.key) {
                *f.value = parse_number(value, line_no);
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": unknown key '" + key + "' in section [" +
                                        section + "]");
    }
    return cfg;
}

AppConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string dump_config(const AppConfig& cfg) {
    AppConfig copy = cfg;
    auto fields = field_registry(copy);
    std::string out;
    const char* current = "";
    char buf[64];
    for (const auto& f : fields) {
        if (std::string_view(current) != f.section) {
            if (*current)
                out += "\n";
            out += "[";
            out += f.section;
            out += "]\n";
            current = f.section;
        }
        std::snprintf(buf, sizeof buf, "%.17g", *f.value);
        out += f.key;
        out += " = ";
        out += buf;
        out += "\n";
    }
    std::snprintf(buf, sizeof buf, "%d", cfg.numerics.max_subdivisions);
    out += "max_subdivisions = ";
    out += buf;
    out += "\n";
    return out;
}

LinkCurve link_curve_from(const AppConfig& cfg) {
    return make_link_curve(cfg.k1, cfg.k2, cfg.w_mbps, cfg.eta0_mbps);
}

} // namespace hetperf
