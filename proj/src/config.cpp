#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "vpmcf/harness.hpp"

namespace vpmcf::harness {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace((unsigned char)s[b])) ++b;
    while (e > b && std::isspace((unsigned char)s[e - 1])) --e;
    return s.substr(b, e - b);
}

double parse_real(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing junk");
        return x;
    } catch (...) {
        throw ConfigError(line, "expected a real number, got '" + v + "'");
    }
}

int parse_int(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing junk");
        return x;
    } catch (...) {
        throw ConfigError(line, "expected an integer, got '" + v + "'");
    }
}

bool parse_bool(const std::string& v, int line) {
    if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "off" || v == "no") return false;
    throw ConfigError(line, "expected a boolean, got '" + v + "'");
}

// stop thresholds accept "auto" (negative sentinel: derived from the
// initial data at run start)
double parse_auto_real(const std::string& v, int line) {
    if (v == "auto") return -1.0;
    const double x = parse_real(v, line);
    if (!(x > 0.0)) throw ConfigError(line, "threshold must be positive or 'auto'");
    return x;
}

}  // namespace

SimConfig parse_config_text(const std::string& text) {
    SimConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        const std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line, "expected 'key = value', got '" + s + "'");
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (key.empty()) throw ConfigError(line, "empty key");
        if (val.empty()) throw ConfigError(line, "empty value for '" + key + "'");

        if (key == "grid.a") cfg.grid.a = parse_real(val, line);
        else if (key == "grid.b") cfg.grid.b = parse_real(val, line);
        else if (key == "grid.N") cfg.grid.N = parse_int(val, line);
        else if (key == "grid.n") cfg.grid.dim = parse_int(val, line);
        else if (key == "initial") {
            if (val == "cylinder") cfg.initial = InitialKind::Cylinder;
            else if (val == "perturbed") cfg.initial = InitialKind::Perturbed;
            else if (val == "dumbbell") cfg.initial = InitialKind::Dumbbell;
            else if (val == "from_file") cfg.initial = InitialKind::FromFile;
            else throw ConfigError(line, "unknown initial '" + val + "'");
        } else if (key == "initial.r") cfg.init_r = parse_real(val, line);
        else if (key == "initial.amp") cfg.init_amp = parse_real(val, line);
        else if (key == "initial.modes") cfg.init_modes = parse_int(val, line);
        else if (key == "initial.path") cfg.init_path = val;
        else if (key == "flow.mode") {
            if (val == "volume_preserving") cfg.flow.mode = flow::Mode::VolumePreserving;
            else if (val == "plain_mcf") cfg.flow.mode = flow::Mode::PlainMcf;
            else throw ConfigError(line, "unknown flow.mode '" + val + "'");
        } else if (key == "flow.t_end") cfg.flow.t_end = parse_real(val, line);
        else if (key == "flow.dt_safety") cfg.flow.dt_safety = parse_real(val, line);
        else if (key == "flow.output_every") cfg.flow.output_every = parse_int(val, line);
        else if (key == "flow.volume_projection") cfg.flow.volume_projection = parse_bool(val, line);
        else if (key == "flow.stop_rho_min") cfg.flow.stop_rho_min = parse_auto_real(val, line);
        else if (key == "flow.stop_A2_max") cfg.flow.stop_A2_max = parse_auto_real(val, line);
        else if (key == "flow.vol_tol") cfg.flow.vol_tol = parse_real(val, line);
        else if (key == "monitors") {
            cfg.monitors.clear();
            cfg.monitors_none = false;
            if (val == "all") {
                // empty list = all
            } else if (val == "none") {
                cfg.monitors_none = true;
            } else {
                std::stringstream ss(val);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    const std::string m = trim(item);
                    if (!m.empty()) cfg.monitors.push_back(m);
                }
                if (cfg.monitors.empty()) throw ConfigError(line, "empty monitor list");
            }
        } else if (key == "census_tol") cfg.census_tol = parse_real(val, line);
        else if (key == "c00") cfg.c00 = parse_real(val, line);
        else if (key == "rescale.window") cfg.rescale_half_width = parse_real(val, line);
        else if (key == "svg") cfg.svg = parse_bool(val, line);
        else if (key == "snapshot_stride") cfg.snapshot_stride = parse_int(val, line);
        else if (key == "out_dir") cfg.out_dir = val;
        else throw ConfigError(line, "unknown key '" + key + "'");
    }

    try {
        cfg.grid.validate();
        cfg.flow.validate();
    } catch (const std::exception& e) {
        throw ConfigError(0, e.what());
    }
    if (cfg.snapshot_stride < 1) throw ConfigError(0, "snapshot_stride must be >= 1");
    if (!(cfg.census_tol >= 0.0)) throw ConfigError(0, "census_tol must be >= 0");
    if (!(cfg.c00 > 2.0)) throw ConfigError(0, "c00 must be > 2");
    return cfg;
}

SimConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

}  // namespace vpmcf::harness
