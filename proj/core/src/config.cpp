#include "tvdlab/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tvdlab/registry.hpp"
#include "tvdlab/scalar_scheme.hpp"

namespace tvdlab {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("config: bad number for '" + key + "': " + v);
    }
}

int to_int(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const int i = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return i;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer for '" + key + "': " + v);
    }
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError("config: bad boolean for '" + key + "': " + v);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": malformed section header");
            section = line.substr(1, line.size() - 2);
            if (section != "run" && section != "sensor" && section != "output")
                throw ConfigError("config: unknown section [" + section + "]");
            if (section == "sensor") cfg.has_sensor = true;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (section == "run") {
            if (key == "problem") cfg.problem = val;
            else if (key == "scheme") cfg.scheme = val;
            else if (key == "ccs") cfg.ccs = val;
            else if (key == "n") cfg.n = to_int(key, val);
            else if (key == "nx") cfg.nx = to_int(key, val);
            else if (key == "ny") cfg.ny = to_int(key, val);
            else if (key == "cfl") cfg.cfl = to_double(key, val);
            else if (key == "t_final") cfg.t_final = to_double(key, val);
            else if (key == "gamma") cfg.gamma = to_double(key, val);
            else if (key == "strict_tvd") cfg.strict_tvd = to_bool(key, val);
            else throw ConfigError("config: unknown key '" + key + "' in [run]");
        } else if (section == "sensor") {
            if (key == "epsilon") cfg.epsilon = to_double(key, val);
            else if (key == "delta") cfg.delta = to_double(key, val);
            else if (key == "mr_threshold") cfg.mr_threshold = to_double(key, val);
            else throw ConfigError("config: unknown key '" + key + "' in [sensor]");
        } else if (section == "output") {
            if (key == "channels") {
                cfg.channels.clear();
                std::istringstream cs(val);
                std::string c;
                while (std::getline(cs, c, ',')) {
                    c = trim(c);
                    if (!c.empty()) cfg.channels.push_back(c);
                }
            } else if (key == "out_dir") {
                cfg.out_dir = val;
            } else {
                throw ConfigError("config: unknown key '" + key + "' in [output]");
            }
        } else {
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": key outside any section");
        }
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "[run]\n";
    out << "problem = " << cfg.problem << "\n";
    out << "scheme = " << cfg.scheme << "\n";
    out << "ccs = " << cfg.ccs << "\n";
    out << "n = " << cfg.n << "\n";
    out << "nx = " << cfg.nx << "\n";
    out << "ny = " << cfg.ny << "\n";
    out << "cfl = " << format_g17(cfg.cfl) << "\n";
    out << "t_final = " << format_g17(cfg.t_final) << "\n";
    out << "gamma = " << format_g17(cfg.gamma) << "\n";
    out << "strict_tvd = " << (cfg.strict_tvd ? "true" : "false") << "\n";
    if (cfg.has_sensor) {
        out << "\n[sensor]\n";
        out << "epsilon = " << format_g17(cfg.epsilon) << "\n";
        out << "delta = " << format_g17(cfg.delta) << "\n";
        out << "mr_threshold = " << format_g17(cfg.mr_threshold) << "\n";
    }
    out << "\n[output]\n";
    std::string joined;
    for (const auto& c : cfg.channels) {
        if (!joined.empty()) joined += ",";
        joined += c;
    }
    out << "channels = " << joined << "\n";
    out << "out_dir = " << cfg.out_dir << "\n";
    return out.str();
}

void validate_config(const RunConfig& cfg) {
    if (cfg.problem.empty()) throw ConfigError("config: missing problem id");
    find_problem(cfg.problem);  // throws for unknown ids
    SchemeId id;
    try {
        id = parse_scheme(cfg.scheme, cfg.ccs);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (id.shock_corrected && !cfg.has_sensor)
        throw ConfigError("config: shock-corrected scheme requires a [sensor] block");
    if (cfg.cfl < 0.0 || cfg.cfl >= 1.0)
        throw ConfigError("config: cfl must lie in (0,1) (or 0 for the default)");
    if (cfg.n < 0 || cfg.nx < 0 || cfg.ny < 0)
        throw ConfigError("config: negative cell counts");
    if (cfg.gamma <= 1.0) throw ConfigError("config: gamma must exceed 1");
    for (const auto& c : cfg.channels)
        if (c != "solution" && c != "tv" && c != "choices" && c != "shock_switch")
            throw ConfigError("config: unknown output channel '" + c + "'");
}

}  // namespace tvdlab
