#ifndef TVDLAB_CONFIG_HPP
#define TVDLAB_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace tvdlab {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat sectioned key-value run description. Grammar: `[section]` headers,
/// `key = value` lines, `#` comments; sections [run], [sensor], [output].
/// Negative t_final / zero n mean "use the registry default for the problem".
struct RunConfig {
    // [run]
    std::string problem;
    std::string scheme;  // optionally sc- prefixed; empty -> registry default
    std::string ccs;     // upwind1 | force | flic[-minbee|-superbee]; empty -> default
    int n = 0;
    int nx = 0, ny = 0;  // 2D; 0 falls back to n
    double cfl = 0.0;    // 0 -> registry default
    double t_final = -1.0;
    double gamma = 1.4;
    bool strict_tvd = false;

    // [sensor] — presence required by sc- schemes
    bool has_sensor = false;
    double epsilon = 1e-8;
    double delta = 0.8;
    double mr_threshold = 4.0;

    // [output]
    std::vector<std::string> channels;  // solution, tv, choices, shock_switch
    std::string out_dir;

    bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& cfg);

/// Structural checks (known problem id, sensor block present for sc-
/// schemes, admissible cfl); throws ConfigError.
void validate_config(const RunConfig& cfg);

/// 17-significant-digit decimal rendering used by every CSV writer.
std::string format_g17(double v);

}  // namespace tvdlab

#endif
