#ifndef IONREP_CONFIG_HPP
#define IONREP_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ionrep/model.hpp"

namespace ionrep {

enum class BellSelection { Both, PsiEEGG, PsiEGGE };

struct Sweep {
    std::string field;
    std::vector<double> values;
};

// One simulation scenario. Frequencies are multiples of g2; times are g*t.
struct ScenarioConfig {
    ModelParams params;
    double t_max = 50.0;
    int n_steps = 2000;
    int outcome_i = 1;
    int outcome_j = 1;
    BellSelection bell = BellSelection::Both;
    std::optional<Sweep> sweep;
};

// Keys accepted in config files and as --key flags.
inline constexpr std::string_view kConfigKeys[] = {
    "g2", "g3", "E_P", "G", "omega_c", "omega_M", "nu", "omega_0", "omega_P",
    "t_max", "n_steps", "outcome_i", "outcome_j", "bell", "sweep_field", "sweep_values"};

inline constexpr std::string_view kParamFields[] = {
    "g2", "g3", "E_P", "G", "omega_c", "omega_M", "nu", "omega_0", "omega_P"};

// key -> raw value; later layers override earlier ones.
using KeyValues = std::map<std::string, std::string>;

// Flat `key = value` text with `#` comments. Throws ConfigError naming the
// line for malformed lines, unknown or repeated keys.
KeyValues parse_key_values(std::string_view text);
KeyValues load_key_values(const std::string& path);

// Builds and validates a scenario; missing keys keep their defaults (the
// equal-detuning regime w_M = 0.4, E_P = 0.5). Throws ConfigError.
ScenarioConfig build_config(const KeyValues& kv);

void validate(const ScenarioConfig& cfg);

// Throws ConfigError for a name outside kParamFields.
void set_param(ModelParams& p, std::string_view field, double value);
double get_param(const ModelParams& p, std::string_view field);

} // namespace ionrep

#endif // IONREP_CONFIG_HPP
