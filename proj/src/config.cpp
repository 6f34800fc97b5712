#include "ionrep/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ionrep/errors.hpp"

namespace ionrep {
namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

bool known_key(std::string_view key) {
    return std::find(std::begin(kConfigKeys), std::end(kConfigKeys), key) != std::end(kConfigKeys);
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end)
        throw ConfigError(key + ": expected a number, got '" + value + "'");
    return out;
}

int parse_int(const std::string& key, const std::string& value) {
    int out = 0;
    const char* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end)
        throw ConfigError(key + ": expected an integer, got '" + value + "'");
    return out;
}

double* param_slot(ModelParams& p, std::string_view field) {
    if (field == "g2") return &p.g2;
    if (field == "g3") return &p.g3;
    if (field == "E_P") return &p.E_P;
    if (field == "G") return &p.G;
    if (field == "omega_c") return &p.omega_c;
    if (field == "omega_M") return &p.omega_M;
    if (field == "nu") return &p.nu;
    if (field == "omega_0") return &p.omega_0;
    if (field == "omega_P") return &p.omega_P;
    return nullptr;
}

void check_frequencies(const ModelParams& p, const std::string& where) {
    const double w1 = p.omega_M;
    const double w2 = p.omega_c - p.nu - p.omega_0;
    const double w4 = p.omega_c - p.omega_P;
    if (!(w1 > 0.0))
        throw ConfigError(where + "omega_M must be positive");
    if (!(w2 > 0.0))
        throw ConfigError(where + "omega_c - nu - omega_0 must be positive");
    if (!(w4 > 0.0))
        throw ConfigError(where + "omega_c - omega_P must be positive");
}

} // namespace

KeyValues parse_key_values(std::string_view text) {
    KeyValues kv;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        const std::string body = trim(std::string_view(line).substr(0, hash));
        if (body.empty())
            continue;
        const auto eq = body.find('=');
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (eq == std::string::npos)
            throw ConfigError(where + "expected 'key = value'");
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (!known_key(key))
            throw ConfigError(where + "unknown key '" + key + "'");
        if (value.empty())
            throw ConfigError(where + "missing value for '" + key + "'");
        if (!kv.emplace(key, value).second)
            throw ConfigError(where + "repeated key '" + key + "'");
    }
    return kv;
}

KeyValues load_key_values(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_key_values(buf.str());
}

void set_param(ModelParams& p, std::string_view field, double value) {
    double* slot = param_slot(p, field);
    if (!slot)
        throw ConfigError("unknown model parameter '" + std::string(field) + "'");
    *slot = value;
}

double get_param(const ModelParams& p, std::string_view field) {
    ModelParams copy = p;
    double* slot = param_slot(copy, field);
    if (!slot)
        throw ConfigError("unknown model parameter '" + std::string(field) + "'");
    return *slot;
}

ScenarioConfig build_config(const KeyValues& kv) {
    ScenarioConfig cfg;
    for (const auto& [key, value] : kv) {
        if (!known_key(key))
            throw ConfigError("unknown key '" + key + "'");
        if (param_slot(cfg.params, key)) {
            set_param(cfg.params, key, parse_double(key, value));
        } else if (key == "t_max") {
            cfg.t_max = parse_double(key, value);
        } else if (key == "n_steps") {
            cfg.n_steps = parse_int(key, value);
        } else if (key == "outcome_i") {
            cfg.outcome_i = parse_int(key, value);
        } else if (key == "outcome_j") {
            cfg.outcome_j = parse_int(key, value);
        } else if (key == "bell") {
            if (value == "both")
                cfg.bell = BellSelection::Both;
            else if (value == "PSI_EEGG")
                cfg.bell = BellSelection::PsiEEGG;
            else if (value == "PSI_EGGE")
                cfg.bell = BellSelection::PsiEGGE;
            else
                throw ConfigError("bell: expected both, PSI_EEGG or PSI_EGGE, got '" + value + "'");
        }
    }

    const bool has_field = kv.count("sweep_field") > 0;
    const bool has_values = kv.count("sweep_values") > 0;
    if (has_field != has_values)
        throw ConfigError("sweep_field and sweep_values must be given together");
    if (has_field) {
        Sweep sweep;
        sweep.field = kv.at("sweep_field");
        std::stringstream list(kv.at("sweep_values"));
        std::string item;
        while (std::getline(list, item, ','))
            sweep.values.push_back(parse_double("sweep_values", trim(item)));
        cfg.sweep = std::move(sweep);
    }
    validate(cfg);
    return cfg;
}

void validate(const ScenarioConfig& cfg) {
    if (!(cfg.t_max > 0.0))
        throw ConfigError("t_max must be positive");
    if (cfg.n_steps < 2)
        throw ConfigError("n_steps must be at least 2");
    if (cfg.outcome_i < 1 || cfg.outcome_i > 4)
        throw ConfigError("outcome_i must be in 1..4");
    if (cfg.outcome_j < 1 || cfg.outcome_j > 4)
        throw ConfigError("outcome_j must be in 1..4");
    check_frequencies(cfg.params, "");
    if (cfg.sweep) {
        ModelParams probe = cfg.params;
        if (!param_slot(probe, cfg.sweep->field))
            throw ConfigError("sweep_field: unknown model parameter '" + cfg.sweep->field + "'");
        if (cfg.sweep->values.empty())
            throw ConfigError("sweep_values: empty list");
        for (double v : cfg.sweep->values) {
            set_param(probe, cfg.sweep->field, v);
            check_frequencies(probe, "sweep_values: at " + cfg.sweep->field + " = " + std::to_string(v) + ", ");
        }
    }
}

} // namespace ionrep
