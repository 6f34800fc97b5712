#ifndef IONREP_SCENARIO_HPP
#define IONREP_SCENARIO_HPP

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ionrep/config.hpp"

namespace ionrep {

// One sample of the protocol. Concurrences are empty for zero-probability
// branches; swap columns are also empty when the config excludes that Bell
// projector.
struct ResultRow {
    double t = 0.0;
    std::optional<double> C14;
    double P14 = 0.0;
    std::optional<double> C58;
    double P58 = 0.0;
    std::optional<double> C18_psi;
    std::optional<double> P18_psi;
    std::optional<double> C18_psiprime;
    std::optional<double> P18_psiprime;
};

inline constexpr std::array<std::string_view, 9> kResultColumns = {
    "t", "C14", "P14", "C58", "P58", "C18_psi", "P18_psi", "C18_psiprime", "P18_psiprime"};

std::optional<double> column_value(const ResultRow& row, std::string_view column);

struct ColumnSummary {
    std::string column;
    std::optional<double> max;
    double argmax_t = 0.0;
};

struct Dataset {
    std::vector<ResultRow> rows;
    std::vector<ColumnSummary> summary;  // every column except t
    double max_norm_drift = 0.0;
};

struct SweepPoint {
    std::string field;  // empty without a sweep
    double value = 0.0;
    Dataset data;
};

// Dataset of one parameter point on the uniform grid t_k = k t_max / n_steps.
Dataset simulate(const ScenarioConfig& cfg);

// One dataset per sweep value (evaluated concurrently, returned in config
// order), or a single point without a sweep. Throws ConfigError.
std::vector<SweepPoint> run_scenario(const ScenarioConfig& cfg);

// CSV with the kResultColumns header, 12 significant digits, empty fields for
// missing values.
void write_csv(std::ostream& out, const Dataset& data);

// 12 significant digits, shortest form (%.12g).
std::string format_number(double v);

// `<stem>_<field>=<value>.csv`
std::string sweep_filename(std::string_view stem, std::string_view field, double value);

/*
 * Counts strict interior peaks: a point (or flat run) entered by a strict rise
 * and left by a strict fall, no lower than anything within `window` samples on
 * either side, and more than 1e-6 above the lowest of those. Columns shorter
 * than 3 give 0.
 */
int count_local_maxima(std::span<const double> column, int window = 1);

double sample_stddev(std::span<const double> column);

// Values of `column` for rows with t > t_min, skipping empty entries.
std::vector<double> column_series(const Dataset& data, std::string_view column, double t_min = 0.0);

} // namespace ionrep

#endif // IONREP_SCENARIO_HPP
