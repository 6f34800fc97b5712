#include "ionrep/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <numeric>

#include "ionrep/dynamics.hpp"
#include "ionrep/errors.hpp"
#include "ionrep/measurement.hpp"

namespace ionrep {
namespace {

constexpr double kPeakFloor = 1e-6;

ResultRow make_row(double t, const ProtocolResult& r, BellSelection bell) {
    ResultRow row;
    row.t = t;
    row.C14 = r.pair14.conc;
    row.P14 = r.pair14.prob;
    row.C58 = r.pair58.conc;
    row.P58 = r.pair58.prob;
    if (bell != BellSelection::PsiEGGE) {
        row.C18_psi = r.swap_psi.conc;
        row.P18_psi = r.swap_psi.prob;
    }
    if (bell != BellSelection::PsiEEGG) {
        row.C18_psiprime = r.swap_psiprime.conc;
        row.P18_psiprime = r.swap_psiprime.prob;
    }
    return row;
}

std::vector<ColumnSummary> summarize(const std::vector<ResultRow>& rows) {
    std::vector<ColumnSummary> out;
    for (std::size_t c = 1; c < kResultColumns.size(); ++c) {
        ColumnSummary s;
        s.column = std::string(kResultColumns[c]);
        for (const auto& row : rows) {
            const auto v = column_value(row, s.column);
            if (v && (!s.max || *v > *s.max)) {
                s.max = *v;
                s.argmax_t = row.t;
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

std::optional<double> column_value(const ResultRow& row, std::string_view column) {
    if (column == "t") return row.t;
    if (column == "C14") return row.C14;
    if (column == "P14") return row.P14;
    if (column == "C58") return row.C58;
    if (column == "P58") return row.P58;
    if (column == "C18_psi") return row.C18_psi;
    if (column == "P18_psi") return row.P18_psi;
    if (column == "C18_psiprime") return row.C18_psiprime;
    if (column == "P18_psiprime") return row.P18_psiprime;
    throw Error("unknown result column '" + std::string(column) + "'");
}

Dataset simulate(const ScenarioConfig& cfg) {
    validate(cfg);
    const std::vector<double> grid = uniform_grid(cfg.t_max, cfg.n_steps);
    const Trajectory traj = evolve_auto(cfg.params, initial_protocol_families(), grid);

    Dataset data;
    data.rows.reserve(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const ProtocolResult r = measure_protocol(traj.families[k], cfg.outcome_i, cfg.outcome_j);
        data.rows.push_back(make_row(grid[k], r, cfg.bell));
    }
    data.summary = summarize(data.rows);
    data.max_norm_drift = traj.max_norm_drift();
    return data;
}

std::vector<SweepPoint> run_scenario(const ScenarioConfig& cfg) {
    validate(cfg);
    if (!cfg.sweep)
        return {SweepPoint{"", 0.0, simulate(cfg)}};

    std::vector<std::future<Dataset>> jobs;
    for (double v : cfg.sweep->values) {
        ScenarioConfig point = cfg;
        point.sweep.reset();
        set_param(point.params, cfg.sweep->field, v);
        jobs.push_back(std::async(std::launch::async, [point] { return simulate(point); }));
    }
    std::vector<SweepPoint> out;
    for (std::size_t k = 0; k < jobs.size(); ++k)
        out.push_back({cfg.sweep->field, cfg.sweep->values[k], jobs[k].get()});
    return out;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_csv(std::ostream& out, const Dataset& data) {
    for (std::size_t c = 0; c < kResultColumns.size(); ++c)
        out << (c ? "," : "") << kResultColumns[c];
    out << '\n';
    for (const auto& row : data.rows) {
        for (std::size_t c = 0; c < kResultColumns.size(); ++c) {
            if (c)
                out << ',';
            if (const auto v = column_value(row, kResultColumns[c]))
                out << format_number(*v);
        }
        out << '\n';
    }
}

std::string sweep_filename(std::string_view stem, std::string_view field, double value) {
    return std::string(stem) + "_" + std::string(field) + "=" + format_number(value) + ".csv";
}

int count_local_maxima(std::span<const double> column, int window) {
    const int n = static_cast<int>(column.size());
    if (n < 3)
        return 0;
    window = std::max(window, 1);
    int count = 0;
    for (int k = 1; k + 1 < n; ++k) {
        if (!(column[k] > column[k - 1]))
            continue;
        // A plateau [k, r] is one candidate peak.
        int r = k;
        while (r + 1 < n && column[r + 1] == column[k])
            ++r;
        if (r + 1 >= n || !(column[r + 1] < column[k]))
            continue;
        const int lo = std::max(0, k - window);
        const int hi = std::min(n - 1, r + window);
        bool is_max = true;
        double low = column[k];
        for (int j = lo; j <= hi && is_max; ++j) {
            is_max = column[j] <= column[k];
            low = std::min(low, column[j]);
        }
        if (is_max && column[k] - low > kPeakFloor)
            ++count;
        k = r;
    }
    return count;
}

double sample_stddev(std::span<const double> column) {
    if (column.size() < 2)
        return 0.0;
    const double mean = std::accumulate(column.begin(), column.end(), 0.0) / column.size();
    double ss = 0.0;
    for (double v : column)
        ss += (v - mean) * (v - mean);
    return std::sqrt(ss / (column.size() - 1));
}

std::vector<double> column_series(const Dataset& data, std::string_view column, double t_min) {
    std::vector<double> out;
    for (const auto& row : data.rows) {
        if (!(row.t > t_min))
            continue;
        if (const auto v = column_value(row, column))
            out.push_back(*v);
    }
    return out;
}

} // namespace ionrep
