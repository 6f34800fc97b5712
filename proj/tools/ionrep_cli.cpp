// Command-line front end: scenario datasets, parameter sweeps, the effective
// Hamiltonian derivation, the full-model comparison and Bell-pair preparation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "ionrep/bellprep.hpp"
#include "ionrep/config.hpp"
#include "ionrep/dynamics.hpp"
#include "ionrep/effham.hpp"
#include "ionrep/errors.hpp"
#include "ionrep/fock_oracle.hpp"
#include "ionrep/scenario.hpp"

namespace {

using namespace ionrep;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct ConfigOptions {
    std::string path;
    std::map<std::string, std::string> flags;
    std::map<std::string, CLI::Option*> handles;

    void attach(CLI::App* app) {
        app->add_option("-c,--config", path, "key = value config file");
        for (std::string_view key : kConfigKeys) {
            const std::string k(key);
            handles[k] = app->add_option("--" + k, flags[k], "override config key " + k);
        }
    }

    ScenarioConfig load() const {
        KeyValues kv;
        if (!path.empty())
            kv = load_key_values(path);
        for (const auto& [key, opt] : handles)
            if (opt->count() > 0)
                kv[key] = flags.at(key);
        return build_config(kv);
    }
};

// "-" selects stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw ConfigError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::string complex_cell(cd z) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%+.6f%+.6fi", z.real(), z.imag());
    return buf;
}

void print_matrix(std::ostream& out, const Eigen::Matrix4cd& m) {
    for (int r = 0; r < 4; ++r) {
        out << "  ";
        for (int c = 0; c < 4; ++c)
            out << complex_cell(m(r, c)) << (c < 3 ? "  " : "\n");
    }
}

void print_summary(std::ostream& out, const Dataset& data) {
    out << "column,max,argmax_t\n";
    for (const auto& s : data.summary) {
        out << s.column << ',';
        if (s.max)
            out << format_number(*s.max) << ',' << format_number(s.argmax_t);
        else
            out << ',';
        out << '\n';
    }
    out << "norm_drift," << format_number(data.max_norm_drift) << ",\n";
}

int cmd_simulate(const ConfigOptions& opts, const std::string& out_path) {
    ScenarioConfig cfg = opts.load();
    cfg.sweep.reset();
    const Dataset data = simulate(cfg);
    Output out(out_path);
    write_csv(out.stream(), data);
    print_summary(std::cerr, data);
    return 0;
}

int cmd_sweep(const ConfigOptions& opts, const std::string& stem) {
    const ScenarioConfig cfg = opts.load();
    if (!cfg.sweep)
        throw ConfigError("sweep needs sweep_field and sweep_values");
    for (const auto& point : run_scenario(cfg)) {
        const std::string name = sweep_filename(stem, point.field, point.value);
        Output out(name);
        write_csv(out.stream(), point.data);
        std::cout << "# " << name << '\n';
        print_summary(std::cout, point.data);
    }
    return 0;
}

int cmd_effham(const ConfigOptions& opts, double t, const FockDims& dims) {
    const ScenarioConfig cfg = opts.load();
    const FrequencySet freqs = derived_frequencies(cfg.params);
    const auto terms = harmonic_terms(cfg.params, dims);
    std::ostream& out = std::cout;

    out << "Truncation d_a=" << dims.d_a << " d_b=" << dims.d_b << " d_c=" << dims.d_c
        << " (dimension " << dims.total() << ")\n\n";
    out << "Harmonic terms h_n e^{-i w_n t} + h.c.\n";
    for (std::size_t n = 0; n < terms.size(); ++n)
        out << "  h" << n + 1 << "  w=" << format_number(terms[n].omega) << "  nnz=" << terms[n].h.matrix.nonZeros()
            << "  " << terms[n].label << '\n';
    out << "\nCommutators (1/w_mn) [h_m^dag, h_n] e^{i(w_m - w_n)t}\n";
    out << "  m n  1/w_mn        w_m-w_n       max|entry|\n";
    for (const auto& e : commutator_inventory(terms, freqs)) {
        char line[128];
        std::snprintf(line, sizeof line, "  %d %d  %-12.6g  %-12.6g  %-12.6g%s\n", e.m, e.n, e.inverse_mean, e.beat,
                      e.norm, e.dropped ? "  (c-number, dropped)" : "");
        out << line;
    }
    const Eigen::Matrix4cd block = vacuum_block(effective_hamiltonian(terms, freqs, t));
    const Eigen::Matrix4cd s = s_matrix(cfg.params, freqs, t);
    out << "\nVacuum block at t=" << format_number(t) << " (basis GE, EG, EE, GG)\n";
    print_matrix(out, block);
    out << "\nS(t)\n";
    print_matrix(out, s);
    out << "\nmax |block - S| = " << format_number((block - s).cwiseAbs().maxCoeff()) << '\n';
    return 0;
}

int cmd_oracle(const ConfigOptions& opts, const FockDims& dims, double horizon, int samples,
               const std::string& out_path) {
    const ScenarioConfig cfg = opts.load();
    if (!(horizon > 0.0) || samples < 1)
        throw ConfigError("oracle-compare needs a positive horizon and sample count");
    const auto grid = uniform_grid(horizon, samples);
    const OracleReport report = compare_to_effective(cfg.params, dims, grid);
    Output out(out_path);
    out.stream() << "t,deviation,leakage\n";
    for (const auto& s : report.samples)
        out.stream() << format_number(s.t) << ',' << format_number(s.deviation) << ',' << format_number(s.leakage)
                     << '\n';
    std::cerr << "max_deviation," << format_number(report.max_deviation) << "\nmax_leakage,"
              << format_number(report.max_leakage) << "\nnorm_drift," << format_number(report.max_norm_drift)
              << '\n';
    return 0;
}

int cmd_prep(const PrepParams& p, double t_max, int n_steps, const std::string& out_path) {
    validate(p);
    if (t_max <= 0.0)
        t_max = 2.0 * prep_time(p);
    if (n_steps < 2)
        throw ConfigError("n_steps must be at least 2");
    Output out(out_path);
    out.stream() << "t,C\n";
    for (double t : uniform_grid(t_max, n_steps))
        out.stream() << format_number(t) << ',' << format_number(concurrence(pair_evolution(p, t))) << '\n';
    std::cerr << "prep_time," << format_number(prep_time(p)) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trapped-ion quantum repeater in optomechanical cavities"};
    app.require_subcommand(1);

    ConfigOptions sim_opts, sweep_opts, eff_opts, oracle_opts;
    std::string sim_out = "-";
    std::string sweep_stem = "sweep";
    double eff_t = 0.0;
    FockDims eff_dims;
    FockDims oracle_dims = kOracleDims;
    double oracle_horizon = 5.0;
    int oracle_samples = 50;
    std::string oracle_out = "-";
    PrepParams prep;
    double prep_t_max = 0.0;
    int prep_steps = 200;
    std::string prep_out = "-";

    auto* sim = app.add_subcommand("simulate", "run one scenario and write its dataset");
    sim_opts.attach(sim);
    sim->add_option("-o,--out", sim_out, "output CSV ('-' for stdout)");

    auto* sweep = app.add_subcommand("sweep", "run every sweep value, one CSV per value");
    sweep_opts.attach(sweep);
    sweep->add_option("-o,--out", sweep_stem, "output file stem");

    auto* eff = app.add_subcommand("effham", "print the effective Hamiltonian derivation and S(t)");
    eff_opts.attach(eff);
    eff->add_option("--t", eff_t, "time g*t");
    eff->add_option("--d_a", eff_dims.d_a, "optical truncation");
    eff->add_option("--d_b", eff_dims.d_b, "mechanical truncation");
    eff->add_option("--d_c", eff_dims.d_c, "ion motion truncation");

    auto* oracle = app.add_subcommand("oracle-compare", "compare the effective model with the full Hamiltonian");
    oracle_opts.attach(oracle);
    oracle->add_option("--d_a", oracle_dims.d_a, "optical truncation");
    oracle->add_option("--d_b", oracle_dims.d_b, "mechanical truncation");
    oracle->add_option("--d_c", oracle_dims.d_c, "ion motion truncation");
    oracle->add_option("--horizon", oracle_horizon, "final g*t");
    oracle->add_option("--samples", oracle_samples, "number of intervals");
    oracle->add_option("-o,--out", oracle_out, "output CSV ('-' for stdout)");

    auto* prep_cmd = app.add_subcommand("prep-bell", "Bell-pair preparation trajectory (t, C)");
    prep_cmd->add_option("--g", prep.g, "ion-field coupling");
    prep_cmd->add_option("--delta", prep.delta, "detuning w_c - nu - w_0");
    prep_cmd->add_option("--t_max", prep_t_max, "final time (default: twice the preparation time)");
    prep_cmd->add_option("--n_steps", prep_steps, "number of intervals");
    prep_cmd->add_option("-o,--out", prep_out, "output CSV ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*sim)
            return cmd_simulate(sim_opts, sim_out);
        if (*sweep)
            return cmd_sweep(sweep_opts, sweep_stem);
        if (*eff)
            return cmd_effham(eff_opts, eff_t, eff_dims);
        if (*oracle)
            return cmd_oracle(oracle_opts, oracle_dims, oracle_horizon, oracle_samples, oracle_out);
        if (*prep_cmd)
            return cmd_prep(prep, prep_t_max, prep_steps, prep_out);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DimensionError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}
