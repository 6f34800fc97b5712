#include "ionrep/dynamics.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "ionrep/errors.hpp"

namespace ionrep {
namespace {

constexpr cd kI{0.0, 1.0};

cd phase(double w, double t) { return std::exp(kI * (w * t)); }

void check_grid(std::span<const double> t_grid) {
    if (t_grid.empty())
        throw Error("time grid is empty");
    if (t_grid.front() != 0.0)
        throw Error("time grid must start at 0");
    for (std::size_t k = 1; k < t_grid.size(); ++k)
        if (!(t_grid[k] > t_grid[k - 1]))
            throw Error("time grid must be strictly increasing");
}

void check_initial(const AmplitudeFamilies& x0) {
    if (std::abs(x0.total_norm_sq() - 1.0) > 1e-9)
        throw Error("initial amplitude families must have unit total norm");
}

} // namespace

double Trajectory::max_norm_drift() const {
    double drift = 0.0;
    if (families.empty())
        return drift;
    const double n0 = families.front().total_norm_sq();
    for (const auto& f : families)
        drift = std::max(drift, std::abs(f.total_norm_sq() - n0));
    return drift;
}

Eigen::Matrix4cd s_matrix(const ModelParams& p, double t) {
    return s_matrix(p, derived_frequencies(p), t);
}

Eigen::Matrix4cd s_matrix(const ModelParams& p, const FrequencySet& f, double t) {
    const auto& w = f.omega;
    const auto& wij = f.omega_ij;
    const double self2 = p.g2 * p.g2 / wij[1][1];
    const double self3 = p.g3 * p.g3 / wij[2][2];
    const double exchange = p.g2 * p.g3 / wij[1][2];
    const double pump2 = p.g2 * p.E_P / wij[1][3];
    const double pump3 = p.g3 * p.E_P / wij[2][3];

    Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
    s(0, 0) = -self3;
    s(1, 1) = -self2;
    s(2, 2) = -(self2 + self3);
    s(0, 1) = -exchange * phase(w[1] - w[2], t);
    s(0, 2) = pump2 * phase(-(w[3] - w[1]), t);
    s(0, 3) = pump3 * phase(w[3] - w[2], t);
    s(1, 2) = pump3 * phase(-(w[3] - w[2]), t);
    s(1, 3) = pump2 * phase(w[3] - w[1], t);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < r; ++c)
            s(r, c) = std::conj(s(c, r));
    return s;
}

double generator_bound(const ModelParams& p) {
    return s_matrix(p, 0.0).cwiseAbs().rowwise().sum().maxCoeff();
}

StepControl default_step_control(const ModelParams& p) {
    StepControl ctl;
    const double bound = generator_bound(p);
    ctl.h_max = bound > 0.0 ? 1.0 / (50.0 * bound) : 1.0;
    ctl.tolerance = 1e-10;
    ctl.h_min = 1e-12 * ctl.h_max;
    return ctl;
}

Trajectory evolve(const ModelParams& p, const AmplitudeFamilies& x0, std::span<const double> t_grid) {
    return evolve(p, x0, t_grid, default_step_control(p));
}

Trajectory evolve(const ModelParams& p, const AmplitudeFamilies& x0, std::span<const double> t_grid,
                  const StepControl& ctl) {
    check_grid(t_grid);
    check_initial(x0);
    const FrequencySet freqs = derived_frequencies(p);
    auto rhs = [&](double t, const Eigen::Matrix4cd& x) -> Eigen::Matrix4cd {
        return -kI * (s_matrix(p, freqs, t) * x);
    };

    Trajectory out;
    out.t_grid.assign(t_grid.begin(), t_grid.end());
    out.families.reserve(t_grid.size());
    out.families.push_back(x0);
    Eigen::Matrix4cd x = x0.m;
    double h = ctl.h_max;
    for (std::size_t k = 1; k < t_grid.size(); ++k) {
        x = integrate_adaptive(rhs, x, t_grid[k - 1], t_grid[k], ctl, h);
        out.families.push_back(AmplitudeFamilies{x});
    }
    return out;
}

Eigen::Matrix4cd propagator_const(const ModelParams& p, double t) {
    const FrequencySet freqs = derived_frequencies(p);
    if (!freqs.all_equal())
        throw NotTimeIndependentError("propagator_const requires equal detunings");
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(s_matrix(p, freqs, 0.0));
    const Eigen::Vector4cd phases = (-kI * t * eig.eigenvalues().cast<cd>()).array().exp();
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

Trajectory evolve_const(const ModelParams& p, const AmplitudeFamilies& x0,
                        std::span<const double> t_grid) {
    check_grid(t_grid);
    check_initial(x0);
    const FrequencySet freqs = derived_frequencies(p);
    if (!freqs.all_equal())
        throw NotTimeIndependentError("evolve_const requires equal detunings");
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(s_matrix(p, freqs, 0.0));
    // Work in the eigenbasis so each sample is a diagonal phase.
    const Eigen::Matrix4cd y0 = eig.eigenvectors().adjoint() * x0.m;

    Trajectory out;
    out.t_grid.assign(t_grid.begin(), t_grid.end());
    out.families.reserve(t_grid.size());
    for (double t : t_grid) {
        const Eigen::Vector4cd phases = (-kI * t * eig.eigenvalues().cast<cd>()).array().exp();
        out.families.push_back(AmplitudeFamilies{eig.eigenvectors() * (phases.asDiagonal() * y0)});
    }
    return out;
}

Trajectory evolve_auto(const ModelParams& p, const AmplitudeFamilies& x0,
                       std::span<const double> t_grid) {
    if (derived_frequencies(p).all_equal())
        return evolve_const(p, x0, t_grid);
    return evolve(p, x0, t_grid);
}

std::vector<double> uniform_grid(double t_max, int n_steps) {
    std::vector<double> grid(static_cast<std::size_t>(n_steps) + 1);
    for (int k = 0; k <= n_steps; ++k)
        grid[k] = t_max * k / n_steps;
    return grid;
}

} // namespace ionrep
