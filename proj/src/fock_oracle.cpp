#include "ionrep/fock_oracle.hpp"

#include <cmath>

#include "ionrep/dynamics.hpp"
#include "ionrep/errors.hpp"
#include "ionrep/ion_register.hpp"

namespace ionrep {
namespace {

constexpr cd kI{0.0, 1.0};

double inf_norm(const SparseOp& m) {
    Eigen::VectorXd rows = Eigen::VectorXd::Zero(m.rows());
    for (int k = 0; k < m.outerSize(); ++k)
        for (SparseOp::InnerIterator it(m, k); it; ++it)
            rows[it.row()] += std::abs(it.value());
    return rows.size() ? rows.maxCoeff() : 0.0;
}

// Time-independent part of H0 + H1 and the two pump pieces multiplying
// e^{+i w_P t} and e^{-i w_P t}.
struct SplitHamiltonian {
    SparseOp stationary;
    SparseOp pump_plus;
    SparseOp pump_minus;
};

SplitHamiltonian split_hamiltonian(const ModelParams& p, const FockDims& dims) {
    ModelParams undriven = p;
    undriven.E_P = 0.0;
    const ModeOperators ops(dims);

    SplitHamiltonian out;
    out.stationary = free_hamiltonian(p, dims).matrix + coupling_hamiltonian(undriven, dims, 0.0).matrix;
    out.stationary.makeCompressed();
    out.pump_plus = (-kI * p.E_P) * ops.a;
    out.pump_minus = (kI * p.E_P) * SparseOp(ops.a.adjoint());
    return out;
}

} // namespace

FockOperator free_hamiltonian(const ModelParams& p, const FockDims& dims) {
    const ModeOperators ops(dims);
    SparseOp h0 = p.omega_c * SparseOp(ops.a.adjoint() * ops.a) + p.omega_M * SparseOp(ops.b.adjoint() * ops.b);
    h0 += p.nu * SparseOp(ops.c2.adjoint() * ops.c2 + ops.c3.adjoint() * ops.c3);
    h0 += (0.5 * p.omega_0) * SparseOp(ops.sz2 + ops.sz3);
    return {dims, h0};
}

FockOperator coupling_hamiltonian(const ModelParams& p, const FockDims& dims, double t) {
    const ModeOperators ops(dims);
    const SparseOp ad = ops.a.adjoint();
    SparseOp h1 = -p.G * SparseOp(SparseOp(ad * ops.a) * SparseOp(ops.b + SparseOp(ops.b.adjoint())));
    h1 += (kI * p.g2) * SparseOp(ops.a * ops.raise2 - ad * ops.lower2);
    h1 += (kI * p.g3) * SparseOp(ops.a * ops.raise3 - ad * ops.lower3);
    const cd up = std::exp(kI * (p.omega_P * t));
    h1 += (-kI * p.E_P) * SparseOp(up * ops.a - std::conj(up) * ad);
    return {dims, h1};
}

FockOperator full_hamiltonian(const ModelParams& p, const FockDims& dims, double t, std::size_t max_dim) {
    validate(dims, max_dim);
    FockOperator h = free_hamiltonian(p, dims);
    h.matrix += coupling_hamiltonian(p, dims, t).matrix;
    return h;
}

FullState vacuum_state(const FockDims& dims, const Eigen::Vector4cd& ion_amplitudes) {
    validate(dims);
    FullState s{dims, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dims.total()))};
    const auto idx = vacuum_phi_indices(dims);
    for (int k = 0; k < 4; ++k)
        s.amplitudes[static_cast<Eigen::Index>(idx[k])] = ion_amplitudes[k];
    return s;
}

std::vector<Eigen::MatrixXcd> evolve_full_columns(const ModelParams& p, const FockDims& dims,
                                                  const Eigen::MatrixXcd& psi0,
                                                  std::span<const double> t_grid) {
    validate(dims);
    if (t_grid.empty() || t_grid.front() != 0.0)
        throw Error("time grid must start at 0");
    if (psi0.rows() != static_cast<Eigen::Index>(dims.total()))
        throw DimensionError("state length does not match the truncated space");

    const SplitHamiltonian h = split_hamiltonian(p, dims);
    const double bound = inf_norm(h.stationary) + inf_norm(h.pump_plus) + inf_norm(h.pump_minus);
    StepControl ctl;
    ctl.h_max = bound > 0.0 ? 1.0 / bound : 1.0;
    ctl.tolerance = 1e-10;
    ctl.h_min = 1e-12 * ctl.h_max;

    auto rhs = [&](double t, const Eigen::MatrixXcd& x) -> Eigen::MatrixXcd {
        const cd up = std::exp(kI * (p.omega_P * t));
        Eigen::MatrixXcd out = h.stationary * x;
        out += up * (h.pump_plus * x);
        out += std::conj(up) * (h.pump_minus * x);
        return -kI * out;
    };

    std::vector<Eigen::MatrixXcd> out;
    out.reserve(t_grid.size());
    out.push_back(psi0);
    Eigen::MatrixXcd x = psi0;
    double step = ctl.h_max;
    for (std::size_t k = 1; k < t_grid.size(); ++k) {
        if (!(t_grid[k] > t_grid[k - 1]))
            throw Error("time grid must be strictly increasing");
        x = integrate_adaptive(rhs, x, t_grid[k - 1], t_grid[k], ctl, step);
        out.push_back(x);
    }
    return out;
}

std::vector<FullState> evolve_full(const ModelParams& p, const FockDims& dims, const FullState& psi0,
                                   std::span<const double> t_grid) {
    if (std::abs(psi0.amplitudes.squaredNorm() - 1.0) > 1e-9)
        throw Error("initial full state must be normalized");
    const auto cols = evolve_full_columns(p, dims, psi0.amplitudes, t_grid);
    std::vector<FullState> out;
    out.reserve(cols.size());
    for (const auto& c : cols)
        out.push_back({dims, c.col(0)});
    return out;
}

double ion_subspace_leakage(const FullState& psi) {
    const FockDims& dims = psi.dims;
    const int ion = dims.ion_dim();
    const int g = ion_index(dims, IonLevel::G);
    const int e = ion_index(dims, IonLevel::E);
    double leaked = 0.0;
    for (Eigen::Index k = 0; k < psi.amplitudes.size(); ++k) {
        const int i3 = static_cast<int>(k % ion);
        const int i2 = static_cast<int>((k / ion) % ion);
        const bool encoded = (i2 == g || i2 == e) && (i3 == g || i3 == e);
        if (!encoded)
            leaked += std::norm(psi.amplitudes[k]);
    }
    return leaked;
}

OracleReport compare_to_effective(const ModelParams& p, const FockDims& dims,
                                  std::span<const double> t_grid) {
    const AmplitudeFamilies x0 = initial_protocol_families();
    const auto idx = vacuum_phi_indices(dims);

    Eigen::MatrixXcd psi0 = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dims.total()), 4);
    for (int f = 0; f < 4; ++f)
        for (int k = 0; k < 4; ++k)
            psi0(static_cast<Eigen::Index>(idx[k]), f) = x0.m(k, f);

    const auto full = evolve_full_columns(p, dims, psi0, t_grid);
    const Trajectory eff = evolve_auto(p, x0, t_grid);
    const Eigen::VectorXd energies = free_hamiltonian(p, dims).matrix.diagonal().real();

    OracleReport report;
    const double n0 = psi0.squaredNorm();
    for (std::size_t s = 0; s < t_grid.size(); ++s) {
        const double t = t_grid[s];
        Eigen::Matrix4cd block;
        for (int k = 0; k < 4; ++k) {
            const auto row = static_cast<Eigen::Index>(idx[k]);
            block.row(k) = std::exp(kI * (energies[row] * t)) * full[s].row(row);
        }
        const Eigen::Matrix4cd& x_eff = eff.families[s].m;
        const cd overlap = (x_eff.adjoint() * block).trace();
        const cd align = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cd{1.0};

        OracleSample sample;
        sample.t = t;
        sample.deviation = (block - align * x_eff).cwiseAbs().maxCoeff();
        sample.leakage = std::max(0.0, n0 - block.squaredNorm());
        report.samples.push_back(sample);
        report.max_deviation = std::max(report.max_deviation, sample.deviation);
        report.max_leakage = std::max(report.max_leakage, sample.leakage);
        report.max_norm_drift = std::max(report.max_norm_drift, std::abs(full[s].squaredNorm() - n0));
    }
    return report;
}

} // namespace ionrep
