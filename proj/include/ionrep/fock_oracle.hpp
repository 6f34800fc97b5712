#ifndef IONREP_FOCK_ORACLE_HPP
#define IONREP_FOCK_ORACLE_HPP

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ionrep/fock.hpp"
#include "ionrep/integrator.hpp"
#include "ionrep/model.hpp"

namespace ionrep {

// Brute-force reference: the optomechanical Hamiltonian H0 + H1(t) of two
// ions in the truncated Fock space, integrated in the lab frame. It shares no
// code path with the effective model beyond the operator alphabet.

inline const FockDims kOracleDims{3, 3, 2};

struct FullState {
    FockDims dims;
    Eigen::VectorXcd amplitudes;
};

// w_c a^dag a + w_M b^dag b + sum_i (nu c_i^dag c_i + w_0/2 sigma_z^(i)); diagonal.
FockOperator free_hamiltonian(const ModelParams& p, const FockDims& dims);

// -G a^dag a (b + b^dag) + i sum_i g_i (a Sigma_+^(i) - a^dag Sigma_-^(i))
//   - i E_P (a e^{i w_P t} - a^dag e^{-i w_P t})
FockOperator coupling_hamiltonian(const ModelParams& p, const FockDims& dims, double t);

// H0 + H1(t). Throws DimensionError when the space exceeds max_dim.
FockOperator full_hamiltonian(const ModelParams& p, const FockDims& dims, double t,
                              std::size_t max_dim = kDefaultMaxDim);

// Vacuum optical/mechanical modes with ions (2,3) in sum_k amp[k] |Phi^k>.
FullState vacuum_state(const FockDims& dims, const Eigen::Vector4cd& ion_amplitudes);

// Evolves any number of state columns at once; t_grid starts at 0.
std::vector<Eigen::MatrixXcd> evolve_full_columns(const ModelParams& p, const FockDims& dims,
                                                  const Eigen::MatrixXcd& psi0,
                                                  std::span<const double> t_grid);

// Single state. Requires psi0 normalized within 1e-9.
std::vector<FullState> evolve_full(const ModelParams& p, const FockDims& dims, const FullState& psi0,
                                   std::span<const double> t_grid);

// Population outside the encoded ion levels {|g,0>, |e,1>} of either ion.
double ion_subspace_leakage(const FullState& psi);

struct OracleSample {
    double t = 0.0;
    double deviation = 0.0;  // max entry |X_full - e^{i phi} X_eff|
    double leakage = 0.0;    // 1 - population of the vacuum (x) {Phi^k} block
};

struct OracleReport {
    std::vector<OracleSample> samples;
    double max_deviation = 0.0;
    double max_leakage = 0.0;
    double max_norm_drift = 0.0;
};

/*
 * Evolves each protocol family through the full model starting from the
 * cavity vacuum, moves the samples to the interaction picture of H0, projects
 * onto vacuum (x) {Phi^1..Phi^4} and compares with the effective dynamics.
 * A single global phase per sample is removed before comparing: the
 * effective generator omits the c-number -E_P^2/w_4.
 */
OracleReport compare_to_effective(const ModelParams& p, const FockDims& dims,
                                  std::span<const double> t_grid);

} // namespace ionrep

#endif // IONREP_FOCK_ORACLE_HPP
