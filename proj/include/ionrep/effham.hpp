#ifndef IONREP_EFFHAM_HPP
#define IONREP_EFFHAM_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ionrep/fock.hpp"
#include "ionrep/model.hpp"

namespace ionrep {

enum class TermKind { Optomechanical, IonField, Pump };

// One harmonic of the interaction-picture Hamiltonian: h e^{-i omega t} + h.c.
struct HarmonicTerm {
    FockOperator h;
    double omega = 0.0;
    TermKind kind = TermKind::IonField;
    std::string label;
};

/*
 * The four harmonics, in the order of derived_frequencies():
 *   h1 = -G a^dag a b          at w1 = w_M
 *   h2 = i g2 a Sigma_+^(2)    at w2 = w_c - nu - w_0
 *   h3 = i g3 a Sigma_+^(3)    at w3 = w2
 *   h4 = -i E_P a              at w4 = w_c - w_P
 * Throws FrequencyError for a nonpositive detuning.
 */
std::vector<HarmonicTerm> harmonic_terms(const ModelParams& p, const FockDims& dims);

// sum_n h_n e^{-i w_n t} + h_n^dag e^{i w_n t}
FockOperator reassemble(const std::vector<HarmonicTerm>& terms, double t);

// e^{i H0 t} H1 e^{-i H0 t} for diagonal H0; throws Error otherwise.
FockOperator interaction_picture(const FockOperator& h0, const FockOperator& h1, double t);

/*
 * sum_{m,n} (1/w_mn) [h_m^dag, h_n] e^{i (w_m - w_n) t}
 *
 * The pump-pump pair is left out: [a^dag, a] = -1 makes it the c-number
 * -E_P^2/w_4, a global phase (on a truncated space it would also pick up a
 * spurious top-level entry).
 */
FockOperator effective_hamiltonian(const std::vector<HarmonicTerm>& terms, const FrequencySet& freqs,
                                   double t);

// One (m, n) contribution of effective_hamiltonian, for inspection.
struct CommutatorEntry {
    int m = 0;
    int n = 0;
    double inverse_mean = 0.0;  // 1 / w_mn
    double beat = 0.0;          // w_m - w_n
    double norm = 0.0;          // max |[h_m^dag, h_n]| entry
    bool dropped = false;
};

std::vector<CommutatorEntry> commutator_inventory(const std::vector<HarmonicTerm>& terms,
                                                  const FrequencySet& freqs);

// Restriction to |0>_a |0>_b (x) {Phi^1..Phi^4}; requires d_a, d_b >= 2.
Eigen::Matrix4cd vacuum_block(const FockOperator& h_eff);

} // namespace ionrep

#endif // IONREP_EFFHAM_HPP
