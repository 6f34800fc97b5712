#ifndef IONREP_MODEL_HPP
#define IONREP_MODEL_HPP

#include <array>

namespace ionrep {

// Physical parameters of two ions in an optomechanical cavity. All values are
// frequencies in units of the ion-2 coupling g2 (so g2 = 1 in the figures) and
// times are the dimensionless g*t.
struct ModelParams {
    double omega_c = 2.4;  // optical mode
    double omega_M = 0.4;  // mechanical mode
    double nu = 0.5;       // ion vibrational mode
    double omega_0 = 1.5;  // ionic transition
    double omega_P = 2.0;  // pump
    double E_P = 0.5;      // pump amplitude
    double G = 1.0;        // optomechanical coupling
    double g2 = 1.0;       // ion 2 - field coupling
    double g3 = 1.0;       // ion 3 - field coupling

    // Red-detuned pump with nu + omega_0 = omega_P and omega_c - omega_P =
    // omega_M, so that every derived detuning equals omega_M.
    static ModelParams equal_detuning(double omega_M, double E_P, double g = 1.0);
};

// Detunings of the four harmonic terms of the interaction-picture Hamiltonian
// (optomechanical, ion 2, ion 3, pump) and their pairwise harmonic means
// 1/w_ij = (1/w_i + 1/w_j) / 2.
struct FrequencySet {
    std::array<double, 4> omega{};
    std::array<std::array<double, 4>, 4> omega_ij{};

    bool all_equal(double tol = 1e-12) const;
};

double harmonic_mean(double a, double b);

// Throws FrequencyError if any derived detuning is not strictly positive.
FrequencySet derived_frequencies(const ModelParams& p);

} // namespace ionrep

#endif // IONREP_MODEL_HPP
