#ifndef IONREP_BELLPREP_HPP
#define IONREP_BELLPREP_HPP

#include "ionrep/ion_register.hpp"

namespace ionrep {

// Two ions in an optical cavity with equal coupling g and detuning
// delta = w_c - nu - w_0.
struct PrepParams {
    double g = 1.0;
    double delta = 4.0;
};

// Starting from |E>|G>: cos(g^2 t/delta) |EG> + i sin(g^2 t/delta) |GE>.
// The common self-energy phase is dropped, so comparisons are up to a
// global phase.
PairState pair_evolution(const PrepParams& p, double t);

// Phase gate diag(1, i) followed by Pauli-Z on the second ion, i.e. the map
// G -> G, E -> -i E on ion 2.
PairState apply_phase_gates(const PairState& s);

// pi delta / (4 g^2), when pair_evolution is maximally entangled.
double prep_time(const PrepParams& p);

// Throws Error unless g > 0 and delta > 0.
void validate(const PrepParams& p);

} // namespace ionrep

#endif // IONREP_BELLPREP_HPP
