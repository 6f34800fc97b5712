#include "ionrep/bellprep.hpp"

#include <cmath>
#include <numbers>

#include "ionrep/errors.hpp"

namespace ionrep {

void validate(const PrepParams& p) {
    if (!(p.g > 0.0) || !(p.delta > 0.0))
        throw Error("preparation needs g > 0 and delta > 0");
}

PairState pair_evolution(const PrepParams& p, double t) {
    const double theta = p.g * p.g * t / p.delta;
    return {std::cos(theta), cd{0.0, std::sin(theta)}, 0.0, 0.0};
}

PairState apply_phase_gates(const PairState& s) {
    const cd phase_gate{0.0, 1.0};
    const cd pauli_z{-1.0, 0.0};
    const cd excited = pauli_z * phase_gate;
    // Ion 2 is the second label of each basis ket.
    return {s.alpha, excited * s.beta, s.gamma, excited * s.eta};
}

double prep_time(const PrepParams& p) { return std::numbers::pi * p.delta / (4.0 * p.g * p.g); }

} // namespace ionrep
