#include "ionrep/ion_register.hpp"

#include <cmath>

#include "ionrep/errors.hpp"

namespace ionrep {

cd PairState::coeff(IonLevel first, IonLevel second) const {
    if (first == IonLevel::E)
        return second == IonLevel::G ? alpha : eta;
    return second == IonLevel::E ? beta : gamma;
}

double norm_sq(const PairState& p) {
    return std::norm(p.alpha) + std::norm(p.beta) + std::norm(p.gamma) + std::norm(p.eta);
}

double concurrence(const PairState& p) {
    const double n = norm_sq(p);
    if (n <= kDegenerateNorm)
        throw DegenerateStateError("concurrence of a state with vanishing norm");
    return 2.0 * std::abs(p.eta * p.gamma - p.alpha * p.beta) / n;
}

PairState normalized(const PairState& p) {
    const double n = norm_sq(p);
    if (n <= kDegenerateNorm)
        throw DegenerateStateError("cannot normalize a state with vanishing norm");
    return p.scaled(1.0 / std::sqrt(n));
}

PairState product_state(cd first_e, cd first_g, cd second_e, cd second_g) {
    return {first_e * second_g, first_g * second_e, first_g * second_g, first_e * second_e};
}

PairState AmplitudeFamilies::conditional_state(int outcome) const {
    return {m(outcome, 0), m(outcome, 1), m(outcome, 2), m(outcome, 3)};
}

AmplitudeFamilies initial_protocol_families() {
    // E1 G2 E3 G4 -> Phi^1 (x) EG, G1 E2 G3 E4 -> Phi^2 (x) GE,
    // G1 E2 E3 G4 -> Phi^3 (x) GG, E1 G2 G3 E4 -> Phi^4 (x) EE.
    AmplitudeFamilies f;
    f.m = 0.5 * Eigen::Matrix4cd::Identity();
    return f;
}

} // namespace ionrep
