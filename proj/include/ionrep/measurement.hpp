#ifndef IONREP_MEASUREMENT_HPP
#define IONREP_MEASUREMENT_HPP

#include <optional>
#include <string_view>

#include "ionrep/ion_register.hpp"
#include "ionrep/model.hpp"

namespace ionrep {

// Conditional (1,4) state after projecting ions (2,3) on Phi^outcome.
// `conc` is empty when the outcome has (numerically) zero probability.
struct MeasuredPair {
    PairState state;  // unnormalized
    int outcome = 1;  // 1..4
    double prob = 0.0;
    std::optional<double> conc;
};

// The two Bell projectors on ions (4,5) used by the protocol.
enum class BellChoice {
    PsiEEGG,  // (|EE> + |GG>)/sqrt2
    PsiEGGE,  // (|EG> + |GE>)/sqrt2
};

std::string_view to_string(BellChoice b);

// End-pair (1,8) state after the Bell measurement on ions (4,5).
struct SwapOutcome {
    PairState state;  // normalized; zero when prob vanishes
    BellChoice bell = BellChoice::PsiEEGG;
    double n_factor = 0.0;
    double prob = 0.0;
    std::optional<double> conc;
};

// Throws Error for outcome outside 1..4.
MeasuredPair project_pair(const AmplitudeFamilies& f, int outcome);

/*
 * Swaps the entanglement of a = pair (1,4) and b = pair (5,8) onto (1,8).
 * The raw coefficients of (1,8) over {EG, GE, GG, EE} are, for PsiEEGG,
 *   a.alpha b.gamma + a.eta b.alpha,   a.gamma b.beta + a.beta b.eta,
 *   a.gamma b.gamma + a.beta b.alpha,  a.alpha b.beta + a.eta b.eta
 * and for PsiEGGE
 *   a.alpha b.alpha + a.eta b.gamma,   a.gamma b.eta + a.beta b.beta,
 *   a.gamma b.alpha + a.beta b.gamma,  a.alpha b.eta + a.eta b.beta.
 * n_factor is their squared norm and prob = n_factor / (2 |a|^2 |b|^2), the
 * Born probability of the projector on the normalized product a (x) b.
 * Throws DegenerateStateError if a or b has vanishing norm.
 */
SwapOutcome swap_bsm(const PairState& a, const PairState& b, BellChoice bell);

struct ProtocolResult {
    MeasuredPair pair14;
    MeasuredPair pair58;
    SwapOutcome swap_psi;
    SwapOutcome swap_psiprime;
};

// Measurement chain on already evolved families: outcome i on (2,3), j on
// (6,7), then both Bell projections on (4,5). Pair (5,8) evolves exactly as
// pair (1,4), so the same families serve both halves. If either measured pair
// is degenerate both swaps are reported with prob 0 and no concurrence.
ProtocolResult measure_protocol(const AmplitudeFamilies& f, int i, int j);

// Evolves the protocol initial state to time t and runs measure_protocol.
ProtocolResult run_protocol(const ModelParams& p, double t, int i, int j);

} // namespace ionrep

#endif // IONREP_MEASUREMENT_HPP
