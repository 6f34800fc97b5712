#include "ionrep/measurement.hpp"

#include <array>
#include <cassert>
#include <cmath>
#include <string>
#include <vector>

#include "ionrep/dynamics.hpp"
#include "ionrep/errors.hpp"

namespace ionrep {

std::string_view to_string(BellChoice b) {
    return b == BellChoice::PsiEEGG ? "PSI_EEGG" : "PSI_EGGE";
}

MeasuredPair project_pair(const AmplitudeFamilies& f, int outcome) {
    if (outcome < 1 || outcome > 4)
        throw Error("measurement outcome must be in 1..4, got " + std::to_string(outcome));
    MeasuredPair r;
    r.outcome = outcome;
    r.state = f.conditional_state(outcome - 1);
    r.prob = norm_sq(r.state);
    if (r.prob > kDegenerateNorm)
        r.conc = concurrence(r.state);
    return r;
}

SwapOutcome swap_bsm(const PairState& a, const PairState& b, BellChoice bell) {
    const double pa = norm_sq(a);
    const double pb = norm_sq(b);
    if (pa <= kDegenerateNorm || pb <= kDegenerateNorm)
        throw DegenerateStateError("swap_bsm input pair has vanishing norm");

    PairState raw;
    if (bell == BellChoice::PsiEEGG) {
        raw.alpha = a.alpha * b.gamma + a.eta * b.alpha;
        raw.beta = a.gamma * b.beta + a.beta * b.eta;
        raw.gamma = a.gamma * b.gamma + a.beta * b.alpha;
        raw.eta = a.alpha * b.beta + a.eta * b.eta;
    } else {
        raw.alpha = a.alpha * b.alpha + a.eta * b.gamma;
        raw.beta = a.gamma * b.eta + a.beta * b.beta;
        raw.gamma = a.gamma * b.alpha + a.beta * b.gamma;
        raw.eta = a.alpha * b.eta + a.eta * b.beta;
    }

    SwapOutcome out;
    out.bell = bell;
    out.n_factor = norm_sq(raw);
    assert(pa >= 0.0 && pb >= 0.0);
    out.prob = out.n_factor / (2.0 * pa * pb);
    if (out.prob > kDegenerateNorm) {
        out.conc = 2.0 * std::abs(raw.eta * raw.gamma - raw.alpha * raw.beta) / out.n_factor;
        out.state = raw.scaled(1.0 / std::sqrt(out.n_factor));
    }
    return out;
}

ProtocolResult measure_protocol(const AmplitudeFamilies& f, int i, int j) {
    ProtocolResult r;
    r.pair14 = project_pair(f, i);
    r.pair58 = project_pair(f, j);
    r.swap_psi.bell = BellChoice::PsiEEGG;
    r.swap_psiprime.bell = BellChoice::PsiEGGE;
    if (r.pair14.prob <= kDegenerateNorm || r.pair58.prob <= kDegenerateNorm)
        return r;
    r.swap_psi = swap_bsm(r.pair14.state, r.pair58.state, BellChoice::PsiEEGG);
    r.swap_psiprime = swap_bsm(r.pair14.state, r.pair58.state, BellChoice::PsiEGGE);
    return r;
}

ProtocolResult run_protocol(const ModelParams& p, double t, int i, int j) {
    std::vector<double> grid{0.0};
    if (t > 0.0)
        grid.push_back(t);
    else if (t < 0.0)
        throw Error("run_protocol requires t >= 0");
    const Trajectory traj = evolve_auto(p, initial_protocol_families(), grid);
    return measure_protocol(traj.families.back(), i, j);
}

} // namespace ionrep
