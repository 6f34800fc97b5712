#ifndef IONREP_ION_REGISTER_HPP
#define IONREP_ION_REGISTER_HPP

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace ionrep {

using cd = std::complex<double>;

// Norms at or below this are treated as a zero-probability outcome.
inline constexpr double kDegenerateNorm = 1e-12;

// Two-level encoding of an ion: E = |e,1> (excited, one phonon) and
// G = |g,0> (ground, no phonon). Sigma_{+-} only connect these two, so
// |e,0> and |g,1> never appear.
enum class IonLevel { E, G };

/*
 * Two-ion state over the fixed basis order {EG, GE, GG, EE}:
 *   alpha |E>|G> + beta |G>|E> + gamma |G>|G> + eta |E>|E>
 * This order is the wire order for every pair state in the project.
 * The state may be unnormalized (a conditional branch after a measurement).
 */
struct PairState {
    cd alpha{};
    cd beta{};
    cd gamma{};
    cd eta{};

    static PairState from_array(const std::array<cd, 4>& c) { return {c[0], c[1], c[2], c[3]}; }
    std::array<cd, 4> to_array() const { return {alpha, beta, gamma, eta}; }

    // Coefficient of |first>|second>.
    cd coeff(IonLevel first, IonLevel second) const;

    PairState scaled(cd factor) const { return {factor * alpha, factor * beta, factor * gamma, factor * eta}; }
};

double norm_sq(const PairState& p);

// 2|eta*gamma - alpha*beta| / norm_sq. Throws DegenerateStateError when
// norm_sq <= kDegenerateNorm.
double concurrence(const PairState& p);

// Returns p / sqrt(norm_sq(p)); throws DegenerateStateError when degenerate.
PairState normalized(const PairState& p);

// Product state (first ion) x (second ion), each given as (c_E, c_G).
PairState product_state(cd first_e, cd first_g, cd second_e, cd second_g);

/*
 * Joint amplitudes of the four-ion state sum_i |Phi^i>_{2,3} (x) |Psi^i>_{1,4}.
 *
 * Rows index the (2,3) basis {Phi^1 = GE, Phi^2 = EG, Phi^3 = EE, Phi^4 = GG};
 * columns index the (1,4) spectator basis {EG, GE, GG, EE}, i.e. the alpha-,
 * beta-, gamma- and eta-families. Each column evolves independently under the
 * (2,3) generator. Row i read across the columns is the conditional (1,4)
 * state after measuring Phi^i on ions (2,3).
 */
struct AmplitudeFamilies {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();

    double total_norm_sq() const { return m.squaredNorm(); }

    // Row `outcome` (0-based) as a pair state of ions (1,4).
    PairState conditional_state(int outcome) const;
};

// Expansion of (|EG>+|GE>)/sqrt2 on (1,2) times (|EG>+|GE>)/sqrt2 on (3,4).
AmplitudeFamilies initial_protocol_families();

} // namespace ionrep

#endif // IONREP_ION_REGISTER_HPP
