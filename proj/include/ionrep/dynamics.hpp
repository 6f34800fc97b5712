#ifndef IONREP_DYNAMICS_HPP
#define IONREP_DYNAMICS_HPP

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ionrep/integrator.hpp"
#include "ionrep/ion_register.hpp"
#include "ionrep/model.hpp"

namespace ionrep {

// Sampled solution of i dX/dt = S(t) X for all four spectator families.
struct Trajectory {
    std::vector<double> t_grid;
    std::vector<AmplitudeFamilies> families;

    // max_k |total_norm_sq(k) - total_norm_sq(0)|
    double max_norm_drift() const;
};

/*
 * Generator of the (2,3) amplitudes in the basis {GE, EG, EE, GG}:
 *
 *   diag   -g3^2/w33, -g2^2/w22, -(g2^2/w22 + g3^2/w33), 0
 *   (1,2)  -g2 g3/w23 e^{+i(w2-w3)t}
 *   (1,3)   g2 E_P/w24 e^{-i(w4-w2)t}     (1,4)  g3 E_P/w34 e^{+i(w4-w3)t}
 *   (2,3)   g3 E_P/w34 e^{-i(w4-w3)t}     (2,4)  g2 E_P/w24 e^{+i(w4-w2)t}
 *
 * with the lower triangle the conjugate. Throws FrequencyError.
 */
Eigen::Matrix4cd s_matrix(const ModelParams& p, double t);
Eigen::Matrix4cd s_matrix(const ModelParams& p, const FrequencySet& f, double t);

// Largest absolute row sum of S; time independent since t only enters phases.
double generator_bound(const ModelParams& p);

// Step control used by evolve(): h_max = 1 / (50 |S|), tolerance 1e-10.
StepControl default_step_control(const ModelParams& p);

// Integrates every family column from t_grid[0] = 0. Requires a strictly
// increasing grid and a unit-norm initial state; throws IntegratorError when
// the step control fails.
Trajectory evolve(const ModelParams& p, const AmplitudeFamilies& x0, std::span<const double> t_grid);
Trajectory evolve(const ModelParams& p, const AmplitudeFamilies& x0, std::span<const double> t_grid,
                  const StepControl& ctl);

// exp(-i S t) for time-independent S (all derived detunings equal); throws
// NotTimeIndependentError otherwise.
Eigen::Matrix4cd propagator_const(const ModelParams& p, double t);

// Same contract as evolve() but via propagator_const; the fast path used for
// equal detunings.
Trajectory evolve_const(const ModelParams& p, const AmplitudeFamilies& x0,
                        std::span<const double> t_grid);

// evolve_const when the detunings are equal, evolve otherwise.
Trajectory evolve_auto(const ModelParams& p, const AmplitudeFamilies& x0,
                       std::span<const double> t_grid);

std::vector<double> uniform_grid(double t_max, int n_steps);

} // namespace ionrep

#endif // IONREP_DYNAMICS_HPP
