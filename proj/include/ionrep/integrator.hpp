#ifndef IONREP_INTEGRATOR_HPP
#define IONREP_INTEGRATOR_HPP

#include <algorithm>
#include <cmath>

#include "ionrep/errors.hpp"

namespace ionrep {

// Classical fourth-order Runge-Kutta step for dx/dt = f(t, x).
template <class State, class Deriv>
State rk4_step(const Deriv& f, double t, const State& x, double h) {
    const State k1 = f(t, x);
    const State k2 = f(t + 0.5 * h, (x + (0.5 * h) * k1).eval());
    const State k3 = f(t + 0.5 * h, (x + (0.5 * h) * k2).eval());
    const State k4 = f(t + h, (x + h * k3).eval());
    return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Fixed-step RK4 over [t0, t1] with n equal steps.
template <class State, class Deriv>
State rk4_fixed(const Deriv& f, State x, double t0, double t1, int n) {
    const double h = (t1 - t0) / n;
    for (int k = 0; k < n; ++k)
        x = rk4_step(f, t0 + k * h, x, h);
    return x;
}

struct StepControl {
    double h_max = 1e-2;
    double tolerance = 1e-10;  // absolute, on the largest entry
    double h_min = 1e-13;
};

/*
 * RK4 with step-doubling (Richardson) error control. Each attempt compares one
 * step of size h against two of size h/2; the difference / 15 estimates the
 * local error of the half-step result. Accepted steps keep the extrapolated
 * value. `h` carries the step size between calls.
 */
template <class State, class Deriv>
State integrate_adaptive(const Deriv& f, State x, double t0, double t1, const StepControl& ctl,
                         double& h) {
    double t = t0;
    h = std::clamp(h, ctl.h_min, ctl.h_max);
    while (t1 - t > 1e-15 * std::max(1.0, std::abs(t1))) {
        const double step = std::min(h, t1 - t);
        const State full = rk4_step(f, t, x, step);
        const State half = rk4_step(f, t + 0.5 * step, rk4_step(f, t, x, 0.5 * step), 0.5 * step);
        const double err = (half - full).cwiseAbs().maxCoeff() / 15.0;
        if (!std::isfinite(err))
            throw IntegratorError("non-finite state during integration");
        if (err <= ctl.tolerance) {
            x = half + (half - full) / 15.0;
            t += step;
            if (err < ctl.tolerance / 64.0)
                h = std::min(2.0 * h, ctl.h_max);
            continue;
        }
        h = 0.5 * step;
        if (h < ctl.h_min)
            throw IntegratorError("step size underflow: local tolerance cannot be met");
    }
    return x;
}

} // namespace ionrep

#endif // IONREP_INTEGRATOR_HPP
