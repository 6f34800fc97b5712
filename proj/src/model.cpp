#include "ionrep/model.hpp"

#include <cmath>
#include <string>

#include "ionrep/errors.hpp"

namespace ionrep {

ModelParams ModelParams::equal_detuning(double omega_M, double E_P, double g) {
    ModelParams p;
    p.g2 = g;
    p.g3 = g;
    p.E_P = E_P;
    p.omega_M = omega_M;
    p.nu = 0.5;
    p.omega_0 = 1.5;
    p.omega_P = p.nu + p.omega_0;
    p.omega_c = p.omega_P + omega_M;
    return p;
}

bool FrequencySet::all_equal(double tol) const {
    for (double w : omega)
        if (std::abs(w - omega[0]) > tol)
            return false;
    return true;
}

double harmonic_mean(double a, double b) { return 2.0 / (1.0 / a + 1.0 / b); }

FrequencySet derived_frequencies(const ModelParams& p) {
    FrequencySet f;
    f.omega[0] = p.omega_M;
    f.omega[1] = p.omega_c - p.nu - p.omega_0;
    f.omega[2] = f.omega[1];
    f.omega[3] = p.omega_c - p.omega_P;
    for (int n = 0; n < 4; ++n) {
        if (!(f.omega[n] > 0.0))
            throw FrequencyError("derived detuning omega_" + std::to_string(n + 1) + " = " +
                                 std::to_string(f.omega[n]) + " must be positive");
    }
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            f.omega_ij[m][n] = m == n ? f.omega[m] : harmonic_mean(f.omega[m], f.omega[n]);
    return f;
}

} // namespace ionrep
