#include <doctest.h>

#include <cmath>
#include <random>

#include "ionrep/dynamics.hpp"
#include "ionrep/errors.hpp"
#include "oracles.hpp"

using namespace ionrep;

namespace {

constexpr cd kI{0.0, 1.0};

ModelParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.2, 3.0);
    ModelParams p;
    p.g2 = 1.0;
    p.g3 = u(rng);
    p.E_P = u(rng);
    p.G = u(rng);
    p.omega_M = u(rng);
    p.nu = u(rng);
    p.omega_0 = u(rng);
    p.omega_P = u(rng);
    p.omega_c = p.nu + p.omega_0 + std::max(p.omega_P - p.nu - p.omega_0, 0.0) + u(rng);
    return p;
}

// Distinct w2 = w3 and w4.
ModelParams unequal_params() {
    ModelParams p;
    p.omega_c = 3.0;
    p.nu = 0.5;
    p.omega_0 = 1.5;  // w2 = w3 = 1
    p.omega_P = 1.4;  // w4 = 1.6
    p.omega_M = 0.7;
    p.E_P = 0.8;
    p.g3 = 0.9;
    return p;
}

} // namespace

TEST_SUITE("dynamics") {

TEST_CASE("derived frequencies") {
    CHECK(harmonic_mean(2.0, 2.0) == doctest::Approx(2.0));
    CHECK(harmonic_mean(1.0, 3.0) == doctest::Approx(1.5).epsilon(1e-15));

    const FrequencySet f = derived_frequencies(ModelParams::equal_detuning(0.4, 0.5));
    for (double w : f.omega)
        CHECK(w == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(f.all_equal());
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            CHECK(1.0 / f.omega_ij[m][n] == doctest::Approx(0.5 * (1.0 / f.omega[m] + 1.0 / f.omega[n])));

    const FrequencySet g = derived_frequencies(unequal_params());
    CHECK(g.omega[0] == doctest::Approx(0.7));
    CHECK(g.omega[1] == doctest::Approx(1.0));
    CHECK(g.omega[2] == doctest::Approx(1.0));
    CHECK(g.omega[3] == doctest::Approx(1.6));
    CHECK_FALSE(g.all_equal());
}

TEST_CASE("nonpositive detunings are rejected") {
    ModelParams p = ModelParams::equal_detuning(0.4, 0.5);
    p.omega_P = p.omega_c;
    CHECK_THROWS_AS(derived_frequencies(p), FrequencyError);
    p = ModelParams::equal_detuning(0.4, 0.5);
    p.omega_0 = p.omega_c;
    CHECK_THROWS_AS(s_matrix(p, 0.0), FrequencyError);
    p = ModelParams::equal_detuning(0.0, 0.5);
    CHECK_THROWS_AS(derived_frequencies(p), FrequencyError);
}

TEST_CASE("S matrix for the equal-detuning example") {
    ModelParams p = ModelParams::equal_detuning(0.4, 0.5);
    const Eigen::Matrix4cd s = s_matrix(p, 1.3);
    Eigen::Matrix4d expected;
    expected << -2.5, -2.5, 1.25, 1.25,
                -2.5, -2.5, 1.25, 1.25,
                1.25, 1.25, -5.0, 0.0,
                1.25, 1.25, 0.0, 0.0;
    CHECK((s - expected.cast<cd>()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("S matrix without pump has only the exchange block off-diagonal") {
    ModelParams p = unequal_params();
    p.E_P = 0.0;
    const Eigen::Matrix4cd s = s_matrix(p, 0.37);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            const bool exchange = (r == 0 && c == 1) || (r == 1 && c == 0);
            if (r != c && !exchange)
                CHECK(std::abs(s(r, c)) == 0.0);
        }
    CHECK(std::abs(s(0, 1)) > 0.0);
}

TEST_CASE("S matrix is Hermitian and carries the stated phases") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ut(-20.0, 20.0);
    for (int trial = 0; trial < 50; ++trial) {
        const ModelParams p = random_params(rng);
        const double t = ut(rng);
        const Eigen::Matrix4cd s = s_matrix(p, t);
        CHECK((s - s.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    }

    // Artificial w2 != w3 exercises the exchange phase.
    const ModelParams p = unequal_params();
    FrequencySet f = derived_frequencies(p);
    f.omega[2] = 1.3;
    f.omega_ij[1][2] = f.omega_ij[2][1] = harmonic_mean(f.omega[1], f.omega[2]);
    f.omega_ij[2][2] = f.omega[2];
    f.omega_ij[2][3] = f.omega_ij[3][2] = harmonic_mean(f.omega[2], f.omega[3]);
    const double t = 0.83;
    const Eigen::Matrix4cd s = s_matrix(p, f, t);
    const cd exchange = -p.g2 * p.g3 / f.omega_ij[1][2] * std::exp(kI * (f.omega[1] - f.omega[2]) * t);
    CHECK(std::abs(s(0, 1) - exchange) < 1e-14);
    CHECK(std::abs(s(1, 0) - std::conj(exchange)) < 1e-14);
    const cd pump3 = p.g3 * p.E_P / f.omega_ij[2][3] * std::exp(kI * (f.omega[3] - f.omega[2]) * t);
    CHECK(std::abs(s(0, 3) - pump3) < 1e-14);
    CHECK(std::abs(s(1, 2) - std::conj(pump3)) < 1e-14);
}

TEST_CASE("propagator_const is unitary and a group") {
    const ModelParams p = ModelParams::equal_detuning(0.4, 0.5);
    CHECK((propagator_const(p, 0.0) - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ut(-50.0, 50.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double t = ut(rng);
        const Eigen::Matrix4cd u = propagator_const(p, t);
        CHECK((u.adjoint() * u - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((u * propagator_const(p, -t) - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        const Eigen::Matrix4cd ref = oracle::expm_taylor(-kI * t * s_matrix(p, 0.0));
        CHECK((u - ref).cwiseAbs().maxCoeff() < 1e-10);
    }
    CHECK_THROWS_AS(propagator_const(unequal_params(), 1.0), NotTimeIndependentError);
}

TEST_CASE("evolve returns x0 at t = 0 and validates input") {
    const ModelParams p = ModelParams::equal_detuning(0.4, 0.5);
    const AmplitudeFamilies x0 = initial_protocol_families();
    const std::vector<double> only_zero{0.0};
    const Trajectory tr = evolve(p, x0, only_zero);
    REQUIRE(tr.families.size() == 1);
    CHECK(tr.families[0].m == x0.m);

    const std::vector<double> bad_start{0.5, 1.0};
    CHECK_THROWS_AS(evolve(p, x0, bad_start), Error);
    const std::vector<double> not_increasing{0.0, 1.0, 1.0};
    CHECK_THROWS_AS(evolve(p, x0, not_increasing), Error);
    AmplitudeFamilies unnormalized = x0;
    unnormalized.m *= 2.0;
    const std::vector<double> grid{0.0, 1.0};
    CHECK_THROWS_AS(evolve(p, unnormalized, grid), Error);
}

TEST_CASE("evolve agrees with the constant propagator") {
    for (double e_p : {0.5, 5.0}) {
        const ModelParams p = ModelParams::equal_detuning(0.4, e_p);
        const AmplitudeFamilies x0 = initial_protocol_families();
        const auto grid = uniform_grid(10.0, 40);
        const Trajectory ode = evolve(p, x0, grid);
        const Trajectory exact = evolve_const(p, x0, grid);
        double err = 0.0;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            err = std::max(err, (ode.families[k].m - exact.families[k].m).cwiseAbs().maxCoeff());
            const Eigen::Matrix4cd direct = propagator_const(p, grid[k]) * x0.m;
            CHECK((exact.families[k].m - direct).cwiseAbs().maxCoeff() < 1e-12);
        }
        CHECK(err <= 1e-8);
        CHECK(ode.max_norm_drift() <= 1e-8);
    }
}

TEST_CASE("closed-form exchange dynamics without pump") {
    const double w = 0.4;
    const ModelParams p = ModelParams::equal_detuning(w, 0.0);
    const double j = 1.0 / w;
    const auto grid = uniform_grid(6.0, 60);
    const Trajectory ode = evolve(p, initial_protocol_families(), grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double t = grid[k];
        const cd ph = 0.5 * std::exp(kI * (j * t));
        const Eigen::Vector4cd expected(ph * std::cos(j * t), ph * kI * std::sin(j * t), 0.0, 0.0);
        CHECK((ode.families[k].m.col(0) - expected).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("time-dependent generator: norm, Gram and row norms are conserved") {
    const ModelParams p = unequal_params();
    const auto grid = uniform_grid(20.0, 100);
    const Trajectory tr = evolve(p, initial_protocol_families(), grid);
    CHECK(tr.max_norm_drift() <= 1e-8);
    for (const auto& f : tr.families) {
        const Eigen::Matrix4cd gram = f.m.adjoint() * f.m;
        CHECK((gram - 0.25 * Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-9);
        for (int i = 0; i < 4; ++i)
            CHECK(f.m.row(i).squaredNorm() == doctest::Approx(0.25).epsilon(1e-9));
    }
}

TEST_CASE("time-dependent evolution matches a fine piecewise-exponential reference") {
    const ModelParams p = unequal_params();
    const double t_end = 3.0;
    const std::vector<double> grid{0.0, t_end};
    const Trajectory tr = evolve(p, initial_protocol_families(), grid);

    // Midpoint exponential product, refined until converged.
    auto reference = [&](int n) {
        Eigen::Matrix4cd x = initial_protocol_families().m;
        const double h = t_end / n;
        for (int k = 0; k < n; ++k)
            x = oracle::expm_taylor(-kI * h * s_matrix(p, (k + 0.5) * h)) * x;
        return x;
    };
    const Eigen::Matrix4cd coarse = reference(20000);
    const Eigen::Matrix4cd fine = reference(40000);
    // Second-order scheme: Richardson-extrapolate the two references.
    const Eigen::Matrix4cd ref = fine + (fine - coarse) / 3.0;
    CHECK((tr.families.back().m - ref).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("fixed-step RK4 converges at fourth order") {
    const ModelParams p = ModelParams::equal_detuning(0.4, 0.5);
    const double t_end = 2.0;
    const Eigen::Matrix4cd s = s_matrix(p, 0.0);
    auto rhs = [&](double, const Eigen::Matrix4cd& x) -> Eigen::Matrix4cd { return -kI * (s * x); };
    const Eigen::Matrix4cd exact = propagator_const(p, t_end) * initial_protocol_families().m;
    auto err = [&](int n) {
        return (rk4_fixed(rhs, Eigen::Matrix4cd(initial_protocol_families().m), 0.0, t_end, n) - exact)
            .cwiseAbs()
            .maxCoeff();
    };
    const double e1 = err(200);
    const double e2 = err(400);
    const double order = std::log2(e1 / e2);
    CHECK(order == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("step control failure raises IntegratorError") {
    const ModelParams p = ModelParams::equal_detuning(0.4, 0.5);
    StepControl ctl;
    ctl.h_max = 1.0;
    ctl.h_min = 0.5;
    ctl.tolerance = 1e-16;
    const std::vector<double> grid{0.0, 5.0};
    CHECK_THROWS_AS(evolve(p, initial_protocol_families(), grid, ctl), IntegratorError);
}

TEST_CASE("evolve is deterministic") {
    const ModelParams p = unequal_params();
    const auto grid = uniform_grid(5.0, 10);
    const Trajectory a = evolve(p, initial_protocol_families(), grid);
    const Trajectory b = evolve(p, initial_protocol_families(), grid);
    for (std::size_t k = 0; k < grid.size(); ++k)
        CHECK(a.families[k].m == b.families[k].m);
}

} // TEST_SUITE
