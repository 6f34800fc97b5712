#include <doctest.h>

#include <cmath>
#include <random>

#include "ionrep/errors.hpp"
#include "ionrep/ion_register.hpp"
#include "oracles.hpp"

using namespace ionrep;

TEST_SUITE("ion_register") {

TEST_CASE("norm_sq of basis, Bell and scaled states") {
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(norm_sq({1.0, 0.0, 0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(norm_sq({s, s, 0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(norm_sq({0.5, 0.0, 0.0, 0.0}) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("concurrence examples") {
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(concurrence({s, s, 0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(concurrence({1.0, 0.0, 0.0, 0.0}) == doctest::Approx(0.0));
    CHECK(concurrence({0.6, 0.8, 0.0, 0.0}) == doctest::Approx(0.96).epsilon(1e-14));
}

TEST_CASE("concurrence rejects degenerate states") {
    CHECK_THROWS_AS(concurrence({0.0, 0.0, 0.0, 0.0}), DegenerateStateError);
    CHECK_THROWS_AS(concurrence({1e-7, 0.0, 0.0, 0.0}), DegenerateStateError);
    CHECK_NOTHROW(concurrence({1e-5, 0.0, 0.0, 0.0}));
    CHECK_THROWS_AS(normalized({0.0, 0.0, 0.0, 0.0}), DegenerateStateError);
}

TEST_CASE("coeff follows the EG, GE, GG, EE order") {
    const PairState p{1.0, 2.0, 3.0, 4.0};
    CHECK(p.coeff(IonLevel::E, IonLevel::G) == cd{1.0});
    CHECK(p.coeff(IonLevel::G, IonLevel::E) == cd{2.0});
    CHECK(p.coeff(IonLevel::G, IonLevel::G) == cd{3.0});
    CHECK(p.coeff(IonLevel::E, IonLevel::E) == cd{4.0});
}

TEST_CASE("concurrence properties over random states") {
    std::mt19937_64 rng(20240611);
    std::normal_distribution<double> n(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const PairState p = oracle::random_pair(rng);
        const double c = concurrence(p);
        CHECK(c >= 0.0);
        CHECK(c <= 1.0 + 1e-12);
        CHECK(c == doctest::Approx(oracle::wootters_pure(p)).epsilon(1e-12));

        const cd factor{n(rng), n(rng)};
        CHECK(concurrence(p.scaled(factor)) == doctest::Approx(c).epsilon(1e-10));

        const PairState prod = product_state({n(rng), n(rng)}, {n(rng), n(rng)}, {n(rng), n(rng)}, {n(rng), n(rng)});
        CHECK(concurrence(prod) < 1e-12);
    }
}

TEST_CASE("initial protocol families") {
    const AmplitudeFamilies f = initial_protocol_families();
    const PairState alpha_family{f.m(0, 0), f.m(1, 0), f.m(2, 0), f.m(3, 0)};
    CHECK(alpha_family.alpha == cd{0.5});
    CHECK(norm_sq(alpha_family) == doctest::Approx(0.25));
    CHECK(f.m.col(3) == Eigen::Vector4cd(0.0, 0.0, 0.0, 0.5));
    CHECK(f.total_norm_sq() == doctest::Approx(1.0).epsilon(1e-15));

    const Eigen::Matrix4cd gram = f.m.adjoint() * f.m;
    CHECK((gram - 0.25 * Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("initial families match the tensor expansion of the two Bell pairs") {
    // Build the 16 amplitudes of ions (1,2,3,4) directly and regroup them.
    const double s = 1.0 / std::sqrt(2.0);
    auto bell = [&](int x, int y) { return (x != y) ? s : 0.0; };  // (|EG> + |GE>)/sqrt2, E = 0
    const AmplitudeFamilies f = initial_protocol_families();
    // Row order GE, EG, EE, GG on (2,3); column order EG, GE, GG, EE on (1,4).
    const int row_levels[4][2] = {{1, 0}, {0, 1}, {0, 0}, {1, 1}};
    const int col_levels[4][2] = {{0, 1}, {1, 0}, {1, 1}, {0, 0}};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            const int x2 = row_levels[r][0], x3 = row_levels[r][1];
            const int x1 = col_levels[c][0], x4 = col_levels[c][1];
            CHECK(std::abs(f.m(r, c) - bell(x1, x2) * bell(x3, x4)) < 1e-15);
        }
}

} // TEST_SUITE
