#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qinfo/malus.hpp"
#include "test_util.hpp"

using namespace qinfo;

constexpr double two_pi = 2.0 * std::numbers::pi;

TEST_SUITE("malus") {

TEST_CASE("integrated f matches cos(n theta) to 1e-8 over a full turn") {
    for (double n : {0.5, 1.0, 2.0}) {
        CAPTURE(n);
        const OdeSolution sol = solve_f_ode({n}, two_pi, 10000);
        CHECK(sol.max_abs_deviation < 1e-8);
        CHECK(sol.f[0] == 1.0); // initial condition, exact
    }
}

TEST_CASE("electron winding: f crosses zero at theta = pi") {
    const OdeSolution sol = solve_f_ode(MalusParameter::electron(), two_pi, 10000);
    CHECK(std::abs(sol.f[5000]) < 1e-8); // theta = pi lands on sample 5000
}

TEST_CASE("f^2 + g^2 stays on the unit circle along the whole trajectory") {
    for (double n : {0.5, 1.0, 2.0}) {
        const OdeSolution sol = solve_f_ode({n}, two_pi, 10000);
        for (size_t k = 0; k < sol.f.size(); k += 37)
            CHECK(std::abs(sol.f[k] * sol.f[k] + sol.g[k] * sol.g[k] - 1.0) < 1e-8);
    }
}

TEST_CASE("integration preconditions") {
    CHECK_THROWS_AS(solve_f_ode({1.0}, two_pi, 99), Error);
    CHECK_THROWS_AS(solve_f_ode({-1.0}, two_pi, 1000), Error);
    CHECK_THROWS_AS(solve_f_ode({1.0}, -1.0, 1000), Error);
}

TEST_CASE("rotation block at theta = 0 is the identity") {
    CHECK(max_abs_diff(rotation_theta({1.0}, 0.0), Mat3::identity()) == 0.0);
}

TEST_CASE("rotation block moves the second axis onto the third at a quarter turn") {
    const Vec3 moved = rotation_theta({1.0}, std::numbers::pi / 2.0) * Vec3{0.0, 1.0, 0.0};
    CHECK(std::abs(moved[0]) < 1e-15);
    CHECK(std::abs(moved[1]) < 1e-15);
    CHECK(moved[2] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("rotation depends only on the parameter difference") {
    // Regression guard on the API surface: shifting both endpoints by a
    // common offset must not change the block built from their difference.
    SplitMix64 rng(0x0150ULL);
    for (int rep = 0; rep < 20; ++rep) {
        const double theta0 = 5.0 * testutil::uniform_pm1(rng);
        const double theta1 = 5.0 * testutil::uniform_pm1(rng);
        const double shift = 50.0 * testutil::uniform_pm1(rng);
        CHECK(max_abs_diff(rotation_theta({1.0}, theta1 - theta0),
                           rotation_theta({1.0}, (theta1 + shift) - (theta0 + shift))) < 1e-12);
    }
}

TEST_CASE("rotation blocks compose: R(a) R(b) = R(a+b)") {
    SplitMix64 rng(0x0151ULL);
    for (double n : {0.5, 1.0, 2.0})
        for (int rep = 0; rep < 20; ++rep) {
            const double a = 4.0 * testutil::uniform_pm1(rng);
            const double b = 4.0 * testutil::uniform_pm1(rng);
            CHECK(max_abs_diff(rotation_theta({n}, a) * rotation_theta({n}, b),
                               rotation_theta({n}, a + b)) < 1e-12);
        }
}

TEST_CASE("rotations preserve the catalog length") {
    SplitMix64 rng(0x0152ULL);
    for (int rep = 0; rep < 30; ++rep) {
        const Vec3 i = testutil::random_unit_vec3(rng);
        const double theta = 10.0 * testutil::uniform_pm1(rng);
        CHECK(std::abs(norm(rotation_theta({1.3}, theta) * i) - 1.0) < 1e-12);
    }
}

TEST_CASE("probability law on the reference angles") {
    CHECK(malus_probability({1.0}, 0.0) == 1.0);
    CHECK(malus_probability({1.0}, std::numbers::pi) < 1e-12);
    CHECK(malus_probability({1.0}, std::numbers::pi / 2.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(malus_probability(MalusParameter::electron(), std::numbers::pi) ==
          doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("probability can be read off the rotated catalog") {
    SplitMix64 rng(0x0153ULL);
    for (double n : {0.5, 1.0, 2.0})
        for (int rep = 0; rep < 20; ++rep) {
            const double theta = 6.0 * testutil::uniform_pm1(rng);
            const Vec3 rotated = rotation_theta({n}, theta) * Vec3{0.0, 0.0, 1.0};
            CHECK(std::abs(0.5 * (1.0 + rotated[2]) - malus_probability({n}, theta)) < 1e-12);
        }
}

TEST_CASE("euler rotation reference cases") {
    CHECK(max_abs_diff(euler_rotation(0.0, 0.0, 0.0), Mat3::identity()) == 0.0);

    // pure middle-axis rotation block
    const double beta = 0.7;
    const Mat3 r = euler_rotation(0.0, beta, 0.0);
    Mat3 expected = Mat3::identity();
    expected(0, 0) = std::cos(beta);
    expected(0, 2) = std::sin(beta);
    expected(2, 0) = -std::sin(beta);
    expected(2, 2) = std::cos(beta);
    CHECK(max_abs_diff(r, expected) < 1e-15);
}

TEST_CASE("euler rotations are orthogonal with determinant one") {
    SplitMix64 rng(0x0154ULL);
    for (int rep = 0; rep < 30; ++rep) {
        const Mat3 r = euler_rotation(two_pi * rng.uniform(), std::numbers::pi * rng.uniform(),
                                      two_pi * rng.uniform());
        CHECK(max_abs_diff(r * r.transpose(), Mat3::identity()) < 1e-12);
        const double det = r(0, 0) * (r(1, 1) * r(2, 2) - r(1, 2) * r(2, 1)) -
                           r(0, 1) * (r(1, 0) * r(2, 2) - r(1, 2) * r(2, 0)) +
                           r(0, 2) * (r(1, 0) * r(2, 1) - r(1, 1) * r(2, 0));
        CHECK(det == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("projector-trace oracle equals the half-angle law") {
    CHECK(quantum_oracle_probability(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(quantum_oracle_probability(std::numbers::pi) < 1e-12);
    CHECK(quantum_oracle_probability(2.0 * std::numbers::pi / 3.0) ==
          doctest::Approx(0.25).epsilon(1e-13));
    for (int k = 0; k <= 1000; ++k) {
        const double theta = two_pi * k / 1000.0;
        const double c = std::cos(0.5 * theta);
        CHECK(std::abs(quantum_oracle_probability(theta) - c * c) < 1e-12);
    }
}

TEST_CASE("sweep rows carry consistent columns") {
    const auto rows = malus_sweep({0.5}, 0.0, two_pi, 101);
    REQUIRE(rows.size() == 101);
    CHECK(rows.front().theta == 0.0);
    CHECK(rows.front().f_ode == 1.0);
    CHECK(rows.back().theta == doctest::Approx(two_pi).epsilon(1e-15));
    for (const SweepRow& row : rows) {
        CHECK(row.abs_err < 1e-8);
        CHECK(std::abs(row.f_closed - std::cos(0.5 * row.theta)) < 1e-15);
        const double c = std::cos(0.5 * row.theta);
        CHECK(std::abs(row.p_oracle - c * c) < 1e-12);
        CHECK(row.p_malus >= 0.0);
        CHECK(row.p_malus <= 1.0);
    }
}

}
