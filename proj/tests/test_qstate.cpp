#include <doctest.h>

#include <cmath>

#include "qinfo/mub.hpp"
#include "qinfo/qstate.hpp"
#include "test_util.hpp"

using namespace qinfo;

namespace {

DensityMatrix projector_state(int which) {
    ComplexMatrix m(2, 2);
    m(which, which) = 1.0;
    return DensityMatrix::make(std::move(m));
}

ComplexMatrix ket_projector_z(int which) {
    ComplexMatrix p(2, 2);
    p(which, which) = 1.0;
    return p;
}

} // namespace

TEST_SUITE("qstate") {

TEST_CASE("catalog to density map on the reference vectors") {
    const DensityMatrix mixed = density_from_info({0.0, 0.0, 0.0});
    ComplexMatrix half = ComplexMatrix::identity(2);
    half *= cplx(0.5);
    CHECK(mixed.matrix().max_abs_diff(half) < 1e-15);

    const DensityMatrix up = density_from_info({0.0, 0.0, 1.0});
    CHECK(up.matrix().max_abs_diff(ket_projector_z(0)) < 1e-15);

    const DensityMatrix plus_x = density_from_info({1.0, 0.0, 0.0});
    const ComplexMatrix expected{{0.5, 0.5}, {0.5, 0.5}};
    CHECK(plus_x.matrix().max_abs_diff(expected) < 1e-15);
}

TEST_CASE("vectors longer than 1 are unphysical") {
    CHECK_THROWS_AS(density_from_info({0.8, 0.8, 0.0}), Error);
    try {
        density_from_info({1.1, 0.0, 0.0});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unphysical_vector);
    }
}

TEST_CASE("density to catalog on the reference matrices") {
    InfoVector i = info_from_density(projector_state(0));
    CHECK(i.i1 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(i.i2 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(i.i3 == doctest::Approx(1.0).epsilon(1e-15));

    const ComplexMatrix y_up{{0.5, cplx(0.0, -0.5)}, {cplx(0.0, 0.5), 0.5}};
    i = info_from_density(DensityMatrix::make(y_up));
    CHECK(i.i1 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(i.i2 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(i.i3 == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("catalog extraction needs dim 2") {
    SplitMix64 rng(1);
    const DensityMatrix rho = testutil::random_mixed_density(4, rng);
    CHECK_THROWS_AS(info_from_density(rho), Error);
    try {
        info_from_density(rho);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::wrong_dimension);
    }
}

TEST_CASE("round trips preserve states to machine precision") {
    SplitMix64 rng(0xD1CEULL);
    for (int rep = 0; rep < 40; ++rep) {
        // random physical catalog, biased to include near-pure cases
        qinfo::Vec3 dir = testutil::random_unit_vec3(rng);
        const double len = rep % 4 == 0 ? 1.0 : rng.uniform();
        const InfoVector i{len * dir[0], len * dir[1], len * dir[2]};
        const InfoVector back = info_from_density(density_from_info(i));
        CHECK(std::abs(back.i1 - i.i1) < 1e-12);
        CHECK(std::abs(back.i2 - i.i2) < 1e-12);
        CHECK(std::abs(back.i3 - i.i3) < 1e-12);

        const DensityMatrix rho = testutil::random_mixed_density(2, rng);
        const DensityMatrix rho_back = density_from_info(info_from_density(rho));
        CHECK(rho_back.matrix().max_abs_diff(rho.matrix()) < 1e-12);
    }
}

TEST_CASE("total information of a qubit catalog") {
    CHECK(total_info_qubit({0.0, 0.0, 1.0}) == 1.0);
    CHECK(total_info_qubit({0.0, 0.0, 0.0}) == 0.0);
    CHECK(total_info_qubit({0.6, 0.0, 0.8}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(total_info_qubit({1.0, 1.0, 1.0}), Error);
}

TEST_CASE("outcome probabilities over a complete basis set") {
    const MubSet triple = mub_construct(2);

    // maximally mixed: uniform in every context
    SUBCASE("maximally mixed is uniform everywhere") {
        const DensityMatrix mixed = density_from_info({0.0, 0.0, 0.0});
        for (const ProbabilityVector& p : mub_probabilities(mixed, triple))
            for (double v : p.values()) CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
    }

    // full knowledge of one proposition costs all knowledge of the other two
    SUBCASE("spin-up along z: certain in z, uniform in x and y") {
        const auto probs = mub_probabilities(projector_state(0), triple);
        REQUIRE(probs.size() == 3);
        CHECK(probs[0][0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(probs[0][1] == doctest::Approx(0.0).epsilon(1e-12));
        for (int b = 1; b < 3; ++b)
            for (int k = 0; k < 2; ++k)
                CHECK(probs[static_cast<size_t>(b)][k] == doctest::Approx(0.5).epsilon(1e-12));
    }

    SUBCASE("dimension mismatch is rejected") {
        SplitMix64 rng(3);
        const DensityMatrix rho3 = testutil::random_mixed_density(3, rng);
        CHECK_THROWS_AS(mub_probabilities(rho3, triple), Error);
    }

    SUBCASE("purity identity for a random pure state in dim 3") {
        SplitMix64 rng(5);
        const MubSet set3 = mub_construct(3);
        const DensityMatrix pure = testutil::random_pure_density(3, rng);
        double sum_sq = 0.0;
        for (const ProbabilityVector& p : mub_probabilities(pure, set3))
            for (double v : p.values()) sum_sq += v * v;
        CHECK(sum_sq == doctest::Approx(2.0).epsilon(1e-10));
    }
}

TEST_CASE("total information over complete basis sets") {
    SplitMix64 rng(0xF00DULL);

    SUBCASE("pure states in dim 4 carry 2 bits") {
        const MubSet set = mub_construct(4);
        for (int rep = 0; rep < 10; ++rep) {
            const DensityMatrix pure = testutil::random_pure_density(4, rng);
            CHECK(total_info_general(pure, set, Norm::bits) ==
                  doctest::Approx(2.0).epsilon(1e-10));
        }
    }

    SUBCASE("maximally mixed states carry nothing") {
        for (int n : {2, 3, 4, 5}) {
            const MubSet set = mub_construct(n);
            ComplexMatrix m = ComplexMatrix::identity(n);
            m *= cplx(1.0 / n);
            CHECK(total_info_general(DensityMatrix::make(std::move(m)), set, Norm::unit) ==
                  doctest::Approx(0.0).epsilon(1e-12));
        }
    }

    SUBCASE("pure states in dim 3 carry one unit") {
        const MubSet set = mub_construct(3);
        for (int rep = 0; rep < 10; ++rep) {
            const DensityMatrix pure = testutil::random_pure_density(3, rng);
            CHECK(total_info_general(pure, set, Norm::unit) == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("total information is invariant under the choice of complementary triple") {
    SplitMix64 rng(0x11AAULL);
    const MubSet standard = mub_construct(2);
    for (int rep = 0; rep < 25; ++rep) {
        const qinfo::Vec3 dir = testutil::random_unit_vec3(rng);
        const double len = rng.uniform();
        const InfoVector i{len * dir[0], len * dir[1], len * dir[2]};
        const MubSet rotated = standard.conjugated(testutil::random_unitary(2, rng));
        CHECK(total_info_general(density_from_info(i), rotated, Norm::unit) ==
              doctest::Approx(total_info_qubit(i)).epsilon(1e-10));
    }
}

TEST_CASE("total information depends only on purity") {
    SplitMix64 rng(0x77EEULL);
    for (int n : {2, 3, 4}) {
        const MubSet set = mub_construct(n);
        for (int rep = 0; rep < 5; ++rep) {
            const DensityMatrix rho = testutil::random_mixed_density(n, rng);
            const ComplexMatrix u = testutil::random_unitary(n, rng);
            ComplexMatrix conj = u * rho.matrix() * u.adjoint();
            ComplexMatrix sym(n, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) sym(r, c) = 0.5 * (conj(r, c) + std::conj(conj(c, r)));
            const DensityMatrix rotated = DensityMatrix::make(std::move(sym));
            CHECK(total_info_general(rotated, set, Norm::unit) ==
                  doctest::Approx(total_info_general(rho, set, Norm::unit)).epsilon(1e-10));
        }
    }
}

TEST_CASE("projective update on the reference cases") {
    SUBCASE("maximally mixed, projector onto |0>") {
        const MeasurementUpdate upd =
            measurement_update(density_from_info({0.0, 0.0, 0.0}), ket_projector_z(0), true);
        CHECK(upd.probability == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(upd.state.matrix().max_abs_diff(ket_projector_z(0)) < 1e-12);
    }

    SUBCASE("eigenstate stays put with probability one") {
        const MeasurementUpdate upd =
            measurement_update(projector_state(0), ket_projector_z(0), true);
        CHECK(upd.probability == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(upd.state.matrix().max_abs_diff(projector_state(0).matrix()) < 1e-12);
    }

    SUBCASE("measuring z on |+x> destroys the complementary knowledge") {
        const MeasurementUpdate upd =
            measurement_update(density_from_info({1.0, 0.0, 0.0}), ket_projector_z(0), true);
        CHECK(upd.probability == doctest::Approx(0.5).epsilon(1e-12));
        const InfoVector i = info_from_density(upd.state);
        CHECK(std::abs(i.i1) < 1e-12);
        CHECK(std::abs(i.i2) < 1e-12);
        CHECK(i.i3 == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("conditioning on an impossible outcome fails") {
        CHECK_THROWS_AS(measurement_update(projector_state(0), ket_projector_z(1), true), Error);
        try {
            measurement_update(projector_state(0), ket_projector_z(1), true);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::zero_probability_outcome);
        }
    }

    SUBCASE("non-projectors are rejected") {
        ComplexMatrix not_idem = ComplexMatrix::identity(2);
        not_idem *= cplx(0.5);
        CHECK_THROWS_AS(measurement_update(projector_state(0), not_idem, true), Error);
    }

    SUBCASE("updates always produce valid states") {
        SplitMix64 rng(0xABCDULL);
        for (int rep = 0; rep < 20; ++rep) {
            const DensityMatrix rho = testutil::random_mixed_density(2, rng);
            const qinfo::Vec3 d = testutil::random_unit_vec3(rng);
            ComplexMatrix p = ComplexMatrix::identity(2);
            p += cplx(d[0]) * pauli::x();
            p += cplx(d[1]) * pauli::y();
            p += cplx(d[2]) * pauli::z();
            p *= cplx(0.5);
            const bool observed = rng.next() % 2 == 0;
            const MeasurementUpdate upd = measurement_update(rho, p, observed);
            CHECK(upd.probability >= -1e-12);
            CHECK(upd.probability <= 1.0 + 1e-12);
            CHECK(upd.state.matrix().is_hermitian(1e-10));
            CHECK(std::abs(upd.state.matrix().trace().real() - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("JSON state format round trips and validates") {
    SUBCASE("matrix form round trip") {
        SplitMix64 rng(0x3322ULL);
        const DensityMatrix rho = testutil::random_mixed_density(3, rng);
        const DensityMatrix back = density_from_json(density_to_json(rho));
        CHECK(back.matrix().max_abs_diff(rho.matrix()) < 1e-15);
    }

    SUBCASE("catalog form is accepted") {
        const DensityMatrix rho = density_from_json(R"({"i": [0.0, 0.0, 1.0]})");
        CHECK(rho.matrix().max_abs_diff(ket_projector_z(0)) < 1e-15);
    }

    SUBCASE("malformed and invalid inputs are rejected with the right codes") {
        CHECK_THROWS_AS(density_from_json("not json"), Error);
        CHECK_THROWS_AS(density_from_json(R"({"re": [[1,0],[0,0]]})"), Error);
        CHECK_THROWS_AS(density_from_json(R"({"dim": 2, "re": [[1,0]]})"), Error);
        CHECK_THROWS_AS(density_from_json(R"({"i": [2.0, 0.0, 0.0]})"), Error);
        // trace != 1
        CHECK_THROWS_AS(density_from_json(R"({"dim": 2, "re": [[1,0],[0,1]]})"), Error);
        // negative eigenvalue
        CHECK_THROWS_AS(density_from_json(R"({"dim": 2, "re": [[1.5,0],[0,-0.5]]})"), Error);
        try {
            density_from_json(R"({"dim": 2, "re": [[1,0],[0,1]]})");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::invalid_density);
        }
    }

    SUBCASE("hermitian operator loader accepts traceful operators") {
        const ComplexMatrix h = hermitian_from_json(R"({"dim": 2, "re": [[3,1],[1,-1]]})");
        CHECK(h(0, 0).real() == 3.0);
        CHECK_THROWS_AS(hermitian_from_json(R"({"dim": 2, "re": [[0,1],[0,0]]})"), Error);
    }
}

}
