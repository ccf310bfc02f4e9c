// Exercises the shared library through its C surface only.

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "qinfo.h"

TEST_SUITE("capi") {

TEST_CASE("version and status names") {
    CHECK(qinfo_version() != nullptr);
    CHECK(std::strcmp(qinfo_status_name(QINFO_OK), "ok") == 0);
    CHECK(std::strcmp(qinfo_status_name(QINFO_ERR_UNSUPPORTED_DIMENSION),
                      "unsupported_dimension") == 0);
}

TEST_CASE("measures and their error codes") {
    const double p[2] = {0.6, 0.4};
    double h = 0.0, u = 0.0, info = 0.0, i = 0.0, i2 = 0.0;
    CHECK(qinfo_shannon_entropy(p, 2, &h) == QINFO_OK);
    CHECK(h == doctest::Approx(0.9709505944546686).epsilon(1e-14));
    CHECK(qinfo_uncertainty(p, 2, &u) == QINFO_OK);
    CHECK(u == doctest::Approx(0.48).epsilon(1e-14));
    CHECK(qinfo_info_measure(p, 2, QINFO_NORM_UNIT, &info) == QINFO_OK);
    CHECK(info == doctest::Approx(0.04).epsilon(1e-12));
    CHECK(qinfo_binary_info(p, 2, &i, &i2) == QINFO_OK);
    CHECK(i == doctest::Approx(0.2).epsilon(1e-14));

    const double bad[2] = {0.7, 0.7};
    CHECK(qinfo_shannon_entropy(bad, 2, &h) == QINFO_ERR_INVALID_DISTRIBUTION);
    CHECK(std::strlen(qinfo_last_error()) > 0);

    const double three[3] = {0.5, 0.25, 0.25};
    CHECK(qinfo_info_measure(three, 3, QINFO_NORM_BITS, &info) ==
          QINFO_ERR_BITS_MODE_REQUIRES_POWER_OF_TWO);
    CHECK(qinfo_binary_info(three, 3, &i, &i2) == QINFO_ERR_NOT_BINARY);
    CHECK(qinfo_shannon_entropy(nullptr, 2, &h) == QINFO_ERR_INVALID_ARGUMENT);
}

TEST_CASE("state lifecycle, JSON round trip, measurement update") {
    const double iv[3] = {0.6, 0.0, 0.8};
    qinfo_state* state = nullptr;
    REQUIRE(qinfo_state_from_info(iv, &state) == QINFO_OK);
    CHECK(qinfo_state_dim(state) == 2);

    double back[3];
    CHECK(qinfo_state_to_info(state, back) == QINFO_OK);
    CHECK(back[0] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(back[2] == doctest::Approx(0.8).epsilon(1e-12));

    double purity = 0.0;
    CHECK(qinfo_state_purity(state, &purity) == QINFO_OK);
    CHECK(purity == doctest::Approx(1.0).epsilon(1e-12));

    char* text = nullptr;
    REQUIRE(qinfo_state_to_json(state, &text) == QINFO_OK);
    qinfo_state* reloaded = nullptr;
    REQUIRE(qinfo_state_from_json(text, &reloaded) == QINFO_OK);
    qinfo_string_free(text);
    double re[4], im[4], re2[4], im2[4];
    CHECK(qinfo_state_get(state, re, im) == QINFO_OK);
    CHECK(qinfo_state_get(reloaded, re2, im2) == QINFO_OK);
    for (int k = 0; k < 4; ++k) {
        CHECK(re[k] == doctest::Approx(re2[k]).epsilon(1e-15));
        CHECK(im[k] == doctest::Approx(im2[k]).epsilon(1e-15));
    }
    qinfo_state_free(reloaded);

    // project onto |0><0|
    const double proj_re[4] = {1, 0, 0, 0};
    const double proj_im[4] = {0, 0, 0, 0};
    qinfo_state* post = nullptr;
    double prob = 0.0;
    REQUIRE(qinfo_measurement_update(state, proj_re, proj_im, 1, &post, &prob) == QINFO_OK);
    CHECK(prob == doctest::Approx(0.9).epsilon(1e-12));
    double post_i[3];
    CHECK(qinfo_state_to_info(post, post_i) == QINFO_OK);
    CHECK(post_i[2] == doctest::Approx(1.0).epsilon(1e-12));
    qinfo_state_free(post);
    qinfo_state_free(state);

    const double unphysical[3] = {1.0, 1.0, 0.0};
    qinfo_state* bad = nullptr;
    CHECK(qinfo_state_from_info(unphysical, &bad) == QINFO_ERR_UNPHYSICAL_VECTOR);

    const double not_density_re[4] = {1.0, 0.0, 0.0, 1.0};
    CHECK(qinfo_state_from_matrix(2, not_density_re, nullptr, &bad) == QINFO_ERR_INVALID_DENSITY);
    CHECK(qinfo_state_from_json("{\"dim\": 2", &bad) == QINFO_ERR_PARSE);
}

TEST_CASE("basis set construction, verification, extraction") {
    qinfo_mub* mub = nullptr;
    REQUIRE(qinfo_mub_construct(3, &mub) == QINFO_OK);
    CHECK(qinfo_mub_dim(mub) == 3);
    CHECK(qinfo_mub_count(mub) == 4);

    double orth = 1.0, unbias = 1.0;
    CHECK(qinfo_mub_verify(mub, &orth, &unbias) == QINFO_OK);
    CHECK(orth < 1e-10);
    CHECK(unbias < 1e-10);

    double re[9], im[9];
    CHECK(qinfo_mub_basis(mub, 1, re, im) == QINFO_OK);
    for (int k = 0; k < 9; ++k)
        CHECK(re[k] * re[k] + im[k] * im[k] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(qinfo_mub_basis(mub, 4, re, im) == QINFO_ERR_INVALID_ARGUMENT);

    char* text = nullptr;
    REQUIRE(qinfo_mub_to_json(mub, &text) == QINFO_OK);
    CHECK(std::string(text).find("\"dim\":3") != std::string::npos);
    qinfo_string_free(text);

    // uniform outcome probabilities on the maximally mixed state
    const double third = 1.0 / 3.0;
    const double mixed_re[9] = {third, 0, 0, 0, third, 0, 0, 0, third};
    qinfo_state* mixed = nullptr;
    REQUIRE(qinfo_state_from_matrix(3, mixed_re, nullptr, &mixed) == QINFO_OK);
    double probs[12];
    CHECK(qinfo_mub_probabilities(mixed, mub, probs) == QINFO_OK);
    for (double v : probs) CHECK(v == doctest::Approx(third).epsilon(1e-12));
    double total = 1.0;
    CHECK(qinfo_total_info_general(mixed, mub, QINFO_NORM_UNIT, &total) == QINFO_OK);
    CHECK(total == doctest::Approx(0.0).epsilon(1e-12));
    qinfo_state_free(mixed);
    qinfo_mub_free(mub);

    qinfo_mub* six = nullptr;
    CHECK(qinfo_mub_construct(6, &six) == QINFO_ERR_UNSUPPORTED_DIMENSION);
    CHECK(std::string(qinfo_last_error()).find("open problem") != std::string::npos);
}

TEST_CASE("parameter counting") {
    int factors[8];
    long long locals[8];
    int nfactors = 0;
    long long correlations = 0, total = 0;
    REQUIRE(qinfo_param_count(6, 8, factors, locals, &nfactors, &correlations, &total) ==
            QINFO_OK);
    CHECK(nfactors == 2);
    CHECK(factors[0] == 2);
    CHECK(factors[1] == 3);
    CHECK(locals[0] == 3);
    CHECK(locals[1] == 8);
    CHECK(correlations == 24);
    CHECK(total == 35);
    CHECK(qinfo_param_count(30, 1, factors, locals, &nfactors, &correlations, &total) ==
          QINFO_ERR_INVALID_ARGUMENT);
}

TEST_CASE("probability law surface") {
    double p = 0.0;
    CHECK(qinfo_malus_probability(1.0, 0.0, &p) == QINFO_OK);
    CHECK(p == 1.0);
    CHECK(qinfo_malus_probability(-1.0, 0.0, &p) == QINFO_ERR_INVALID_ARGUMENT);

    double r[9];
    CHECK(qinfo_malus_rotation(1.0, 0.0, r) == QINFO_OK);
    CHECK(r[0] == 1.0);
    CHECK(r[4] == 1.0);
    CHECK(r[8] == 1.0);

    CHECK(qinfo_euler_rotation(0.0, 0.0, 0.0, r) == QINFO_OK);
    CHECK(r[0] == 1.0);

    double dev = 1.0;
    CHECK(qinfo_malus_solve_ode(1.0, 6.283185307179586, 10000, nullptr, nullptr, &dev) ==
          QINFO_OK);
    CHECK(dev < 1e-8);

    double oracle = 0.0;
    CHECK(qinfo_quantum_oracle_probability(2.0943951023931953, &oracle) == QINFO_OK);
    CHECK(oracle == doctest::Approx(0.25).epsilon(1e-12));

    double rows[5 * 6];
    CHECK(qinfo_malus_sweep(0.5, 0.0, 3.141592653589793, 5, rows) == QINFO_OK);
    CHECK(rows[0] == 0.0);
    CHECK(rows[1] == 1.0);
    CHECK(rows[4 * 6 + 5] < 1e-8); // abs_err at the last row
}

TEST_CASE("correlation information surface") {
    // the antisymmetric two-qubit combination
    const double s = 0.5;
    double re[16] = {0};
    re[5] = s;
    re[6] = -s;
    re[9] = -s;
    re[10] = s;
    qinfo_state* bell = nullptr;
    REQUIRE(qinfo_state_from_matrix(4, re, nullptr, &bell) == QINFO_OK);

    double tensor[9];
    CHECK(qinfo_correlation_tensor(bell, tensor) == QINFO_OK);
    CHECK(tensor[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(tensor[4] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(tensor[8] == doctest::Approx(-1.0).epsilon(1e-12));

    const double x[3] = {1, 0, 0}, y[3] = {0, 1, 0};
    double joint = 0.0;
    CHECK(qinfo_joint_info(bell, x, y, &joint) == QINFO_OK);
    CHECK(joint == doctest::Approx(0.0).epsilon(1e-12));

    const double planes[12] = {1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0};
    double corr = 0.0;
    CHECK(qinfo_info_corr(bell, planes, &corr) == QINFO_OK);
    CHECK(corr == doctest::Approx(2.0).epsilon(1e-12));

    double value = 0.0;
    double out_planes[12];
    CHECK(qinfo_max_info_corr(bell, QINFO_OPT_NUMERIC, &value, out_planes) == QINFO_OK);
    CHECK(value == doctest::Approx(2.0).epsilon(1e-6));

    double m = 0.0, chsh = 0.0;
    int violates = 0, entangled = 0;
    CHECK(qinfo_chsh_report(bell, &m, &chsh, &violates, &entangled) == QINFO_OK);
    CHECK(m == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(chsh == doctest::Approx(2.8284271247461903).epsilon(1e-12));
    CHECK(violates == 1);
    CHECK(entangled == 1);
    qinfo_state_free(bell);

    qinfo_state* qubit = nullptr;
    const double iv[3] = {0, 0, 1};
    REQUIRE(qinfo_state_from_info(iv, &qubit) == QINFO_OK);
    CHECK(qinfo_correlation_tensor(qubit, tensor) == QINFO_ERR_WRONG_DIMENSION);
    qinfo_state_free(qubit);
}

TEST_CASE("dynamics surface") {
    double h_re[4], h_im[4];
    REQUIRE(qinfo_hamiltonian_from_json(R"({"dim":2,"re":[[0.5,0],[0,-0.5]]})", h_re, h_im) ==
            QINFO_OK);
    double u[3];
    CHECK(qinfo_axis_from_hamiltonian(h_re, h_im, u) == QINFO_OK);
    CHECK(u[2] == doctest::Approx(1.0).epsilon(1e-14));

    CHECK(qinfo_hamiltonian_from_json(R"({"dim":2,"re":[[0,1],[0,0]]})", h_re, h_im) ==
          QINFO_ERR_NOT_HERMITIAN);
    CHECK(qinfo_hamiltonian_from_json(R"({"dim":3,"re":[[0,0,0],[0,0,0],[0,0,0]]})", h_re, h_im) ==
          QINFO_ERR_WRONG_DIMENSION);

    const double i0[3] = {1, 0, 0};
    int rows_needed = 0;
    REQUIRE(qinfo_evolve_info(i0, u, 1.5707963267948966, 1e-3, 0, nullptr, &rows_needed) ==
            QINFO_OK);
    CHECK(rows_needed == 1572);
    std::vector<double> rows(static_cast<size_t>(rows_needed) * 5);
    REQUIRE(qinfo_evolve_info(i0, u, 1.5707963267948966, 1e-3, rows_needed, rows.data(),
                              nullptr) == QINFO_OK);
    const double* last = rows.data() + (static_cast<size_t>(rows_needed) - 1) * 5;
    CHECK(last[2] == doctest::Approx(1.0).epsilon(1e-8)); // i2 after a quarter turn
    CHECK(last[4] == doctest::Approx(1.0).epsilon(1e-10));

    // exact route agrees
    const double iv[3] = {1, 0, 0};
    qinfo_state* state = nullptr;
    REQUIRE(qinfo_state_from_info(iv, &state) == QINFO_OK);
    qinfo_state* evolved = nullptr;
    REQUIRE(qinfo_evolve_exact(state, h_re, h_im, 1.5707963267948966, &evolved) == QINFO_OK);
    double exact_i[3];
    CHECK(qinfo_state_to_info(evolved, exact_i) == QINFO_OK);
    CHECK(exact_i[1] == doctest::Approx(1.0).epsilon(1e-10));
    qinfo_state_free(evolved);
    qinfo_state_free(state);

    double period = 0.0;
    CHECK(qinfo_debroglie_period(u, &period) == QINFO_OK);
    CHECK(period == doctest::Approx(6.283185307179586).epsilon(1e-14));
    const double zero[3] = {0, 0, 0};
    CHECK(qinfo_debroglie_period(zero, &period) == QINFO_ERR_ZERO_FIELD);
}

TEST_CASE("seeded trials surface") {
    double p = 0.0;
    long long yes = -1;
    REQUIRE(qinfo_simulate_sg(0.0, 1000, 7, &p, &yes) == QINFO_OK);
    CHECK(p == 1.0);
    CHECK(yes == 1000);

    long long again = 0;
    REQUIRE(qinfo_simulate_sg(1.1, 1000, 7, &p, &yes) == QINFO_OK);
    REQUIRE(qinfo_simulate_sg(1.1, 1000, 7, &p, &again) == QINFO_OK);
    CHECK(yes == again);

    double sigma = 0.0, bound = 0.0, rate = 1.0;
    REQUIRE(qinfo_chebyshev_report(1.5707963267948966, 10000, 2.0, 200, 42, &sigma, &bound,
                                   &rate) == QINFO_OK);
    CHECK(sigma == doctest::Approx(50.0).epsilon(1e-12));
    CHECK(bound == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(rate <= bound + 3.0 * std::sqrt(bound / 200));

    CHECK(qinfo_chebyshev_report(1.0, 100, 2.0, 5, 1, &sigma, &bound, &rate) ==
          QINFO_ERR_INVALID_ARGUMENT);

    double lack = 0.0;
    CHECK(qinfo_per_trial_uncertainty(0.5, &lack) == QINFO_OK);
    CHECK(lack == 0.25);
    CHECK(qinfo_per_trial_uncertainty(1.5, &lack) == QINFO_ERR_INVALID_ARGUMENT);
}

}
