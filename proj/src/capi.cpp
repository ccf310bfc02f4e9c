#include "qinfo.h"

#include <cstdlib>
#include <cstring>
#include <span>
#include <string>

#include "qinfo/dynamics.hpp"
#include "qinfo/entangle.hpp"
#include "qinfo/errors.hpp"
#include "qinfo/infomeasure.hpp"
#include "qinfo/malus.hpp"
#include "qinfo/matkernel.hpp"
#include "qinfo/mub.hpp"
#include "qinfo/qstate.hpp"
#include "qinfo/stochastics.hpp"

struct qinfo_state {
    qinfo::DensityMatrix rho;
};

struct qinfo_mub {
    qinfo::MubSet set;
};

namespace {

thread_local std::string g_last_error;

qinfo_status to_status(qinfo::Errc code) {
    using qinfo::Errc;
    switch (code) {
        case Errc::ok: return QINFO_OK;
        case Errc::invalid_argument: return QINFO_ERR_INVALID_ARGUMENT;
        case Errc::invalid_distribution: return QINFO_ERR_INVALID_DISTRIBUTION;
        case Errc::bits_mode_requires_power_of_two: return QINFO_ERR_BITS_MODE_REQUIRES_POWER_OF_TWO;
        case Errc::not_binary: return QINFO_ERR_NOT_BINARY;
        case Errc::not_hermitian: return QINFO_ERR_NOT_HERMITIAN;
        case Errc::not_projector: return QINFO_ERR_NOT_PROJECTOR;
        case Errc::dimension_too_large: return QINFO_ERR_DIMENSION_TOO_LARGE;
        case Errc::wrong_dimension: return QINFO_ERR_WRONG_DIMENSION;
        case Errc::dimension_mismatch: return QINFO_ERR_DIMENSION_MISMATCH;
        case Errc::unphysical_vector: return QINFO_ERR_UNPHYSICAL_VECTOR;
        case Errc::invalid_density: return QINFO_ERR_INVALID_DENSITY;
        case Errc::zero_probability_outcome: return QINFO_ERR_ZERO_PROBABILITY_OUTCOME;
        case Errc::unsupported_dimension: return QINFO_ERR_UNSUPPORTED_DIMENSION;
        case Errc::zero_field: return QINFO_ERR_ZERO_FIELD;
        case Errc::parse_error: return QINFO_ERR_PARSE;
    }
    return QINFO_ERR_INVALID_ARGUMENT;
}

template <typename Fn>
qinfo_status guarded(Fn&& fn) {
    try {
        fn();
        return QINFO_OK;
    } catch (const qinfo::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QINFO_ERR_INVALID_ARGUMENT;
    }
}

void require(bool cond, const char* what) {
    if (!cond) qinfo::fail(qinfo::Errc::invalid_argument, what);
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qinfo::ComplexMatrix matrix_from_buffers(int dim, const double* re, const double* im) {
    require(dim >= 1, "dimension must be positive");
    require(re != nullptr, "real buffer is null");
    qinfo::ComplexMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            m(r, c) = qinfo::cplx(re[r * dim + c], im != nullptr ? im[r * dim + c] : 0.0);
    return m;
}

void matrix_to_buffers(const qinfo::ComplexMatrix& m, double* re, double* im) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            if (re != nullptr) re[r * m.cols() + c] = m(r, c).real();
            if (im != nullptr) im[r * m.cols() + c] = m(r, c).imag();
        }
}

qinfo::Norm to_norm(qinfo_norm scheme) {
    require(scheme == QINFO_NORM_UNIT || scheme == QINFO_NORM_BITS, "unknown normalization");
    return scheme == QINFO_NORM_UNIT ? qinfo::Norm::unit : qinfo::Norm::bits;
}

qinfo::ProbabilityVector prob_from(const double* p, int n) {
    require(p != nullptr, "probability buffer is null");
    require(n >= 0, "negative outcome count");
    return qinfo::ProbabilityVector::make(std::span<const double>(p, static_cast<size_t>(n)));
}

qinfo::Vec3 vec3_from(const double v[3]) {
    require(v != nullptr, "vector buffer is null");
    return {v[0], v[1], v[2]};
}

} // namespace

extern "C" {

const char* qinfo_version(void) { return "1.0.0"; }

const char* qinfo_status_name(qinfo_status status) {
    switch (status) {
        case QINFO_OK: return "ok";
        case QINFO_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case QINFO_ERR_INVALID_DISTRIBUTION: return "invalid_distribution";
        case QINFO_ERR_BITS_MODE_REQUIRES_POWER_OF_TWO: return "bits_mode_requires_power_of_two";
        case QINFO_ERR_NOT_BINARY: return "not_binary";
        case QINFO_ERR_NOT_HERMITIAN: return "not_hermitian";
        case QINFO_ERR_NOT_PROJECTOR: return "not_projector";
        case QINFO_ERR_DIMENSION_TOO_LARGE: return "dimension_too_large";
        case QINFO_ERR_WRONG_DIMENSION: return "wrong_dimension";
        case QINFO_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
        case QINFO_ERR_UNPHYSICAL_VECTOR: return "unphysical_vector";
        case QINFO_ERR_INVALID_DENSITY: return "invalid_density";
        case QINFO_ERR_ZERO_PROBABILITY_OUTCOME: return "zero_probability_outcome";
        case QINFO_ERR_UNSUPPORTED_DIMENSION: return "unsupported_dimension";
        case QINFO_ERR_ZERO_FIELD: return "zero_field";
        case QINFO_ERR_PARSE: return "parse_error";
    }
    return "unknown";
}

const char* qinfo_last_error(void) { return g_last_error.c_str(); }

void qinfo_string_free(char* s) { std::free(s); }

/* ---- measures ---- */

qinfo_status qinfo_shannon_entropy(const double* p, int n, double* out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = qinfo::shannon_entropy(prob_from(p, n));
    });
}

qinfo_status qinfo_uncertainty(const double* p, int n, double* out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = qinfo::uncertainty(prob_from(p, n));
    });
}

qinfo_status qinfo_info_measure(const double* p, int n, qinfo_norm scheme, double* out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = qinfo::info_measure(prob_from(p, n), to_norm(scheme));
    });
}

qinfo_status qinfo_binary_info(const double* p, int n, double* i_out, double* info_out) {
    return guarded([&] {
        const qinfo::BinaryInfo b = qinfo::binary_info(prob_from(p, n));
        if (i_out != nullptr) *i_out = b.i;
        if (info_out != nullptr) *info_out = b.info;
    });
}

/* ---- states ---- */

void qinfo_state_free(qinfo_state* state) { delete state; }

qinfo_status qinfo_state_from_info(const double i[3], qinfo_state** out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        const qinfo::Vec3 v = vec3_from(i);
        *out = new qinfo_state{qinfo::density_from_info({v[0], v[1], v[2]})};
    });
}

qinfo_status qinfo_state_from_matrix(int dim, const double* re, const double* im,
                                     qinfo_state** out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = new qinfo_state{qinfo::DensityMatrix::make(matrix_from_buffers(dim, re, im))};
    });
}

qinfo_status qinfo_state_from_json(const char* text, qinfo_state** out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        require(text != nullptr, "JSON text is null");
        *out = new qinfo_state{qinfo::density_from_json(text)};
    });
}

qinfo_status qinfo_state_to_json(const qinfo_state* state, char** out) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "null argument");
        *out = dup_string(qinfo::density_to_json(state->rho));
        require(*out != nullptr, "allocation failed");
    });
}

int qinfo_state_dim(const qinfo_state* state) { return state != nullptr ? state->rho.dim() : 0; }

qinfo_status qinfo_state_get(const qinfo_state* state, double* re, double* im) {
    return guarded([&] {
        require(state != nullptr, "state is null");
        matrix_to_buffers(state->rho.matrix(), re, im);
    });
}

qinfo_status qinfo_state_to_info(const qinfo_state* state, double i_out[3]) {
    return guarded([&] {
        require(state != nullptr && i_out != nullptr, "null argument");
        const qinfo::InfoVector iv = qinfo::info_from_density(state->rho);
        i_out[0] = iv.i1;
        i_out[1] = iv.i2;
        i_out[2] = iv.i3;
    });
}

qinfo_status qinfo_state_purity(const qinfo_state* state, double* out) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "null argument");
        *out = state->rho.purity();
    });
}

qinfo_status qinfo_total_info_qubit(const double i[3], double* out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        const qinfo::Vec3 v = vec3_from(i);
        *out = qinfo::total_info_qubit({v[0], v[1], v[2]});
    });
}

qinfo_status qinfo_measurement_update(const qinfo_state* state, const double* proj_re,
                                      const double* proj_im, int outcome_observed,
                                      qinfo_state** post, double* probability) {
    return guarded([&] {
        require(state != nullptr, "state is null");
        const qinfo::ComplexMatrix projector =
            matrix_from_buffers(state->rho.dim(), proj_re, proj_im);
        qinfo::MeasurementUpdate upd =
            qinfo::measurement_update(state->rho, projector, outcome_observed != 0);
        if (probability != nullptr) *probability = upd.probability;
        if (post != nullptr) *post = new qinfo_state{std::move(upd.state)};
    });
}

/* ---- mutually unbiased bases ---- */

void qinfo_mub_free(qinfo_mub* mub) { delete mub; }

qinfo_status qinfo_mub_construct(int dim, qinfo_mub** out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = new qinfo_mub{qinfo::mub_construct(dim)};
    });
}

int qinfo_mub_dim(const qinfo_mub* mub) { return mub != nullptr ? mub->set.dim() : 0; }

int qinfo_mub_count(const qinfo_mub* mub) {
    return mub != nullptr ? static_cast<int>(mub->set.bases().size()) : 0;
}

qinfo_status qinfo_mub_basis(const qinfo_mub* mub, int index, double* re, double* im) {
    return guarded([&] {
        require(mub != nullptr, "basis set is null");
        require(index >= 0 && index < static_cast<int>(mub->set.bases().size()),
                "basis index out of range");
        matrix_to_buffers(mub->set.basis(index), re, im);
    });
}

qinfo_status qinfo_mub_verify(const qinfo_mub* mub, double* orthonormality_error,
                              double* unbiasedness_error) {
    return guarded([&] {
        require(mub != nullptr, "basis set is null");
        const qinfo::MubVerification v = qinfo::verify_mub(mub->set);
        if (orthonormality_error != nullptr) *orthonormality_error = v.orthonormality_error;
        if (unbiasedness_error != nullptr) *unbiasedness_error = v.unbiasedness_error;
    });
}

qinfo_status qinfo_mub_to_json(const qinfo_mub* mub, char** out) {
    return guarded([&] {
        require(mub != nullptr && out != nullptr, "null argument");
        *out = dup_string(qinfo::mub_to_json(mub->set, qinfo::verify_mub(mub->set)));
        require(*out != nullptr, "allocation failed");
    });
}

qinfo_status qinfo_mub_probabilities(const qinfo_state* state, const qinfo_mub* mub, double* out) {
    return guarded([&] {
        require(state != nullptr && mub != nullptr && out != nullptr, "null argument");
        const auto probs = qinfo::mub_probabilities(state->rho, mub->set);
        size_t at = 0;
        for (const qinfo::ProbabilityVector& pv : probs)
            for (double v : pv.values()) out[at++] = v;
    });
}

qinfo_status qinfo_total_info_general(const qinfo_state* state, const qinfo_mub* mub,
                                      qinfo_norm scheme, double* out) {
    return guarded([&] {
        require(state != nullptr && mub != nullptr && out != nullptr, "null argument");
        *out = qinfo::total_info_general(state->rho, mub->set, to_norm(scheme));
    });
}

qinfo_status qinfo_param_count(int n, int capacity, int* factors, long long* locals,
                               int* nfactors_out, long long* correlations_out,
                               long long* total_out) {
    return guarded([&] {
        const qinfo::ParamCount pc = qinfo::param_count_decomposition(n);
        const int nfactors = static_cast<int>(pc.factors.size());
        require(capacity >= nfactors || (factors == nullptr && locals == nullptr),
                "factor buffer too small");
        for (int k = 0; k < nfactors; ++k) {
            if (factors != nullptr) factors[k] = pc.factors[static_cast<size_t>(k)];
            if (locals != nullptr) locals[k] = pc.local_params[static_cast<size_t>(k)];
        }
        if (nfactors_out != nullptr) *nfactors_out = nfactors;
        if (correlations_out != nullptr) *correlations_out = pc.correlation_params;
        if (total_out != nullptr) *total_out = pc.total;
    });
}

/* ---- probability law ---- */

qinfo_status qinfo_malus_solve_ode(double n, double theta_max, int steps, double* theta, double* f,
                                   double* max_abs_deviation) {
    return guarded([&] {
        const qinfo::OdeSolution sol = qinfo::solve_f_ode({n}, theta_max, steps);
        for (size_t k = 0; k < sol.theta.size(); ++k) {
            if (theta != nullptr) theta[k] = sol.theta[k];
            if (f != nullptr) f[k] = sol.f[k];
        }
        if (max_abs_deviation != nullptr) *max_abs_deviation = sol.max_abs_deviation;
    });
}

qinfo_status qinfo_malus_probability(double n, double theta, double* out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = qinfo::malus_probability({n}, theta);
    });
}

qinfo_status qinfo_malus_rotation(double n, double theta, double r_out[9]) {
    return guarded([&] {
        require(r_out != nullptr, "output pointer is null");
        const qinfo::Mat3 r = qinfo::rotation_theta({n}, theta);
        for (int k = 0; k < 9; ++k) r_out[k] = r.m[static_cast<size_t>(k)];
    });
}

qinfo_status qinfo_euler_rotation(double alpha, double beta, double gamma, double r_out[9]) {
    return guarded([&] {
        require(r_out != nullptr, "output pointer is null");
        const qinfo::Mat3 r = qinfo::euler_rotation(alpha, beta, gamma);
        for (int k = 0; k < 9; ++k) r_out[k] = r.m[static_cast<size_t>(k)];
    });
}

qinfo_status qinfo_quantum_oracle_probability(double theta, double* out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = qinfo::quantum_oracle_probability(theta);
    });
}

qinfo_status qinfo_malus_sweep(double n, double start, double stop, int count, double* rows) {
    return guarded([&] {
        require(rows != nullptr, "output pointer is null");
        const auto sweep = qinfo::malus_sweep({n}, start, stop, count);
        size_t at = 0;
        for (const qinfo::SweepRow& row : sweep) {
            rows[at++] = row.theta;
            rows[at++] = row.f_ode;
            rows[at++] = row.f_closed;
            rows[at++] = row.p_malus;
            rows[at++] = row.p_oracle;
            rows[at++] = row.abs_err;
        }
    });
}

/* ---- correlation information ---- */

qinfo_status qinfo_correlation_tensor(const qinfo_state* state, double t_out[9]) {
    return guarded([&] {
        require(state != nullptr && t_out != nullptr, "null argument");
        const qinfo::CorrelationTensor ct = qinfo::correlation_tensor(state->rho);
        for (int k = 0; k < 9; ++k) t_out[k] = ct.t.m[static_cast<size_t>(k)];
    });
}

qinfo_status qinfo_joint_info(const qinfo_state* state, const double a[3], const double b[3],
                              double* out) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "null argument");
        *out = qinfo::joint_info(state->rho, vec3_from(a), vec3_from(b));
    });
}

qinfo_status qinfo_info_corr(const qinfo_state* state, const double planes[12], double* out) {
    return guarded([&] {
        require(state != nullptr && planes != nullptr && out != nullptr, "null argument");
        const qinfo::PlanePair pair =
            qinfo::PlanePair::make(vec3_from(planes), vec3_from(planes + 3), vec3_from(planes + 6),
                                   vec3_from(planes + 9));
        *out = qinfo::info_corr(state->rho, pair);
    });
}

qinfo_status qinfo_max_info_corr(const qinfo_state* state, qinfo_opt_method method,
                                 double* value_out, double planes_out[12]) {
    return guarded([&] {
        require(state != nullptr, "state is null");
        require(method == QINFO_OPT_ANALYTIC || method == QINFO_OPT_NUMERIC, "unknown method");
        const qinfo::MaxInfoCorr mic = qinfo::max_info_corr(
            state->rho, method == QINFO_OPT_ANALYTIC ? qinfo::MaxInfoCorrMethod::analytic
                                                     : qinfo::MaxInfoCorrMethod::numeric);
        if (value_out != nullptr) *value_out = mic.value;
        if (planes_out != nullptr) {
            const qinfo::Vec3* vecs[4] = {&mic.argmax_planes.a1, &mic.argmax_planes.a2,
                                          &mic.argmax_planes.b1, &mic.argmax_planes.b2};
            for (int v = 0; v < 4; ++v)
                for (int k = 0; k < 3; ++k) planes_out[3 * v + k] = (*vecs[v])[static_cast<size_t>(k)];
        }
    });
}

qinfo_status qinfo_chsh_report(const qinfo_state* state, double* m_out, double* chsh_max_out,
                               int* violates_bell, int* entangled_by_criterion) {
    return guarded([&] {
        require(state != nullptr, "state is null");
        const qinfo::ChshReport rep = qinfo::chsh_and_verdict(state->rho);
        if (m_out != nullptr) *m_out = rep.m;
        if (chsh_max_out != nullptr) *chsh_max_out = rep.chsh_max;
        if (violates_bell != nullptr) *violates_bell = rep.violates_bell ? 1 : 0;
        if (entangled_by_criterion != nullptr)
            *entangled_by_criterion = rep.entangled_by_criterion ? 1 : 0;
    });
}

/* ---- dynamics ---- */

qinfo_status qinfo_axis_from_hamiltonian(const double h_re[4], const double h_im[4],
                                         double u_out[3]) {
    return guarded([&] {
        require(u_out != nullptr, "output pointer is null");
        const qinfo::Hamiltonian2 h =
            qinfo::Hamiltonian2::make(matrix_from_buffers(2, h_re, h_im));
        const qinfo::Vec3 u = qinfo::axis_from_hamiltonian(h);
        u_out[0] = u[0];
        u_out[1] = u[1];
        u_out[2] = u[2];
    });
}

qinfo_status qinfo_hamiltonian_from_json(const char* text, double h_re[4], double h_im[4]) {
    return guarded([&] {
        require(text != nullptr, "JSON text is null");
        const qinfo::ComplexMatrix h = qinfo::hermitian_from_json(text);
        if (h.rows() != 2) qinfo::fail(qinfo::Errc::wrong_dimension, "Hamiltonian must be 2x2");
        matrix_to_buffers(h, h_re, h_im);
    });
}

qinfo_status qinfo_evolve_info(const double i0[3], const double u[3], double t, double dt,
                               int capacity, double* rows, int* rows_out) {
    return guarded([&] {
        const qinfo::InfoTrajectory traj =
            qinfo::evolve_info(vec3_from(i0), qinfo::AxisSchedule::constant(vec3_from(u)), t, dt);
        const int count = static_cast<int>(traj.times.size());
        if (rows_out != nullptr) *rows_out = count;
        if (rows == nullptr) return;
        require(capacity >= count, "trajectory buffer too small");
        size_t at = 0;
        for (int k = 0; k < count; ++k) {
            const qinfo::Vec3& i = traj.states[static_cast<size_t>(k)];
            rows[at++] = traj.times[static_cast<size_t>(k)];
            rows[at++] = i[0];
            rows[at++] = i[1];
            rows[at++] = i[2];
            rows[at++] = qinfo::norm(i);
        }
    });
}

qinfo_status qinfo_evolve_exact(const qinfo_state* state, const double h_re[4],
                                const double h_im[4], double t, qinfo_state** out) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "null argument");
        const qinfo::Hamiltonian2 h =
            qinfo::Hamiltonian2::make(matrix_from_buffers(2, h_re, h_im));
        *out = new qinfo_state{qinfo::evolve_exact(state->rho, h, t)};
    });
}

qinfo_status qinfo_debroglie_period(const double u[3], double* out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = qinfo::debroglie_period(vec3_from(u));
    });
}

/* ---- seeded trials ---- */

qinfo_status qinfo_simulate_sg(double theta, long long trials, uint64_t seed, double* p_out,
                               long long* yes_count_out) {
    return guarded([&] {
        const qinfo::TrialRun run = qinfo::simulate_sg(theta, trials, seed);
        if (p_out != nullptr) *p_out = run.p;
        if (yes_count_out != nullptr) *yes_count_out = run.yes_count;
    });
}

qinfo_status qinfo_chebyshev_report(double theta, long long trials, double k, int runs,
                                    uint64_t seed, double* sigma_out, double* bound_out,
                                    double* violation_rate_out) {
    return guarded([&] {
        const qinfo::ChebyshevReport rep = qinfo::chebyshev_report(theta, trials, k, runs, seed);
        if (sigma_out != nullptr) *sigma_out = rep.sigma;
        if (bound_out != nullptr) *bound_out = rep.bound;
        if (violation_rate_out != nullptr) *violation_rate_out = rep.empirical_violation_rate;
    });
}

qinfo_status qinfo_per_trial_uncertainty(double p, double* out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = qinfo::per_trial_uncertainty(p);
    });
}

} /* extern "C" */
