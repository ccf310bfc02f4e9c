#include "qinfo/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qinfo/tolerances.hpp"

namespace qinfo {

AxisSchedule AxisSchedule::constant(Vec3 u) {
    AxisSchedule out;
    out.times_ = {0.0};
    out.values_ = {u};
    return out;
}

AxisSchedule AxisSchedule::piecewise(std::vector<double> times, std::vector<Vec3> values) {
    if (times.empty() || times.size() != values.size())
        fail(Errc::invalid_argument, "schedule needs matching, nonempty samples");
    if (times.front() != 0.0) fail(Errc::invalid_argument, "schedule must start at t = 0");
    for (size_t k = 1; k < times.size(); ++k)
        if (!(times[k] > times[k - 1]))
            fail(Errc::invalid_argument, "schedule times must be strictly ascending");
    AxisSchedule out;
    out.times_ = std::move(times);
    out.values_ = std::move(values);
    return out;
}

Vec3 AxisSchedule::at(double t) const {
    size_t k = times_.size();
    while (k > 1 && times_[k - 1] > t) --k;
    return values_[k - 1];
}

Hamiltonian2 Hamiltonian2::make(ComplexMatrix h) {
    if (h.rows() != 2 || h.cols() != 2) fail(Errc::wrong_dimension, "Hamiltonian must be 2x2");
    if (!h.is_hermitian(tol.identity)) fail(Errc::not_hermitian, "Hamiltonian is not Hermitian");
    return Hamiltonian2(std::move(h));
}

Hamiltonian2 Hamiltonian2::from_axis(const Vec3& u) {
    ComplexMatrix h(2, 2);
    h += cplx(u[0]) * pauli::x();
    h += cplx(u[1]) * pauli::y();
    h += cplx(u[2]) * pauli::z();
    h *= cplx(0.5);
    return Hamiltonian2(std::move(h));
}

Vec3 axis_from_hamiltonian(const Hamiltonian2& h) {
    Vec3 u;
    for (int j = 0; j < 3; ++j) u[j] = (h.matrix() * pauli::by_index(j)).trace().real();
    return u;
}

namespace {

Vec3 rk4_step(const Vec3& i, const Vec3& u, double h) {
    const Vec3 k1 = cross(u, i);
    const Vec3 k2 = cross(u, i + 0.5 * h * k1);
    const Vec3 k3 = cross(u, i + 0.5 * h * k2);
    const Vec3 k4 = cross(u, i + h * k3);
    return i + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// One output step of the piecewise-constant field, split so no stage ever
// straddles a schedule breakpoint.
Vec3 advance(const Vec3& i, const AxisSchedule& u, double from, double to) {
    Vec3 state = i;
    double at = from;
    for (double bp : u.breakpoints()) {
        if (bp <= at || bp >= to) continue;
        state = rk4_step(state, u.at(at), bp - at);
        at = bp;
    }
    return rk4_step(state, u.at(at), to - at);
}

} // namespace

InfoTrajectory evolve_info(const Vec3& i0, const AxisSchedule& u, double t, double dt) {
    if (!(dt > 0.0)) fail(Errc::invalid_argument, "dt must be positive");
    if (t < 0.0) fail(Errc::invalid_argument, "t must be nonnegative");

    InfoTrajectory out;
    out.times.push_back(0.0);
    out.states.push_back(i0);

    const long long full_steps = static_cast<long long>(std::floor(t / dt + 1e-12));
    Vec3 i = i0;
    double at = 0.0;
    for (long long k = 0; k < full_steps; ++k) {
        const double next = static_cast<double>(k + 1) * dt;
        i = advance(i, u, at, next);
        at = next;
        out.times.push_back(at);
        out.states.push_back(i);
    }
    if (t - at > 1e-15 * std::max(1.0, t)) {
        i = advance(i, u, at, t);
        out.times.push_back(t);
        out.states.push_back(i);
    }
    return out;
}

DensityMatrix evolve_exact(const DensityMatrix& rho0, const Hamiltonian2& h, double t) {
    if (rho0.dim() != 2) fail(Errc::wrong_dimension, "exact evolution is implemented for dim 2");
    const ComplexMatrix u = unitary_exp(h.matrix(), t);
    ComplexMatrix evolved = u * rho0.matrix() * u.adjoint();
    // Symmetrize away roundoff before re-validating.
    ComplexMatrix sym(2, 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) sym(r, c) = 0.5 * (evolved(r, c) + std::conj(evolved(c, r)));
    return DensityMatrix::make(std::move(sym));
}

double debroglie_period(const Vec3& u) {
    const double mag = norm(u);
    if (mag < tol.zero_field) fail(Errc::zero_field, "axis magnitude is zero; no rotation period");
    return 2.0 * std::numbers::pi / mag;
}

} // namespace qinfo
