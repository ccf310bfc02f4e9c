#ifndef QINFO_DYNAMICS_HPP
#define QINFO_DYNAMICS_HPP

#include <vector>

#include "qinfo/qstate.hpp"
#include "qinfo/vec3.hpp"

namespace qinfo {

// Rotation axis of the information vector, in angular-frequency units
// (hbar = 1). Time dependence is piecewise constant over the given samples.
class AxisSchedule {
public:
    static AxisSchedule constant(Vec3 u);
    // u(t) = values[k] for the largest times[k] <= t; times must be ascending
    // and start at 0.
    static AxisSchedule piecewise(std::vector<double> times, std::vector<Vec3> values);

    Vec3 at(double t) const;
    bool is_constant() const { return times_.size() == 1; }
    // Sample times after 0; integration steps never straddle these.
    const std::vector<double>& breakpoints() const { return times_; }

private:
    AxisSchedule() = default;
    std::vector<double> times_;
    std::vector<Vec3> values_;
};

// Hermitian 2x2 generator. Convention H = (tr H) I/2 + u.sigma/2, so that
// u_j = tr(H sigma_j) and the catalog obeys di/dt = u x i exactly; the trace
// part contributes only a global phase.
class Hamiltonian2 {
public:
    static Hamiltonian2 make(ComplexMatrix h); // validates 2x2 Hermitian
    static Hamiltonian2 from_axis(const Vec3& u);

    const ComplexMatrix& matrix() const { return h_; }

private:
    explicit Hamiltonian2(ComplexMatrix h) : h_(std::move(h)) {}
    ComplexMatrix h_;
};

// u_j = tr(H sigma_j).
Vec3 axis_from_hamiltonian(const Hamiltonian2& h);

struct InfoTrajectory {
    std::vector<double> times;
    std::vector<Vec3> states;

    const Vec3& final_state() const { return states.back(); }
};

// Fixed-step fourth-order integration of di/dt = u(t) x i from 0 to t.
InfoTrajectory evolve_info(const Vec3& i0, const AxisSchedule& u, double t, double dt);

// rho(t) = U rho0 U^dag with U = exp(-i H t); the Liouville-equation solution
// for constant H.
DensityMatrix evolve_exact(const DensityMatrix& rho0, const Hamiltonian2& h, double t);

// Period of one complete catalog rotation under a constant axis: 2 pi / |u|.
double debroglie_period(const Vec3& u);

} // namespace qinfo

#endif
