#include "qinfo/malus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qinfo/matkernel.hpp"
#include "qinfo/qstate.hpp"

namespace qinfo {

namespace {

struct Fg {
    double f;
    double g;
};

Fg rk4_step(Fg y, double n, double h) {
    auto deriv = [n](Fg s) { return Fg{-n * s.g, n * s.f}; };
    const Fg k1 = deriv(y);
    const Fg k2 = deriv({y.f + 0.5 * h * k1.f, y.g + 0.5 * h * k1.g});
    const Fg k3 = deriv({y.f + 0.5 * h * k2.f, y.g + 0.5 * h * k2.g});
    const Fg k4 = deriv({y.f + h * k3.f, y.g + h * k3.g});
    return {y.f + h / 6.0 * (k1.f + 2.0 * k2.f + 2.0 * k3.f + k4.f),
            y.g + h / 6.0 * (k1.g + 2.0 * k2.g + 2.0 * k3.g + k4.g)};
}

void check_parameter(MalusParameter n) {
    if (!(n.n > 0.0)) fail(Errc::invalid_argument, "winding constant must be positive");
}

} // namespace

OdeSolution solve_f_ode(MalusParameter n, double theta_max, int steps) {
    check_parameter(n);
    if (steps < 100) fail(Errc::invalid_argument, "need at least 100 integration steps");
    if (!(theta_max > 0.0)) fail(Errc::invalid_argument, "theta_max must be positive");

    OdeSolution out;
    out.theta.resize(static_cast<size_t>(steps) + 1);
    out.f.resize(static_cast<size_t>(steps) + 1);
    out.g.resize(static_cast<size_t>(steps) + 1);

    const double h = theta_max / steps;
    Fg y{1.0, 0.0};
    out.theta[0] = 0.0;
    out.f[0] = 1.0;
    out.g[0] = 0.0;
    out.max_abs_deviation = 0.0;
    for (int k = 1; k <= steps; ++k) {
        y = rk4_step(y, n.n, h);
        const double theta = k * h;
        out.theta[static_cast<size_t>(k)] = theta;
        out.f[static_cast<size_t>(k)] = y.f;
        out.g[static_cast<size_t>(k)] = y.g;
        out.max_abs_deviation =
            std::max(out.max_abs_deviation, std::abs(y.f - std::cos(n.n * theta)));
    }
    return out;
}

Mat3 rotation_theta(MalusParameter n, double theta) {
    check_parameter(n);
    const double c = std::cos(n.n * theta);
    const double s = std::sin(n.n * theta);
    Mat3 r = Mat3::identity();
    r(1, 1) = c;
    r(1, 2) = -s;
    r(2, 1) = s;
    r(2, 2) = c;
    return r;
}

double malus_probability(MalusParameter n, double theta) {
    check_parameter(n);
    const double c = std::cos(0.5 * n.n * theta);
    return c * c;
}

Mat3 euler_rotation(double alpha, double beta, double gamma) {
    auto rot_z = [](double a) {
        Mat3 r = Mat3::identity();
        r(0, 0) = std::cos(a);
        r(0, 1) = -std::sin(a);
        r(1, 0) = std::sin(a);
        r(1, 1) = std::cos(a);
        return r;
    };
    Mat3 ry = Mat3::identity();
    ry(0, 0) = std::cos(beta);
    ry(0, 2) = std::sin(beta);
    ry(2, 0) = -std::sin(beta);
    ry(2, 2) = std::cos(beta);
    return rot_z(alpha) * ry * rot_z(gamma);
}

double quantum_oracle_probability(double theta) {
    const DensityMatrix rho_z = density_from_info({0.0, 0.0, 1.0});
    // Projector onto spin-up along (sin theta, 0, cos theta).
    ComplexMatrix p = ComplexMatrix::identity(2);
    p += cplx(std::sin(theta)) * pauli::x();
    p += cplx(std::cos(theta)) * pauli::z();
    p *= cplx(0.5);
    return outcome_probability(rho_z, p);
}

std::vector<SweepRow> malus_sweep(MalusParameter n, double start, double stop, int count,
                                  int steps_per_turn) {
    check_parameter(n);
    if (count < 2) fail(Errc::invalid_argument, "sweep needs at least two points");
    if (start < 0.0 || !(stop > start)) fail(Errc::invalid_argument, "need 0 <= start < stop");
    if (steps_per_turn < 100) fail(Errc::invalid_argument, "need at least 100 steps per turn");

    const double h_target = 2.0 * std::numbers::pi / steps_per_turn;
    auto advance = [&](Fg y, double from, double to) {
        const double span = to - from;
        const int substeps = std::max(1, static_cast<int>(std::ceil(span / h_target)));
        const double h = span / substeps;
        for (int s = 0; s < substeps; ++s) y = rk4_step(y, n.n, h);
        return y;
    };

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<size_t>(count));
    Fg y{1.0, 0.0};
    double at = 0.0;
    for (int k = 0; k < count; ++k) {
        const double theta = start + (stop - start) * k / (count - 1);
        y = advance(y, at, theta);
        at = theta;
        SweepRow row;
        row.theta = theta;
        row.f_ode = y.f;
        row.f_closed = std::cos(n.n * theta);
        row.p_malus = malus_probability(n, theta);
        row.p_oracle = quantum_oracle_probability(theta);
        row.abs_err = std::abs(row.f_ode - row.f_closed);
        rows.push_back(row);
    }
    return rows;
}

} // namespace qinfo
