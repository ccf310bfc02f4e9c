#include "qinfo/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qinfo/tolerances.hpp"

namespace qinfo {

namespace {

void check_two_qubits(const DensityMatrix& rho) {
    if (rho.dim() != 4) fail(Errc::wrong_dimension, "two-qubit operation needs dim 4");
}

void check_unit(const Vec3& v, const char* what) {
    if (std::abs(norm(v) - 1.0) > tol.identity)
        fail(Errc::invalid_argument, std::string(what) + " is not a unit vector");
}

Vec3 normalized(const Vec3& v) { return (1.0 / norm(v)) * v; }

// Measurement frame with plane normal at spherical angles (alpha, beta):
// the plane is spanned by R_z(alpha) R_y(beta) applied to e_x and e_y. The
// in-plane angle is irrelevant: info_corr is invariant under rotations
// within either plane.
void frame_axes(double alpha, double beta, Vec3& e1, Vec3& e2) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double cb = std::cos(beta), sb = std::sin(beta);
    e1 = {ca * cb, sa * cb, -sb};
    e2 = {-sa, ca, 0.0};
}

double plane_sum(const Mat3& t, const Vec3& a1, const Vec3& a2, const Vec3& b1, const Vec3& b2) {
    const Vec3 tb1 = t * b1;
    const Vec3 tb2 = t * b2;
    const double x11 = dot(a1, tb1);
    const double x12 = dot(a1, tb2);
    const double x21 = dot(a2, tb1);
    const double x22 = dot(a2, tb2);
    return x11 * x11 + x12 * x12 + x21 * x21 + x22 * x22;
}

struct Angles {
    double alpha_a, beta_a, alpha_b, beta_b;
};

double objective(const Mat3& t, const Angles& x) {
    Vec3 a1, a2, b1, b2;
    frame_axes(x.alpha_a, x.beta_a, a1, a2);
    frame_axes(x.alpha_b, x.beta_b, b1, b2);
    return plane_sum(t, a1, a2, b1, b2);
}

// Golden-section maximization along one angle; never moves to a worse point.
double refine_coordinate(const Mat3& t, Angles x, double Angles::*coord, double window) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    const double start = x.*coord;
    const double f_start = objective(t, x);
    double lo = start - window;
    double hi = start + window;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    Angles xc = x, xd = x;
    xc.*coord = c;
    xd.*coord = d;
    double fc = objective(t, xc);
    double fd = objective(t, xd);
    for (int it = 0; it < 60; ++it) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            xc.*coord = c;
            fc = objective(t, xc);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            xd.*coord = d;
            fd = objective(t, xd);
        }
    }
    const double mid = 0.5 * (lo + hi);
    Angles xm = x;
    xm.*coord = mid;
    return objective(t, xm) >= f_start ? mid : start;
}

struct GridSeed {
    Angles x;
    double value;
};

MaxInfoCorr numeric_search(const Mat3& t) {
    constexpr int grid = 24;           // points per angle on each side
    constexpr int seeds_to_refine = 8; // best grid cells taken into descent
    const double pi = std::numbers::pi;

    struct Side {
        double alpha, beta;
        Vec3 e1, e2;
        Vec3 te1, te2; // T b for the right-hand side
    };
    std::vector<Side> sides;
    sides.reserve(static_cast<size_t>(grid) * grid);
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            Side s;
            s.alpha = 2.0 * pi * i / grid;
            s.beta = pi * j / (grid - 1);
            frame_axes(s.alpha, s.beta, s.e1, s.e2);
            s.te1 = t * s.e1;
            s.te2 = t * s.e2;
            sides.push_back(s);
        }

    std::vector<GridSeed> seeds;
    seeds.reserve(seeds_to_refine + 1);
    auto offer = [&](const GridSeed& cand) {
        seeds.push_back(cand);
        std::stable_sort(seeds.begin(), seeds.end(),
                         [](const GridSeed& l, const GridSeed& r) { return l.value > r.value; });
        if (seeds.size() > static_cast<size_t>(seeds_to_refine)) seeds.pop_back();
    };

    for (const Side& a : sides)
        for (const Side& b : sides) {
            const double x11 = dot(a.e1, b.te1);
            const double x12 = dot(a.e1, b.te2);
            const double x21 = dot(a.e2, b.te1);
            const double x22 = dot(a.e2, b.te2);
            const double val = x11 * x11 + x12 * x12 + x21 * x21 + x22 * x22;
            if (seeds.size() < static_cast<size_t>(seeds_to_refine) || val > seeds.back().value)
                offer({{a.alpha, a.beta, b.alpha, b.beta}, val});
        }

    Angles best_x = seeds.front().x;
    double best_val = seeds.front().value;
    for (const GridSeed& seed : seeds) {
        Angles x = seed.x;
        double window = 2.0 * pi / grid;
        // Cyclic coordinate descent. The window shrinks only once a full sweep
        // stops improving, so progress along diagonal ridges is not cut short.
        double current = objective(t, x);
        for (int sweep = 0; sweep < 400 && window > 1e-9; ++sweep) {
            x.alpha_a = refine_coordinate(t, x, &Angles::alpha_a, window);
            x.beta_a = refine_coordinate(t, x, &Angles::beta_a, window);
            x.alpha_b = refine_coordinate(t, x, &Angles::alpha_b, window);
            x.beta_b = refine_coordinate(t, x, &Angles::beta_b, window);
            const double swept = objective(t, x);
            if (swept - current <= 1e-14 * std::max(1.0, std::abs(current))) window *= 0.5;
            current = swept;
        }
        if (current > best_val) {
            best_val = current;
            best_x = x;
        }
    }

    Vec3 a1, a2, b1, b2;
    frame_axes(best_x.alpha_a, best_x.beta_a, a1, a2);
    frame_axes(best_x.alpha_b, best_x.beta_b, b1, b2);
    return {best_val, PlanePair::make(a1, a2, b1, b2), MaxInfoCorrMethod::numeric};
}

// Orthonormal right/left singular pairs of T for the top two singular values.
MaxInfoCorr analytic_search(const Mat3& t) {
    ComplexMatrix g(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += t(k, i) * t(k, j);
            g(i, j) = s;
        }
    const Eigensystem eig = hermitian_eigensystem(g);

    Vec3 v[2];
    double s[2];
    for (int k = 0; k < 2; ++k) {
        v[k] = {eig.vectors(0, k).real(), eig.vectors(1, k).real(), eig.vectors(2, k).real()};
        v[k] = normalized(v[k]);
        s[k] = std::sqrt(std::max(eig.values[static_cast<size_t>(k)], 0.0));
    }

    Vec3 u[2];
    if (s[0] > 1e-12)
        u[0] = normalized(t * v[0]);
    else
        u[0] = {1.0, 0.0, 0.0};
    if (s[1] > 1e-12) {
        u[1] = t * v[1];
        u[1] = u[1] - dot(u[1], u[0]) * u[0];
        u[1] = normalized(u[1]);
    } else {
        // Rank-deficient tensor: complete with any unit vector orthogonal to u[0].
        const Vec3 pick = std::abs(u[0][0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
        u[1] = normalized(cross(u[0], pick));
    }

    const double value = s[0] * s[0] + s[1] * s[1];
    return {value, PlanePair::make(u[0], u[1], v[0], v[1]), MaxInfoCorrMethod::analytic};
}

} // namespace

CorrelationTensor correlation_tensor(const DensityMatrix& rho) {
    check_two_qubits(rho);
    CorrelationTensor out;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const ComplexMatrix op = kron(pauli::by_index(a), pauli::by_index(b));
            out.t(a, b) = (rho.matrix() * op).trace().real();
        }
    return out;
}

PlanePair PlanePair::canonical_xy() {
    return {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
}

PlanePair PlanePair::make(Vec3 a1, Vec3 a2, Vec3 b1, Vec3 b2) {
    check_unit(a1, "a1");
    check_unit(a2, "a2");
    check_unit(b1, "b1");
    check_unit(b2, "b2");
    if (std::abs(dot(a1, a2)) > tol.identity || std::abs(dot(b1, b2)) > tol.identity)
        fail(Errc::invalid_argument, "plane directions are not orthogonal");
    return {a1, a2, b1, b2};
}

double joint_info(const DensityMatrix& rho, const Vec3& a, const Vec3& b) {
    check_two_qubits(rho);
    check_unit(a, "a");
    check_unit(b, "b");
    const CorrelationTensor ct = correlation_tensor(rho);
    const double bias = dot(a, ct.t * b);
    return bias * bias;
}

double info_corr(const DensityMatrix& rho, const PlanePair& planes) {
    check_two_qubits(rho);
    const CorrelationTensor ct = correlation_tensor(rho);
    return plane_sum(ct.t, planes.a1, planes.a2, planes.b1, planes.b2);
}

MaxInfoCorr max_info_corr(const DensityMatrix& rho, MaxInfoCorrMethod method) {
    check_two_qubits(rho);
    const CorrelationTensor ct = correlation_tensor(rho);
    return method == MaxInfoCorrMethod::analytic ? analytic_search(ct.t) : numeric_search(ct.t);
}

ChshReport chsh_and_verdict(const DensityMatrix& rho) {
    const MaxInfoCorr mic = max_info_corr(rho, MaxInfoCorrMethod::analytic);
    ChshReport out;
    out.m = mic.value;
    out.chsh_max = 2.0 * std::sqrt(out.m);
    out.violates_bell = out.m > 1.0;
    out.entangled_by_criterion = mic.value > 1.0;
    return out;
}

} // namespace qinfo
