#ifndef QINFO_ENTANGLE_HPP
#define QINFO_ENTANGLE_HPP

#include "qinfo/qstate.hpp"
#include "qinfo/vec3.hpp"

namespace qinfo {

// T_ab = tr(rho sigma_a x sigma_b) for a two-qubit state.
struct CorrelationTensor {
    Mat3 t;
};

CorrelationTensor correlation_tensor(const DensityMatrix& rho);

// Orthonormal measurement plane per particle: a1 _|_ a2 for particle 1,
// b1 _|_ b2 for particle 2.
struct PlanePair {
    Vec3 a1, a2;
    Vec3 b1, b2;

    static PlanePair canonical_xy();
    static PlanePair make(Vec3 a1, Vec3 a2, Vec3 b1, Vec3 b2); // validates unit + orthogonal
};

// Squared agree/disagree bias (a^T T b)^2 for spins along a (particle 1) and
// b (particle 2).
double joint_info(const DensityMatrix& rho, const Vec3& a, const Vec3& b);

// Sum of the four joint measures over a plane pair.
double info_corr(const DensityMatrix& rho, const PlanePair& planes);

enum class MaxInfoCorrMethod {
    analytic, // s1^2 + s2^2 from the singular values of T
    numeric,  // deterministic grid search + coordinate descent over the planes
};

struct MaxInfoCorr {
    double value;
    PlanePair argmax_planes;
    MaxInfoCorrMethod method;
};

MaxInfoCorr max_info_corr(const DensityMatrix& rho,
                          MaxInfoCorrMethod method = MaxInfoCorrMethod::analytic);

// Horodecki quantity M = s1^2 + s2^2, the largest attainable CHSH value
// 2 sqrt(M), and the two equivalent verdicts. The criterion detects states
// that can violate a CHSH inequality, not every non-separable state.
struct ChshReport {
    double m;
    double chsh_max;
    bool violates_bell;          // M > 1, strict
    bool entangled_by_criterion; // max info_corr > 1, strict; same threshold
};

ChshReport chsh_and_verdict(const DensityMatrix& rho);

} // namespace qinfo

#endif
