#ifndef QINFO_QSTATE_HPP
#define QINFO_QSTATE_HPP

#include <string>
#include <vector>

#include "qinfo/infomeasure.hpp"
#include "qinfo/matkernel.hpp"
#include "qinfo/vec3.hpp"

namespace qinfo {

class MubSet;

// Catalog of knowledge about three mutually complementary binary propositions;
// physical states satisfy |i| <= 1, pure states |i| = 1.
struct InfoVector {
    double i1 = 0.0;
    double i2 = 0.0;
    double i3 = 0.0;

    Vec3 as_vec3() const { return {i1, i2, i3}; }
    double norm_squared() const { return i1 * i1 + i2 * i2 + i3 * i3; }
};

// Hermitian, unit-trace, positive-semidefinite matrix. Always constructed
// through make(), which validates all three properties.
class DensityMatrix {
public:
    static DensityMatrix make(ComplexMatrix m);

    int dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }
    double purity() const; // Re tr(rho^2)

private:
    explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
    ComplexMatrix matrix_;
};

// rho = (1 + i . sigma) / 2; rejects |i| > 1 as unphysical.
DensityMatrix density_from_info(const InfoVector& i);

// i_j = tr(rho sigma_j); requires dim 2.
InfoVector info_from_density(const DensityMatrix& rho);

// Squared length of the catalog; the total information in unit normalization.
double total_info_qubit(const InfoVector& i);

// Outcome distributions p^i_j = <e^i_j| rho |e^i_j> for every basis of the set.
std::vector<ProbabilityVector> mub_probabilities(const DensityMatrix& rho, const MubSet& bases);

// Sum of per-basis measures over the complete set of mutually unbiased bases.
double total_info_general(const DensityMatrix& rho, const MubSet& bases, Norm scheme);

struct MeasurementUpdate {
    DensityMatrix state;
    double probability;
};

// tr(P rho) for a validated projector P.
double outcome_probability(const DensityMatrix& rho, const ComplexMatrix& projector);

// Projective update: the post-measurement state for the observed branch
// (P rho P, renormalized) or its complement, plus the branch probability
// of the P outcome.
MeasurementUpdate measurement_update(const DensityMatrix& rho, const ComplexMatrix& projector,
                                     bool outcome_observed);

// JSON forms: {"dim": n, "re": [[...]], "im": [[...]]} or {"i": [i1,i2,i3]}.
DensityMatrix density_from_json(const std::string& text);
std::string density_to_json(const DensityMatrix& rho);

// Same matrix convention, validated Hermitian only (for Hamiltonians).
ComplexMatrix hermitian_from_json(const std::string& text);

} // namespace qinfo

#endif
