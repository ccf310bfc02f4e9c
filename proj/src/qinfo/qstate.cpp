#include "qinfo/qstate.hpp"

#include <cmath>
#include <utility>

#include <nlohmann/json.hpp>

#include "qinfo/mub.hpp"
#include "qinfo/tolerances.hpp"

namespace qinfo {

using json = nlohmann::ordered_json;

DensityMatrix DensityMatrix::make(ComplexMatrix m) {
    if (!m.is_square() || m.rows() < 2)
        fail(Errc::invalid_density, "density matrix must be square with dim >= 2");
    if (m.rows() > max_dim)
        fail(Errc::dimension_too_large, "density matrix dimension exceeds cap");
    if (!m.is_hermitian(tol.validation))
        fail(Errc::invalid_density, "density matrix is not Hermitian");
    if (std::abs(m.trace() - cplx(1.0, 0.0)) > tol.validation)
        fail(Errc::invalid_density, "density matrix trace is not 1");
    const Eigensystem eig = hermitian_eigensystem(m);
    if (eig.values.back() < -tol.validation)
        fail(Errc::invalid_density, "density matrix has a negative eigenvalue");
    return DensityMatrix(std::move(m));
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

DensityMatrix density_from_info(const InfoVector& i) {
    if (i.norm_squared() > 1.0 + tol.validation)
        fail(Errc::unphysical_vector, "information vector longer than 1");
    ComplexMatrix m = ComplexMatrix::identity(2);
    m += cplx(i.i1) * pauli::x();
    m += cplx(i.i2) * pauli::y();
    m += cplx(i.i3) * pauli::z();
    m *= cplx(0.5);
    return DensityMatrix::make(std::move(m));
}

InfoVector info_from_density(const DensityMatrix& rho) {
    if (rho.dim() != 2) fail(Errc::wrong_dimension, "information vector is defined for dim 2");
    InfoVector out;
    out.i1 = (rho.matrix() * pauli::x()).trace().real();
    out.i2 = (rho.matrix() * pauli::y()).trace().real();
    out.i3 = (rho.matrix() * pauli::z()).trace().real();
    return out;
}

double total_info_qubit(const InfoVector& i) {
    const double n2 = i.norm_squared();
    if (n2 > 1.0 + tol.validation)
        fail(Errc::unphysical_vector, "information vector longer than 1");
    return n2;
}

std::vector<ProbabilityVector> mub_probabilities(const DensityMatrix& rho, const MubSet& bases) {
    if (rho.dim() != bases.dim())
        fail(Errc::dimension_mismatch, "state and basis set dimensions differ");
    const int n = rho.dim();
    std::vector<ProbabilityVector> out;
    out.reserve(bases.bases().size());
    std::vector<double> p(static_cast<size_t>(n));
    for (const ComplexMatrix& basis : bases.bases()) {
        for (int k = 0; k < n; ++k) {
            // <e_k| rho |e_k>
            cplx val = 0.0;
            for (int r = 0; r < n; ++r) {
                cplx row = 0.0;
                for (int c = 0; c < n; ++c) row += rho.matrix()(r, c) * basis(c, k);
                val += std::conj(basis(r, k)) * row;
            }
            p[static_cast<size_t>(k)] = val.real();
        }
        out.push_back(ProbabilityVector::make(p));
    }
    return out;
}

double total_info_general(const DensityMatrix& rho, const MubSet& bases, Norm scheme) {
    const double norm = normalization_constant(scheme, rho.dim());
    const double uniform = 1.0 / rho.dim();
    double sum = 0.0;
    for (const ProbabilityVector& p : mub_probabilities(rho, bases))
        for (double v : p.values()) {
            const double d = v - uniform;
            sum += d * d;
        }
    return norm * sum;
}

namespace {

void check_projector(const DensityMatrix& rho, const ComplexMatrix& projector) {
    if (projector.rows() != rho.dim() || projector.cols() != rho.dim())
        fail(Errc::dimension_mismatch, "projector dimension differs from state");
    if (!projector.is_hermitian(tol.validation))
        fail(Errc::not_projector, "projector is not Hermitian");
    if ((projector * projector).max_abs_diff(projector) > tol.validation)
        fail(Errc::not_projector, "projector is not idempotent");
}

} // namespace

double outcome_probability(const DensityMatrix& rho, const ComplexMatrix& projector) {
    check_projector(rho, projector);
    return (projector * rho.matrix()).trace().real();
}

MeasurementUpdate measurement_update(const DensityMatrix& rho, const ComplexMatrix& projector,
                                     bool outcome_observed) {
    const double prob = outcome_probability(rho, projector);
    const ComplexMatrix effect =
        outcome_observed ? projector : ComplexMatrix::identity(rho.dim()) - projector;
    const double branch = outcome_observed ? prob : 1.0 - prob;
    if (branch < tol.zero_probability)
        fail(Errc::zero_probability_outcome, "conditioning on a zero-probability outcome");
    ComplexMatrix post = effect * rho.matrix() * effect;
    post *= cplx(1.0 / branch);
    // Symmetrize away roundoff before re-validating.
    ComplexMatrix sym(post.rows(), post.cols());
    for (int r = 0; r < post.rows(); ++r)
        for (int c = 0; c < post.cols(); ++c)
            sym(r, c) = 0.5 * (post(r, c) + std::conj(post(c, r)));
    return {DensityMatrix::make(std::move(sym)), prob};
}

namespace {

json parse_or_fail(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::parse_error, "malformed JSON");
    return j;
}

ComplexMatrix matrix_from_json_fields(const json& j) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        fail(Errc::parse_error, "missing integer \"dim\"");
    const int dim = j["dim"].get<int>();
    if (dim < 1 || dim > max_dim) fail(Errc::parse_error, "\"dim\" out of range");
    if (!j.contains("re") || !j["re"].is_array()) fail(Errc::parse_error, "missing matrix \"re\"");
    const bool has_im = j.contains("im");

    auto read_rows = [&](const json& rows, bool imag, ComplexMatrix& m) {
        if (static_cast<int>(rows.size()) != dim) fail(Errc::parse_error, "matrix row count != dim");
        for (int r = 0; r < dim; ++r) {
            const json& row = rows[static_cast<size_t>(r)];
            if (!row.is_array() || static_cast<int>(row.size()) != dim)
                fail(Errc::parse_error, "matrix column count != dim");
            for (int c = 0; c < dim; ++c) {
                const json& v = row[static_cast<size_t>(c)];
                if (!v.is_number()) fail(Errc::parse_error, "matrix entry is not a number");
                if (imag)
                    m(r, c) = cplx(m(r, c).real(), v.get<double>());
                else
                    m(r, c) = cplx(v.get<double>(), m(r, c).imag());
            }
        }
    };

    ComplexMatrix m(dim, dim);
    read_rows(j["re"], false, m);
    if (has_im) {
        if (!j["im"].is_array()) fail(Errc::parse_error, "\"im\" is not an array");
        read_rows(j["im"], true, m);
    }
    return m;
}

} // namespace

DensityMatrix density_from_json(const std::string& text) {
    const json j = parse_or_fail(text);
    if (!j.is_object()) fail(Errc::parse_error, "state JSON must be an object");
    if (j.contains("i")) {
        const json& iv = j["i"];
        if (!iv.is_array() || iv.size() != 3 || !iv[0].is_number() || !iv[1].is_number() ||
            !iv[2].is_number())
            fail(Errc::parse_error, "\"i\" must be an array of three numbers");
        return density_from_info({iv[0].get<double>(), iv[1].get<double>(), iv[2].get<double>()});
    }
    return DensityMatrix::make(matrix_from_json_fields(j));
}

std::string density_to_json(const DensityMatrix& rho) {
    const int n = rho.dim();
    json re = json::array();
    json im = json::array();
    for (int r = 0; r < n; ++r) {
        json re_row = json::array();
        json im_row = json::array();
        for (int c = 0; c < n; ++c) {
            re_row.push_back(rho.matrix()(r, c).real());
            im_row.push_back(rho.matrix()(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    json j;
    j["dim"] = n;
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j.dump();
}

ComplexMatrix hermitian_from_json(const std::string& text) {
    const json j = parse_or_fail(text);
    if (!j.is_object()) fail(Errc::parse_error, "operator JSON must be an object");
    ComplexMatrix m = matrix_from_json_fields(j);
    if (!m.is_hermitian(tol.validation)) fail(Errc::not_hermitian, "operator is not Hermitian");
    return m;
}

} // namespace qinfo
