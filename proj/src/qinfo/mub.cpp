#include "qinfo/mub.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "qinfo/galois.hpp"
#include "qinfo/tolerances.hpp"

namespace qinfo {

namespace {

using json = nlohmann::ordered_json;

void canonical_phases(ComplexMatrix& basis) {
    const int n = basis.rows();
    for (int k = 0; k < n; ++k) {
        for (int r = 0; r < n; ++r) {
            const cplx v = basis(r, k);
            if (std::abs(v) > 1e-9) {
                const cplx phase = std::conj(v) / std::abs(v);
                for (int rr = 0; rr < n; ++rr) basis(rr, k) *= phase;
                break;
            }
        }
    }
}

ComplexMatrix pauli_eigenbasis_set_entry(int which) {
    const double s = 1.0 / std::numbers::sqrt2;
    switch (which) {
        case 0: return ComplexMatrix::identity(2); // sigma_z eigenbasis
        case 1: return {{s, s}, {s, -s}};          // sigma_x eigenbasis
        default: return {{s, s}, {cplx(0.0, s), cplx(0.0, -s)}}; // sigma_y eigenbasis
    }
}

std::vector<ComplexMatrix> construct_qubit() {
    return {pauli_eigenbasis_set_entry(0), pauli_eigenbasis_set_entry(1),
            pauli_eigenbasis_set_entry(2)};
}

// Odd prime p: the computational basis plus p bases with components
// omega^(r l^2 + k l) / sqrt(p), omega = exp(2 pi i / p).
std::vector<ComplexMatrix> construct_odd_prime(int p) {
    std::vector<ComplexMatrix> bases;
    bases.push_back(ComplexMatrix::identity(p));
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    for (int r = 0; r < p; ++r) {
        ComplexMatrix b(p, p);
        for (int k = 0; k < p; ++k)
            for (int l = 0; l < p; ++l) {
                const int e = (r * l * l + k * l) % p;
                const double angle = 2.0 * std::numbers::pi * e / p;
                b(l, k) = scale * std::exp(cplx(0.0, angle));
            }
        bases.push_back(std::move(b));
    }
    return bases;
}

// Odd prime power q = p^m: components omega_p^tr(a x^2 + k x) / sqrt(q) over
// the field, one basis per a, plus the computational basis.
std::vector<ComplexMatrix> construct_odd_prime_power(const GaloisField& field) {
    const int q = field.order();
    const int p = field.p();
    std::vector<ComplexMatrix> bases;
    bases.push_back(ComplexMatrix::identity(q));
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    for (int a = 0; a < q; ++a) {
        ComplexMatrix b(q, q);
        for (int k = 0; k < q; ++k)
            for (int x = 0; x < q; ++x) {
                const int arg = field.add(field.mul(a, field.mul(x, x)), field.mul(k, x));
                const int e = field.trace(arg);
                const double angle = 2.0 * std::numbers::pi * e / p;
                b(x, k) = scale * std::exp(cplx(0.0, angle));
            }
        bases.push_back(std::move(b));
    }
    return bases;
}

// Even prime power q = 2^m: partition the q^2-1 Pauli products into q+1
// maximal commuting classes and take joint eigenbases. The classes come from
// the line spread of GF(q)^2: {(x, lambda x)} per lambda plus {(0, y)}. A
// point (u, v) maps to the operator with X-part from the digits of u and
// Z-part from tr(v alpha^j), which makes every line totally isotropic for the
// Pauli commutation form.
ComplexMatrix pauli_product_for_point(const GaloisField& field, int u, int v) {
    const int m = field.m();
    ComplexMatrix op;
    for (int j = 0; j < m; ++j) {
        const int xbit = (u >> j) & 1;
        const int zbit = field.trace(field.mul(v, 1 << j));
        const ComplexMatrix* factor = nullptr;
        if (xbit == 0 && zbit == 0)
            factor = &pauli::id();
        else if (xbit == 1 && zbit == 0)
            factor = &pauli::x();
        else if (xbit == 0 && zbit == 1)
            factor = &pauli::z();
        else
            factor = &pauli::y();
        op = j == 0 ? *factor : kron(op, *factor);
    }
    return op;
}

ComplexMatrix joint_eigenbasis(const GaloisField& field, const std::vector<std::pair<int, int>>& points) {
    const int q = field.order();
    // Distinct powers of two as weights give every simultaneous eigenvector a
    // distinct eigenvalue, so the eigenbasis is unique up to phases.
    ComplexMatrix sum(q, q);
    double weight = 1.0;
    for (const auto& [u, v] : points) {
        ComplexMatrix op = pauli_product_for_point(field, u, v);
        op *= cplx(weight);
        sum += op;
        weight *= 2.0;
    }
    return hermitian_eigensystem(sum).vectors;
}

std::vector<ComplexMatrix> construct_even_prime_power(const GaloisField& field) {
    const int q = field.order();
    std::vector<ComplexMatrix> bases;
    std::vector<std::pair<int, int>> points;
    points.reserve(static_cast<size_t>(q - 1));

    points.clear();
    for (int y = 1; y < q; ++y) points.emplace_back(0, y);
    bases.push_back(joint_eigenbasis(field, points)); // the computational-basis class

    for (int lambda = 0; lambda < q; ++lambda) {
        points.clear();
        for (int x = 1; x < q; ++x) points.emplace_back(x, field.mul(lambda, x));
        bases.push_back(joint_eigenbasis(field, points));
    }
    return bases;
}

} // namespace

MubSet MubSet::from_bases(int dim, std::vector<ComplexMatrix> bases) {
    if (dim < 2 || dim > max_dim) fail(Errc::invalid_argument, "basis set dimension out of range");
    if (static_cast<int>(bases.size()) != dim + 1)
        fail(Errc::invalid_argument, "a complete set needs dim+1 bases");
    for (const ComplexMatrix& b : bases)
        if (b.rows() != dim || b.cols() != dim)
            fail(Errc::dimension_mismatch, "basis matrix shape differs from dim");
    return MubSet(dim, std::move(bases));
}

MubSet MubSet::conjugated(const ComplexMatrix& u) const {
    std::vector<ComplexMatrix> rotated;
    rotated.reserve(bases_.size());
    for (const ComplexMatrix& b : bases_) rotated.push_back(u * b);
    return MubSet(dim_, std::move(rotated));
}

MubSet mub_construct(int n) {
    std::vector<ComplexMatrix> bases;
    switch (n) {
        case 2: bases = construct_qubit(); break;
        case 3:
        case 5:
        case 7: bases = construct_odd_prime(n); break;
        case 4: bases = construct_even_prime_power(GaloisField(2, 2)); break;
        case 8: bases = construct_even_prime_power(GaloisField(2, 3)); break;
        case 9: bases = construct_odd_prime_power(GaloisField(3, 2)); break;
        case 6:
            fail(Errc::unsupported_dimension,
                 "dimension 6: whether a complete set of 7 mutually unbiased bases exists "
                 "is an open problem; refusing to construct (supported: 2,3,4,5,7,8,9)");
        default:
            fail(Errc::unsupported_dimension,
                 "dimension " + std::to_string(n) +
                     " is not a supported prime power (supported: 2,3,4,5,7,8,9)");
    }
    for (ComplexMatrix& b : bases) canonical_phases(b);
    return MubSet::from_bases(n, std::move(bases));
}

MubVerification verify_mub(const MubSet& set) {
    const int n = set.dim();
    MubVerification out{0.0, 0.0};
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    for (const ComplexMatrix& b : set.bases())
        out.orthonormality_error =
            std::max(out.orthonormality_error, (b.adjoint() * b).max_abs_diff(eye));

    const double target = 1.0 / n;
    const auto& bases = set.bases();
    for (size_t a = 0; a < bases.size(); ++a)
        for (size_t b = a + 1; b < bases.size(); ++b) {
            const ComplexMatrix overlaps = bases[a].adjoint() * bases[b];
            for (const cplx& o : overlaps.entries())
                out.unbiasedness_error =
                    std::max(out.unbiasedness_error, std::abs(std::norm(o) - target));
        }
    return out;
}

std::string mub_to_json(const MubSet& set, const MubVerification& verification) {
    const int n = set.dim();
    json j;
    j["dim"] = n;
    json bases = json::array();
    for (const ComplexMatrix& b : set.bases()) {
        json re = json::array();
        json im = json::array();
        for (int r = 0; r < n; ++r) {
            json re_row = json::array();
            json im_row = json::array();
            for (int c = 0; c < n; ++c) {
                re_row.push_back(b(r, c).real());
                im_row.push_back(b(r, c).imag());
            }
            re.push_back(std::move(re_row));
            im.push_back(std::move(im_row));
        }
        json entry;
        entry["re"] = std::move(re);
        entry["im"] = std::move(im);
        bases.push_back(std::move(entry));
    }
    j["bases"] = std::move(bases);
    j["max_orthonormality_error"] = verification.orthonormality_error;
    j["max_unbiasedness_error"] = verification.unbiasedness_error;
    return j.dump();
}

ParamCount param_count_decomposition(int n) {
    if (n < 2) fail(Errc::invalid_argument, "parameter counting needs n >= 2");
    ParamCount out;
    int rest = n;
    for (int p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        int q = 1;
        while (rest % p == 0) {
            rest /= p;
            q *= p;
        }
        out.factors.push_back(q);
        out.local_params.push_back(static_cast<long long>(q) * q - 1);
    }
    out.total = static_cast<long long>(n) * n - 1;
    if (out.factors.size() > 1) {
        long long locals = 0;
        for (long long l : out.local_params) locals += l;
        out.correlation_params = out.total - locals;
    }
    return out;
}

} // namespace qinfo
