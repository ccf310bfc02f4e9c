#include "qinfo/matkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qinfo {

namespace {

void check_dim_cap(int n) {
    if (n > max_dim)
        fail(Errc::dimension_too_large,
             "matrix dimension " + std::to_string(n) + " exceeds cap " + std::to_string(max_dim));
}

} // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) fail(Errc::invalid_argument, "negative matrix dimensions");
    entries_.assign(static_cast<size_t>(rows) * cols, cplx(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    entries_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            fail(Errc::invalid_argument, "ragged initializer for ComplexMatrix");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        fail(Errc::dimension_mismatch, "max_abs_diff on mismatched shapes");
    double m = 0.0;
    for (size_t k = 0; k < entries_.size(); ++k)
        m = std::max(m, std::abs(entries_[k] - other.entries_[k]));
    return m;
}

bool ComplexMatrix::is_hermitian(double tolerance) const {
    if (!is_square()) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r; c < cols_; ++c)
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tolerance) return false;
    return true;
}

bool ComplexMatrix::is_unitary(double tolerance) const {
    if (!is_square()) return false;
    return (adjoint() * (*this)).max_abs_diff(identity(rows_)) <= tolerance;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        fail(Errc::dimension_mismatch, "matrix addition shape mismatch");
    for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        fail(Errc::dimension_mismatch, "matrix subtraction shape mismatch");
    for (size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
    for (cplx& e : entries_) e *= scalar;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.cols() != rhs.rows()) fail(Errc::dimension_mismatch, "matrix product shape mismatch");
    ComplexMatrix out(lhs.rows(), rhs.cols());
    for (int r = 0; r < lhs.rows(); ++r)
        for (int k = 0; k < lhs.cols(); ++k) {
            const cplx v = lhs(r, k);
            if (v == cplx(0.0, 0.0)) continue;
            for (int c = 0; c < rhs.cols(); ++c) out(r, c) += v * rhs(k, c);
        }
    return out;
}

ComplexMatrix operator*(cplx scalar, ComplexMatrix m) { return m *= scalar; }

namespace pauli {

const ComplexMatrix& x() {
    static const ComplexMatrix m{{0.0, 1.0}, {1.0, 0.0}};
    return m;
}

const ComplexMatrix& y() {
    static const ComplexMatrix m{{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}};
    return m;
}

const ComplexMatrix& z() {
    static const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
    return m;
}

const ComplexMatrix& id() {
    static const ComplexMatrix m = ComplexMatrix::identity(2);
    return m;
}

const ComplexMatrix& by_index(int j) {
    switch (j) {
        case 0: return x();
        case 1: return y();
        case 2: return z();
        default: fail(Errc::invalid_argument, "pauli index must be 0, 1 or 2");
    }
}

} // namespace pauli

Eigensystem hermitian_eigensystem(const ComplexMatrix& m) {
    if (!m.is_square()) fail(Errc::not_hermitian, "eigensystem requires a square matrix");
    const int n = m.rows();
    check_dim_cap(n);
    if (!m.is_hermitian(tol.validation))
        fail(Errc::not_hermitian, "matrix is not Hermitian within tolerance");

    // Work on the exact Hermitian part; admitted inputs may be off by up to
    // the validation tolerance.
    ComplexMatrix a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(a.max_abs(), 1e-300);
    const double stop = 1e-15 * scale;
    const int max_sweeps = 60;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= stop) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= stop) continue;

                // Unitary 2x2 rotation annihilating a(p,q): phase from arg(apq),
                // angle from the real Jacobi rule on [[app,|apq|],[|apq|,aqq]].
                const cplx phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                double t;
                if (tau >= 0.0)
                    t = tau == 0.0 ? 1.0 : -1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Columns: A <- A R with R = [[c, -s*phase],[s*conj(phase), c]]
                for (int r = 0; r < n; ++r) {
                    const cplx arp = a(r, p);
                    const cplx arq = a(r, q);
                    a(r, p) = c * arp + s * std::conj(phase) * arq;
                    a(r, q) = -s * phase * arp + c * arq;
                }
                // Rows: A <- R^H A
                for (int r = 0; r < n; ++r) {
                    const cplx apr = a(p, r);
                    const cplx aqr = a(q, r);
                    a(p, r) = c * apr + s * phase * aqr;
                    a(q, r) = -s * std::conj(phase) * apr + c * aqr;
                }
                // Accumulate eigenvectors: V <- V R
                for (int r = 0; r < n; ++r) {
                    const cplx vrp = v(r, p);
                    const cplx vrq = v(r, q);
                    v(r, p) = c * vrp + s * std::conj(phase) * vrq;
                    v(r, q) = -s * phase * vrp + c * vrq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    Eigensystem out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (int r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int rows = a.rows() * b.rows();
    const int cols = a.cols() * b.cols();
    check_dim_cap(std::max(rows, cols));
    ComplexMatrix out(rows, cols);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix unitary_exp(const ComplexMatrix& h, double t) {
    const Eigensystem eig = hermitian_eigensystem(h);
    const int n = h.rows();
    ComplexMatrix out(n, n);
    for (int k = 0; k < n; ++k) {
        const cplx phase = std::exp(cplx(0.0, -eig.values[k] * t));
        for (int r = 0; r < n; ++r) {
            const cplx vrk = eig.vectors(r, k);
            for (int c = 0; c < n; ++c) out(r, c) += phase * vrk * std::conj(eig.vectors(c, k));
        }
    }
    return out;
}

std::array<double, 3> singular_values_3x3(const std::array<double, 9>& t) {
    // Eigenvalues of T^T T, clamped at zero before the square root.
    ComplexMatrix g(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += t[3 * k + i] * t[3 * k + j];
            g(i, j) = s;
        }
    const Eigensystem eig = hermitian_eigensystem(g);
    return {std::sqrt(std::max(eig.values[0], 0.0)), std::sqrt(std::max(eig.values[1], 0.0)),
            std::sqrt(std::max(eig.values[2], 0.0))};
}

} // namespace qinfo
