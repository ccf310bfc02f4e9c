#ifndef QINFO_MATKERNEL_HPP
#define QINFO_MATKERNEL_HPP

#include <array>
#include <complex>
#include <initializer_list>
#include <vector>

#include "qinfo/errors.hpp"
#include "qinfo/tolerances.hpp"

namespace qinfo {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Sized for quantum states and operators of
// dimension at most `max_dim`; this is not a general linear-algebra type.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int n) { return ComplexMatrix(n, n); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const cplx& operator()(int r, int c) const {
        return entries_[static_cast<size_t>(r) * cols_ + c];
    }

    const std::vector<cplx>& entries() const { return entries_; }
    std::vector<cplx>& entries() { return entries_; }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double max_abs() const;
    double max_abs_diff(const ComplexMatrix& other) const;

    bool is_hermitian(double tolerance = tol.validation) const;
    bool is_unitary(double tolerance = tol.validation) const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx scalar);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx scalar, ComplexMatrix m);

// Pauli operators and the 2x2 identity.
namespace pauli {
const ComplexMatrix& x();
const ComplexMatrix& y();
const ComplexMatrix& z();
const ComplexMatrix& id();
const ComplexMatrix& by_index(int j); // 0 -> x, 1 -> y, 2 -> z
} // namespace pauli

struct Eigensystem {
    std::vector<double> values; // descending
    ComplexMatrix vectors;      // orthonormal columns, vectors.col(k) <-> values[k]
};

// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
// Throws not_hermitian / dimension_too_large.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// exp(-i h t) for Hermitian h, via eigendecomposition.
ComplexMatrix unitary_exp(const ComplexMatrix& h, double t);

// Singular values of a real 3x3 matrix (row-major), descending.
std::array<double, 3> singular_values_3x3(const std::array<double, 9>& t);

} // namespace qinfo

#endif
