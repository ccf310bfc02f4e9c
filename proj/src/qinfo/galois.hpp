#ifndef QINFO_GALOIS_HPP
#define QINFO_GALOIS_HPP

#include <vector>

#include "qinfo/errors.hpp"

namespace qinfo {

// Finite field GF(p^m) with elements encoded as integers in [0, p^m):
// the base-p digits of an element are the coefficients of its polynomial
// representation, least significant digit first. Multiplication and
// inversion are table-driven; the fields this library needs are tiny.
//
// Fixed irreducible moduli: x^2+x+1 for GF(4), x^3+x+1 for GF(8),
// x^2+1 for GF(9).
class GaloisField {
public:
    GaloisField(int p, int m);

    int p() const { return p_; }
    int m() const { return m_; }
    int order() const { return q_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const { return mul_table_[static_cast<size_t>(a) * q_ + b]; }
    int inv(int a) const; // a != 0
    int pow(int a, long long e) const;

    // Field trace down to the prime subfield, as an integer in [0, p).
    int trace(int a) const { return trace_table_[static_cast<size_t>(a)]; }

    // Modulus coefficients, ascending degree (size m+1); empty for m = 1.
    const std::vector<int>& modulus() const { return modulus_; }

private:
    int mul_slow(int a, int b) const;

    int p_;
    int m_;
    int q_;
    std::vector<int> modulus_;
    std::vector<int> mul_table_;
    std::vector<int> inv_table_;
    std::vector<int> trace_table_;
};

// Element of a GaloisField; mostly a convenience for property tests.
struct GfElem {
    const GaloisField* field = nullptr;
    int value = 0;

    friend GfElem operator+(GfElem a, GfElem b) { return {a.field, a.field->add(a.value, b.value)}; }
    friend GfElem operator-(GfElem a, GfElem b) { return {a.field, a.field->sub(a.value, b.value)}; }
    friend GfElem operator*(GfElem a, GfElem b) { return {a.field, a.field->mul(a.value, b.value)}; }
    friend bool operator==(GfElem a, GfElem b) { return a.value == b.value; }
    GfElem inverse() const { return {field, field->inv(value)}; }
};

} // namespace qinfo

#endif
