#include "qinfo/galois.hpp"

#include <string>

namespace qinfo {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int> fixed_modulus(int p, int m) {
    if (p == 2 && m == 2) return {1, 1, 1};    // x^2 + x + 1
    if (p == 2 && m == 3) return {1, 1, 0, 1}; // x^3 + x + 1
    if (p == 3 && m == 2) return {1, 0, 1};    // x^2 + 1
    fail(Errc::unsupported_dimension,
         "no modulus table for GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
}

} // namespace

GaloisField::GaloisField(int p, int m) : p_(p), m_(m) {
    if (!is_prime(p) || m < 1) fail(Errc::invalid_argument, "field order must be a prime power");
    q_ = 1;
    for (int i = 0; i < m; ++i) {
        q_ *= p;
        if (q_ > 64) fail(Errc::unsupported_dimension, "field order too large");
    }
    if (m > 1) modulus_ = fixed_modulus(p, m);

    mul_table_.resize(static_cast<size_t>(q_) * q_);
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b) mul_table_[static_cast<size_t>(a) * q_ + b] = mul_slow(a, b);

    inv_table_.assign(static_cast<size_t>(q_), 0);
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul(a, b) == 1) {
                inv_table_[static_cast<size_t>(a)] = b;
                break;
            }

    // tr(a) = a + a^p + ... + a^(p^(m-1)); lies in the prime subfield, whose
    // elements are encoded by the integers 0..p-1.
    trace_table_.assign(static_cast<size_t>(q_), 0);
    for (int a = 0; a < q_; ++a) {
        int acc = 0;
        long long e = 1;
        for (int j = 0; j < m_; ++j) {
            acc = add(acc, pow(a, e));
            e *= p_;
        }
        trace_table_[static_cast<size_t>(a)] = acc;
    }
}

int GaloisField::add(int a, int b) const {
    int out = 0;
    int mult = 1;
    for (int j = 0; j < m_; ++j) {
        const int da = (a / mult) % p_;
        const int db = (b / mult) % p_;
        out += ((da + db) % p_) * mult;
        mult *= p_;
    }
    return out;
}

int GaloisField::neg(int a) const {
    int out = 0;
    int mult = 1;
    for (int j = 0; j < m_; ++j) {
        const int da = (a / mult) % p_;
        out += ((p_ - da) % p_) * mult;
        mult *= p_;
    }
    return out;
}

int GaloisField::sub(int a, int b) const { return add(a, neg(b)); }

int GaloisField::mul_slow(int a, int b) const {
    // Polynomial product; coefficients of degree >= m reduced by the modulus.
    std::vector<int> prod(static_cast<size_t>(2 * m_ - 1), 0);
    for (int i = 0; i < m_; ++i) {
        int ai = a;
        for (int k = 0; k < i; ++k) ai /= p_;
        ai %= p_;
        if (ai == 0) continue;
        for (int j = 0; j < m_; ++j) {
            int bj = b;
            for (int k = 0; k < j; ++k) bj /= p_;
            bj %= p_;
            prod[static_cast<size_t>(i + j)] = (prod[static_cast<size_t>(i + j)] + ai * bj) % p_;
        }
    }
    for (int d = 2 * m_ - 2; d >= m_; --d) {
        const int c = prod[static_cast<size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<size_t>(d)] = 0;
        // x^d = x^(d-m) * (-(modulus minus leading term))
        for (int j = 0; j < m_; ++j) {
            const int mj = modulus_[static_cast<size_t>(j)];
            if (mj == 0) continue;
            const int idx = d - m_ + j;
            prod[static_cast<size_t>(idx)] =
                ((prod[static_cast<size_t>(idx)] - c * mj) % p_ + p_) % p_;
        }
    }
    int out = 0;
    int mult = 1;
    for (int j = 0; j < m_; ++j) {
        out += prod[static_cast<size_t>(j)] * mult;
        mult *= p_;
    }
    return out;
}

int GaloisField::inv(int a) const {
    if (a == 0) fail(Errc::invalid_argument, "zero has no multiplicative inverse");
    return inv_table_[static_cast<size_t>(a)];
}

int GaloisField::pow(int a, long long e) const {
    int out = 1;
    int base = a;
    while (e > 0) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

} // namespace qinfo
