#ifndef QINFO_INFOMEASURE_HPP
#define QINFO_INFOMEASURE_HPP

#include <span>
#include <vector>

#include "qinfo/errors.hpp"

namespace qinfo {

// Validated outcome distribution of one measurement context. Entries must lie
// in [0,1] and sum to 1, both within the simplex tolerance; offending inputs
// are rejected, never renormalized.
class ProbabilityVector {
public:
    static ProbabilityVector make(std::span<const double> p);

    int size() const { return static_cast<int>(p_.size()); }
    double operator[](int i) const { return p_[static_cast<size_t>(i)]; }
    const std::vector<double>& values() const { return p_; }

private:
    explicit ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {}
    std::vector<double> p_;
};

enum class Norm {
    unit, // N = n/(n-1), measure in [0,1]
    bits, // N = 2^k * k / (2^k - 1), requires n = 2^k, measure in [0,k]
};

// Normalization constant for the squared-distance measure.
double normalization_constant(Norm scheme, int n);

// H = -sum p_i log2 p_i, with 0 log 0 := 0.
double shannon_entropy(const ProbabilityVector& p);

// U = sum p_j (1 - p_j) = 1 - sum p_j^2.
double uncertainty(const ProbabilityVector& p);

// I = N sum (p_i - 1/n)^2.
double info_measure(const ProbabilityVector& p, Norm scheme);

struct BinaryInfo {
    double i;    // p1 - p2, signed
    double info; // i^2
};

// Signed binary quantity and its square; requires exactly two outcomes.
BinaryInfo binary_info(const ProbabilityVector& p);

} // namespace qinfo

#endif
