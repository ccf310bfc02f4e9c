#include "qinfo/infomeasure.hpp"

#include <cmath>

#include "qinfo/tolerances.hpp"

namespace qinfo {

ProbabilityVector ProbabilityVector::make(std::span<const double> p) {
    if (p.size() < 2) fail(Errc::invalid_distribution, "need at least two outcomes");
    double sum = 0.0;
    for (double v : p) {
        if (!std::isfinite(v) || v < -tol.simplex || v > 1.0 + tol.simplex)
            fail(Errc::invalid_distribution, "probability outside [0,1]");
        sum += v;
    }
    if (std::abs(sum - 1.0) > tol.simplex)
        fail(Errc::invalid_distribution, "probabilities do not sum to 1");
    return ProbabilityVector(std::vector<double>(p.begin(), p.end()));
}

double normalization_constant(Norm scheme, int n) {
    if (scheme == Norm::unit) return static_cast<double>(n) / (n - 1);
    int k = 0;
    int v = n;
    while (v > 1 && v % 2 == 0) {
        v /= 2;
        ++k;
    }
    if (v != 1)
        fail(Errc::bits_mode_requires_power_of_two,
             "bits normalization requires a power-of-two outcome count, got " + std::to_string(n));
    return static_cast<double>(n) * k / (n - 1);
}

double shannon_entropy(const ProbabilityVector& p) {
    double h = 0.0;
    for (double v : p.values())
        if (v > 0.0) h -= v * std::log2(v);
    return h;
}

double uncertainty(const ProbabilityVector& p) {
    double sum_sq = 0.0;
    for (double v : p.values()) sum_sq += v * v;
    return 1.0 - sum_sq;
}

double info_measure(const ProbabilityVector& p, Norm scheme) {
    const int n = p.size();
    const double norm = normalization_constant(scheme, n);
    const double uniform = 1.0 / n;
    double sum = 0.0;
    for (double v : p.values()) {
        const double d = v - uniform;
        sum += d * d;
    }
    return norm * sum;
}

BinaryInfo binary_info(const ProbabilityVector& p) {
    if (p.size() != 2) fail(Errc::not_binary, "binary quantity needs exactly two outcomes");
    const double i = p[0] - p[1];
    return {i, i * i};
}

} // namespace qinfo
