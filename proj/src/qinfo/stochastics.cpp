#include "qinfo/stochastics.hpp"

#include <cmath>

#include "qinfo/tolerances.hpp"

namespace qinfo {

TrialRun simulate_sg(double theta, long long trials, std::uint64_t seed) {
    if (trials < 1) fail(Errc::invalid_argument, "need at least one trial");
    const double c = std::cos(0.5 * theta);
    const double p = c * c;
    SplitMix64 rng(seed);
    long long yes = 0;
    for (long long k = 0; k < trials; ++k)
        if (rng.uniform() < p) ++yes;
    return {theta, p, trials, seed, yes};
}

ChebyshevReport chebyshev_report(double theta, long long trials, double k, int runs,
                                 std::uint64_t seed) {
    if (trials < 1) fail(Errc::invalid_argument, "need at least one trial");
    if (!(k > 0.0)) fail(Errc::invalid_argument, "k must be positive");
    if (runs < 100) fail(Errc::invalid_argument, "need at least 100 runs");

    const double c = std::cos(0.5 * theta);
    const double p = c * c;
    const double sigma = std::sqrt(p * (1.0 - p) * static_cast<double>(trials));
    const double mean = p * static_cast<double>(trials);

    int violations = 0;
    for (int r = 0; r < runs; ++r) {
        SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(r));
        long long yes = 0;
        for (long long t = 0; t < trials; ++t)
            if (rng.uniform() < p) ++yes;
        if (std::abs(static_cast<double>(yes) - mean) > k * sigma) ++violations;
    }
    return {sigma, 1.0 / (k * k), static_cast<double>(violations) / runs, runs};
}

double per_trial_uncertainty(double p) {
    if (!(p >= 0.0 && p <= 1.0)) fail(Errc::invalid_argument, "probability outside [0,1]");
    return p * (1.0 - p);
}

} // namespace qinfo
