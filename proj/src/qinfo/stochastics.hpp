#ifndef QINFO_STOCHASTICS_HPP
#define QINFO_STOCHASTICS_HPP

#include <cstdint>

#include "qinfo/errors.hpp"

namespace qinfo {

// SplitMix64: the 64-bit generator of Steele, Lea and Flood. Chosen because
// the whole contract fits in a few lines, so seeded runs are reproducible by
// inspection. Uniform doubles take the top 53 bits.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Decorrelated stream for (seed, index) pairs, so independent runs can
    // execute in any order or in parallel with identical results.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 scramble(index + 0x632BE59BD9B4E019ULL);
        return SplitMix64(seed ^ scramble.next());
    }

private:
    std::uint64_t state_;
};

struct TrialRun {
    double theta;
    double p; // cos^2(theta/2)
    long long trials;
    std::uint64_t seed;
    long long yes_count;
};

// Independent Bernoulli trials of the two-plate spin experiment at magnet
// angle theta; identical (theta, trials, seed) reproduce identical counts.
TrialRun simulate_sg(double theta, long long trials, std::uint64_t seed);

struct ChebyshevReport {
    double sigma;                   // sqrt(p (1-p) N)
    double bound;                   // 1 / k^2
    double empirical_violation_rate; // fraction of runs with |L - pN| > k sigma
    int runs;
};

// Repeats simulate_sg over `runs` independent streams and counts how often
// the yes-count leaves the k-sigma band.
ChebyshevReport chebyshev_report(double theta, long long trials, double k, int runs,
                                 std::uint64_t seed);

// U = sigma^2 / N = p (1 - p).
double per_trial_uncertainty(double p);

} // namespace qinfo

#endif
