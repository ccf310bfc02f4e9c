#ifndef QINFO_TOLERANCES_HPP
#define QINFO_TOLERANCES_HPP

namespace qinfo {

// All library tolerances in one place. `validation` guards state/operator
// checks (hermiticity, unitarity, positivity), `identity` guards exact
// arithmetic identities, `simplex` guards probability-vector admission.
struct Tolerances {
    double validation = 1e-10;
    double identity = 1e-12;
    double simplex = 1e-12;
    double zero_probability = 1e-12;
    double zero_field = 1e-14;
};

inline constexpr Tolerances tol{};

// Largest matrix dimension any operation accepts.
inline constexpr int max_dim = 16;

} // namespace qinfo

#endif
