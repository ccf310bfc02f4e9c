#ifndef QINFO_MALUS_HPP
#define QINFO_MALUS_HPP

#include <vector>

#include "qinfo/errors.hpp"
#include "qinfo/vec3.hpp"

namespace qinfo {

// Winding constant of the probability law p = cos^2(n theta / 2). Presets for
// the known particle families are provided for convenience.
struct MalusParameter {
    double n = 1.0;

    static MalusParameter electron() { return {0.5}; }
    static MalusParameter photon() { return {1.0}; }
    static MalusParameter graviton() { return {2.0}; }
};

struct OdeSolution {
    std::vector<double> theta; // steps+1 uniform samples over [0, theta_max]
    std::vector<double> f;     // integrated f(theta)
    std::vector<double> g;     // companion branch function, g = -f'/n
    double max_abs_deviation;  // sup |f - cos(n theta)| over the samples
};

// Integrates df/dtheta = -n sqrt(1 - f^2), f(0) = 1, as the equivalent pair
// f' = -n g, g' = n f with g(0) = 0: keeping g continuous through f = +-1 is
// exactly the branch convention for the square root. Classical fixed-step
// fourth-order integration; requires steps >= 100.
OdeSolution solve_f_ode(MalusParameter n, double theta_max, int steps);

// The in-plane rotation block: [[1,0,0],[0,cos n t,-sin n t],[0,sin n t,cos n t]].
Mat3 rotation_theta(MalusParameter n, double theta);

// p = cos^2(n theta / 2).
double malus_probability(MalusParameter n, double theta);

// R_z(alpha) R_y(beta) R_z(gamma).
Mat3 euler_rotation(double alpha, double beta, double gamma);

// Spin-up probability along the direction tilted by theta from z, computed
// from the projector trace against |+z><+z|; equals cos^2(theta/2).
double quantum_oracle_probability(double theta);

struct SweepRow {
    double theta;
    double f_ode;
    double f_closed;  // cos(n theta)
    double p_malus;   // cos^2(n theta / 2)
    double p_oracle;  // quantum oracle, spin-1/2 convention
    double abs_err;   // |f_ode - f_closed|
};

// Uniform sweep of `count` points from start to stop (start >= 0). The ODE is
// integrated from 0 with at least `steps_per_turn` steps per 2 pi, with the
// sweep points landing exactly on integration nodes.
std::vector<SweepRow> malus_sweep(MalusParameter n, double start, double stop, int count,
                                  int steps_per_turn = 10000);

} // namespace qinfo

#endif
