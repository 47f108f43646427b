#pragma once

#include <stdexcept>
#include <vector>

#include "spinv/constants.hpp"

namespace spinv::oracle {

/// Raised on bracket failure, non-convergence, or node-count mismatch.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Grid and root-finding controls, in reduced Compton units (hbar = m = c = 1).
/// r_max = 0 selects the default 40 n^2 / (Z alpha) for the state being solved.
struct SolverConfig {
    double r_min = 1e-6;
    double r_max = 0.0;
    int steps = 20000;
    double bracket = 0.10;     // half-width of the binding-energy seed bracket
    double tol = 1e-12;        // bisection tolerance on eps
    bool bohr_seed = false;    // seed from the nonrelativistic value instead of the closed form
    double match_radius = 0.0; // 0 = match at the outer classical turning point
    int max_bisections = 200;

    void validate() const;
};

struct RadialSolution {
    double eps = 0.0;
    int kappa_d = 0;
    int n_r = 0;
    int nodes_large = 0; // sign changes of G up to the matching radius
    int nodes_small = 0; // sign changes of F up to the matching radius
    double residual = 0.0;
    int bisections = 0;
};

/// Two-sided shooting for the radial Dirac-Coulomb bound state with
/// V = -Z alpha / r:
///   G' + (kappa/r) G = (eps + 1 + Z alpha / r) F
///   F' - (kappa/r) F = -(eps - 1 + Z alpha / r) G
/// integrated with RK4 on a log-spaced grid, outward from the r^gamma power
/// law and inward from the exponential tail, matched near the outer turning
/// point; bisection on the matching determinant with a secant polish.
/// Node identification: G has n_r sign changes for kappa_d < 0 and n_r - 1
/// for kappa_d > 0; F has n_r for both signs.
RadialSolution solve_bound_state(int Z, int kappa_d, int n_r, SolverConfig const& config = {},
                                 double alpha = PhysicalConstants{}.alpha);

/// Normalized matching determinant at a trial energy; vanishes exactly at
/// bound states. Exposed for scans and integrator-convergence diagnostics.
double matching_defect(int Z, int kappa_d, double eps, SolverConfig const& config = {},
                       double alpha = PhysicalConstants{}.alpha);

/// All bound states with n = n_r + |kappa_d| <= n_max (both kappa_d signs
/// where admissible; no nodeless positive-kappa state exists).
std::vector<RadialSolution> spectrum(int Z, int n_max, SolverConfig const& config = {},
                                     double alpha = PhysicalConstants{}.alpha);

struct StateComparison {
    int n;
    int kappa_d;
    int n_r;
    double eps_oracle;
    double eps_ledger;
    double rel_dev; // |eps_o - eps_l| / (1 - eps_l)
};

struct CompareReport {
    std::vector<StateComparison> states;
    double max_rel_dev = 0.0;
};

/// Solver-vs-closed-form deviation over the full catalog with n <= n_max.
CompareReport compare(int Z, int n_max, SolverConfig const& config = {},
                      double alpha = PhysicalConstants{}.alpha);

/// Sweeps the binding interval [binding_lo, binding_hi] on a geometric grid
/// and bisects every sign change of the matching determinant. Used to
/// demonstrate which states exist in an energy window without seeding from
/// the closed form.
std::vector<RadialSolution> scan_states(int Z, int kappa_d, double binding_lo, double binding_hi,
                                        int points, SolverConfig const& config = {},
                                        double alpha = PhysicalConstants{}.alpha);

} // namespace spinv::oracle
