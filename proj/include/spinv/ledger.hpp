#pragma once

#include <string>
#include <vector>

#include "spinv/constants.hpp"

namespace spinv::ledger {

/// State label {n, j, m_j, sigma}. Half-integers are stored doubled (2j, 2m_j)
/// so validity checks stay exact.
struct QuantumNumbers {
    int n = 1;
    int two_j = 1;
    int two_mj = 1;
    Sign sigma = Sign::plus;

    int kappa() const { return (two_j + 1) / 2; }
    int n_r() const { return n - kappa(); }
    double j() const { return 0.5 * two_j; }
    double mj() const { return 0.5 * two_mj; }

    bool valid() const;
    void require_valid() const; // throws std::invalid_argument
};

/// j as a doubled integer must be odd and positive; returns kappa = j + 1/2.
int kappa_from_two_j(int two_j);

/// Validates that 2j is (close to) an odd integer and returns it doubled.
int two_j_from_double(double j);

double gamma_j(int two_j, int Z, double alpha);

/// Dimensionless Johnson-Lippmann eigenvalue magnitude
/// a = sqrt(1 + kappa^2 (eps^2 - 1) / (Z alpha)^2), clamped to 0 when the
/// radicand is a tiny negative roundoff, rejected when it is genuinely negative.
double a_eps(double eps, int two_j, int Z, double alpha);

double lambda_value(double kappa, double a);

/// Largest integer n with n^2 <= lambda.
int kappa_max_from_lambda(double lambda);

/// Bound-state energy eps = gamma_{n,nr} / sqrt(gamma_{n,nr}^2 + (Z alpha)^2)
/// with gamma_{n,nr} = n_r + gamma_j.
double energy(int n, int two_j, int Z, double alpha);

/// Nodeless branch eps_n = sqrt(1 - (Z alpha / n)^2); equals energy(n, j_max).
double energy_circular(int n, int Z, double alpha);

/// Eigenvalue shadows of the three invariants at fixed (eps, j, Z):
/// g1 = kappa^2, g2 = a^2, g3 = g1 g2, b = sqrt(g3).
struct ScalarInvariants {
    double eps = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
    double g3 = 0.0;
    double b = 0.0;

    static ScalarInvariants from_state(double eps, int two_j, int Z, double alpha);
    /// Algebra-only carrier for synthetic (g1, g2, g3); eps is left at 0.
    static ScalarInvariants from_g(double g1, double g2, double g3);
};

struct InvariantEigenvalues {
    double eps_k;
    double eps_a;
    double eps_i;
};

/// (sigma kappa, sigma a, sigma kappa a) in dimensionless form.
InvariantEigenvalues invariant_eigenvalues(double eps, int two_j, int Z, double alpha, Sign sigma);

/// All valid {n, j, m_j, sigma}; the n_r = 0 shell admits sigma = + only.
/// Size is 2 n^2.
std::vector<QuantumNumbers> enumerate_states(int n);

struct SpectralLine {
    int Z;
    int n;
    int two_j;
    int nr;
    int kappa;
    std::string label;
    double eps;
    double binding_ev;
    int degeneracy;
};

/// One line per (n, j) cell with n <= n_max, sorted by eps ascending. Cells
/// with n_r > 0 host both sigma families at one energy; the label shows both
/// spectroscopic terms (e.g. "2s1/2/2p1/2").
std::vector<SpectralLine> spectrum_table(int Z, int n_max, PhysicalConstants const& pc = {});

std::string spectroscopic_label(int n, int two_j, int nr);

std::string csv_header();
std::string to_csv_row(SpectralLine const& line);
std::string to_json(SpectralLine const& line);
std::string to_json(std::vector<SpectralLine> const& lines);

} // namespace spinv::ledger
