#pragma once

#include <utility>

#include "spinv/constants.hpp"
#include "spinv/ledger.hpp"
#include "spinv/smatrix.hpp"

namespace spinv::frame {

using FrameOperator = CMatrix<2>;
using ledger::ScalarInvariants;

/// g2 at or below this floor is treated as the nodeless shell (a^2 = 0 up to
/// the eps-rounding scale ~ kappa^2 ulp / (Z alpha)^2; physical n_r >= 1
/// states sit above 0.1).
inline constexpr double kCollapseThreshold = 1e-9;

enum class Axis { x, y, z };

enum class InvariantKind { K, A, IBel };

FrameOperator const& pauli(Axis axis);

/// 2x2 realization of the three invariants on the (eps, j, m_j) sector:
/// K = sqrt(g1) sigma_z, A = sqrt(g2) sigma_y, I = -sqrt(g3) sigma_x.
/// The sign of I is fixed by its definition as [K, A]/(2i), which makes the
/// commutator algebra [K,A] = 2iI, [I,K] = 2i g1 A, [A,I] = 2i g2 K exact
/// whenever g3 = g1 g2.
struct RepTriple {
    FrameOperator k;
    FrameOperator a;
    FrameOperator i;
};

RepTriple rep_matrices(ScalarInvariants const& s);

/// C = K + A + I, the invariant vector in the abstract frame.
FrameOperator composite(ScalarInvariants const& s);

/// Half-angle rotation cos(phi/2) Id + i sin(phi/2) sigma_axis.
FrameOperator rotation(Axis axis, double phi);

/// z-x-z Euler composition R_z(psi) R_x(theta) R_z(phi).
struct EulerAngles {
    double psi;
    double theta;
    double phi;
};

FrameOperator euler_rotation(EulerAngles const& angles);

struct Diagonalization {
    FrameOperator rotation;     // R with R M R† diagonal for the chosen invariant
    double eigenvalue;          // the +|eigenvalue| branch; the pair is ±eigenvalue
};

/// Rotation putting the requested invariant on the sigma_z slot with a
/// positive coefficient: K is already diagonal, A maps there under
/// R_x(-pi/2), I under R_y(-pi/2).
Diagonalization diagonalize_invariant(InvariantKind kind, ScalarInvariants const& s);

/// Two-component amplitude over the K-basis pair |+>_K, |->_K.
struct MixState {
    cplx c_plus;
    cplx c_minus;

    double norm() const;
};

/// Johnson-Lippmann eigenstates written in the K-basis; requires g2 > 0.
MixState transform_A_basis(Sign sigma, ScalarInvariants const& s);

/// Eigenstates of the third invariant in the K-basis; requires g3 > 0.
MixState transform_I_basis(Sign sigma, ScalarInvariants const& s);

struct GeneralInvariant {
    double c_k;
    double c_a;
    double c_i;
    double eigenvalue; // the +branch of C_K K + C_A A + C_I I
};

/// Unit combination selected by frame direction (theta, phi):
/// C_K = cos(theta), C_A = -cos(phi) sin(theta), C_I = sin(phi) sin(theta).
GeneralInvariant general_invariant(double theta, double phi, ScalarInvariants const& s);

struct EigenAxis {
    double phi0;
    double theta0;
};

/// Angles such that conjugating C by R_x(theta0) R_z(phi0) leaves
/// sqrt(g1+g2+g3) sigma_z.
EigenAxis eigen_axis(ScalarInvariants const& s);

/// +sqrt(g1 + g2 + g3); the spectrum of C is the ± pair of this value.
double c_eig(ScalarInvariants const& s);

/// S = C / sqrt(g1+g2+g3); Hermitian, traceless, S^2 = Id.
FrameOperator su2_generator(ScalarInvariants const& s);

struct Su2Rotation {
    FrameOperator r;
    cplx c1;
    cplx c2;
};

/// R(psi) = cos(psi/2) Id + i sin(psi/2) S, laid out as [[c1, -c2*], [c2, c1*]].
Su2Rotation su2_rotation(double psi, ScalarInvariants const& s);

/// Applies a unitary mixing operator; rejects R with ||R R† - Id|| > 1e-8.
MixState apply_mix(FrameOperator const& r, MixState const& m);

struct Collapse {
    MixState state;
    bool degenerate_families; // A- and I-labels reduce to the single survivor
};

/// The nodeless-shell state: requires g2 at the collapse floor (<= 1e-9, the
/// rounding scale of on-shell a^2) and returns (1, 0) in the K-basis,
/// flagging that the sigma = ± families coincide there.
Collapse collapse_nr0(ScalarInvariants const& s);

/// Closed-form eigenvalues of a Hermitian 2x2 matrix, descending order.
std::pair<double, double> hermitian_eigenvalues(FrameOperator const& m);

} // namespace spinv::frame
