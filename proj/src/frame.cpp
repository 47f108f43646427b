#include "spinv/frame.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinv::frame {

namespace {

constexpr double kUnitaryTol = 1e-8;

void require_nonnegative(ScalarInvariants const& s)
{
    if (s.g1 < 0.0 || s.g2 < 0.0 || s.g3 < 0.0) {
        throw std::invalid_argument("invariant eigenvalue squares must be non-negative");
    }
}

} // namespace

FrameOperator const& pauli(Axis axis)
{
    static FrameOperator const sx{0, 1, 1, 0};
    static FrameOperator const sy{0, cplx(0, -1), cplx(0, 1), 0};
    static FrameOperator const sz{1, 0, 0, -1};
    switch (axis) {
        case Axis::x: return sx;
        case Axis::y: return sy;
        default: return sz;
    }
}

RepTriple rep_matrices(ScalarInvariants const& s)
{
    require_nonnegative(s);
    RepTriple t;
    t.k = std::sqrt(s.g1) * pauli(Axis::z);
    t.a = std::sqrt(s.g2) * pauli(Axis::y);
    t.i = -std::sqrt(s.g3) * pauli(Axis::x);
    return t;
}

FrameOperator composite(ScalarInvariants const& s)
{
    auto t = rep_matrices(s);
    return t.k + t.a + t.i;
}

FrameOperator rotation(Axis axis, double phi)
{
    double c = std::cos(0.5 * phi);
    double sn = std::sin(0.5 * phi);
    return c * FrameOperator::identity() + cplx(0, 1) * sn * pauli(axis);
}

FrameOperator euler_rotation(EulerAngles const& angles)
{
    if (!std::isfinite(angles.psi) || !std::isfinite(angles.theta) || !std::isfinite(angles.phi)) {
        throw std::invalid_argument("euler_rotation: angles must be finite");
    }
    return rotation(Axis::z, angles.psi) * rotation(Axis::x, angles.theta) *
           rotation(Axis::z, angles.phi);
}

Diagonalization diagonalize_invariant(InvariantKind kind, ScalarInvariants const& s)
{
    require_nonnegative(s);
    double const half_pi = 0.5 * std::numbers::pi;
    switch (kind) {
        case InvariantKind::K:
            return {FrameOperator::identity(), std::sqrt(s.g1)};
        case InvariantKind::A:
            return {rotation(Axis::x, -half_pi), std::sqrt(s.g2)};
        default:
            return {rotation(Axis::y, -half_pi), std::sqrt(s.g3)};
    }
}

double MixState::norm() const
{
    return std::sqrt(std::norm(c_plus) + std::norm(c_minus));
}

MixState transform_A_basis(Sign sigma, ScalarInvariants const& s)
{
    require_nonnegative(s);
    if (s.g2 <= kCollapseThreshold) {
        throw std::domain_error("degenerate A-eigenstates at g2 = 0; use collapse_nr0");
    }
    double const inv_sqrt2 = 1.0 / std::sqrt(2.0);
    cplx const ep = std::polar(inv_sqrt2, std::numbers::pi / 4.0);  // e^{+i pi/4}/sqrt2
    cplx const em = std::polar(inv_sqrt2, -std::numbers::pi / 4.0); // e^{-i pi/4}/sqrt2
    if (sigma == Sign::plus) {
        return {ep, -em};
    }
    return {ep, em};
}

MixState transform_I_basis(Sign sigma, ScalarInvariants const& s)
{
    require_nonnegative(s);
    if (s.g3 <= kCollapseThreshold) {
        throw std::domain_error("degenerate I-eigenstates at g3 = 0; use collapse_nr0");
    }
    double const inv_sqrt2 = 1.0 / std::sqrt(2.0);
    if (sigma == Sign::plus) {
        return {-inv_sqrt2, inv_sqrt2};
    }
    return {inv_sqrt2, inv_sqrt2};
}

GeneralInvariant general_invariant(double theta, double phi, ScalarInvariants const& s)
{
    require_nonnegative(s);
    GeneralInvariant g;
    g.c_k = std::cos(theta);
    g.c_a = -std::cos(phi) * std::sin(theta);
    g.c_i = std::sin(phi) * std::sin(theta);
    g.eigenvalue = std::sqrt(s.g1 * g.c_k * g.c_k + s.g2 * g.c_a * g.c_a + s.g3 * g.c_i * g.c_i);
    return g;
}

EigenAxis eigen_axis(ScalarInvariants const& s)
{
    require_nonnegative(s);
    if (!(s.g1 > 0.0)) {
        throw std::invalid_argument("eigen_axis requires g1 > 0");
    }
    EigenAxis ax;
    ax.phi0 = (s.g2 == 0.0 && s.g3 == 0.0) ? 0.0 : std::atan2(std::sqrt(s.g3), std::sqrt(s.g2));
    ax.theta0 = -std::atan2(std::sqrt(s.g2 + s.g3), std::sqrt(s.g1));
    return ax;
}

double c_eig(ScalarInvariants const& s)
{
    require_nonnegative(s);
    return std::sqrt(s.g1 + s.g2 + s.g3);
}

FrameOperator su2_generator(ScalarInvariants const& s)
{
    double lam = s.g1 + s.g2 + s.g3;
    if (!(lam > 0.0)) {
        throw std::invalid_argument("su2_generator requires g1 + g2 + g3 > 0");
    }
    return (1.0 / std::sqrt(lam)) * composite(s);
}

Su2Rotation su2_rotation(double psi, ScalarInvariants const& s)
{
    FrameOperator gen = su2_generator(s);
    FrameOperator r = std::cos(0.5 * psi) * FrameOperator::identity() +
                      cplx(0, 1) * std::sin(0.5 * psi) * gen;
    return {r, r(0, 0), r(1, 0)};
}

MixState apply_mix(FrameOperator const& r, MixState const& m)
{
    double defect = (r * r.dagger() - FrameOperator::identity()).max_abs();
    if (defect > kUnitaryTol) {
        throw std::invalid_argument("apply_mix: operator is not unitary");
    }
    return {r(0, 0) * m.c_plus + r(0, 1) * m.c_minus,
            r(1, 0) * m.c_plus + r(1, 1) * m.c_minus};
}

Collapse collapse_nr0(ScalarInvariants const& s)
{
    require_nonnegative(s);
    if (s.g2 > kCollapseThreshold) {
        throw std::domain_error("collapse_nr0 called off the nodeless shell (g2 > 0)");
    }
    return {{1.0, 0.0}, true};
}

std::pair<double, double> hermitian_eigenvalues(FrameOperator const& m)
{
    if (!m.is_hermitian(1e-12)) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    }
    double a = m(0, 0).real();
    double d = m(1, 1).real();
    double half_sum = 0.5 * (a + d);
    double half_diff = 0.5 * (a - d);
    double rad = std::sqrt(half_diff * half_diff + std::norm(m(0, 1)));
    return {half_sum + rad, half_sum - rad};
}

} // namespace spinv::frame
