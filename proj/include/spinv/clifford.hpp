#pragma once

#include <array>
#include <string>
#include <vector>

#include "spinv/smatrix.hpp"

namespace spinv::clifford {

using DiracMatrix = CMatrix<4>;

/// The 16-element Hermitian basis of 4x4 matrix space in the conventional
/// Dirac representation. rho3 coincides with beta and is not a separate tag,
/// which keeps the set linearly independent. Order is fixed; decompositions
/// are serialized against it.
enum class BasisId : int {
    I4 = 0,
    AlphaX,
    AlphaY,
    AlphaZ,
    Beta,
    SigmaX,
    SigmaY,
    SigmaZ,
    GammaX,
    GammaY,
    GammaZ,
    OmegaX,
    OmegaY,
    OmegaZ,
    Rho1,
    Rho2,
};

inline constexpr int kBasisSize = 16;

std::string const& basis_name(BasisId id);

/// All 16 basis matrices, built once from exact 0/±1/±i entries.
std::array<DiracMatrix, kBasisSize> const& basis();

DiracMatrix const& basis_matrix(BasisId id);

/// Coefficients c_a = Tr(B_a† M)/4 over the basis order above.
std::array<cplx, kBasisSize> decompose(DiracMatrix const& m);

DiracMatrix reconstruct(std::array<cplx, kBasisSize> const& coeffs);

struct IdentityCheck {
    std::string name;
    double residual;
};

/// Product identities of the basis (rho1 = -i ax ay az, rho2 = -i beta rho1,
/// Gamma_k = -i beta a_k, Omega_k = beta Sigma_k), the Clifford
/// anticommutation relations of alpha/beta, squares B^2 = I, and the
/// trace-orthogonality Gram condition. Every residual must be literally zero.
std::vector<IdentityCheck> verify_products();

double max_residual(std::vector<IdentityCheck> const& checks);

} // namespace spinv::clifford
