#include "spinv/clifford.hpp"

#include <stdexcept>

namespace spinv::clifford {

namespace {

using Pauli = CMatrix<2>;

Pauli const& pauli(int k)
{
    static Pauli const sx{0, 1, 1, 0};
    static Pauli const sy{0, cplx(0, -1), cplx(0, 1), 0};
    static Pauli const sz{1, 0, 0, -1};
    static Pauli const id = Pauli::identity();
    switch (k) {
        case 0: return id;
        case 1: return sx;
        case 2: return sy;
        default: return sz;
    }
}

// 4x4 from 2x2 blocks [[a, b], [c, d]].
DiracMatrix from_blocks(Pauli const& a, Pauli const& b, Pauli const& c, Pauli const& d)
{
    DiracMatrix m;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            m(i, j) = a(i, j);
            m(i, j + 2) = b(i, j);
            m(i + 2, j) = c(i, j);
            m(i + 2, j + 2) = d(i, j);
        }
    }
    return m;
}

std::array<DiracMatrix, kBasisSize> build()
{
    Pauli const z = Pauli::zero();
    Pauli const id = pauli(0);
    std::array<DiracMatrix, kBasisSize> b;
    b[static_cast<int>(BasisId::I4)] = DiracMatrix::identity();
    for (int k = 1; k <= 3; ++k) {
        Pauli const& s = pauli(k);
        Pauli const ms = -s;
        Pauli const is = cplx(0, 1) * s;
        Pauli const mis = cplx(0, -1) * s;
        b[static_cast<int>(BasisId::AlphaX) + k - 1] = from_blocks(z, s, s, z);
        b[static_cast<int>(BasisId::SigmaX) + k - 1] = from_blocks(s, z, z, s);
        b[static_cast<int>(BasisId::GammaX) + k - 1] = from_blocks(z, mis, is, z);
        b[static_cast<int>(BasisId::OmegaX) + k - 1] = from_blocks(s, z, z, ms);
    }
    b[static_cast<int>(BasisId::Beta)] = from_blocks(id, z, z, -id);
    b[static_cast<int>(BasisId::Rho1)] = from_blocks(z, id, id, z);
    b[static_cast<int>(BasisId::Rho2)] = from_blocks(z, cplx(0, -1) * id, cplx(0, 1) * id, z);
    return b;
}

std::string const kNames[kBasisSize] = {
    "I4",      "alpha_x", "alpha_y", "alpha_z", "beta",   "Sigma_x",
    "Sigma_y", "Sigma_z", "Gamma_x", "Gamma_y", "Gamma_z", "Omega_x",
    "Omega_y", "Omega_z", "rho_1",   "rho_2",
};

} // namespace

std::string const& basis_name(BasisId id)
{
    int k = static_cast<int>(id);
    if (k < 0 || k >= kBasisSize) {
        throw std::invalid_argument("basis_name: bad BasisId");
    }
    return kNames[k];
}

std::array<DiracMatrix, kBasisSize> const& basis()
{
    static std::array<DiracMatrix, kBasisSize> const b = build();
    return b;
}

DiracMatrix const& basis_matrix(BasisId id)
{
    int k = static_cast<int>(id);
    if (k < 0 || k >= kBasisSize) {
        throw std::invalid_argument("basis_matrix: bad BasisId");
    }
    return basis()[static_cast<std::size_t>(k)];
}

std::array<cplx, kBasisSize> decompose(DiracMatrix const& m)
{
    std::array<cplx, kBasisSize> c{};
    auto const& b = basis();
    for (int a = 0; a < kBasisSize; ++a) {
        c[a] = (b[a].dagger() * m).trace() * 0.25;
    }
    return c;
}

DiracMatrix reconstruct(std::array<cplx, kBasisSize> const& coeffs)
{
    DiracMatrix m;
    auto const& b = basis();
    for (int a = 0; a < kBasisSize; ++a) {
        m += coeffs[a] * b[a];
    }
    return m;
}

std::vector<IdentityCheck> verify_products()
{
    auto const& b = basis();
    auto const& ax = b[static_cast<int>(BasisId::AlphaX)];
    auto const& ay = b[static_cast<int>(BasisId::AlphaY)];
    auto const& az = b[static_cast<int>(BasisId::AlphaZ)];
    auto const& beta = b[static_cast<int>(BasisId::Beta)];
    auto const& rho1 = b[static_cast<int>(BasisId::Rho1)];
    auto const& rho2 = b[static_cast<int>(BasisId::Rho2)];
    cplx const mi(0, -1);

    std::vector<IdentityCheck> out;
    out.push_back({"rho1 = -i ax ay az", (rho1 - mi * (ax * ay * az)).max_abs()});
    out.push_back({"rho2 = -i beta rho1", (rho2 - mi * (beta * rho1)).max_abs()});
    for (int k = 0; k < 3; ++k) {
        auto const& a = b[static_cast<int>(BasisId::AlphaX) + k];
        auto const& gam = b[static_cast<int>(BasisId::GammaX) + k];
        auto const& sig = b[static_cast<int>(BasisId::SigmaX) + k];
        auto const& om = b[static_cast<int>(BasisId::OmegaX) + k];
        std::string ax_name = basis_name(static_cast<BasisId>(static_cast<int>(BasisId::AlphaX) + k));
        out.push_back({"Gamma = -i beta alpha (" + ax_name + ")", (gam - mi * (beta * a)).max_abs()});
        out.push_back({"Omega = beta Sigma (" + basis_name(static_cast<BasisId>(static_cast<int>(BasisId::SigmaX) + k)) + ")",
                       (om - beta * sig).max_abs()});
    }

    // Clifford relations of the generating set: {a_j, a_k} = 2 delta_jk, {a_j, beta} = 0.
    DiracMatrix const id2 = DiracMatrix::identity() * cplx(2.0);
    DiracMatrix const* alphas[3] = {&ax, &ay, &az};
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            auto ac = anticommutator(*alphas[j], *alphas[k]);
            if (j == k) {
                ac -= id2;
            }
            out.push_back({"{alpha_" + std::string(1, char('x' + j)) + ", alpha_" +
                               std::string(1, char('x' + k)) + "}",
                           ac.max_abs()});
        }
        out.push_back({"{alpha_" + std::string(1, char('x' + j)) + ", beta}",
                       anticommutator(*alphas[j], beta).max_abs()});
    }

    // Every basis element squares to the identity.
    double sq = 0.0;
    for (auto const& m : b) {
        sq = std::max(sq, (m * m - DiracMatrix::identity()).max_abs());
    }
    out.push_back({"B^2 = I4 (all 16)", sq});

    // Gram matrix Tr(Ba† Bb)/4 = delta_ab.
    double gram = 0.0;
    for (int p = 0; p < kBasisSize; ++p) {
        for (int q = 0; q < kBasisSize; ++q) {
            cplx g = (b[p].dagger() * b[q]).trace() * 0.25;
            gram = std::max(gram, std::abs(g - (p == q ? cplx(1.0) : cplx(0.0))));
        }
    }
    out.push_back({"Gram = identity (16x16)", gram});

    // Hermiticity of the whole set.
    double herm = 0.0;
    for (auto const& m : b) {
        herm = std::max(herm, (m - m.dagger()).max_abs());
    }
    out.push_back({"B = B† (all 16)", herm});

    return out;
}

double max_residual(std::vector<IdentityCheck> const& checks)
{
    double m = 0.0;
    for (auto const& c : checks) {
        m = std::max(m, c.residual);
    }
    return m;
}

} // namespace spinv::clifford
