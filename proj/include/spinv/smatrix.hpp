#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>

namespace spinv {

using cplx = std::complex<double>;

/// Dense complex N x N matrix with value semantics. Sized for the tiny
/// matrices of this problem (2x2 spinor blocks, 4x4 Dirac blocks), so all
/// storage is inline and all operations are exact loops, no BLAS.
template <std::size_t N>
class CMatrix {
  public:
    CMatrix() = default;

    CMatrix(std::initializer_list<cplx> entries)
    {
        if (entries.size() != N * N) {
            throw std::invalid_argument("CMatrix: initializer size mismatch");
        }
        std::size_t k = 0;
        for (auto const& v : entries) {
            e_[k++] = v;
        }
    }

    static CMatrix zero() { return CMatrix(); }

    static CMatrix identity()
    {
        CMatrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    cplx& operator()(std::size_t i, std::size_t j) { return e_[i * N + j]; }
    cplx const& operator()(std::size_t i, std::size_t j) const { return e_[i * N + j]; }

    static constexpr std::size_t size() { return N; }

    CMatrix& operator+=(CMatrix const& o)
    {
        for (std::size_t k = 0; k < N * N; ++k) {
            e_[k] += o.e_[k];
        }
        return *this;
    }

    CMatrix& operator-=(CMatrix const& o)
    {
        for (std::size_t k = 0; k < N * N; ++k) {
            e_[k] -= o.e_[k];
        }
        return *this;
    }

    CMatrix& operator*=(cplx s)
    {
        for (auto& v : e_) {
            v *= s;
        }
        return *this;
    }

    friend CMatrix operator+(CMatrix a, CMatrix const& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, CMatrix const& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

    friend CMatrix operator-(CMatrix const& a)
    {
        CMatrix m;
        for (std::size_t k = 0; k < N * N; ++k) {
            m.e_[k] = -a.e_[k];
        }
        return m;
    }

    friend CMatrix operator*(CMatrix const& a, CMatrix const& b)
    {
        CMatrix m;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t k = 0; k < N; ++k) {
                cplx aik = a(i, k);
                if (aik == cplx{}) {
                    continue;
                }
                for (std::size_t j = 0; j < N; ++j) {
                    m(i, j) += aik * b(k, j);
                }
            }
        }
        return m;
    }

    CMatrix dagger() const
    {
        CMatrix m;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                m(j, i) = std::conj((*this)(i, j));
            }
        }
        return m;
    }

    cplx trace() const
    {
        cplx t{};
        for (std::size_t i = 0; i < N; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    /// Max entrywise modulus; the residual norm used throughout the identity checks.
    double max_abs() const
    {
        double m = 0.0;
        for (auto const& v : e_) {
            m = std::max(m, std::abs(v));
        }
        return m;
    }

    bool is_hermitian(double tol = 0.0) const
    {
        return (*this - dagger()).max_abs() <= tol;
    }

  private:
    std::array<cplx, N * N> e_{};
};

template <std::size_t N>
CMatrix<N> commutator(CMatrix<N> const& a, CMatrix<N> const& b)
{
    return a * b - b * a;
}

template <std::size_t N>
CMatrix<N> anticommutator(CMatrix<N> const& a, CMatrix<N> const& b)
{
    return a * b + b * a;
}

} // namespace spinv
