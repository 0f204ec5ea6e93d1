#pragma once

// The homological side: the projective braid representation on the q-eigenspace
// of first cohomology of the cyclic branched cover of the sphere, in the
// explicit reflection coordinates, its closed-form tridiagonal matrices, the
// reduced Burau representation, and cover invariants.

#include <numeric>
#include <vector>

#include "skeinlab/chebyshev.hpp"
#include "skeinlab/matrix.hpp"

namespace skeinlab {

// ---- cover invariants ---------------------------------------------------------

// dimension of the q-eigenspace of the deck transformation on H^1
inline int h1_dimension(int n, const QRoot& q) {
    if (q == QRoot(1, 0)) return 0;
    const bool q_pow_n_is_one = (static_cast<long long>(n) * q.exponent) % q.order == 0;
    return q_pow_n_is_one ? n - 2 : n - 1;
}

// genus of the degree-d cyclic cover branched over n points (Riemann-Hurwitz)
inline int cover_genus(int d, int n) {
    if (d < 2 || n < 2) throw std::runtime_error("cover_genus: need d, n >= 2");
    const int num = (n - 1) * (d - 1) + 1 - std::gcd(d, n);
    if (num % 2 != 0) throw std::logic_error("cover_genus: odd numerator");
    return num / 2;
}

// ---- square-root branch --------------------------------------------------------

struct SqrtBranch {
    QRoot half;         // the chosen q^{1/2}
    CycloNum value;     // the same as a cyclotomic number
    CycloNum delta_sq;  // i (q^{1/2} - q^{-1/2}), a non-positive real number
};

// imaginary unit as a cyclotomic number
inline CycloNum cyclo_i() { return CycloNum::root_power(4, 1); }

// The square root of q with i (q^{1/2} - q^{-1/2}) <= 0, i.e. with argument in
// [0, pi]; the sign test is exact on exponents. Ties (q^{1/2} = +-1) pick +1.
inline SqrtBranch sqrt_branch(const QRoot& q) {
    const int M = q.order;
    QRoot r1(2 * M, q.exponent), r2(2 * M, q.exponent + M);
    QRoot pick = r1;
    if (r1.exponent == 0 || r2.exponent == 0)
        pick = (r1.exponent == 0) ? r1 : r2;
    else
        pick = (r1.exponent <= M) ? r1 : r2;
    SqrtBranch b{pick, CycloNum::from_root(pick), CycloNum()};
    b.delta_sq = cyclo_i() * (b.value - CycloNum::from_root(pick.inverse()));
    return b;
}

// the other square root of q
inline QRoot flip_branch(const QRoot& half) { return QRoot(half.order, half.exponent + half.order / 2); }

// ---- closed-form matrices on the rescaled basis --------------------------------

// Matrices of sigma_1..sigma_{n-1} in the rescaled spanning basis: diagonal
// action -q, neighbor coupling q^{1/2}, identity elsewhere; the n-1-st basis
// vector is rewritten as an alternating Chebyshev combination of the first n-2.
// Requires q^n = 1 and q != 1 (the projective action descends only then).
inline std::vector<Matrix<CycloNum>> homological_matrices(int n, const QRoot& q,
                                                         const QRoot& half) {
    if (n < 4) throw std::runtime_error("homological_matrices: need n >= 4");
    if (q == QRoot(1, 0)) throw std::runtime_error("homological_matrices: q must differ from 1");
    if ((static_cast<long long>(n) * q.exponent) % q.order != 0)
        throw std::runtime_error("homological_matrices: q^n must be 1");
    if (!(QRoot(half.order, 2 * half.exponent) == q))
        throw std::runtime_error("homological_matrices: half is not a square root of q");
    const int d = n - 2;
    const CycloNum one = CycloNum::one(half.order);
    const CycloNum qq = CycloNum::from_root(q);
    const CycloNum qh = CycloNum::from_root(half);
    const CycloNum qh_inv = CycloNum::from_root(half.inverse());
    const CycloNum delta = -(qh + qh_inv);

    // coefficient of u_{n-1-l} in u_{n-1} is (-1)^{l+1} e_l(delta)
    std::vector<CycloNum> last(d);
    for (int l = 1; l <= d; ++l) {
        CycloNum c = chebyshev(l).eval_cyclo(delta);
        if (l % 2 == 0) c = -c;
        last[d - l] = c;
    }

    std::vector<Matrix<CycloNum>> out;
    for (int j = 1; j <= n - 1; ++j) {
        Matrix<CycloNum> m(d, d);
        for (int k = 1; k <= d; ++k) {
            if (j == k) {
                m(k - 1, k - 1) = -qq;
            } else if (j - k == 1 || k - j == 1) {
                m(k - 1, k - 1) = one;
                if (j <= d)
                    m(j - 1, k - 1) = m(j - 1, k - 1) + qh;
                else
                    for (int i = 0; i < d; ++i) m(i, k - 1) = m(i, k - 1) + qh * last[i];
            } else {
                m(k - 1, k - 1) = one;
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

inline std::vector<Matrix<CycloNum>> homological_matrices(int n, const QRoot& q) {
    return homological_matrices(n, q, sqrt_branch(q).half);
}

// ---- general-q reflection representation ---------------------------------------

// Gram matrix of the spanning vectors u_1..u_m (m <= n) with the cyclic
// neighbor pairing: <u_j,u_j> = -i(q - conj q), <u_j,u_{j+1}> = i(1 - conj q),
// hermitian, zero otherwise. The form is linear on the left.
inline Matrix<CycloNum> reflection_gram(int n, const QRoot& q, int m) {
    const CycloNum i = cyclo_i();
    const CycloNum qq = CycloNum::from_root(q);
    const CycloNum qbar = CycloNum::from_root(q.inverse());
    const CycloNum one = CycloNum::one(q.order);
    const CycloNum diag = -i * (qq - qbar);
    const CycloNum up = i * (one - qbar);     // <u_j, u_{j+1}>
    const CycloNum down = up.conj();          // <u_{j+1}, u_j>
    Matrix<CycloNum> g(m, m);
    for (int j = 0; j < m; ++j) {
        g(j, j) = diag;
        if (j + 1 < m) {
            g(j, j + 1) = up;
            g(j + 1, j) = down;
        }
    }
    // cyclic wrap only matters when the full spanning set is used
    if (m == n) {
        g(n - 1, 0) = up;
        g(0, n - 1) = down;
    }
    return g;
}

// Matrices of sigma_1..sigma_{n-1} on the basis u_1..u_{n-1}, valid when
// q^n != 1: each generator is the q-reflection x -> x - (q+1) <x,u_j>/<u_j,u_j> u_j
// (or x -> x - (i/2) <x,u_j> u_j when q = -1).
inline std::vector<Matrix<CycloNum>> reflection_matrices(int n, const QRoot& q) {
    if (q == QRoot(1, 0)) throw std::runtime_error("reflection_matrices: q must differ from 1");
    const int d = n - 1;
    Matrix<CycloNum> g = reflection_gram(n, q, d);
    if (g.rank() != d) throw GramDegenerate("reflection_matrices: spanning Gram is singular");
    const CycloNum one = CycloNum::one(q.order);
    const bool q_is_minus_one = CycloNum::from_root(q) == -one;
    std::vector<Matrix<CycloNum>> out;
    for (int j = 0; j < d; ++j) {
        Matrix<CycloNum> m = Matrix<CycloNum>::identity(d, one);
        for (int k = 0; k < d; ++k) {
            // coefficient of u_j subtracted from the image of u_k
            CycloNum c = q_is_minus_one
                             ? Rational(1, 2) * (cyclo_i() * g(k, j))
                             : (CycloNum::from_root(q) + one) * g(k, j) * g(j, j).inverse();
            m(j, k) = m(j, k) - c;
        }
        out.push_back(std::move(m));
    }
    return out;
}

// ---- reduced Burau ---------------------------------------------------------------

// Reduced Burau matrices of sigma_1..sigma_{n-1}, dimension n-1, parameter t:
// f_{i-1} -> f_{i-1} + t f_i, f_i -> -t f_i, f_{i+1} -> f_i + f_{i+1}.
template <typename S>
std::vector<Matrix<S>> burau_reduced(int n, const S& t, const S& one) {
    if (n < 2) throw std::runtime_error("burau_reduced: need n >= 2");
    const int d = n - 1;
    std::vector<Matrix<S>> out;
    for (int i = 1; i <= d; ++i) {
        Matrix<S> m = Matrix<S>::identity(d, one);
        m(i - 1, i - 1) = S{} - t;
        if (i - 2 >= 0) m(i - 1, i - 2) = t;
        if (i < d) m(i - 1, i) = one;
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace skeinlab
