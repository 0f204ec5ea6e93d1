#pragma once

// The fully explicit four-cluster theory: the commuting-variable basis
// Y^k X^{N-k}, the product formula for the resolved cabled crossing, the
// triangular generator matrices, the two-vector kernel basis (v, v*) at the
// critical root, and the induced 2x2 representation on the kernel.

#include <utility>
#include <vector>

#include "skeinlab/skein.hpp"

namespace skeinlab {

// ---- the XY basis -----------------------------------------------------------

// coefficients of sum_k coeffs[k] * Y^k X^{L-k}
struct XYPoly {
    std::vector<RatFunc> coeffs;  // size L + 1

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Y-degree of a cluster matching in the four-cluster module: N minus the
// number of arcs joining the first two clusters
inline int xy_index(const ClusterBasis& b, int elem) {
    if (b.n != 4 || b.k != 0) throw std::runtime_error("xy_index: need four plain clusters");
    const auto& mate = b.elements[elem].mates();
    int arcs12 = 0;
    for (int i = 0; i < b.N; ++i)
        if (b.cluster_of[mate[i]] == 1) ++arcs12;
    return b.N - arcs12;
}

// ---- product formula for the resolved cabled crossing ------------------------

// P_L = prod_{k=0}^{L-1} (A^{2k+1} Y + A^{-2k-1} X), expanded with XY = YX
inline XYPoly p_product(int L) {
    if (L < 0) throw std::runtime_error("p_product: need L >= 0");
    XYPoly p;
    p.coeffs.assign(1, RatFunc::one());
    for (int k = 0; k < L; ++k) {
        std::vector<RatFunc> next(p.coeffs.size() + 1, RatFunc::zero());
        const RatFunc y = RatFunc::monomial(2 * k + 1);
        const RatFunc x = RatFunc::monomial(-2 * k - 1);
        for (size_t j = 0; j < p.coeffs.size(); ++j) {
            next[j + 1] += y * p.coeffs[j];
            next[j] += x * p.coeffs[j];
        }
        p.coeffs = std::move(next);
    }
    return p;
}

// Dual path: resolve the L-cabled crossing of the first two clusters applied
// to the all-Y matching diagrammatically, over exact rational functions.
inline XYPoly p_product_diagrammatic(int L, int oracle_cap = kDefaultOracleCap) {
    if (L < 1) throw std::runtime_error("p_product_diagrammatic: need L >= 1");
    ClusterBasis b = cluster_basis(4, L);
    check_oracle_cap(b.points, oracle_cap);
    const RatFunc delta = loop_value();

    // Y^L is the fully nested rainbow matching (no arcs between clusters 1, 2)
    auto yl = TLElement<RatFunc>::from_diagram(PlanarDiagram::nested_cup(2 * L), RatFunc::one());
    auto fL = jones_wenzl(L);
    auto cross = tl_multiply(block_crossing(L, L, +1), tl_tensor(fL, fL), delta);
    auto layer = tl_tensor(cross, tl_identity(2 * L, RatFunc::one()));
    auto image = tl_multiply(yl, layer, delta);

    XYPoly p;
    p.coeffs.assign(L + 1, RatFunc::zero());
    for (const auto& [d, c] : image.terms()) {
        if (has_intra_cluster_arc(d.mates(), b.cluster_of)) continue;
        int idx = b.index_of(d);
        if (idx < 0) throw std::logic_error("p_product_diagrammatic: matching not in basis");
        p.coeffs[xy_index(b, idx)] += c;
    }
    return p;
}

// ---- triangular generator matrices -------------------------------------------

// Matrices of the half twists of clusters (1,2) and (2,3) on (Y^k X^{N-k})_k:
// column k of the first is (-A)^{k(k+2)} P_k extended by X^{N-k}; the second
// is its conjugate under the coordinate flip Y^k X^{N-k} <-> Y^{N-k} X^k.
inline std::pair<Matrix<RatFunc>, Matrix<RatFunc>> sigma_matrices_4(int N) {
    if (N < 1) throw std::runtime_error("sigma_matrices_4: need N >= 1");
    Matrix<RatFunc> m(N + 1, N + 1);
    for (int k = 0; k <= N; ++k) {
        XYPoly pk = p_product(k);
        RatFunc pref = RatFunc::monomial(k * (k + 2));
        if ((k * (k + 2)) % 2 != 0) pref = -pref;
        for (int j = 0; j <= k; ++j) m(j, k) = pref * pk.coeffs[j];
    }
    Matrix<RatFunc> mbar(N + 1, N + 1);
    for (int j = 0; j <= N; ++j)
        for (int k = 0; k <= N; ++k) mbar(j, k) = m(N - j, N - k);
    return {std::move(m), std::move(mbar)};
}

// ---- kernel basis at the critical root ---------------------------------------

struct FourClusterKernel {
    std::vector<CycloNum> v, vstar;  // XY coordinates, index = power of Y
    CycloNum a0;                     // coefficient of X^N in v
};

// v fuses clusters (1,2) and (3,4) into the channel 2N-2; vstar is its image
// under the coordinate flip. Both lie in the Gram kernel at the critical root
// (a primitive root of order 8N).
inline FourClusterKernel kernel_basis_4(int N, const QRoot& a,
                                        int oracle_cap = kDefaultOracleCap) {
    if (N < 1) throw std::runtime_error("kernel_basis_4: need N >= 1");
    if (a.order != 8 * N || !a.is_primitive())
        throw std::runtime_error("kernel_basis_4: need a primitive root of order 8N");
    FourClusterKernel out;
    if (N == 1) {
        // the fusion channel is the empty color: v = X, vstar = Y
        out.v = {CycloNum::one(a.order), CycloNum()};
        out.vstar = {CycloNum(), CycloNum::one(a.order)};
        out.a0 = CycloNum::one(a.order);
        return out;
    }
    ClusterBasis b = cluster_basis(4, N);
    check_oracle_cap(b.points, oracle_cap);
    auto state = tl_at_root(tree4_lr(N, N, N, N, 2 * N - 2), a);
    auto sv = to_skein_vector(b, state);
    out.v.assign(N + 1, CycloNum());
    for (size_t i = 0; i < b.elements.size(); ++i)
        out.v[xy_index(b, static_cast<int>(i))] += sv.coords[i];
    out.vstar.assign(N + 1, CycloNum());
    for (int k = 0; k <= N; ++k) out.vstar[k] = out.v[N - k];
    out.a0 = out.v[0];
    return out;
}

// ---- the induced 2x2 representation -------------------------------------------

struct KernelRep4 {
    CycloNum chi0;                 // the unique eigenvalue (-1)^{N-1} A^{2N(N-1)}
    CycloNum alpha;                // off-diagonal unit, alpha^2 = -1
    Matrix<CycloNum> sigma1;       // 2x2 in the basis (v, v*); sigma3 acts equally
    Matrix<CycloNum> sigma2;
    FourClusterKernel kernel;
};

// restriction of the two triangular generators to span(v, v*)
inline KernelRep4 rho_infinity(int N, const QRoot& a, int oracle_cap = kDefaultOracleCap) {
    FourClusterKernel ker = kernel_basis_4(N, a, oracle_cap);
    auto [m_rat, mbar_rat] = sigma_matrices_4(N);
    const CycloNum one = CycloNum::one(a.order);
    auto at = [&](const Matrix<RatFunc>& m) {
        Matrix<CycloNum> r(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) r(i, j) = cyclo_eval(m(i, j), a);
        return r;
    };
    Matrix<CycloNum> m = at(m_rat), mbar = at(mbar_rat);

    Matrix<CycloNum> w(N + 1, 2);
    for (int i = 0; i <= N; ++i) {
        w(i, 0) = ker.v[i];
        w(i, 1) = ker.vstar[i];
    }
    auto restrict_to_kernel = [&](const Matrix<CycloNum>& g) {
        Matrix<CycloNum> r(2, 2);
        for (int j = 0; j < 2; ++j) {
            std::vector<CycloNum> col(N + 1);
            for (int i = 0; i <= N; ++i) col[i] = j == 0 ? ker.v[i] : ker.vstar[i];
            auto x = w.solve(g.apply(col), one);
            r(0, j) = x[0];
            r(1, j) = x[1];
        }
        return r;
    };
    KernelRep4 out{CycloNum(), CycloNum(), restrict_to_kernel(m), restrict_to_kernel(mbar),
                   std::move(ker)};

    CycloNum chi0 = CycloNum::from_root(a.power(2LL * N * (N - 1)));
    if (N % 2 == 0) chi0 = -chi0;
    out.chi0 = chi0;
    out.alpha = out.sigma1(0, 1) * chi0.inverse();

    // shape checks: chi0 times a unipotent pair with matching off-diagonal units
    const CycloNum zero;
    if (!(out.sigma1(0, 0) == chi0) || !(out.sigma1(1, 1) == chi0) ||
        !out.sigma1(1, 0).is_zero() || !(out.sigma2(0, 0) == chi0) ||
        !(out.sigma2(1, 1) == chi0) || !out.sigma2(0, 1).is_zero() ||
        !(out.sigma2(1, 0) == out.sigma1(0, 1)))
        throw ProportionalityFailure("rho_infinity: unexpected restricted shape");
    if (!(out.alpha * out.alpha == zero - one))
        throw ProportionalityFailure("rho_infinity: off-diagonal unit is not +-i");
    return out;
}

}  // namespace skeinlab
