#pragma once

// The skein module of the ball with n boundary clusters of N colored points
// (plus an optional cluster of k points): cluster-matching basis, the
// sesquilinear Kauffman-bracket Gram form at a root of unity, half-twist
// generator matrices, rotation operators, colored tree vectors, kernel
// spaces, and the closed-form tridiagonal generator matrices on the kernel.

#include <optional>
#include <vector>

#include "skeinlab/matrix.hpp"
#include "skeinlab/recoupling.hpp"
#include "skeinlab/tl_element.hpp"

namespace skeinlab {

// ---- cluster basis ---------------------------------------------------------

struct ClusterBasis {
    int n = 0, N = 0, k = 0;
    int points = 0;                       // n*N + k
    std::vector<int> cluster_of;          // point index -> cluster index
    std::vector<PlanarDiagram> elements;  // pure matchings 0 -> points

    int index_of(const PlanarDiagram& d) const {
        for (size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == d) return static_cast<int>(i);
        return -1;
    }
};

inline bool has_intra_cluster_arc(const std::vector<int>& mate,
                                  const std::vector<int>& cluster_of) {
    for (size_t i = 0; i < mate.size(); ++i)
        if (cluster_of[i] == cluster_of[mate[i]]) return true;
    return false;
}

inline ClusterBasis cluster_basis(int n, int N, int k = 0) {
    if (n < 1 || N < 1 || k < 0) throw std::runtime_error("cluster_basis: bad parameters");
    ClusterBasis b;
    b.n = n;
    b.N = N;
    b.k = k;
    b.points = n * N + k;
    b.cluster_of.resize(b.points);
    for (int i = 0; i < n * N; ++i) b.cluster_of[i] = i / N;
    for (int i = n * N; i < b.points; ++i) b.cluster_of[i] = n;
    for (const auto& m : noncrossing_matchings(b.points))
        if (!has_intra_cluster_arc(m, b.cluster_of)) b.elements.push_back(PlanarDiagram::matching(m));
    return b;
}

// a module element in cluster-matching coordinates
struct SkeinVector {
    std::vector<CycloNum> coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
};

// express a TL state 0 -> points in the basis: terms with an intra-cluster
// arc die against the boundary projectors, all others are basis matchings
inline SkeinVector to_skein_vector(const ClusterBasis& b, const TLElement<CycloNum>& x) {
    if (x.bottom() != 0 || x.top() != b.points)
        throw StrandMismatch("skein vector: boundary point count mismatch");
    SkeinVector v;
    v.coords.assign(b.elements.size(), CycloNum());
    for (const auto& [d, c] : x.terms()) {
        if (has_intra_cluster_arc(d.mates(), b.cluster_of)) continue;
        int idx = b.index_of(d);
        if (idx < 0) throw std::logic_error("skein vector: matching missing from basis");
        v.coords[idx] += c;
    }
    return v;
}

// ---- boundary projector and the Gram form ----------------------------------

// tensor product of boundary projectors f^(N) per cluster (f^(k) on the tail)
inline TLElement<CycloNum> boundary_projector(const ClusterBasis& b, const QRoot& a,
                                              int oracle_cap = kDefaultOracleCap) {
    check_oracle_cap(b.points, oracle_cap);
    auto fN = tl_at_root(jones_wenzl(b.N), a);
    TLElement<CycloNum> p = tl_identity(0, CycloNum::one(a.order));
    for (int c = 0; c < b.n; ++c) p = tl_tensor(p, fN);
    if (b.k > 0) p = tl_tensor(p, tl_at_root(jones_wenzl(b.k), a));
    return p;
}

// <x, y> = bracket of x stacked with boundary projectors and mirror(y)
inline Matrix<CycloNum> gram_matrix(const ClusterBasis& b, const QRoot& a,
                                    int oracle_cap = kDefaultOracleCap) {
    const auto proj = boundary_projector(b, a, oracle_cap);
    const CycloNum delta = loop_value(a);
    const int dim = static_cast<int>(b.elements.size());
    Matrix<CycloNum> g(dim, dim);
    // precompute x composed with the projector once per row
    for (int i = 0; i < dim; ++i) {
        auto xi = TLElement<CycloNum>::from_diagram(b.elements[i], CycloNum::one(a.order));
        auto xp = tl_multiply(xi, proj, delta);
        for (int j = 0; j < dim; ++j) {
            CycloNum entry;
            for (const auto& [d, c] : xp.terms()) {
                auto [res, loops] = compose(d, b.elements[j].reflect());
                (void)res;
                CycloNum t = c;
                for (int l = 0; l < loops; ++l) t = t * delta;
                entry += t;
            }
            g(i, j) = entry;
        }
    }
    return g;
}

// basis of the left kernel of the Gram form
inline std::vector<std::vector<CycloNum>> kernel_space(const ClusterBasis& b, const QRoot& a,
                                                       int oracle_cap = kDefaultOracleCap) {
    return gram_matrix(b, a, oracle_cap).left_null_space(CycloNum::one(a.order));
}

// ---- generator matrices -----------------------------------------------------

// (-A)^{N(N+2)} prefactor of the normalized half twist
inline CycloNum halftwist_prefactor(int N, const QRoot& a) {
    CycloNum c = CycloNum::from_root(a.power(N * (N + 2)));
    return (N * (N + 2)) % 2 == 0 ? c : -c;
}

// matrix of rho(sigma_i), i = 1..n-1, on the cluster-matching basis
inline Matrix<CycloNum> sigma_matrix(const ClusterBasis& b, int i, const QRoot& a,
                                     int sign = +1, int oracle_cap = kDefaultOracleCap) {
    if (i < 1 || i >= b.n) throw std::runtime_error("sigma_matrix: generator index out of range");
    check_oracle_cap(b.points, oracle_cap);
    const int N = b.N;
    const CycloNum delta = loop_value(a);
    const CycloNum one = CycloNum::one(a.order);
    const CycloNum Apos = CycloNum::from_root(a);
    const CycloNum Aneg = CycloNum::from_root(a.inverse());

    // cabled crossing on the two active clusters, capped by their projectors
    TLElement<CycloNum> cross = tl_identity(2 * N, one);
    for (int k = 1; k <= N; ++k)
        for (int s = N - k + 1; s <= 2 * N - k; ++s)
            cross = tl_multiply(cross, tl_sigma(2 * N, s, Apos, Aneg, sign), delta);
    auto fN = tl_at_root(jones_wenzl(N), a);
    cross = tl_multiply(cross, tl_tensor(fN, fN), delta);

    auto layer = tl_tensor(tl_tensor(tl_identity((i - 1) * N, one), cross),
                           tl_identity(b.points - (i + 1) * N, one));
    CycloNum pref = halftwist_prefactor(N, a);
    if (sign < 0) pref = pref.inverse();

    const int dim = static_cast<int>(b.elements.size());
    Matrix<CycloNum> m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        auto x = TLElement<CycloNum>::from_diagram(b.elements[j], one);
        auto y = to_skein_vector(b, tl_multiply(x, layer, delta));
        for (int r = 0; r < dim; ++r) m(r, j) = pref * y.coords[r];
    }
    return m;
}

// rotation s: relabel boundary points by one cluster (only for k = 0)
inline Matrix<CycloNum> rotation_matrix(const ClusterBasis& b, const QRoot& a) {
    if (b.k != 0) throw std::runtime_error("rotation: defined for k = 0 only");
    const int dim = static_cast<int>(b.elements.size());
    Matrix<CycloNum> m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        int i = b.index_of(b.elements[j].rotate(b.N));
        if (i < 0) throw std::logic_error("rotation left the basis");
        m(i, j) = CycloNum::one(a.order);
    }
    return m;
}

// s0 = rho(sigma_3 sigma_4 ... sigma_{n-1}); satisfies the conjugation
// relation on the middle generators only
inline Matrix<CycloNum> rotation_s0_matrix(const ClusterBasis& b, const QRoot& a,
                                           int oracle_cap = kDefaultOracleCap) {
    Matrix<CycloNum> m = Matrix<CycloNum>::identity(static_cast<int>(b.elements.size()),
                                                    CycloNum::one(a.order));
    for (int j = 3; j <= b.n - 1; ++j) m = m * sigma_matrix(b, j, a, +1, oracle_cap);
    return m;
}

// ---- colored caterpillar trees ---------------------------------------------

// comb-shaped tree with n legs of color N and spine colors m_1..m_{n-3}
// (n >= 4, k = 0), expanded into the cluster basis at the root a
inline SkeinVector tree_vector(const ClusterBasis& b, const std::vector<int>& spine,
                               const QRoot& a) {
    const int n = b.n, N = b.N;
    if (b.k != 0) throw std::runtime_error("tree_vector: k = 0 trees only");
    if (static_cast<int>(spine.size()) != n - 3)
        throw std::runtime_error("tree_vector: need n-3 spine colors");
    if (!admissible_triple(N, N, spine.front()) || !admissible_triple(N, N, spine.back()))
        throw DoesNotExist("tree_vector: end vertex not admissible");
    for (size_t j = 0; j + 1 < spine.size(); ++j)
        if (!admissible_triple(spine[j], N, spine[j + 1]))
            throw DoesNotExist("tree_vector: spine vertex not admissible");
    for (int c : spine)
        if (4 * c >= a.order)  // color must stay <= r-1 for the projector
            throw DoesNotExist("tree_vector: projector does not exist at this root");

    const CycloNum delta = loop_value(a);
    const CycloNum one = CycloNum::one(a.order);
    auto at = [&](const TLElement<RatFunc>& x) { return tl_at_root(x, a); };

    // first two legs and the spine stub
    TLElement<CycloNum> state = at(triple_cup(N, N, spine[0]));
    for (size_t j = 0; j + 1 < spine.size(); ++j) {
        // attach leg j+3 and continue the spine: m_j -> N + m_{j+1}
        auto v = at(vertex_element(N, spine[j + 1], spine[j])).reflect();
        auto layer = tl_tensor(tl_identity(static_cast<int>(j + 2) * N, one), v);
        state = tl_multiply(state, layer, delta);
    }
    // close with the last two legs
    auto close = at(vertex_element(N, N, spine.back())).reflect();
    auto layer = tl_tensor(tl_identity((n - 2) * N, one), close);
    state = tl_multiply(state, layer, delta);
    return to_skein_vector(b, state);
}

// spine coloring of the distinguished kernel vector u: ascending (j+1)N-2
// then descending (n'-j)N, n' = n/2
inline std::vector<int> u_spine(int n, int N) {
    if (n < 6 || n % 2 != 0) throw std::runtime_error("u_spine: need even n >= 6");
    const int np = n / 2;
    std::vector<int> s;
    for (int j = 1; j <= np - 1; ++j) s.push_back((j + 1) * N - 2);
    for (int j = 1; j <= np - 2; ++j) s.push_back((np - j) * N);
    return s;
}

// ---- two-term twist expansion on three clusters ------------------------------

// In the 2-dimensional module with three color-N clusters plus a (3N-2)-cluster,
// crossing the second and third clusters over the tree fusing clusters 1,2 into
// channel 2N-2 expands with coefficients A^{N^2} and A^{N^2-2N} on the two trees.
inline bool two_cluster_twist_check(int N, const QRoot& a,
                                    int oracle_cap = kDefaultOracleCap) {
    ClusterBasis b = cluster_basis(3, N, 3 * N - 2);
    check_oracle_cap(b.points, oracle_cap);
    if (b.elements.size() != 2) return false;
    const CycloNum delta = loop_value(a);
    const CycloNum one = CycloNum::one(a.order);
    auto at = [&](const TLElement<RatFunc>& x) { return tl_at_root(x, a); };

    auto t12_state = at(tree4_lr(N, N, N, 3 * N - 2, 2 * N - 2));
    auto t12 = to_skein_vector(b, t12_state);
    auto t23 = to_skein_vector(b, at(tree4_mid(N, N, N, 3 * N - 2, 2 * N - 2)));

    auto cross = tl_tensor(tl_tensor(tl_identity(N, one), at(block_crossing(N, N, +1))),
                           tl_identity(3 * N - 2, one));
    auto lhs = to_skein_vector(b, tl_multiply(t12_state, cross, delta));

    const CycloNum c12 = CycloNum::from_root(a.power(static_cast<long long>(N) * N));
    const CycloNum c23 = CycloNum::from_root(a.power(static_cast<long long>(N) * N - 2 * N));
    for (size_t i = 0; i < b.elements.size(); ++i)
        if (!(lhs.coords[i] == c12 * t12.coords[i] + c23 * t23.coords[i])) return false;
    return true;
}

// ---- the kernel representation (n >= 6) --------------------------------------

struct KernelRep {
    ClusterBasis basis;
    std::vector<std::vector<CycloNum>> w;      // w_1..w_{n-2} in cluster coordinates
    std::vector<Matrix<CycloNum>> generators;  // sigma_1..sigma_{n-1} on (w_j)
    CycloNum lambda;                           // v = lambda * s(u)
};

// Build the distinguished kernel basis w_j = lambda^{j-1} s^{j-1}(u) at the
// degenerate root (2r = Nn) and restrict every half-twist generator to it.
inline KernelRep kernel_rep(int n, int N, const QRoot& a,
                            int oracle_cap = kDefaultOracleCap) {
    if (n < 6 || n % 2 != 0) throw std::runtime_error("kernel_rep: need even n >= 6");
    if (a.order != 2 * N * n || !a.is_primitive())
        throw std::runtime_error("kernel_rep: need a primitive root of order 2Nn");
    ClusterBasis b = cluster_basis(n, N);
    check_oracle_cap(b.points, oracle_cap);
    const int dim = static_cast<int>(b.elements.size());
    const CycloNum one = CycloNum::one(a.order);

    SkeinVector u = tree_vector(b, u_spine(n, N), a);

    std::vector<Matrix<CycloNum>> sig;
    for (int i = 1; i <= n - 1; ++i) sig.push_back(sigma_matrix(b, i, a, +1, oracle_cap));

    // peel v out of rho(sigma_2) u = (-1)^N A^{2N(N+1)} u + (-1)^N A^{2N^2} v
    auto s2u = sig[1].apply(u.coords);
    CycloNum cu = CycloNum::from_root(a.power(2LL * N * (N + 1)));
    CycloNum cv = CycloNum::from_root(a.power(2LL * N * N));
    if (N % 2 != 0) {
        cu = -cu;
        cv = -cv;
    }
    const CycloNum cv_inv = cv.inverse();
    std::vector<CycloNum> v(dim);
    for (int i = 0; i < dim; ++i) v[i] = cv_inv * (s2u[i] - cu * u.coords[i]);

    // lambda from proportionality v = lambda * s(u), verified on every coordinate
    Matrix<CycloNum> s = rotation_matrix(b, a);
    auto su = s.apply(u.coords);
    CycloNum lambda;
    bool found = false;
    for (int i = 0; i < dim; ++i) {
        if (su[i].is_zero() != v[i].is_zero())
            throw ProportionalityFailure("kernel_rep: v and s(u) differ in support");
        if (!found && !su[i].is_zero()) {
            lambda = v[i] * su[i].inverse();
            found = true;
        }
    }
    if (!found || lambda.is_zero())
        throw ProportionalityFailure("kernel_rep: v vanishes, no scale factor");
    for (int i = 0; i < dim; ++i)
        if (!(v[i] == lambda * su[i]))
            throw ProportionalityFailure("kernel_rep: v is not proportional to s(u)");

    std::vector<std::vector<CycloNum>> w;
    w.push_back(u.coords);
    for (int j = 2; j <= n - 2; ++j) {
        auto next = s.apply(w.back());
        for (auto& c : next) c = lambda * c;
        w.push_back(std::move(next));
    }

    Matrix<CycloNum> W(dim, n - 2);
    for (int j = 0; j < n - 2; ++j)
        for (int i = 0; i < dim; ++i) W(i, j) = w[j][i];
    if (W.rank() != n - 2)
        throw DimensionMismatch("kernel_rep: the w_j are linearly dependent");
    // the w_j must lie in the Gram kernel, which they span by dimension count
    Matrix<CycloNum> g = gram_matrix(b, a, oracle_cap);
    for (int j = 0; j < n - 2; ++j)
        for (const auto& c : g.apply(w[j]))
            if (!c.is_zero())
                throw DimensionMismatch("kernel_rep: w_j escapes the Gram kernel");

    KernelRep out{std::move(b), std::move(w), {}, lambda};
    for (const auto& m : sig) {
        Matrix<CycloNum> rest(n - 2, n - 2);
        for (int j = 0; j < n - 2; ++j) {
            auto x = W.solve(m.apply(out.w[j]), one);
            for (int i = 0; i < n - 2; ++i) rest(i, j) = x[i];
        }
        out.generators.push_back(std::move(rest));
    }
    return out;
}

// ---- closed-form scaled generator matrices on (w_j) --------------------------

// Matrices of the rescaled generators on w_1..w_{n-2}: diagonal action -1/q on
// w_j, neighbor coupling 1/sqrt(q), identity elsewhere; the phantom vector
// w_{n-1} is rewritten as an alternating Chebyshev combination of the basis.
// q = A^{4N}; sqrt_sign picks the square root +-A^{2N}.
inline std::vector<Matrix<CycloNum>> scaled_kernel_matrices(int n, int N, const QRoot& a,
                                                            int sqrt_sign = +1) {
    if (n < 6 || n % 2 != 0)
        throw std::runtime_error("scaled_kernel_matrices: need even n >= 6");
    const int d = n - 2;
    const CycloNum one = CycloNum::one(a.order);
    CycloNum q = CycloNum::from_root(a.power(4LL * N));
    CycloNum qh = CycloNum::from_root(a.power(2LL * N));
    if (sqrt_sign < 0) qh = -qh;
    const CycloNum q_inv = q.inverse();
    const CycloNum qh_inv = qh.inverse();
    const CycloNum delta = -(qh + qh_inv);

    // coefficient of w_{n-1-l} in w_{n-1} is (-1)^{l+1} e_l(delta)
    std::vector<CycloNum> w_last(d);
    for (int l = 1; l <= d; ++l) {
        CycloNum c = chebyshev(l).eval_cyclo(delta);
        if (l % 2 == 0) c = -c;
        w_last[d - l] = c;
    }

    std::vector<Matrix<CycloNum>> out;
    for (int j = 1; j <= n - 1; ++j) {
        Matrix<CycloNum> m(d, d);
        for (int k = 1; k <= d; ++k) {
            if (j == k) {
                m(k - 1, k - 1) = -q_inv;
            } else if (j - k == 1 || k - j == 1) {
                m(k - 1, k - 1) = one;
                if (j <= d)
                    m(j - 1, k - 1) = m(j - 1, k - 1) + qh_inv;
                else
                    for (int i = 0; i < d; ++i)
                        m(i, k - 1) = m(i, k - 1) + qh_inv * w_last[i];
            } else {
                m(k - 1, k - 1) = one;
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

// ---- quotient representation --------------------------------------------------

struct QuotientRep {
    ClusterBasis basis;
    std::vector<int> complement;               // coordinate indices spanning the quotient
    std::vector<Matrix<CycloNum>> generators;  // sigma_1..sigma_{n-1} on the quotient
};

// Generator matrices induced on the quotient of the module by the Gram kernel:
// reduce modulo the row-reduced kernel and read off the free coordinates.
inline QuotientRep quotient_rep(int n, int N, const QRoot& a,
                                int oracle_cap = kDefaultOracleCap) {
    ClusterBasis b = cluster_basis(n, N);
    check_oracle_cap(b.points, oracle_cap);
    const int dim = static_cast<int>(b.elements.size());
    const CycloNum one = CycloNum::one(a.order);

    auto ker = kernel_space(b, a, oracle_cap);
    const int kd = static_cast<int>(ker.size());
    Matrix<CycloNum> K(std::max(kd, 1), dim);
    for (int i = 0; i < kd; ++i)
        for (int j = 0; j < dim; ++j) K(i, j) = ker[i][j];
    auto pivots = kd > 0 ? K.rref() : std::vector<int>{};
    std::vector<char> is_pivot(dim, 0);
    for (int p : pivots) is_pivot[p] = 1;

    QuotientRep out;
    out.basis = b;
    for (int j = 0; j < dim; ++j)
        if (!is_pivot[j]) out.complement.push_back(j);
    const int qd = static_cast<int>(out.complement.size());

    // zero out the pivot coordinates using the reduced kernel rows
    auto reduce = [&](std::vector<CycloNum> v) {
        for (size_t r = 0; r < pivots.size(); ++r) {
            CycloNum c = v[pivots[r]];
            if (c.is_zero()) continue;
            for (int j = 0; j < dim; ++j) v[j] = v[j] - c * K(static_cast<int>(r), j);
        }
        return v;
    };

    for (int i = 1; i <= n - 1; ++i) {
        Matrix<CycloNum> m = sigma_matrix(b, i, a, +1, oracle_cap);
        Matrix<CycloNum> rest(qd, qd);
        for (int j = 0; j < qd; ++j) {
            std::vector<CycloNum> col(dim);
            for (int r = 0; r < dim; ++r) col[r] = m(r, out.complement[j]);
            col = reduce(std::move(col));
            for (int r = 0; r < dim; ++r)
                if (!col[r].is_zero() && is_pivot[r])
                    throw std::logic_error("quotient_rep: reduction left a pivot coordinate");
            for (int r = 0; r < qd; ++r) rest(r, j) = col[out.complement[r]];
        }
        out.generators.push_back(std::move(rest));
    }
    (void)one;
    return out;
}

}  // namespace skeinlab
