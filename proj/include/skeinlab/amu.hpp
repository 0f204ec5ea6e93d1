#pragma once

// Braid-word evaluation, pseudo-Anosov spectral criteria, the example word
// families (Penner-type and Torelli-type), and the r -> infinity limit scan
// on the four-punctured sphere.

#include <complex>
#include <cstdlib>

#include "skeinlab/four_punctures.hpp"
#include "skeinlab/homological.hpp"
#include "skeinlab/skein.hpp"

namespace skeinlab {

// ---- braid words -----------------------------------------------------------

// A word in the half-twist generators. Letters are +-1..+-n; the letter n is
// the wrap-around half twist between the n-th and first punctures, expanded
// as omega sigma_{n-1} omega^{-1} with omega = sigma_1 ... sigma_{n-1}.
struct BraidWord {
    int n = 0;
    std::vector<int> letters;
};

template <typename S>
Matrix<S> evaluate(const std::vector<Matrix<S>>& gens, const BraidWord& w, const S& one) {
    const int n = static_cast<int>(gens.size()) + 1;
    if (w.n != n) throw IndexOutOfRange("evaluate: word strand count does not match generators");
    Matrix<S> m = Matrix<S>::identity(gens.empty() ? 0 : gens[0].rows(), one);
    Matrix<S> wrap;
    bool have_wrap = false;
    for (int letter : w.letters) {
        const int i = std::abs(letter);
        if (i < 1 || i > n) throw IndexOutOfRange("evaluate: generator index out of range");
        const Matrix<S>* g = nullptr;
        if (i == n) {
            if (!have_wrap) {
                Matrix<S> omega = gens[0];
                for (int j = 1; j < n - 1; ++j) omega = omega * gens[j];
                wrap = omega * gens[n - 2] * omega.inverse(one);
                have_wrap = true;
            }
            g = &wrap;
        } else {
            g = &gens[i - 1];
        }
        m = letter > 0 ? m * *g : m * g->inverse(one);
    }
    return m;
}

// ---- spectral criteria -------------------------------------------------------

struct SpectralReport {
    BraidWord word;
    int dim = 0;
    std::vector<double> moduli;  // eigenvalue absolute values
    double radius = 0.0;
    CycloNum trace;
    bool criterion = false;  // spectral radius > 1 (beyond tolerance)
};

inline SpectralReport spectral_report(const BraidWord& w, const Matrix<CycloNum>& m,
                                      double tol = 1e-9) {
    SpectralReport rep;
    rep.word = w;
    rep.dim = m.rows();
    for (const auto& ev : eigenvalues(to_complex(m))) rep.moduli.push_back(std::abs(ev));
    for (double x : rep.moduli) rep.radius = std::max(rep.radius, x);
    for (int i = 0; i < m.rows(); ++i) rep.trace += m(i, i);
    rep.criterion = rep.radius > 1.0 + tol;
    return rep;
}

// Spectral criterion for the homological representation: evaluates the word
// in the closed-form matrices at q (q^n = 1, q != 1) and reports the radius.
inline SpectralReport pa_criterion_homological(const BraidWord& w, int n, const QRoot& q,
                                               double tol = 1e-9) {
    auto gens = homological_matrices(n, q);
    const CycloNum one = CycloNum::one(gens[0](0, 0).order());
    return spectral_report(w, evaluate(gens, w, one), tol);
}

// Exact integer pseudo-Anosov test on the four-punctured sphere: evaluates
// the word in the integral 2x2 pair (sigma_1 = sigma_3 = [[1,1],[0,1]],
// sigma_2 = [[1,0],[-1,1]]) and tests |trace| > 2.
inline bool pa_test_n4(const BraidWord& w) {
    if (w.n != 4) throw IndexOutOfRange("pa_test_n4: need a four-strand word");
    const Rational one(1);
    Matrix<Rational> t1(2, 2), t2(2, 2);
    t1(0, 0) = one, t1(0, 1) = one, t1(1, 1) = one;
    t2(0, 0) = one, t2(1, 0) = -one, t2(1, 1) = one;
    std::vector<Matrix<Rational>> gens{t1, t2, t1};
    auto m = evaluate(gens, w, one);
    Rational tr = m(0, 0) + m(1, 1);
    if (tr < 0) tr = -tr;
    return tr > Rational(2);
}

// true iff m is a unit-modulus scalar multiple of the identity (exact)
inline bool is_projectively_trivial(const Matrix<CycloNum>& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("is_projectively_trivial: not square");
    const CycloNum s = m(0, 0);
    if (s.is_zero()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int k = 0; k < m.cols(); ++k) {
            if (i == k ? !(m(i, k) == s) : !m(i, k).is_zero()) return false;
        }
    return s * s.conj() == CycloNum::one();
}

// ---- example word families ----------------------------------------------------

// sigma_1^n sigma_2^{-n} sigma_3^n ... sigma_{n-1}^{+-n}
inline BraidWord penner_word(int n) {
    if (n < 6 || n % 2 != 0) throw std::runtime_error("penner_word: need even n >= 6");
    BraidWord w;
    w.n = n;
    for (int j = 1; j <= n - 1; ++j)
        for (int rep = 0; rep < n; ++rep) w.letters.push_back(j % 2 != 0 ? j : -j);
    return w;
}

// delta^k (sigma_3 sigma_6) delta^l (sigma_3 sigma_6)^{-1} with
// delta = (sigma_1 sigma_2)^3, on six strands
inline BraidWord torelli_word(int k, int l) {
    if (k == 0 || l == 0) throw std::runtime_error("torelli_word: need nonzero exponents");
    BraidWord w;
    w.n = 6;
    auto push_delta = [&](int e) {
        for (int i = 0; i < 3 * std::abs(e); ++i) {
            if (e > 0) {
                w.letters.push_back(1);
                w.letters.push_back(2);
            } else {
                w.letters.push_back(-2);
                w.letters.push_back(-1);
            }
        }
    };
    push_delta(k);
    w.letters.push_back(3);
    w.letters.push_back(6);
    push_delta(l);
    w.letters.push_back(-6);
    w.letters.push_back(-3);
    return w;
}

// ---- the limit scan -------------------------------------------------------------

// primitive root of the given order nearest (in the complex plane) to target;
// ties resolve to the smaller exponent
inline QRoot nearest_primitive_root(int order, const QRoot& target) {
    const std::complex<double> t = target.approx();
    int best_k = -1;
    double best = 0.0;
    for (int k = 1; k < order; ++k) {
        if (std::gcd(k, order) != 1) continue;
        const double d = std::abs(QRoot(order, k).approx() - t);
        if (best_k < 0 || d < best - 1e-12) {
            best_k = k;
            best = d;
        }
    }
    if (best_k < 0) throw std::runtime_error("nearest_primitive_root: no primitive root");
    return QRoot(order, best_k);
}

struct LimitRow {
    int r = 0;
    QRoot root{1, 0};       // the chosen primitive 4r-th root
    double root_gap = 0.0;  // |A_r - A_infinity|
    double radius = 0.0;    // spectral radius of the word on the quotient
    double entry_gap = 0.0; // max entrywise distance to the limit matrix
};

// Indices of the rows where the root approximation sets a new record. The
// distance from a primitive 4r-th root to the target is Diophantine-bounded
// below (~1/(8Nr)), so convergence statements are read along this
// subsequence.
inline std::vector<size_t> record_rows(const std::vector<LimitRow>& rows) {
    std::vector<size_t> out;
    double best = 0.0;
    for (size_t i = 0; i < rows.size(); ++i)
        if (out.empty() || rows[i].root_gap < best) {
            best = rows[i].root_gap;
            out.push_back(i);
        }
    return out;
}

// For each r in [r_min, r_max], evaluates the word on the quotient module of
// the four-punctured sphere at the primitive 4r-th root nearest the target
// and compares entrywise with the evaluation at the target root itself.
// Requires 2 r_min >= 4N + 2 so that the Gram kernel is zero along the scan.
inline std::vector<LimitRow> limit_scan(int N, const BraidWord& w, int r_min, int r_max,
                                        const QRoot& target,
                                        int oracle_cap = kDefaultOracleCap) {
    if (w.n != 4) throw IndexOutOfRange("limit_scan: need a four-strand word");
    if (2 * r_min < 4 * N + 2)
        throw std::runtime_error("limit_scan: need 2 r_min >= 4N + 2 (zero kernel)");
    ClusterBasis b = cluster_basis(4, N);
    check_oracle_cap(b.points, oracle_cap);

    // limit matrix at the target root (entries are polynomial in the root)
    std::vector<Matrix<CycloNum>> lim_gens;
    for (int i = 1; i <= 3; ++i) lim_gens.push_back(sigma_matrix(b, i, target, +1, oracle_cap));
    const CycloNum lim_one = CycloNum::one(target.order);
    Matrix<CycloNum> limit = evaluate(lim_gens, w, lim_one);
    auto limit_c = to_complex(limit);

    std::vector<LimitRow> out;
    for (int r = r_min; r <= r_max; ++r) {
        LimitRow row;
        row.r = r;
        row.root = nearest_primitive_root(4 * r, target);
        row.root_gap = std::abs(row.root.approx() - target.approx());
        auto qrep = quotient_rep(4, N, row.root, oracle_cap);
        if (static_cast<int>(qrep.complement.size()) != N + 1)
            throw DimensionMismatch("limit_scan: quotient dimension is not N + 1");
        const CycloNum one = CycloNum::one(row.root.order);
        auto m = evaluate(qrep.generators, w, one);
        row.radius = spectral_radius(m);
        auto mc = to_complex(m);
        for (int i = 0; i <= N; ++i)
            for (int j = 0; j <= N; ++j)
                row.entry_gap = std::max(row.entry_gap, std::abs(mc(i, j) - limit_c(i, j)));
        out.push_back(row);
    }
    return out;
}

inline std::vector<LimitRow> limit_scan(int N, const BraidWord& w, int r_min, int r_max,
                                        int oracle_cap = kDefaultOracleCap) {
    return limit_scan(N, w, r_min, r_max, QRoot(8 * N, 1), oracle_cap);
}

}  // namespace skeinlab
