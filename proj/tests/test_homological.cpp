#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skeinlab/homological.hpp"

using namespace skeinlab;

namespace {

Matrix<CycloNum> word_image(const std::vector<Matrix<CycloNum>>& gens,
                            const std::vector<int>& word, const CycloNum& one) {
    Matrix<CycloNum> m = Matrix<CycloNum>::identity(gens[0].rows(), one);
    for (int letter : word) {
        if (letter > 0)
            m = m * gens[letter - 1];
        else
            m = m * gens[-letter - 1].inverse(one);
    }
    return m;
}

CycloNum trace(const Matrix<CycloNum>& m) {
    CycloNum t;
    for (int i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

}  // namespace

TEST_CASE("eigenspace dimensions") {
    CHECK(h1_dimension(6, QRoot(6, 1)) == 4);
    CHECK(h1_dimension(4, QRoot(5, 1)) == 3);
    CHECK(h1_dimension(4, QRoot(2, 1)) == 2);
    CHECK(h1_dimension(5, QRoot(1, 0)) == 0);
    CHECK(h1_dimension(5, QRoot(7, 0)) == 0);  // exponent 0 is the trivial root
}

TEST_CASE("branched cover genus") {
    CHECK(cover_genus(2, 4) == 1);
    CHECK(cover_genus(2, 6) == 2);
    CHECK(cover_genus(3, 6) == 4);
}

TEST_CASE("square root branch selection") {
    // q = exp(-i pi / 3): branch is exp(5 i pi / 6)
    auto b1 = sqrt_branch(QRoot(6, 5));
    CHECK(b1.half == QRoot(12, 5));
    // q = -1: branch is +i
    auto b2 = sqrt_branch(QRoot(2, 1));
    CHECK(b2.half == QRoot(4, 1));
    // tie at q = 1 resolved to +1
    CHECK(sqrt_branch(QRoot(4, 0)).half == QRoot(1, 0));
    for (int k = 1; k <= 5; ++k) {
        QRoot q(6, k);
        auto b = sqrt_branch(q);
        // half really squares to q
        CHECK(QRoot(b.half.order, 2 * b.half.exponent) == q);
        // i (q^{1/2} - q^{-1/2}) is real and non-positive
        CHECK(b.delta_sq.conj() == b.delta_sq);
        CHECK(b.delta_sq.approx().real() <= 1e-12);
        // the flipped branch violates the sign condition unless both vanish
        auto other = flip_branch(b.half);
        CycloNum other_ds = cyclo_i() * (CycloNum::from_root(other) -
                                         CycloNum::from_root(other.inverse()));
        CHECK(other_ds.approx().real() >= -1e-12);
    }
}

TEST_CASE("closed-form matrices: braid relations and reflection spectrum") {
    for (auto [n, q] : {std::pair{4, QRoot(2, 1)}, std::pair{6, QRoot(6, 5)},
                        std::pair{6, QRoot(3, 1)}, std::pair{8, QRoot(8, 3)}}) {
        auto gens = homological_matrices(n, q);
        REQUIRE(gens.size() == static_cast<size_t>(n - 1));
        const int d = n - 2;
        const CycloNum one = CycloNum::one(gens[0](0, 0).order());
        auto id = Matrix<CycloNum>::identity(d, one);
        const CycloNum qq = CycloNum::from_root(q);
        for (const auto& m : gens) CHECK((m + qq * id) * (m - id) == Matrix<CycloNum>(d, d));
        for (int j = 0; j + 1 < n - 1; ++j)
            CHECK(gens[j] * gens[j + 1] * gens[j] == gens[j + 1] * gens[j] * gens[j + 1]);
        for (int j = 0; j < n - 1; ++j)
            for (int k = j + 2; k < n - 1; ++k) CHECK(gens[j] * gens[k] == gens[k] * gens[j]);
    }
}

TEST_CASE("rescaled Gram is the tridiagonal Chebyshev matrix") {
    for (auto [n, q] : {std::pair{6, QRoot(6, 5)}, std::pair{6, QRoot(3, 1)},
                        std::pair{4, QRoot(2, 1)}}) {
        const int d = n - 2;
        auto branch = sqrt_branch(q);
        const CycloNum qh = branch.value;
        const CycloNum qh_inv = CycloNum::from_root(branch.half.inverse());
        const CycloNum delta = -(qh + qh_inv);
        const CycloNum norm = (-branch.delta_sq).inverse();  // 1 / |Delta|^2
        auto g = reflection_gram(n, q, d);
        // gram of the rescaled vectors (q^{-1/2})^j u_j / Delta
        Matrix<CycloNum> gt(d, d);
        for (int j = 1; j <= d; ++j)
            for (int k = 1; k <= d; ++k) {
                CycloNum lhs = CycloNum::from_root(branch.half.power(-j));
                CycloNum rhs = CycloNum::from_root(branch.half.power(k));
                gt(j - 1, k - 1) = lhs * rhs * norm * g(j - 1, k - 1);
            }
        const CycloNum one = CycloNum::one(branch.half.order);
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                if (j == k) CHECK(gt(j, k) == -delta);
                else if (j - k == 1 || k - j == 1) CHECK(gt(j, k) == -one);
                else CHECK(gt(j, k).is_zero());
            }
        // determinant identity via the Chebyshev evaluation at -delta
        // (expansion of the tridiagonal determinant)
        CHECK(!chebyshev(d).eval_cyclo(-delta).is_zero());

        // the closed-form generators preserve the rescaled form exactly
        auto gens = homological_matrices(n, q);
        for (const auto& m : gens) CHECK(m.transpose() * gt * conjugate(m) == gt);
    }
}

TEST_CASE("reflection representation at generic q") {
    const int n = 4;
    QRoot q(5, 1);  // q^n != 1
    auto gens = reflection_matrices(n, q);
    const CycloNum one = CycloNum::one(q.order);
    auto id = Matrix<CycloNum>::identity(n - 1, one);
    const CycloNum qq = CycloNum::from_root(q);
    for (const auto& m : gens) CHECK((m + qq * id) * (m - id) == Matrix<CycloNum>(n - 1, n - 1));
    CHECK(gens[0] * gens[1] * gens[0] == gens[1] * gens[0] * gens[1]);
    CHECK(gens[0] * gens[2] == gens[2] * gens[0]);
    // Gram preservation: form linear on the left, conjugate-linear on the right
    auto g = reflection_gram(n, q, n - 1);
    for (const auto& m : gens) CHECK(m.transpose() * g * conjugate(m) == g);
}

TEST_CASE("reflection representation at q = -1 uses the degenerate formula") {
    const int n = 5;
    QRoot q(2, 1);
    auto gens = reflection_matrices(n, q);
    const CycloNum one = CycloNum::one(2);
    auto id = Matrix<CycloNum>::identity(n - 1, one);
    for (const auto& m : gens) {
        auto nilp = m - id;
        CHECK(nilp * nilp == Matrix<CycloNum>(n - 1, n - 1));  // (M - 1)^2 = 0
    }
    CHECK(gens[0] * gens[1] * gens[0] == gens[1] * gens[0] * gens[1]);
    auto g = reflection_gram(n, q, n - 1);
    for (const auto& m : gens) CHECK(m.transpose() * g * conjugate(m) == g);
}

TEST_CASE("reflection Gram degenerates exactly when q^n = 1") {
    CHECK_THROWS_AS(reflection_matrices(4, QRoot(4, 1)), GramDegenerate);
    CHECK_THROWS_AS(reflection_matrices(6, QRoot(3, 1)), GramDegenerate);
    CHECK_NOTHROW(reflection_matrices(4, QRoot(5, 2)));
}

TEST_CASE("reduced Burau relations over rational functions") {
    const RatFunc t = RatFunc::monomial(1);
    auto gens = burau_reduced(4, t, RatFunc::one());
    CHECK(gens[0] * gens[1] * gens[0] == gens[1] * gens[0] * gens[1]);
    CHECK(gens[1] * gens[2] * gens[1] == gens[2] * gens[1] * gens[2]);
    CHECK(gens[0] * gens[2] == gens[2] * gens[0]);
    auto id = Matrix<RatFunc>::identity(3, RatFunc::one());
    for (const auto& m : gens) CHECK((m + t * id) * (m - id) == Matrix<RatFunc>(3, 3));
}

TEST_CASE("generic representation is dual to reduced Burau at t = q") {
    const int n = 4;
    QRoot q(5, 1);
    const CycloNum one = CycloNum::one(q.order);
    auto rho = reflection_matrices(n, q);
    // In our generator convention the reflection representation at q is
    // equivalent to reduced Burau at t = q, i.e. to the dual (inverse
    // transpose) of reduced Burau at t = q^{-1}.
    auto burau = burau_reduced(n, CycloNum::from_root(q.inverse()), one);
    std::vector<Matrix<CycloNum>> dual;
    for (const auto& b : burau) dual.push_back(b.inverse(one).transpose());

    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> letter(1, n - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<int> length(4, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> word;
        const int len = length(rng);
        for (int i = 0; i < len; ++i) word.push_back(letter(rng) * (sign(rng) ? 1 : -1));
        auto p = word_image(rho, word, one);
        auto d = word_image(dual, word, one);
        // same eigenvalue multiset: compare traces of the first n-1 powers
        auto pk = p, dk = d;
        for (int k = 1; k <= n - 1; ++k) {
            CHECK(trace(pk) == trace(dk));
            pk = pk * p;
            dk = dk * d;
        }
    }
}

TEST_CASE("full twist of three strands is unipotent at primitive cube roots") {
    // At a primitive cube root the 2x2 Burau block of the first two
    // generators sends the full twist to +1, leaving a nontrivial
    // unipotent Jordan coupling of infinite order.
    for (int e : {1, 2}) {
        QRoot q(3, e);
        auto gens = homological_matrices(6, q);
        const CycloNum one = CycloNum::one(gens[0](0, 0).order());
        auto id = Matrix<CycloNum>::identity(4, one);
        auto d = gens[0] * gens[1];
        auto full = d * d * d;  // (sigma_1 sigma_2)^3
        auto nilp = full - id;
        auto n2 = nilp * nilp;
        CHECK(n2 * n2 == Matrix<CycloNum>(4, 4));
        CHECK(!(nilp == Matrix<CycloNum>(4, 4)));  // not the identity itself
    }
    // At a primitive sixth root the same Burau block evaluates the full
    // twist to -1, so only the square is unipotent (quasi-unipotence).
    {
        QRoot q(6, 5);
        auto gens = homological_matrices(6, q);
        const CycloNum one = CycloNum::one(gens[0](0, 0).order());
        auto id = Matrix<CycloNum>::identity(4, one);
        auto d = gens[0] * gens[1];
        auto full = d * d * d;
        auto nilp = full * full - id;
        CHECK((nilp * nilp) * (nilp * nilp) == Matrix<CycloNum>(4, 4));
        CHECK(!(full - id == Matrix<CycloNum>(4, 4)));
    }
}

TEST_CASE("generators have order n when q is a primitive n/2-th root, n = 4m+2") {
    const int n = 6;
    for (int e : {1, 2}) {
        QRoot q(3, e);
        auto gens = homological_matrices(n, q);
        const CycloNum one = CycloNum::one(gens[0](0, 0).order());
        auto id = Matrix<CycloNum>::identity(n - 2, one);
        for (const auto& m : gens) {
            auto p = id;
            for (int k = 1; k < n; ++k) {
                p = p * m;
                CHECK(!(p == id));
            }
            CHECK(p * m == id);
        }
    }
}
