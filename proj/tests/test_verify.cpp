#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/verify.hpp"

using namespace skeinlab;

TEST_CASE("projective comparison: trivial and scalar cases") {
    auto gens = homological_matrices(6, QRoot(3, 1));
    const CycloNum one = CycloNum::one();
    // identical lists match with all phases 1
    auto c = projectively_equal(gens, gens);
    CHECK(c.matched);
    for (const auto& mu : c.phases) CHECK(mu == one);
    // a global scalar is recovered per generator
    std::vector<Matrix<CycloNum>> scaled;
    for (const auto& m : gens) scaled.push_back((-one) * m);
    auto c2 = projectively_equal(scaled, gens);
    CHECK(c2.matched);
    for (const auto& mu : c2.phases) CHECK(mu == -one);
}

TEST_CASE("projective comparison distinguishes inequivalent parameters") {
    auto g1 = homological_matrices(6, QRoot(3, 1));
    auto g2 = homological_matrices(6, QRoot(3, 2));
    CHECK(!projectively_equal(g1, g2).matched);
}

TEST_CASE("projective comparison rejects mismatched shapes") {
    auto g1 = homological_matrices(6, QRoot(3, 1));
    auto g2 = homological_matrices(8, QRoot(4, 1));
    CHECK_THROWS_AS(projectively_equal(g1, g2), DimensionMismatch);
}

TEST_CASE("main theorem for n >= 6") {
    for (auto [n, N] : {std::pair{6, 1}, std::pair{6, 2}, std::pair{8, 1}}) {
        CAPTURE(n);
        CAPTURE(N);
        auto rep = verify_theorem_n6(n, N);
        CHECK(rep.matched);
        CHECK(rep.phase == rep.expected_phase);
        CHECK(!rep.lambda.is_zero());
        CHECK(rep.skein_sqrt_sign != 0);
    }
}

TEST_CASE("main theorem for n = 4") {
    for (int N : {1, 2, 3}) {
        CAPTURE(N);
        auto rep = verify_theorem_n4(N);
        CHECK(rep.matched);
        CHECK(rep.phase == rep.expected_phase);
        // the common phase is chi_0 = (-1)^{N-1} A^{2N(N-1)}
        QRoot a(8 * N, 1);
        CycloNum chi0 = CycloNum::from_root(a.power(2LL * N * (N - 1)));
        if (N % 2 == 0) chi0 = -chi0;
        CHECK(rep.phase == chi0);
    }
}
