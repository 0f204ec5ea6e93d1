#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/recoupling.hpp"

using namespace skeinlab;

namespace {
TLElement<RatFunc> mul(const TLElement<RatFunc>& a, const TLElement<RatFunc>& b) {
    return tl_multiply(a, b, loop_value());
}
}  // namespace

TEST_CASE("admissibility") {
    CHECK(admissible_triple(1, 1, 2));
    CHECK(admissible_triple(1, 1, 0));
    CHECK(!admissible_triple(1, 1, 1));  // parity
    CHECK(!admissible_triple(1, 2, 5));  // triangle
    CHECK(admissible_triple(2, 3, 3));
    CHECK(admissible_triple_at_level(1, 1, 2, 4));
    CHECK(!admissible_triple_at_level(1, 1, 2, 3));   // 1+1+2 > 2r-4
    CHECK(!admissible_triple_at_level(3, 1, 2, 4));   // 3 > r-2
}

TEST_CASE("quantum dimensions: formula vs closed loop") {
    for (int a = 0; a <= 5; ++a) CHECK(quantum_dim(a) == quantum_dim_net(a));
    CHECK(quantum_dim(0) == RatFunc::one());
    CHECK(quantum_dim(1) == RatFunc(loop_value()));
}

TEST_CASE("theta: formula vs network") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 4; ++c) {
                if (!admissible_triple(a, b, c)) continue;
                CHECK(theta_net_formula(a, b, c) == theta_net(a, b, c));
            }
    // theta with a zero edge degenerates to a loop
    for (int a = 0; a <= 4; ++a) CHECK(theta_net_formula(a, a, 0) == quantum_dim(a));
}

TEST_CASE("tet: formula vs tree pairing") {
    const RatFunc delta = loop_value();
    auto check = [&](int a, int b, int c, int d, int e, int f) {
        auto lhs = tet_net_formula(a, b, c, d, e, f);
        auto rhs = tl_pair(tree4_lr(a, b, c, d, e), tree4_mid(a, b, c, d, f), delta);
        CHECK(lhs == rhs);
    };
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c)
                for (int d = 0; d <= 2; ++d) {
                    std::map<int, TLElement<RatFunc>> lr, mid;
                    for (int e = 0; e <= 4; ++e) {
                        if (admissible_triple(a, b, e) && admissible_triple(c, d, e))
                            lr.emplace(e, tree4_lr(a, b, c, d, e));
                        if (admissible_triple(b, c, e) && admissible_triple(a, d, e))
                            mid.emplace(e, tree4_mid(a, b, c, d, e));
                    }
                    for (const auto& [e, te] : lr)
                        for (const auto& [f, tf] : mid)
                            CHECK(tet_net_formula(a, b, c, d, e, f) == tl_pair(te, tf, delta));
                }
    // spot checks at color 3
    check(3, 3, 3, 3, 0, 0);
    check(3, 1, 1, 3, 2, 2);
}

TEST_CASE("tree pairing is theta-orthogonal") {
    const RatFunc delta = loop_value();
    // <T_e, T_e'> = delta_{ee'} theta(a,b,e) theta(c,d,e) / qdim(e)
    int a = 2, b = 1, c = 1, d = 2;
    for (int e = 1; e <= 3; e += 2)
        for (int e2 = 1; e2 <= 3; e2 += 2) {
            RatFunc p = tl_pair(tree4_lr(a, b, c, d, e), tree4_lr(a, b, c, d, e2), delta);
            if (e != e2) CHECK(p.is_zero());
            else
                CHECK(p == theta_net_formula(a, b, e) * theta_net_formula(c, d, e) /
                               quantum_dim(e));
        }
}

TEST_CASE("F-move expands one tree basis in the other") {
    const RatFunc delta = loop_value();
    auto check = [&](int a, int b, int c, int d, int e) {
        TLElement<RatFunc> rhs(0, a + b + c + d);
        for (int f = std::max(std::abs(b - c), std::abs(a - d)); f <= std::min(b + c, a + d);
             f += 2)
            rhs += f_move(a, b, c, d, e, f) * tree4_mid(a, b, c, d, f);
        CHECK(tree4_lr(a, b, c, d, e) == rhs);
    };
    check(1, 1, 1, 1, 0);
    check(1, 1, 1, 1, 2);
    check(2, 1, 1, 2, 1);
    check(2, 1, 1, 2, 3);
    check(1, 2, 2, 1, 1);
    check(2, 2, 2, 2, 0);
    check(2, 2, 2, 2, 2);
    check(2, 2, 2, 2, 4);
}

TEST_CASE("block crossing permutes blocks and twists channels") {
    // single strands first
    CHECK(block_crossing(1, 1) == tl_sigma(2, 1, RatFunc::monomial(1), RatFunc::monomial(-1)));
    auto check = [&](int b, int c) {
        auto X = block_crossing(b, c);
        for (int ch = std::abs(b - c); ch <= b + c; ch += 2) {
            auto lhs = mul(X, vertex_element(c, b, ch));
            auto rhs = twist_eigenvalue(b, c, ch) * vertex_element(b, c, ch);
            CHECK(lhs == rhs);
        }
    };
    check(1, 1);
    check(1, 2);
    check(2, 1);
    check(2, 2);
    // inverse crossing gives the bar eigenvalue
    auto Xi = block_crossing(1, 1, -1);
    auto lhs = mul(Xi, vertex_element(1, 1, 2));
    CHECK(lhs == twist_eigenvalue(1, 1, 2).bar() * vertex_element(1, 1, 2));
}

TEST_CASE("projector absorbs positive crossings") {
    const RatFunc A = RatFunc::monomial(1), Ai = RatFunc::monomial(-1);
    for (int m = 2; m <= 4; ++m) {
        auto f = jones_wenzl(m);
        for (int i = 1; i < m; ++i) {
            CHECK(mul(f, tl_sigma(m, i, A, Ai)) == A * f);
            CHECK(mul(tl_sigma(m, i, A, Ai), f) == A * f);
            CHECK(mul(f, tl_sigma(m, i, A, Ai, -1)) == Ai * f);
        }
    }
    // a positive word of length j(L-j) from the block crossing is absorbed:
    // f . X_{j, L-j} = A^{j(L-j)} f
    for (int L = 2; L <= 4; ++L)
        for (int j = 1; j < L; ++j)
            CHECK(mul(jones_wenzl(L), block_crossing(j, L - j)) ==
                  RatFunc::monomial(j * (L - j)) * jones_wenzl(L));
}

TEST_CASE("twist eigenvalue explicit values") {
    CHECK(twist_eigenvalue(1, 1, 0) == -RatFunc::monomial(-3));
    CHECK(twist_eigenvalue(1, 1, 2) == RatFunc::monomial(1));
    CHECK(twist_eigenvalue(2, 2, 0) == RatFunc::monomial(-8));
    CHECK(twist_eigenvalue(2, 2, 2) == -RatFunc::monomial(-4));
    CHECK(twist_eigenvalue(2, 2, 4) == RatFunc::monomial(4));
    // channel N+N: (-1)^0 A^{(2N(2N+2) - 2N(N+2))/2} = A^{N^2}
    for (int N = 1; N <= 4; ++N)
        CHECK(twist_eigenvalue(N, N, 2 * N) == RatFunc::monomial(N * N));
}
