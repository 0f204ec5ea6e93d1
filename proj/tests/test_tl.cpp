#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/diagram.hpp"
#include "skeinlab/tl_element.hpp"

using namespace skeinlab;

namespace {
TLElement<RatFunc> diag(const PlanarDiagram& d) {
    return TLElement<RatFunc>::from_diagram(d, RatFunc::one());
}
TLElement<RatFunc> e(int m, int i) { return diag(PlanarDiagram::e_gen(m, i)); }
TLElement<RatFunc> mul(const TLElement<RatFunc>& a, const TLElement<RatFunc>& b) {
    return tl_multiply(a, b, loop_value());
}
}  // namespace

TEST_CASE("diagram validation") {
    CHECK_NOTHROW(PlanarDiagram::identity(4));
    CHECK_NOTHROW(PlanarDiagram::e_gen(4, 2));
    // crossing matching {0-2, 1-3} on the line is rejected
    CHECK_THROWS(PlanarDiagram::matching({2, 3, 0, 1}));
    CHECK_NOTHROW(PlanarDiagram::matching({1, 0, 3, 2}));
    CHECK_NOTHROW(PlanarDiagram::matching({3, 2, 1, 0}));
    // identity on 2 strands is planar even though arcs "cross" in index order
    CHECK_NOTHROW(PlanarDiagram(1, 1, {1, 0}));
}

TEST_CASE("composition and loops") {
    auto id4 = PlanarDiagram::identity(4);
    auto e2 = PlanarDiagram::e_gen(4, 2);
    CHECK(compose(id4, e2).diagram == e2);
    CHECK(compose(e2, id4).loops == 0);
    auto [d, loops] = compose(e2, e2);
    CHECK(d == e2);
    CHECK(loops == 1);
    // cup then cap: a single loop, empty diagram
    auto cup = PlanarDiagram::nested_cup(2);
    auto cap = cup.reflect();
    auto closed = compose(cup, cap);
    CHECK(closed.loops == 2);
    CHECK(closed.diagram.bottom() == 0);
    CHECK(closed.diagram.top() == 0);
    // nested cup composed with adjacent cups reflected: one loop
    CHECK(compose(PlanarDiagram::nested_cup(2), PlanarDiagram::adjacent_cups(2).reflect()).loops ==
          1);
}

TEST_CASE("tensor and reflect") {
    auto a = PlanarDiagram::nested_cup(1);  // 0 -> 2
    auto t = tensor(a, a);
    CHECK(t == PlanarDiagram::adjacent_cups(2));
    CHECK(PlanarDiagram::e_gen(3, 1).reflect() == PlanarDiagram::e_gen(3, 1));
    CHECK(PlanarDiagram::identity(5).reflect() == PlanarDiagram::identity(5));
}

TEST_CASE("rotation of matchings") {
    auto m = PlanarDiagram::matching({1, 0, 3, 2});
    CHECK(m.rotate(0) == m);
    CHECK(m.rotate(4) == m);
    CHECK(m.rotate(2) == m);
    auto n = PlanarDiagram::matching({3, 2, 1, 0});
    CHECK(n.rotate(1) == PlanarDiagram::matching({1, 0, 3, 2}));
    CHECK(n.rotate(1).rotate(-1) == n);
}

TEST_CASE("matching enumeration is Catalan") {
    CHECK(noncrossing_matchings(0).size() == 1);
    CHECK(noncrossing_matchings(2).size() == 1);
    CHECK(noncrossing_matchings(4).size() == 2);
    CHECK(noncrossing_matchings(6).size() == 5);
    CHECK(noncrossing_matchings(8).size() == 14);
    CHECK(noncrossing_matchings(12).size() == 132);
    for (const auto& m : noncrossing_matchings(8)) CHECK_NOTHROW(PlanarDiagram::matching(m));
}

TEST_CASE("TL relations") {
    const RatFunc delta = loop_value();
    for (int m = 2; m <= 5; ++m) {
        for (int i = 1; i < m; ++i) {
            CHECK(mul(e(m, i), e(m, i)) == delta * e(m, i));
            if (i + 1 < m) {
                CHECK(mul(mul(e(m, i), e(m, i + 1)), e(m, i)) == e(m, i));
                CHECK(mul(mul(e(m, i + 1), e(m, i)), e(m, i + 1)) == e(m, i + 1));
            }
            for (int j = i + 2; j < m; ++j)
                CHECK(mul(e(m, i), e(m, j)) == mul(e(m, j), e(m, i)));
        }
    }
}

TEST_CASE("braid relations via Kauffman resolution") {
    const RatFunc A = RatFunc::monomial(1), Ai = RatFunc::monomial(-1);
    auto s = [&](int m, int i, int sign) { return tl_sigma(m, i, A, Ai, sign); };
    CHECK(mul(s(3, 1, +1), s(3, 1, -1)) == tl_identity(3, RatFunc::one()));
    CHECK(mul(mul(s(3, 1, +1), s(3, 2, +1)), s(3, 1, +1)) ==
          mul(mul(s(3, 2, +1), s(3, 1, +1)), s(3, 2, +1)));
    CHECK(mul(s(4, 1, +1), s(4, 3, +1)) == mul(s(4, 3, +1), s(4, 1, +1)));
}

TEST_CASE("Jones-Wenzl small cases") {
    // f_2 = id + (1/[2]) e_1 (loop value -[2])
    auto f2 = jones_wenzl(2);
    CHECK(f2.coeff(PlanarDiagram::identity(2)) == RatFunc::one());
    CHECK(f2.coeff(PlanarDiagram::e_gen(2, 1)) == RatFunc::one() / quantum_int(2));
    // f_3 coefficients: e_i with 1/... known expansion has [1]/[3] on e1,e2? check axioms instead
    for (int m = 2; m <= 5; ++m) {
        auto f = jones_wenzl(m);
        CHECK(f.coeff(PlanarDiagram::identity(m)) == RatFunc::one());
        CHECK(mul(f, f) == f);  // idempotent
        for (int i = 1; i < m; ++i) {
            CHECK(mul(e(m, i), f).is_zero());
            CHECK(mul(f, e(m, i)).is_zero());
        }
        CHECK(f.reflect() == f);
    }
}

namespace {
// Wenzl recursion with A specialized to an exact rational value: all scalar
// work is plain rational arithmetic, so large m stays fast while the checks
// remain exact
TLElement<RatFunc> wenzl_specialized(int m, const Rational& a_val) {
    auto qint = [&](int k) {
        return RatFunc(Rational(quantum_int(k).num().eval_rational(a_val)));
    };
    RatFunc delta = RatFunc(-qint(2));
    TLElement<RatFunc> f = tl_identity(1, RatFunc::one());
    for (int k = 2; k <= m; ++k) {
        auto fx = tl_tensor(f, tl_identity(1, RatFunc::one()));
        auto ek = TLElement<RatFunc>::from_diagram(PlanarDiagram::e_gen(k, k - 1),
                                                   RatFunc::one());
        auto mid = tl_multiply(tl_multiply(fx, ek, delta), fx, delta);
        f = fx + (qint(k - 1) / qint(k)) * mid;
    }
    return f;
}
}  // namespace

TEST_CASE("Jones-Wenzl large cases: annihilation proves idempotence") {
    // e_i f = f e_i = 0 for all i plus unit identity coefficient force f^2 = f
    for (int m = 6; m <= 7; ++m) {
        auto f = jones_wenzl(m);
        CHECK(f.size() == noncrossing_matchings(2 * m).size());  // full support
        CHECK(f.coeff(PlanarDiagram::identity(m)) == RatFunc::one());
        for (int i = 1; i < m; ++i) {
            CHECK(mul(e(m, i), f).is_zero());
            CHECK(mul(f, e(m, i)).is_zero());
        }
    }
    // m = 8: exact rational specializations of A keep the check cheap
    for (const Rational& a_val : {Rational(2), Rational(5, 3)}) {
        auto f = wenzl_specialized(8, a_val);
        Rational d = quantum_int(2).num().eval_rational(a_val);
        RatFunc delta = RatFunc(Rational(-d));
        CHECK(f.size() == noncrossing_matchings(16).size());
        CHECK(f.coeff(PlanarDiagram::identity(8)) == RatFunc::one());
        for (int i = 1; i < 8; ++i) {
            CHECK(tl_multiply(e(8, i), f, delta).is_zero());
            CHECK(tl_multiply(f, e(8, i), delta).is_zero());
        }
        CHECK(tl_multiply(f, f, delta) == f);
    }
}

TEST_CASE("nested turnback coefficient functional") {
    CHECK_NOTHROW(nested_turnback(3));
    CHECK(phi_coefficient(1, tl_identity(2, RatFunc::one())).is_zero());
    // phi_m(f^(2m)) = prod_{k=1}^m [k]^2 / ([2k][2k-1])
    for (int m = 1; m <= 3; ++m) {
        RatFunc expected = RatFunc::one();
        for (int k = 1; k <= m; ++k)
            expected *= quantum_int(k) * quantum_int(k) /
                        (quantum_int(2 * k) * quantum_int(2 * k - 1));
        CHECK(phi_coefficient(m, jones_wenzl(2 * m)) == expected);
    }
    CHECK(phi_coefficient(1, jones_wenzl(2)) == RatFunc::one() / quantum_int(2));
}

TEST_CASE("closed bracket and oracle cap") {
    const RatFunc delta = loop_value();
    // a single closed loop
    auto cup = TLElement<RatFunc>::from_diagram(PlanarDiagram::nested_cup(1), RatFunc::one());
    auto closed = tl_multiply(cup, cup.reflect(), delta);
    CHECK(bracket_closed(closed) == delta);
    // multiplicative over disjoint unions
    auto two = tl_multiply(tl_tensor(cup, cup), tl_tensor(cup, cup).reflect(), delta);
    CHECK(bracket_closed(two) == delta * delta);
    CHECK_THROWS_AS(check_oracle_cap(13), OracleCapExceeded);
    CHECK_NOTHROW(check_oracle_cap(12));
}

TEST_CASE("alternative Jones-Wenzl recursion agrees with Wenzl") {
    for (int m = 2; m <= 6; ++m) CHECK(jw_alt_expand(m) == jones_wenzl(m));
}

TEST_CASE("Jones-Wenzl at roots of unity") {
    // f^(N) is regular at A = primitive 4r-th root when N <= r-1
    QRoot a(20, 1);  // r = 5
    for (int m = 1; m <= 4; ++m) {
        auto f = tl_at_root(jones_wenzl(m), a);
        const CycloNum delta = loop_value(a);
        CHECK(tl_multiply(f, f, delta) == f);
        for (int i = 1; i < m; ++i) {
            auto ei = TLElement<CycloNum>::from_diagram(PlanarDiagram::e_gen(m, i),
                                                        CycloNum::one(20));
            CHECK(tl_multiply(ei, f, delta).is_zero());
        }
    }
    // f^(r-1) closes to quantum dimension [r] = 0: trace check via markov?
    // here: f^(5) at r=5 is singular ([5] pole)
    CHECK_THROWS_AS(tl_at_root(jones_wenzl(5), a), SingularAtRoot);
}
