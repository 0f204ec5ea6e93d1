#pragma once

// Colored trivalent networks: admissibility, quantum dimensions, theta and
// tetrahedral evaluations (closed formulas), F-moves and twist eigenvalues,
// together with a fully diagrammatic evaluation path used to cross-check the
// closed formulas and to build tree states in the ball.

#include <vector>

#include "skeinlab/chebyshev.hpp"
#include "skeinlab/tl_element.hpp"

namespace skeinlab {

// ---- admissibility --------------------------------------------------------

// (a, b, c) can meet at a trivalent vertex: parity + triangle inequality
inline bool admissible_triple(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) return false;
    if ((a + b + c) % 2 != 0) return false;
    return a + b >= c && b + c >= a && a + c >= b;
}

// additionally bounded for the level-r theory
inline bool admissible_triple_at_level(int a, int b, int c, int r) {
    return admissible_triple(a, b, c) && a <= r - 2 && b <= r - 2 && c <= r - 2 &&
           a + b + c <= 2 * r - 4;
}

// ---- closed formulas (rational functions of A) -----------------------------

// quantum dimension of the color-a strand: (-1)^a [a+1]
inline RatFunc quantum_dim(int a) {
    RatFunc d = quantum_int(a + 1);
    return (a % 2 == 0) ? d : -d;
}

// theta network with edge colors a, b, c
inline RatFunc theta_net_formula(int a, int b, int c) {
    if (!admissible_triple(a, b, c)) throw NotAdmissible("theta: inadmissible triple");
    const int x = (a + b - c) / 2, y = (a + c - b) / 2, z = (b + c - a) / 2;
    RatFunc r = quantum_factorial(x + y + z + 1) * quantum_factorial(x) * quantum_factorial(y) *
                quantum_factorial(z) /
                (quantum_factorial(x + y) * quantum_factorial(x + z) * quantum_factorial(y + z));
    return ((x + y + z) % 2 == 0) ? r : -r;
}

// tetrahedral network with vertices (a,b,e), (c,d,e), (b,c,f), (a,d,f)
inline RatFunc tet_net_formula(int a, int b, int c, int d, int e, int f) {
    if (!admissible_triple(a, b, e) || !admissible_triple(c, d, e) ||
        !admissible_triple(b, c, f) || !admissible_triple(a, d, f))
        throw NotAdmissible("tet: inadmissible vertex");
    const int v1 = (a + b + e) / 2, v2 = (c + d + e) / 2, v3 = (b + c + f) / 2,
              v4 = (a + d + f) / 2;
    // quadrilateral half-sums (complements of the opposite pairs a|c, b|d, e|f)
    const int q1 = (a + b + c + d) / 2, q2 = (a + c + e + f) / 2, q3 = (b + d + e + f) / 2;
    const std::vector<int> vs = {v1, v2, v3, v4}, qs = {q1, q2, q3};
    RatFunc pre = RatFunc::one();
    for (int qv : qs)
        for (int vv : vs) {
            if (qv < vv) throw NotAdmissible("tet: negative interior count");
            pre *= quantum_factorial(qv - vv);
        }
    for (int col : {a, b, c, d, e, f}) pre /= quantum_factorial(col);
    const int lo = std::max({v1, v2, v3, v4});
    const int hi = std::min({q1, q2, q3});
    RatFunc sum = RatFunc::zero();
    for (int s = lo; s <= hi; ++s) {
        RatFunc term = quantum_factorial(s + 1);
        for (int vv : vs) term /= quantum_factorial(s - vv);
        for (int qv : qs) term /= quantum_factorial(qv - s);
        sum += (s % 2 == 0) ? term : -term;
    }
    return pre * sum;
}

// change of tree basis on four boundary edges a, b, c, d (left to right):
// expresses the ((ab)(cd))-tree with internal color e in terms of the
// (a(bc)d)-trees with internal color f
inline RatFunc f_move(int a, int b, int c, int d, int e, int f) {
    return tet_net_formula(a, b, c, d, e, f) * quantum_dim(f) /
           (theta_net_formula(b, c, f) * theta_net_formula(a, d, f));
}

// eigenvalue of a single positive block crossing on two strands of colors
// b, c fused into channel a
inline RatFunc twist_eigenvalue(int b, int c, int a) {
    if (!admissible_triple(b, c, a)) throw NotAdmissible("twist: inadmissible channel");
    const int k = (b + c - a) / 2;
    const int exp2 = a * (a + 2) - b * (b + 2) - c * (c + 2);  // twice the exponent
    if (exp2 % 2 != 0) throw std::logic_error("twist: odd exponent");
    RatFunc r = RatFunc::monomial(exp2 / 2);
    return (k % 2 == 0) ? r : -r;
}

// ---- diagrammatic evaluation ----------------------------------------------

// trivalent vertex as a TL element: bottom a+b strands, top c strands
inline TLElement<RatFunc> vertex_element(int a, int b, int c) {
    if (!admissible_triple(a, b, c)) throw NotAdmissible("vertex: inadmissible triple");
    const int x = (a + b - c) / 2, y = (a + c - b) / 2, z = (b + c - a) / 2;
    std::vector<int> mate(a + b + c);
    for (int i = 0; i < x; ++i) {
        mate[a - 1 - i] = a + i;
        mate[a + i] = a - 1 - i;
    }
    for (int j = 0; j < y; ++j) {
        mate[j] = a + b + j;
        mate[a + b + j] = j;
    }
    for (int j = 0; j < z; ++j) {
        mate[a + x + j] = a + b + y + j;
        mate[a + b + y + j] = a + x + j;
    }
    auto bend = TLElement<RatFunc>::from_diagram(PlanarDiagram(a + b, c, std::move(mate)),
                                                 RatFunc::one());
    const RatFunc delta = loop_value();
    TLElement<RatFunc> bottom = tl_tensor(jones_wenzl(a), jones_wenzl(b));
    return tl_multiply(tl_multiply(bottom, bend, delta), jones_wenzl(c), delta);
}

// Markov closure of an m -> m element: join top i to bottom i around the side.
template <typename S>
S tl_markov_close(const TLElement<S>& x, const S& delta) {
    if (x.bottom() != x.top()) throw StrandMismatch("markov close: not an endomorphism");
    const int m = x.bottom();
    S total{};
    for (const auto& [d, c] : x.terms()) {
        std::vector<char> seen(2 * m, 0);
        int loops = 0;
        for (int i = 0; i < 2 * m; ++i) {
            if (seen[i]) continue;
            ++loops;
            int cur = i;
            do {
                seen[cur] = 1;
                int nxt = d.mate(cur);
                seen[nxt] = 1;
                cur = nxt < m ? nxt + m : nxt - m;  // closure edge
            } while (cur != i);
        }
        S term = c;
        for (int l = 0; l < loops; ++l) term = term * delta;
        total = total + term;
    }
    return total;
}

// pairing of two states 0 -> m: stack reflect(y) on x and collect delta^loops
template <typename S>
S tl_pair(const TLElement<S>& x, const TLElement<S>& y, const S& delta) {
    if (x.bottom() != 0 || y.bottom() != 0 || x.top() != y.top())
        throw StrandMismatch("pair: shape mismatch");
    S total{};
    for (const auto& [dx, cx] : x.terms())
        for (const auto& [dy, cy] : y.terms()) {
            auto [d, loops] = compose(dx, dy.reflect());
            (void)d;
            S term = cx * cy;
            for (int l = 0; l < loops; ++l) term = term * delta;
            total = total + term;
        }
    return total;
}

// diagrammatic quantum dimension: closed color-a loop
inline RatFunc quantum_dim_net(int a) { return tl_markov_close(jones_wenzl(a), loop_value()); }

// diagrammatic theta
inline RatFunc theta_net(int a, int b, int c) {
    auto v = vertex_element(a, b, c);
    return tl_markov_close(tl_multiply(v.reflect(), v, loop_value()), loop_value());
}

// tree state on four boundary edges a,b,c,d with internal color e grouping (a,b)|(c,d)
inline TLElement<RatFunc> tree4_lr(int a, int b, int c, int d, int e) {
    const RatFunc delta = loop_value();
    auto left = vertex_element(a, b, e).reflect();   // e -> a+b
    auto right = vertex_element(c, d, e).reflect();  // e -> c+d
    auto cup = TLElement<RatFunc>::from_diagram(PlanarDiagram::nested_cup(e), RatFunc::one());
    return tl_multiply(cup, tl_tensor(left, right), delta);
}

// fully contracted triple vertex state: 0 -> a+f+d
inline TLElement<RatFunc> triple_cup(int a, int f, int d) {
    if (!admissible_triple(a, f, d)) throw NotAdmissible("triple_cup: inadmissible triple");
    const int p = (a + f - d) / 2, q = (f + d - a) / 2, w = (a + d - f) / 2;
    const int n = a + f + d;
    std::vector<int> mate(n);
    for (int i = 0; i < w; ++i) {
        mate[i] = n - 1 - i;
        mate[n - 1 - i] = i;
    }
    for (int i = 0; i < p; ++i) {
        mate[a - 1 - i] = a + i;
        mate[a + i] = a - 1 - i;
    }
    for (int i = 0; i < q; ++i) {
        mate[a + f - 1 - i] = a + f + i;
        mate[a + f + i] = a + f - 1 - i;
    }
    const RatFunc delta = loop_value();
    auto cup = TLElement<RatFunc>::from_diagram(PlanarDiagram(0, n, std::move(mate)),
                                                RatFunc::one());
    auto proj = tl_tensor(tl_tensor(jones_wenzl(a), jones_wenzl(f)), jones_wenzl(d));
    return tl_multiply(cup, proj, delta);
}

// tree state with internal color f grouping (b,c), boundary a,b,c,d
inline TLElement<RatFunc> tree4_mid(int a, int b, int c, int d, int f) {
    const RatFunc delta = loop_value();
    auto base = triple_cup(a, f, d);                                // 0 -> a+f+d
    auto expand = vertex_element(b, c, f).reflect();                // f -> b+c
    auto layer = tl_tensor(tl_tensor(tl_identity(a, RatFunc::one()), expand),
                           tl_identity(d, RatFunc::one()));
    return tl_multiply(base, layer, delta);
}

// positive (sign=+1) block crossing of b strands over the following c strands
inline TLElement<RatFunc> block_crossing(int b, int c, int sign = +1) {
    const int m = b + c;
    const RatFunc A = RatFunc::monomial(1), Ai = RatFunc::monomial(-1);
    const RatFunc delta = loop_value();
    TLElement<RatFunc> r = tl_identity(m, RatFunc::one());
    for (int k = 1; k <= b; ++k)
        for (int i = b - k + 1; i <= b - k + c; ++i)
            r = tl_multiply(r, tl_sigma(m, i, A, Ai, sign), delta);
    return r;
}

}  // namespace skeinlab
