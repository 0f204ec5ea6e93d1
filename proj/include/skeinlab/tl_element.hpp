#pragma once

// Linear combinations of planar diagrams over an exact scalar ring, the
// Temperley-Lieb product (loops become factors of delta), and Jones-Wenzl
// projectors.
//
// Scalar convention throughout: loop value delta = -A^2 - A^-2.

#include <map>
#include <vector>

#include "skeinlab/chebyshev.hpp"
#include "skeinlab/cyclotomic.hpp"
#include "skeinlab/diagram.hpp"
#include "skeinlab/ratfunc.hpp"

namespace skeinlab {

template <typename S>
class TLElement {
  public:
    TLElement() : bottom_(0), top_(0) {}
    TLElement(int bottom, int top) : bottom_(bottom), top_(top) {}

    static TLElement from_diagram(const PlanarDiagram& d, const S& c) {
        TLElement r(d.bottom(), d.top());
        r.add(d, c);
        return r;
    }

    int bottom() const { return bottom_; }
    int top() const { return top_; }
    const std::map<PlanarDiagram, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    S coeff(const PlanarDiagram& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? S{} : it->second;
    }

    void add(const PlanarDiagram& d, const S& c) {
        if (terms_.empty() && bottom_ == 0 && top_ == 0 && (d.bottom() != 0 || d.top() != 0)) {
            bottom_ = d.bottom();
            top_ = d.top();
        }
        if (d.bottom() != bottom_ || d.top() != top_)
            throw StrandMismatch("TLElement: diagram shape mismatch");
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            if (!scalar_is_zero(c)) terms_.emplace(d, c);
        } else {
            it->second = it->second + c;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    TLElement& operator+=(const TLElement& o) {
        for (const auto& [d, c] : o.terms_) add(d, c);
        return *this;
    }
    TLElement& operator-=(const TLElement& o) {
        for (const auto& [d, c] : o.terms_) add(d, negate(c));
        return *this;
    }
    friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
    friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
    friend TLElement operator*(const S& c, const TLElement& a) {
        TLElement r(a.bottom_, a.top_);
        for (const auto& [d, x] : a.terms_) r.add(d, c * x);
        return r;
    }
    friend TLElement operator-(const TLElement& a) {
        TLElement r(a.bottom_, a.top_);
        for (const auto& [d, x] : a.terms_) r.add(d, negate(x));
        return r;
    }

    friend bool operator==(const TLElement& a, const TLElement& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const TLElement& a, const TLElement& b) { return !(a == b); }

    TLElement reflect() const {
        TLElement r(top_, bottom_);
        for (const auto& [d, c] : terms_) r.add(d.reflect(), c);
        return r;
    }

  private:
    static bool scalar_is_zero(const S& c) {
        if constexpr (std::is_same_v<S, CycloNum>) return c.is_zero();
        else return c.is_zero();
    }
    static S negate(const S& c) { return S{} - c; }

    int bottom_, top_;
    std::map<PlanarDiagram, S> terms_;
};

// TL product: stack b on top of a, each closed loop contributing delta.
template <typename S>
TLElement<S> tl_multiply(const TLElement<S>& a, const TLElement<S>& b, const S& delta) {
    TLElement<S> r(a.bottom(), b.top());
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) {
            auto [d, loops] = compose(da, db);
            S c = ca * cb;
            for (int l = 0; l < loops; ++l) c = c * delta;
            r.add(d, c);
        }
    return r;
}

template <typename S>
TLElement<S> tl_tensor(const TLElement<S>& a, const TLElement<S>& b) {
    TLElement<S> r(a.bottom() + b.bottom(), a.top() + b.top());
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) r.add(tensor(da, db), ca * cb);
    return r;
}

template <typename S>
TLElement<S> tl_identity(int m, const S& one) {
    return TLElement<S>::from_diagram(PlanarDiagram::identity(m), one);
}

// ---- generic scalar-ring shims -------------------------------------------

inline RatFunc ring_one(const RatFunc&) { return RatFunc::one(); }
inline CycloNum ring_one(const CycloNum& x) { return CycloNum::one(x.order()); }

// loop value delta = -A^2 - A^-2 as a RatFunc
inline RatFunc loop_value() {
    return RatFunc(-(LaurentPoly::monomial(2) + LaurentPoly::monomial(-2)));
}
inline CycloNum loop_value(const QRoot& a) {
    return -(CycloNum::from_root(a.power(2)) + CycloNum::from_root(a.power(-2)));
}

// ---- Jones-Wenzl projectors ----------------------------------------------

// Wenzl recursion in the delta = -[2] convention:
//   f_m = f_{m-1}x1 + ([m-1]/[m]) (f_{m-1}x1) e_{m-1} (f_{m-1}x1)
// Memoized; coefficients are rational functions of A.
inline const TLElement<RatFunc>& jones_wenzl(int m) {
    static std::map<int, TLElement<RatFunc>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 0) throw std::runtime_error("jones_wenzl: negative strand count");
    TLElement<RatFunc> f;
    if (m == 0) {
        f = TLElement<RatFunc>(0, 0);
        f.add(PlanarDiagram::identity(0), RatFunc::one());
    } else if (m == 1) {
        f = tl_identity(1, RatFunc::one());
    } else {
        const RatFunc delta = loop_value();
        TLElement<RatFunc> fx = tl_tensor(jones_wenzl(m - 1), tl_identity(1, RatFunc::one()));
        TLElement<RatFunc> e =
            TLElement<RatFunc>::from_diagram(PlanarDiagram::e_gen(m, m - 1), RatFunc::one());
        TLElement<RatFunc> mid = tl_multiply(tl_multiply(fx, e, delta), fx, delta);
        f = fx + (quantum_int(m - 1) / quantum_int(m)) * mid;
    }
    return cache.emplace(m, std::move(f)).first->second;
}

// Single-step expansion in the alternative form
//   f_L = (f_{L-1}x1) + sum_{j=1}^{L-1} ([j]/[L]) (f_{L-1}x1)(e_{L-1}...e_j)(f_{L-1}x1)
// (terms with j < L-1 vanish, so this must agree with the Wenzl recursion;
// tests keep both implementations honest).
inline TLElement<RatFunc> jw_alt_expand(int l) {
    if (l <= 1) return jones_wenzl(l);
    const RatFunc delta = loop_value();
    TLElement<RatFunc> fx = tl_tensor(jones_wenzl(l - 1), tl_identity(1, RatFunc::one()));
    TLElement<RatFunc> acc = fx;
    for (int j = 1; j <= l - 1; ++j) {
        TLElement<RatFunc> word = tl_identity(l, RatFunc::one());
        for (int i = l - 1; i >= j; --i)
            word = tl_multiply(
                word, TLElement<RatFunc>::from_diagram(PlanarDiagram::e_gen(l, i), RatFunc::one()),
                delta);
        TLElement<RatFunc> term = tl_multiply(tl_multiply(fx, word, delta), fx, delta);
        acc += (quantum_int(j) / quantum_int(l)) * term;
    }
    return acc;
}

// Exact evaluation of a RatFunc-coefficient element at A = given root of
// unity; throws SingularAtRoot if any coefficient has a pole there.
inline TLElement<CycloNum> tl_at_root(const TLElement<RatFunc>& x, const QRoot& a) {
    TLElement<CycloNum> r(x.bottom(), x.top());
    for (const auto& [d, c] : x.terms()) {
        try {
            r.add(d, cyclo_eval(c, a));
        } catch (const DenominatorVanishes&) {
            throw SingularAtRoot("TL coefficient has a pole at the chosen root of unity");
        }
    }
    return r;
}

// ---- distinguished nested diagram and its coefficient functional ----------

// t_m in TL_{2m}: m nested caps over m nested cups (all 2m bottom points
// matched among themselves, likewise on top)
inline PlanarDiagram nested_turnback(int m) {
    std::vector<int> mate(4 * m);
    for (int i = 0; i < m; ++i) {
        mate[i] = 2 * m - 1 - i;
        mate[2 * m - 1 - i] = i;
        mate[2 * m + i] = 4 * m - 1 - i;
        mate[4 * m - 1 - i] = 2 * m + i;
    }
    return PlanarDiagram(2 * m, 2 * m, std::move(mate));
}

// coefficient of t_m in an element of TL_{2m}
template <typename S>
S phi_coefficient(int m, const TLElement<S>& x) {
    if (x.bottom() != 2 * m || x.top() != 2 * m)
        throw StrandMismatch("phi coefficient: need an element of TL_{2m}");
    return x.coeff(nested_turnback(m));
}

// ---- closed-diagram evaluation --------------------------------------------

// default strand cap for brute-force diagrammatic evaluation
inline constexpr int kDefaultOracleCap = 12;

inline void check_oracle_cap(int strands, int cap = kDefaultOracleCap) {
    if (strands > cap) throw OracleCapExceeded("diagram exceeds the brute-force strand cap");
}

// scalar value of a fully closed element (bottom = top = 0); loops were
// already converted to delta factors during composition
template <typename S>
S bracket_closed(const TLElement<S>& x) {
    if (x.bottom() != 0 || x.top() != 0)
        throw StrandMismatch("bracket: element has open strands");
    S total{};
    for (const auto& [d, c] : x.terms()) total = total + c;
    return total;
}

// ---- braid generators -----------------------------------------------------

// Kauffman resolution of the positive crossing sigma_i on m strands:
// A * id + A^-1 * e_i; sign = -1 gives the inverse crossing.
template <typename S>
TLElement<S> tl_sigma(int m, int i, const S& a_pos, const S& a_neg, int sign = +1) {
    const S& hi = (sign > 0) ? a_pos : a_neg;
    const S& lo = (sign > 0) ? a_neg : a_pos;
    TLElement<S> r(m, m);
    r.add(PlanarDiagram::identity(m), hi);
    r.add(PlanarDiagram::e_gen(m, i), lo);
    return r;
}

}  // namespace skeinlab
