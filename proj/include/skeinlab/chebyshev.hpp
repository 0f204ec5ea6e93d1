#pragma once

// Chebyshev polynomial algebra of the solid-torus skein module and the
// torus pairing that yields all TQFT dimension counts.

#include <map>
#include <vector>

#include "skeinlab/cyclotomic.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/ratfunc.hpp"

namespace skeinlab {

// quantum integer [k] = (A^2k - A^-2k) / (A^2 - A^-2); the division is exact,
// so the result is always a Laurent polynomial
inline RatFunc quantum_int(int k) {
    LaurentPoly num = LaurentPoly::monomial(2 * k) - LaurentPoly::monomial(-2 * k);
    LaurentPoly den = LaurentPoly::monomial(2) - LaurentPoly::monomial(-2);
    return RatFunc(num / den);
}

inline RatFunc quantum_factorial(int k) {
    RatFunc r = RatFunc::one();
    for (int j = 2; j <= k; ++j) r *= quantum_int(j);
    return r;
}

// Polynomial in the solid-torus variable z with rational coefficients.
class ChebPoly {
  public:
    ChebPoly() = default;
    explicit ChebPoly(std::map<int, Rational> coeffs) : coeffs_(std::move(coeffs)) {
        for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
    }

    static ChebPoly zero() { return ChebPoly(); }
    static ChebPoly monomial(int d, const Rational& c = Rational(1)) {
        ChebPoly r;
        if (c != 0) r.coeffs_[d] = c;
        return r;
    }

    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int d) const {
        auto it = coeffs_.find(d);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    friend ChebPoly operator+(const ChebPoly& a, const ChebPoly& b) {
        ChebPoly r = a;
        for (const auto& [d, c] : b.coeffs_) {
            r.coeffs_[d] += c;
            if (r.coeffs_[d] == 0) r.coeffs_.erase(d);
        }
        return r;
    }
    friend ChebPoly operator-(const ChebPoly& a, const ChebPoly& b) {
        ChebPoly r = a;
        for (const auto& [d, c] : b.coeffs_) {
            r.coeffs_[d] -= c;
            if (r.coeffs_[d] == 0) r.coeffs_.erase(d);
        }
        return r;
    }
    friend ChebPoly operator*(const ChebPoly& a, const ChebPoly& b) {
        ChebPoly r;
        for (const auto& [da, ca] : a.coeffs_)
            for (const auto& [db, cb] : b.coeffs_) {
                r.coeffs_[da + db] += ca * cb;
                if (r.coeffs_[da + db] == 0) r.coeffs_.erase(da + db);
            }
        return r;
    }
    friend bool operator==(const ChebPoly& a, const ChebPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    RatFunc eval_rat(const RatFunc& x) const {
        RatFunc r = RatFunc::zero();
        for (int d = degree(); d >= 0; --d) {
            r = r * x;
            Rational c = coeff(d);
            if (c != 0) r += RatFunc(c);
        }
        return r;
    }

    CycloNum eval_cyclo(const CycloNum& x) const {
        CycloNum r = CycloNum::zero(x.order());
        for (int d = degree(); d >= 0; --d) {
            r = r * x;
            Rational c = coeff(d);
            if (c != 0) r += c * CycloNum::one(x.order());
        }
        return r;
    }

  private:
    std::map<int, Rational> coeffs_;
};

// e_l: e_0 = 1, e_1 = z, z e_l = e_{l+1} + e_{l-1}
inline ChebPoly chebyshev(int l) {
    if (l < 0) throw std::runtime_error("chebyshev: negative index");
    ChebPoly prev = ChebPoly::monomial(0);
    if (l == 0) return prev;
    ChebPoly cur = ChebPoly::monomial(1);
    const ChebPoly z = cur;
    for (int j = 1; j < l; ++j) {
        ChebPoly next = z * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// expand (e_N)^n = sum_k c(k, N, n) e_k; these are exactly the skein-module
// dimensions dim S(B^3, (N)_n, (k))
inline std::map<int, long long> chebyshev_product_coeffs(int bigN, int n) {
    if (bigN < 1 || n < 1) throw std::runtime_error("chebyshev_product_coeffs: need N,n >= 1");
    // work in the e_k basis directly: represent elements as maps k -> coeff
    // with the product rule e_1 * e_k = e_{k+1} + e_{k-1}
    std::map<int, long long> acc = {{0, 1}};
    // e_N as z-polynomial evaluated... simpler: multiply by e_N in the e-basis
    // via e_a * e_b = e_{|a-b|} + e_{|a-b|+2} + ... + e_{a+b}
    for (int rep = 0; rep < n; ++rep) {
        std::map<int, long long> next;
        for (const auto& [k, c] : acc) {
            for (int m = std::abs(k - bigN); m <= k + bigN; m += 2) next[m] += c;
        }
        acc = std::move(next);
    }
    return acc;
}

// Periodicity of e_l in the level-r torus module: result is (sign, m) with
// e_l = sign * e_m, 0 <= m <= r-2, or sign 0.
struct TorusReduced {
    int sign;  // +1, -1 or 0
    int index;
};

inline TorusReduced torus_reduce(int l, int r) {
    if (l < 0) throw std::runtime_error("torus_reduce: negative index");
    if (r < 2) throw std::runtime_error("torus_reduce: need r >= 2");
    int sign = 1;
    int m = l % (2 * r);
    if (m >= r) {
        // e_{r+a} = -e_{r-2-a} for a in [0, r-1]
        int a = m - r;
        int t = r - 2 - a;
        if (t < 0) {
            // a = r-1 gives e_{2r-1} = -e_{-1} = 0
            return {0, 0};
        }
        sign = -sign;
        m = t;
    }
    if (m == r - 1) return {0, 0};  // e_{r-1} = -e_{r-1}
    return {sign, m};
}

// dim V_2r(S^2, (N)_n, (k)) via the torus pairing <e_k, (e_N)^n>
inline long long tqft_dimension(int n, int bigN, int k, int r) {
    if (r < 2) throw std::runtime_error("tqft_dimension: need r >= 2");
    if (bigN < 0 || bigN > r - 1 || k < 0 || k > r - 1)
        throw std::runtime_error("tqft_dimension: colors must lie in [0, r-1]");
    long long dim = 0;
    for (const auto& [l, c] : chebyshev_product_coeffs(bigN, n)) {
        TorusReduced t = torus_reduce(l, r);
        if (t.sign != 0 && t.index == k) dim += t.sign * c;
    }
    return dim;
}

// dim S(B^3, (N)_n, (k)) = c(k, N, n)
inline long long skein_dimension(int n, int bigN, int k) {
    auto c = chebyshev_product_coeffs(bigN, n);
    auto it = c.find(k);
    return it == c.end() ? 0 : it->second;
}

// dim K_r(B^3, (N)_n, (k)) = dim S - dim V
inline long long kernel_dimension_count(int n, int bigN, int k, int r) {
    return skein_dimension(n, bigN, k) - tqft_dimension(n, bigN, k, r);
}

}  // namespace skeinlab
