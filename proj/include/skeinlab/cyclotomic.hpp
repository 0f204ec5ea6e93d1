#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_M).
//
// CycloNum stores a length-M vector of rationals in powers of zeta_M and
// multiplies by cyclic convolution; reduction modulo the M-th cyclotomic
// polynomial happens only for equality tests and inversion.

#include <complex>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "skeinlab/laurent.hpp"
#include "skeinlab/ratfunc.hpp"

namespace skeinlab {

// A root of unity zeta = exp(2*pi*i*k/M).
struct QRoot {
    int order;     // M > 0
    int exponent;  // k, taken mod M

    QRoot(int m, int k) : order(m), exponent(((k % m) + m) % m) {
        if (m <= 0) throw std::runtime_error("QRoot: order must be positive");
    }

    bool is_primitive() const { return std::gcd(exponent, order) == 1; }
    QRoot inverse() const { return QRoot(order, -exponent); }
    // this^p
    QRoot power(long long p) const {
        return QRoot(order, static_cast<int>(((p % order) * exponent) % order));
    }
    // multiplicative order of the root itself
    int root_order() const { return order / std::gcd(order, exponent); }

    std::complex<double> approx() const {
        const double t = 2.0 * 3.14159265358979323846 * exponent / order;
        return {std::cos(t), std::sin(t)};
    }

    friend bool operator==(const QRoot& a, const QRoot& b) {
        // equal as complex numbers
        long long lcm = std::lcm<long long>(a.order, b.order);
        return (lcm / a.order) * a.exponent % lcm == (lcm / b.order) * b.exponent % lcm;
    }
};

namespace detail {

// dense polynomial over Q, index = degree
using DenseQ = std::vector<Rational>;

inline void dense_trim(DenseQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// remainder of p modulo monic divisor d
inline DenseQ dense_mod(DenseQ p, const DenseQ& d) {
    dense_trim(p);
    const int dd = static_cast<int>(d.size()) - 1;
    while (static_cast<int>(p.size()) - 1 >= dd) {
        Rational c = p.back() / d.back();
        int shift = static_cast<int>(p.size()) - 1 - dd;
        for (int i = 0; i <= dd; ++i) p[shift + i] -= c * d[i];
        dense_trim(p);
    }
    return p;
}

inline std::pair<DenseQ, DenseQ> dense_divmod(DenseQ p, const DenseQ& d) {
    dense_trim(p);
    const int dd = static_cast<int>(d.size()) - 1;
    DenseQ q(p.size() > d.size() ? p.size() - d.size() + 1 : 1, Rational(0));
    while (static_cast<int>(p.size()) - 1 >= dd && !p.empty()) {
        Rational c = p.back() / d.back();
        int shift = static_cast<int>(p.size()) - 1 - dd;
        q[shift] = c;
        for (int i = 0; i <= dd; ++i) p[shift + i] -= c * d[i];
        dense_trim(p);
    }
    dense_trim(q);
    return {q, p};
}

// cyclotomic polynomial Phi_M, computed by dividing x^M - 1 by the proper
// cyclotomic factors; memoized
inline const DenseQ& cyclotomic_polynomial(int m) {
    static std::map<int, DenseQ> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    DenseQ p(m + 1, Rational(0));
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = dense_divmod(p, cyclotomic_polynomial(d));
        if (!r.empty()) throw std::logic_error("cyclotomic factor division not exact");
        p = q;
    }
    return cache.emplace(m, std::move(p)).first->second;
}

// extended gcd in Q[x]: returns (g, s) with s*a = g mod b, g monic gcd(a, b)
inline std::pair<DenseQ, DenseQ> dense_half_ext_gcd(DenseQ a, DenseQ b) {
    DenseQ s0 = {Rational(1)}, s1 = {};
    dense_trim(a);
    dense_trim(b);
    while (!b.empty()) {
        auto [q, r] = dense_divmod(a, b);
        // s0 - q*s1
        DenseQ t(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) t[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) t[i + j] -= q[i] * s1[j];
        dense_trim(t);
        a = b;
        b = r;
        s0 = s1;
        s1 = t;
    }
    if (a.empty()) throw std::runtime_error("ext_gcd of zero polynomials");
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : s0) c /= lead;
    return {a, s0};
}

}  // namespace detail

class CycloNum {
  public:
    CycloNum() : order_(1), coeffs_(1, Rational(0)) {}
    explicit CycloNum(const Rational& c) : order_(1), coeffs_(1, c) {}
    explicit CycloNum(int order) : order_(order), coeffs_(order, Rational(0)) {}
    CycloNum(int order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != order_)
            throw std::runtime_error("CycloNum: coefficient vector length != order");
    }

    static CycloNum zero(int order = 1) { return CycloNum(order); }
    static CycloNum one(int order = 1) {
        CycloNum r(order);
        r.coeffs_[0] = 1;
        return r;
    }
    // zeta_order^k
    static CycloNum root_power(int order, int k) {
        CycloNum r(order);
        r.coeffs_[((k % order) + order) % order] = 1;
        return r;
    }
    static CycloNum from_root(const QRoot& a) { return root_power(a.order, a.exponent); }

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // re-express in a multiple of the current order
    CycloNum promoted(int new_order) const {
        if (new_order == order_) return *this;
        if (new_order % order_ != 0)
            throw std::runtime_error("CycloNum: promotion order must be a multiple");
        int t = new_order / order_;
        CycloNum r(new_order);
        for (int j = 0; j < order_; ++j) r.coeffs_[j * t] = coeffs_[j];
        return r;
    }

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b) {
        auto [x, y] = align(a, b);
        for (int j = 0; j < x.order_; ++j) x.coeffs_[j] += y.coeffs_[j];
        return x;
    }
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b) {
        auto [x, y] = align(a, b);
        for (int j = 0; j < x.order_; ++j) x.coeffs_[j] -= y.coeffs_[j];
        return x;
    }
    friend CycloNum operator-(const CycloNum& a) {
        CycloNum r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        auto [x, y] = align(a, b);
        CycloNum r(x.order_);
        for (int i = 0; i < x.order_; ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (int j = 0; j < y.order_; ++j) {
                if (y.coeffs_[j] == 0) continue;
                int k = i + j;
                if (k >= x.order_) k -= x.order_;
                r.coeffs_[k] += x.coeffs_[i] * y.coeffs_[j];
            }
        }
        return r;
    }
    friend CycloNum operator*(const Rational& c, const CycloNum& a) {
        CycloNum r = a;
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }
    CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
    CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

    bool is_zero() const {
        for (const auto& c : reduced())
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const {
        auto red = reduced();
        for (size_t i = 1; i < red.size(); ++i)
            if (red[i] != 0) return false;
        return true;
    }
    // valid only if is_rational()
    Rational rational_value() const {
        auto red = reduced();
        for (size_t i = 1; i < red.size(); ++i)
            if (red[i] != 0) throw std::runtime_error("CycloNum: not rational");
        return red.empty() ? Rational(0) : red[0];
    }

    friend bool operator==(const CycloNum& a, const CycloNum& b) { return (a - b).is_zero(); }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    // complex conjugation: zeta -> zeta^-1
    CycloNum conj() const {
        CycloNum r(order_);
        for (int j = 0; j < order_; ++j) r.coeffs_[(order_ - j) % order_] = coeffs_[j];
        return r;
    }

    CycloNum inverse() const {
        // invert the reduced representative modulo Phi_M
        detail::DenseQ p = reduced();
        detail::dense_trim(p);
        if (p.empty()) throw std::runtime_error("CycloNum: division by zero");
        const auto& phi = detail::cyclotomic_polynomial(order_);
        auto [g, s] = detail::dense_half_ext_gcd(p, phi);
        if (g.size() != 1)
            throw std::logic_error("CycloNum: nonunit gcd with cyclotomic polynomial");
        CycloNum r(order_);
        for (size_t i = 0; i < s.size() && i < static_cast<size_t>(order_); ++i)
            r.coeffs_[i] = s[i] / g[0];
        return r;
    }
    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) {
        auto [x, y] = align(a, b);
        return x * y.inverse();
    }
    CycloNum& operator/=(const CycloNum& o) { return *this = *this / o; }

    std::complex<double> approx() const {
        std::complex<double> r{0.0, 0.0};
        for (int j = 0; j < order_; ++j) {
            if (coeffs_[j] == 0) continue;
            const double t = 2.0 * 3.14159265358979323846 * j / order_;
            r += static_cast<double>(coeffs_[j]) * std::complex<double>{std::cos(t), std::sin(t)};
        }
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        bool first = true;
        for (int j = 0; j < order_; ++j) {
            if (coeffs_[j] == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << coeffs_[j].str();
            if (j > 0) os << "*z^" << j;
        }
        if (first) os << "0";
        os << "] (z = zeta_" << order_ << ")";
        return os.str();
    }

  private:
    // coefficients reduced modulo Phi_M (degree < phi(M))
    detail::DenseQ reduced() const {
        detail::DenseQ p = coeffs_;
        return detail::dense_mod(std::move(p), detail::cyclotomic_polynomial(order_));
    }

    static std::pair<CycloNum, CycloNum> align(const CycloNum& a, const CycloNum& b) {
        if (a.order_ == b.order_) return {a, b};
        int l = std::lcm(a.order_, b.order_);
        return {a.promoted(l), b.promoted(l)};
    }

    int order_;
    std::vector<Rational> coeffs_;
};

// Evaluation of exact A-polynomials at a root of unity.
inline CycloNum cyclo_eval(const LaurentPoly& p, const QRoot& a) {
    CycloNum r(a.order);
    for (const auto& [e, c] : p.coeffs()) {
        int k = static_cast<int>(((static_cast<long long>(e) * a.exponent) % a.order + a.order) %
                                 a.order);
        r += c * CycloNum::root_power(a.order, k);
    }
    return r;
}

inline CycloNum cyclo_eval(const RatFunc& f, const QRoot& a) {
    CycloNum den = cyclo_eval(f.den(), a);
    if (den.is_zero())
        throw DenominatorVanishes("RatFunc denominator vanishes at root of unity");
    return cyclo_eval(f.num(), a) * den.inverse();
}

}  // namespace skeinlab
