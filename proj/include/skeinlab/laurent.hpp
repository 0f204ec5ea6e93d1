#pragma once

// Laurent polynomials in the formal variable A with exact rational coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "skeinlab/errors.hpp"

namespace skeinlab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class LaurentPoly {
  public:
    // exponent of A -> coefficient; zero coefficients are never stored
    using CoeffMap = std::map<int, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (c != 0) coeffs_[0] = c;
    }
    LaurentPoly(int exponent, const Rational& c) {
        if (c != 0) coeffs_[exponent] = c;
    }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Rational(1)); }
    // A^e
    static LaurentPoly monomial(int e, const Rational& c = Rational(1)) {
        return LaurentPoly(e, c);
    }

    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(int e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    int min_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    int max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& a) {
        return LaurentPoly(0, c) * a;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ < b.coeffs_;
    }

    // substitute A -> A^-1
    LaurentPoly bar() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }

    // substitute A -> A^k (k != 0)
    LaurentPoly substitute_power(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e * k] = c;
        return r;
    }

    // Exact division; throws if the remainder is nonzero.
    friend LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b) {
        auto [q, rem] = div_mod(a, b);
        if (!rem.is_zero()) throw std::runtime_error("LaurentPoly: inexact division");
        return q;
    }

    // Division with remainder. A is a unit, so both arguments are first
    // shifted to ordinary polynomials; the quotient picks the shift back up.
    static std::pair<LaurentPoly, LaurentPoly> div_mod(const LaurentPoly& a0,
                                                       const LaurentPoly& b0) {
        if (b0.is_zero()) throw std::runtime_error("LaurentPoly: division by zero");
        if (a0.is_zero()) return {LaurentPoly(), LaurentPoly()};
        const int sa = a0.min_degree(), sb = b0.min_degree();
        LaurentPoly a = monomial(-sa) * a0;
        LaurentPoly b = monomial(-sb) * b0;
        const int db = b.max_degree();
        const Rational lb = b.coeffs_.rbegin()->second;
        LaurentPoly q;
        while (!a.is_zero() && a.max_degree() >= db) {
            int e = a.max_degree() - db;
            Rational c = a.coeffs_.rbegin()->second / lb;
            LaurentPoly t = monomial(e, c);
            q += t;
            a -= t * b;
        }
        return {monomial(sa - sb) * q, monomial(sa) * a};
    }

    // exact evaluation at a nonzero rational value of A
    Rational eval_rational(const Rational& x) const {
        if (x == 0) throw std::runtime_error("eval_rational: A must be nonzero");
        Rational r = 0;
        for (const auto& [e, c] : coeffs_) {
            Rational p = 1;
            for (int i = 0; i < std::abs(e); ++i) p *= x;
            if (e >= 0) r += c * p;
            else r += c / p;
        }
        return r;
    }

    std::complex<double> eval(std::complex<double> x) const {
        std::complex<double> r{0.0, 0.0};
        for (const auto& [e, c] : coeffs_) r += static_cast<double>(c) * std::pow(x, e);
        return r;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Rational ac = abs(c);
            if (ac != 1 || e == 0) os << ac.str();
            if (e != 0) {
                if (ac != 1) os << "*";
                os << "A";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

  private:
    void add_term(int e, const Rational& c) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    CoeffMap coeffs_;
};

// gcd of two Laurent polynomials up to units, via the Euclidean algorithm on
// the underlying ordinary polynomials; result is normalized monic.
inline LaurentPoly laurent_gcd(LaurentPoly a, LaurentPoly b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // kill units
    a = LaurentPoly::monomial(-a.min_degree()) * a;
    b = LaurentPoly::monomial(-b.min_degree()) * b;
    while (!b.is_zero()) {
        auto [q, r] = LaurentPoly::div_mod(a, b);
        (void)q;
        a = b;
        // shift out units and renormalize to monic to keep coefficients small
        if (!r.is_zero()) {
            r = LaurentPoly::monomial(-r.min_degree()) * r;
            r = LaurentPoly(0, Rational(1) / r.coeffs().rbegin()->second) * r;
        }
        b = r;
    }
    // monic normalization
    Rational lead = a.coeffs().rbegin()->second;
    return LaurentPoly(0, Rational(1) / lead) * a;
}

}  // namespace skeinlab
