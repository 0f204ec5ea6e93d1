#pragma once

// Field of fractions of the Laurent polynomial ring in A.
// Canonical form: denominator is an ordinary monic polynomial with nonzero
// constant term, gcd(num, den) a unit, so equality is plain comparison.

#include <complex>
#include <string>
#include <utility>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

class RatFunc {
  public:
    RatFunc() : num_(), den_(LaurentPoly::one()) {}
    RatFunc(const LaurentPoly& n) : num_(n), den_(LaurentPoly::one()) {}  // NOLINT(implicit)
    RatFunc(const Rational& c) : num_(c), den_(LaurentPoly::one()) {}     // NOLINT(implicit)
    RatFunc(int c) : num_(Rational(c)), den_(LaurentPoly::one()) {}       // NOLINT(implicit)
    RatFunc(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::runtime_error("RatFunc: zero denominator");
        reduce();
    }

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }
    // A^e
    static RatFunc monomial(int e, const Rational& c = Rational(1)) {
        return RatFunc(LaurentPoly::monomial(e, c));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == LaurentPoly::one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::runtime_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // A -> A^-1
    RatFunc bar() const { return RatFunc(num_.bar(), den_.bar()); }

    std::complex<double> eval(std::complex<double> x) const {
        return num_.eval(x) / den_.eval(x);
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

  private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = LaurentPoly::one();
            return;
        }
        // unit denominators need no gcd
        if (den_.coeffs().size() > 1) {
            LaurentPoly g = laurent_gcd(num_, den_);
            if (g.coeffs().size() > 1) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        }
        // push units into the numerator: den monic with A^0 as lowest term
        Rational lead = den_.coeffs().rbegin()->second;
        int shift = den_.min_degree();
        LaurentPoly unit = LaurentPoly::monomial(-shift, Rational(1) / lead);
        num_ = unit * num_;
        den_ = unit * den_;
    }

    LaurentPoly num_, den_;
};

}  // namespace skeinlab
