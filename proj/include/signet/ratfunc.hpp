#pragma once

#include <string>

#include "poly.hpp"

namespace signet {

// Element of Q(X) in lowest terms with monic denominator.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFunc(long c) : RatFunc(Rational(c)) {}
    RatFunc(int c) : RatFunc(Rational(c)) {}
    RatFunc(const Poly& p) : num_(p), den_(Rational(1)) {}
    RatFunc(const Poly& n, const Poly& d) {
        require(!d.is_zero(), "division_by_zero", "rational function with zero denominator");
        if (n.is_zero()) {
            den_ = Poly(Rational(1));
            return;
        }
        Poly g = poly_gcd(n, d);
        Poly nn = exact_div(n, g), dd = exact_div(d, g);
        Rational l = dd.lead();
        num_ = nn * Poly(Rational(1) / l);
        den_ = dd.monic();
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    bool defined_at(const Rational& x) const { return !den_.eval(x).is_zero(); }
    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        require(!d.is_zero(), "pole", "rational function evaluated at a pole");
        return num_.eval(x) / d;
    }

    RatFunc operator-() const { return RatFunc(-num_, den_, raw_tag{}); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        require(!b.is_zero(), "division_by_zero", "rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    struct raw_tag {};
    RatFunc(Poly n, Poly d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
    Poly num_;
    Poly den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }
inline RatFunc conj(const RatFunc& r) { return r; }

}  // namespace signet
