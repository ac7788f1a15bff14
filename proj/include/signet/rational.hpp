#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include "error.hpp"

namespace signet {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(int v) : v_(v) {}
    Rational(const Integer& n) : v_(n) {}
    template <class U>
    Rational(const __gmp_expr<mpz_t, U>& e) : v_(Integer(e)) {}
    Rational(const Integer& n, const Integer& d) {
        require(d != 0, "zero_denominator", "rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p", "p/q" and optional surrounding whitespace.
    static Rational parse(const std::string& s) {
        std::string t;
        for (char c : s)
            if (c != ' ' && c != '\t' && c != '\n') t.push_back(c);
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        auto slash = t.find('/');
        auto valid_int = [](const std::string& x) {
            if (x.empty()) return false;
            size_t i = (x[0] == '-') ? 1 : 0;
            if (i == x.size()) return false;
            for (; i < x.size(); ++i)
                if (x[i] < '0' || x[i] > '9') return false;
            return true;
        };
        if (slash == std::string::npos) {
            require(valid_int(t), "bad_rational", "malformed rational '" + s + "'");
            return Rational(Integer(t));
        }
        std::string n = t.substr(0, slash), d = t.substr(slash + 1);
        require(valid_int(n) && valid_int(d), "bad_rational", "malformed rational '" + s + "'");
        return Rational(Integer(n), Integer(d));
    }

    const mpq_class& value() const { return v_; }
    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        require(!o.is_zero(), "division_by_zero", "rational division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline Rational conj(const Rational& r) { return r; }
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline int sign(const Rational& r) { return r.sign(); }

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer floor(const Rational& r) { return floor_div(r.num(), r.den()); }

inline Integer ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Rational pow(Rational base, unsigned e) {
    Rational r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace signet

template <>
struct std::hash<signet::Rational> {
    size_t operator()(const signet::Rational& r) const {
        return std::hash<std::string>()(r.str());
    }
};
