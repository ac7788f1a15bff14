#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace signet {

// Dense univariate polynomial over Q, constant term first.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    Poly(long c) : Poly(Rational(c)) {}
    Poly(int c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly X() { return Poly({Rational(0), Rational(1)}); }
    static Poly monomial(const Rational& c, size_t k) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational operator[](size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational constant() const { return (*this)[0]; }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    // Lowest index with a nonzero coefficient; -1 for zero.
    int valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    Poly derivative() const {
        std::vector<Rational> d;
        for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
        return Poly(std::move(d));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        Rational l = lead();
        std::vector<Rational> v(c_);
        for (auto& x : v) x /= l;
        return Poly(std::move(v));
    }

    // P(Q(X)).
    Poly compose(const Poly& q) const {
        Poly r;
        for (size_t i = c_.size(); i-- > 0;) r = r * q + Poly(c_[i]);
        return r;
    }

    // X^deg P(1/X).
    Poly reversed() const {
        std::vector<Rational> v(c_.rbegin(), c_.rend());
        return Poly(std::move(v));
    }

    Poly shift_down(size_t k) const {
        if (k >= c_.size()) return Poly();
        return Poly(std::vector<Rational>(c_.begin() + k, c_.end()));
    }

    Poly operator-() const {
        std::vector<Rational> v(c_);
        for (auto& x : v) x = -x;
        return Poly(std::move(v));
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "X") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            const Rational& c = c_[i];
            if (c.is_zero()) continue;
            bool neg = c.sign() < 0;
            Rational a = neg ? -c : c;
            if (s.empty()) s += neg ? "-" : "";
            else s += neg ? " - " : " + ";
            bool unit = (a == Rational(1));
            if (i == 0 || !unit) s += a.str();
            if (i > 0) {
                if (!unit) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline Poly conj(const Poly& p) { return p; }

inline std::pair<Poly, Poly> poly_divmod(const Poly& p, const Poly& q) {
    require(!q.is_zero(), "division_by_zero", "polynomial division by zero");
    std::vector<Rational> r(p.coeffs());
    int dq = q.degree();
    if (p.degree() < dq) return {Poly(), p};
    std::vector<Rational> quot(p.degree() - dq + 1);
    Rational lq = q.lead();
    const auto& qc = q.coeffs();
    for (int k = p.degree(); k >= dq; --k) {
        if (r[k].is_zero()) continue;
        Rational f = r[k] / lq;
        quot[k - dq] = f;
        for (int j = 0; j <= dq; ++j) r[k - dq + j] -= f * qc[j];
    }
    r.resize(dq);
    return {Poly(std::move(quot)), Poly(std::move(r))};
}

inline Poly operator/(const Poly& p, const Poly& q) { return poly_divmod(p, q).first; }
inline Poly operator%(const Poly& p, const Poly& q) { return poly_divmod(p, q).second; }

// Division known to be exact; fails loudly otherwise.
inline Poly exact_div(const Poly& p, const Poly& q) {
    auto [d, r] = poly_divmod(p, q);
    require(r.is_zero(), "inexact_division", "polynomial division is not exact");
    return d;
}

inline Poly poly_gcd(Poly a, Poly b) {
    require(!(a.is_zero() && b.is_zero()), "zero_gcd", "gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

inline Poly squarefree_part(const Poly& p) {
    require(!p.is_zero(), "zero_polynomial", "squarefree part of zero");
    if (p.degree() == 0) return Poly(Rational(1));
    return exact_div(p, poly_gcd(p, p.derivative())).monic();
}

// Squarefree decomposition: returns (f_i, i) with P = c * prod f_i^i.
inline std::vector<std::pair<Poly, int>> squarefree_factorization(const Poly& p) {
    require(!p.is_zero(), "zero_polynomial", "squarefree factorization of zero");
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() <= 0) return out;
    Poly a = p.monic();
    Poly b = a.derivative();
    Poly c = poly_gcd(a, b);
    Poly w = exact_div(a, c);
    int i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, c);
        Poly z = exact_div(w, y);
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        ++i;
        w = y;
        c = exact_div(c, y);
    }
    return out;
}

inline Poly pow(Poly base, unsigned e) {
    Poly r(Rational(1));
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Positive rational multiple with coprime integer coefficients.
inline std::vector<Integer> primitive_integer(const Poly& p) {
    Integer l(1), g(0);
    for (const auto& c : p.coeffs()) l = lcm(l, c.den());
    std::vector<Integer> v;
    for (const auto& c : p.coeffs()) {
        Integer x = c.num() * (l / c.den());
        g = gcd(g, x);
        v.push_back(x);
    }
    if (g != 0 && g != 1)
        for (auto& x : v) x /= g;
    return v;
}

inline Poly from_integers(const std::vector<Integer>& v) {
    std::vector<Rational> c;
    for (const auto& x : v) c.emplace_back(x);
    return Poly(std::move(c));
}

inline int moebius(unsigned long n) {
    int m = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    return n > 1 ? -m : m;
}

// Phi_q = prod_{d | q} (X^d - 1)^{mu(q/d)}.
inline Poly cyclotomic_polynomial(unsigned long q) {
    require(q >= 1, "bad_conductor", "cyclotomic polynomial needs q >= 1");
    Poly num(Rational(1)), den(Rational(1));
    for (unsigned long d = 1; d <= q; ++d) {
        if (q % d) continue;
        int m = moebius(q / d);
        if (m == 0) continue;
        Poly f = Poly::monomial(Rational(1), d) - Poly(Rational(1));
        (m > 0 ? num : den) *= f;
    }
    return exact_div(num, den);
}

}  // namespace signet
