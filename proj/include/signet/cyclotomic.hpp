#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "interval.hpp"
#include "poly.hpp"

namespace signet {

namespace detail {

inline std::shared_ptr<const Poly> cyclotomic_cached(unsigned long q) {
    static std::mutex m;
    static std::map<unsigned long, std::shared_ptr<const Poly>> cache;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(q);
        if (it != cache.end()) return it->second;
    }
    auto p = std::make_shared<const Poly>(cyclotomic_polynomial(q));
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(q, p).first->second;
}

// p(X^e) without reduction.
inline Poly substitute_power(const Poly& p, unsigned long e) {
    if (p.is_zero()) return p;
    std::vector<Rational> v(static_cast<size_t>(p.degree()) * e + 1);
    for (size_t i = 0; i < p.coeffs().size(); ++i) v[i * e] = p.coeffs()[i];
    return Poly(std::move(v));
}

}  // namespace detail

// Element of Q(zeta_q), zeta_q = exp(2 pi i / q), as a residue mod Phi_q.
class CycNumber {
public:
    CycNumber() : q_(1) {}
    CycNumber(const Rational& c) : q_(1), rep_(c) {}
    CycNumber(long c) : CycNumber(Rational(c)) {}
    CycNumber(int c) : CycNumber(Rational(c)) {}
    CycNumber(unsigned long q, const Poly& rep) : q_(q) {
        require(q >= 1, "bad_conductor", "conductor must be positive");
        rep_ = rep % modulus();
    }

    // zeta_q^k.
    static CycNumber zeta(unsigned long q, long k = 1) {
        long kk = k % static_cast<long>(q);
        if (kk < 0) kk += static_cast<long>(q);
        return CycNumber(q, Poly::monomial(Rational(1), static_cast<size_t>(kk)));
    }

    unsigned long conductor() const { return q_; }
    const Poly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    const Poly& modulus() const { return *detail::cyclotomic_cached(q_); }

    bool is_rational() const { return rep_.degree() <= 0; }
    Rational rational_value() const {
        require(is_rational(), "not_rational", "cyclotomic number is not rational");
        return rep_.constant();
    }

    // Image in Q(zeta_L) for q | L.
    CycNumber embed(unsigned long L) const {
        require(L % q_ == 0, "bad_conductor", "embedding needs q | L");
        if (L == q_) return *this;
        return CycNumber(L, detail::substitute_power(rep_, L / q_));
    }

    CycNumber conj() const {
        if (q_ <= 2 || rep_.degree() <= 0) return *this;
        return CycNumber(q_, detail::substitute_power(rep_, q_ - 1));
    }

    CycNumber inverse() const {
        require(!is_zero(), "division_by_zero", "inverse of zero cyclotomic number");
        // Extended Euclid: s*rep + t*Phi = 1.
        Poly r0 = modulus(), r1 = rep_;
        Poly s0, s1(Rational(1));
        while (!r1.is_zero()) {
            auto [quo, rem] = poly_divmod(r0, r1);
            Poly s2 = s0 - quo * s1;
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        require(r0.degree() == 0, "not_invertible", "cyclotomic element not invertible");
        return CycNumber(q_, s0 * Poly(Rational(1) / r0.constant()));
    }

    CycNumber operator-() const { return CycNumber(q_, -rep_, raw_tag{}); }
    friend CycNumber operator+(const CycNumber& a, const CycNumber& b) {
        if (a.q_ == b.q_) return CycNumber(a.q_, a.rep_ + b.rep_, raw_tag{});
        unsigned long L = std::lcm(a.q_, b.q_);
        CycNumber x = a.embed(L), y = b.embed(L);
        return CycNumber(L, x.rep_ + y.rep_, raw_tag{});
    }
    friend CycNumber operator-(const CycNumber& a, const CycNumber& b) { return a + (-b); }
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
        if (a.is_zero() || b.is_zero()) return CycNumber();
        if (a.is_rational() && a.q_ != b.q_) return CycNumber(b.q_, b.rep_ * a.rep_, raw_tag{});
        if (b.is_rational() && a.q_ != b.q_) return CycNumber(a.q_, a.rep_ * b.rep_, raw_tag{});
        unsigned long L = std::lcm(a.q_, b.q_);
        CycNumber x = a.embed(L), y = b.embed(L);
        return CycNumber(L, x.rep_ * y.rep_);
    }
    friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }
    CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
    CycNumber& operator-=(const CycNumber& o) { return *this = *this - o; }
    CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }
    CycNumber& operator/=(const CycNumber& o) { return *this = *this / o; }

    friend bool operator==(const CycNumber& a, const CycNumber& b) {
        if (a.q_ == b.q_) return a.rep_ == b.rep_;
        unsigned long L = std::lcm(a.q_, b.q_);
        return a.embed(L).rep_ == b.embed(L).rep_;
    }

    // Enclosure of the real part at the given precision.
    RInterval real_enclosure(long prec) const {
        RInterval acc{Rational(0), Rational(0)};
        const auto& c = rep_.coeffs();
        for (size_t k = 0; k < c.size(); ++k) {
            if (c[k].is_zero()) continue;
            acc = acc + scale(cos_two_pi(static_cast<long>(k), q_, prec), c[k]);
        }
        return acc;
    }

    std::string str() const { return "[q=" + std::to_string(q_) + "] " + rep_.str("z"); }

private:
    struct raw_tag {};
    // Sum or negation keeps the degree below deg Phi_q.
    CycNumber(unsigned long q, Poly rep, raw_tag) : q_(q), rep_(std::move(rep)) {}
    unsigned long q_;
    Poly rep_;
};

inline bool is_zero(const CycNumber& x) { return x.is_zero(); }
inline CycNumber conj(const CycNumber& x) { return x.conj(); }

// Exact sign of a conjugation-fixed cyclotomic number.
inline int cyc_sign(const CycNumber& x) {
    require(x.conj() == x, "not_real", "cyc_sign needs a conjugation-fixed element");
    if (x.is_zero()) return 0;
    if (x.is_rational()) return x.rational_value().sign();
    for (long prec = precision_start();; prec *= 2) {
        int s = x.real_enclosure(prec).certified_sign();
        if (s != 0) return s;
    }
}

inline int sign(const CycNumber& x) { return cyc_sign(x); }

}  // namespace signet
