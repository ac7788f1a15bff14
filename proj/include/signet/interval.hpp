#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <cstdlib>
#include <string>
#include <utility>

#include "rational.hpp"

namespace signet {

// Closed rational interval [lo, hi] with exact endpoints.
struct RInterval {
    Rational lo, hi;
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    // +1 or -1 when the sign is certified, 0 otherwise.
    int certified_sign() const {
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        return 0;
    }
    Rational width() const { return hi - lo; }
};

inline RInterval operator+(const RInterval& a, const RInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline RInterval scale(const RInterval& a, const Rational& c) {
    if (c.sign() >= 0) return {a.lo * c, a.hi * c};
    return {a.hi * c, a.lo * c};
}

inline RInterval operator*(const RInterval& a, const RInterval& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Rational lo = p[0], hi = p[0];
    for (auto& x : p) {
        if (x < lo) lo = x;
        if (x > hi) hi = x;
    }
    return {lo, hi};
}

namespace detail {

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }
    Rational to_rational() const {
        mpq_t q;
        mpq_init(q);
        mpfr_get_q(q, v_);
        Rational r{mpq_class(q)};
        mpq_clear(q);
        return r;
    }

private:
    mpfr_t v_;
};

}  // namespace detail

// Starting precision in bits; SIGNET_PRECISION_START overrides the default 64.
inline long precision_start() {
    if (const char* e = std::getenv("SIGNET_PRECISION_START")) {
        long v = std::strtol(e, nullptr, 10);
        if (v >= 8 && v <= 1 << 20) return v;
    }
    return 64;
}

// Enclosure of 2*pi*k/q for 0 <= k < q.
inline std::pair<Rational, Rational> two_pi_fraction(unsigned long k, unsigned long q, long prec) {
    detail::Mpfr lo(prec), hi(prec);
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    Rational f(Integer(2 * k), Integer(q));
    return {lo.to_rational() * f, hi.to_rational() * f};
}

// Certified enclosure of cos(2*pi*k/q).
inline RInterval cos_two_pi(long k, unsigned long q, long prec) {
    long kk = k % static_cast<long>(q);
    if (kk < 0) kk += static_cast<long>(q);
    unsigned long ku = static_cast<unsigned long>(kk);
    if (ku == 0) return {Rational(1), Rational(1)};
    if (2 * ku == q) return {Rational(-1), Rational(-1)};
    if (4 * ku == q || 4 * ku == 3 * q) return {Rational(0), Rational(0)};
    auto [xlo, xhi] = two_pi_fraction(ku, q, prec);
    detail::Mpfr x(prec), c(prec);
    // mpfr_set_q needs mpq; xlo is dyadic times a rational, so round outward.
    mpfr_set_q(x.get(), xlo.value().get_mpq_t(), MPFR_RNDD);
    Rational xl = x.to_rational();
    mpfr_set_q(x.get(), xhi.value().get_mpq_t(), MPFR_RNDU);
    Rational xh = x.to_rational();
    mpfr_set_q(x.get(), xl.value().get_mpq_t(), MPFR_RNDN);
    mpfr_cos(c.get(), x.get(), MPFR_RNDD);
    Rational clo = c.to_rational();
    mpfr_cos(c.get(), x.get(), MPFR_RNDU);
    Rational chi = c.to_rational();
    // |cos x - cos xl| <= |x - xl| <= xh - xl.
    Rational w = xh - xl;
    Rational lo = clo - w, hi = chi + w;
    if (lo < Rational(-1)) lo = Rational(-1);
    if (hi > Rational(1)) hi = Rational(1);
    return {lo, hi};
}

inline RInterval sin_two_pi(long k, unsigned long q, long prec) {
    // sin(2 pi k / q) = cos(2 pi (q - 4k) / (4q)).
    return cos_two_pi(static_cast<long>(q) - 4 * k, 4 * q, prec);
}

// Certified enclosure of cot(pi*k/c) for 0 < k < c.
inline RInterval cot_pi(long k, unsigned long c, long prec) {
    RInterval co = cos_two_pi(k, 2 * c, prec);
    RInterval si = sin_two_pi(k, 2 * c, prec);
    require(si.certified_sign() != 0, "precision", "sine enclosure contains zero");
    Rational q[4] = {co.lo / si.lo, co.lo / si.hi, co.hi / si.lo, co.hi / si.hi};
    Rational lo = q[0], hi = q[0];
    for (auto& x : q) {
        if (x < lo) lo = x;
        if (x > hi) hi = x;
    }
    return {lo, hi};
}

}  // namespace signet
