#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "rational.hpp"

namespace signet {

inline bool is_probable_prime(const Integer& n) {
    return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace detail {

// Pollard rho with Floyd cycle detection; n composite and odd.
inline Integer pollard_rho(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer x(2), y(2), d(1);
        auto f = [&](const Integer& v) {
            Integer r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            Integer diff = abs(x - y);
            d = gcd(diff, n);
        }
        if (d != n) return d;
    }
}

inline void factor_into(Integer n, std::map<Integer, int>& out) {
    if (n <= 1) return;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Integer(p)];
            n /= p;
        }
    }
    for (unsigned long p = 17; p < 10000 && n > 1; p += 2) {
        if (Integer(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Integer(p)];
            n /= p;
        }
    }
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

// Prime factorization of |n| for n != 0.
inline std::map<Integer, int> factor_integer(const Integer& n) {
    require(n != 0, "zero_factor", "cannot factor zero");
    std::map<Integer, int> out;
    detail::factor_into(abs(n), out);
    return out;
}

// Signed squarefree integer s with r = s * (rational square).
inline Integer squarefree_class(const Rational& r) {
    require(!r.is_zero(), "zero_entry", "square class of zero");
    Integer n = r.num() * r.den();
    Integer s(r.sign());
    for (const auto& [p, e] : factor_integer(n))
        if (e % 2) s *= p;
    return s;
}

inline int legendre(const Integer& a, const Integer& p) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

inline Integer mod_inverse(const Integer& a, const Integer& m) {
    Integer r;
    require(mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) != 0, "not_invertible",
            "element not invertible modulo m");
    return r;
}

inline Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Residue of a rational with denominator prime to p.
inline Integer rational_mod(const Rational& r, const Integer& p) {
    return mod(Integer(r.num() * mod_inverse(r.den(), p)), p);
}

// Positive divisors of |n|.
inline std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> d{Integer(1)};
    for (const auto& [p, e] : factor_integer(n)) {
        size_t m = d.size();
        Integer pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < m; ++i) d.push_back(d[i] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

inline bool is_rational_square(const Rational& r) {
    if (r.sign() < 0) return false;
    if (r.is_zero()) return true;
    return mpz_perfect_square_p(r.num().get_mpz_t()) && mpz_perfect_square_p(r.den().get_mpz_t());
}

inline Rational rational_sqrt(const Rational& r) {
    require(is_rational_square(r), "not_square", "rational is not a square");
    Integer a, b;
    mpz_sqrt(a.get_mpz_t(), r.num().get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), r.den().get_mpz_t());
    return Rational(a, b);
}

}  // namespace signet
