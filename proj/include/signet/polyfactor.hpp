#pragma once

#include <algorithm>
#include <vector>

#include "arith.hpp"
#include "sturm.hpp"

namespace signet {

namespace detail {

inline std::vector<Poly> lagrange_basis(const std::vector<Integer>& xs) {
    std::vector<Poly> out;
    for (size_t i = 0; i < xs.size(); ++i) {
        Poly basis(Rational(1));
        Rational denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis *= Poly({Rational(-xs[j]), Rational(1)});
            denom *= Rational(xs[i] - xs[j]);
        }
        out.push_back(basis * Poly(Rational(1) / denom));
    }
    return out;
}

inline bool integral(const Poly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_integer()) return false;
    return true;
}

inline bool divisible(const Integer& a, const Integer& b) {
    if (b == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

using ModPoly = std::vector<long long>;

inline void mp_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long long mp_inv(long long a, long long p) {
    long long r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

inline ModPoly mp_rem(ModPoly a, const ModPoly& m, long long p) {
    long long li = mp_inv(m.back(), p);
    while (a.size() >= m.size()) {
        long long c = a.back() * li % p;
        size_t sh = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) a[sh + i] = ((a[sh + i] - c * m[i]) % p + p) % p;
        mp_trim(a);
    }
    return a;
}

inline ModPoly mp_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, long long p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    mp_trim(r);
    return mp_rem(r, m, p);
}

inline ModPoly mp_gcd(ModPoly a, ModPoly b, long long p) {
    while (!b.empty()) {
        a = mp_rem(a, b, p);
        std::swap(a, b);
    }
    return a;
}

inline ModPoly mp_div(ModPoly a, const ModPoly& m, long long p) {
    long long li = mp_inv(m.back(), p);
    ModPoly q(a.size() >= m.size() ? a.size() - m.size() + 1 : 0, 0);
    while (a.size() >= m.size()) {
        long long c = a.back() * li % p;
        size_t sh = a.size() - m.size();
        q[sh] = c;
        for (size_t i = 0; i < m.size(); ++i) a[sh + i] = ((a[sh + i] - c * m[i]) % p + p) % p;
        mp_trim(a);
    }
    return q;
}

// Degrees of the irreducible factors of f mod p, or empty if f is not squarefree mod p.
inline std::vector<int> ddf_degrees(const std::vector<Integer>& f, long long p) {
    ModPoly g;
    for (const auto& c : f) g.push_back(mod(c, Integer(static_cast<long>(p))).get_si());
    mp_trim(g);
    if (static_cast<int>(g.size()) != static_cast<int>(f.size())) return {};
    ModPoly dg;
    for (size_t i = 1; i < g.size(); ++i) dg.push_back(g[i] * static_cast<long long>(i) % p);
    mp_trim(dg);
    if (dg.empty() || mp_gcd(g, dg, p).size() != 1) return {};
    std::vector<int> out;
    ModPoly h{0, 1};
    for (int i = 1; 2 * i <= static_cast<int>(g.size()) - 1; ++i) {
        ModPoly r{1}, b = h;
        for (long long e = p; e; e >>= 1) {
            if (e & 1) r = mp_mulmod(r, b, g, p);
            b = mp_mulmod(b, b, g, p);
        }
        h = r;
        ModPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] + p - 1) % p;
        mp_trim(hx);
        ModPoly gi = mp_gcd(g, hx, p);
        int dgi = static_cast<int>(gi.size()) - 1;
        if (dgi > 0) {
            for (int k = 0; k < dgi / i; ++k) out.push_back(i);
            g = mp_div(g, gi, p);
            h = mp_rem(h, g, p);
        }
    }
    if (g.size() > 1) out.push_back(static_cast<int>(g.size()) - 1);
    return out;
}

// Degrees a rational factor could have, from factorization patterns mod small primes.
inline std::vector<bool> possible_factor_degrees(const std::vector<Integer>& f) {
    size_t n = f.size() - 1;
    std::vector<bool> allowed(n + 1, true);
    int used = 0;
    for (long long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71}) {
        if (used == 6) break;
        auto degs = ddf_degrees(f, p);
        if (degs.empty()) continue;
        ++used;
        std::vector<bool> sums(n + 1, false);
        sums[0] = true;
        for (int d : degs)
            for (size_t s = n; s >= static_cast<size_t>(d); --s)
                if (sums[s - static_cast<size_t>(d)]) sums[s] = true;
        for (size_t s = 0; s <= n; ++s) allowed[s] = allowed[s] && sums[s];
    }
    return allowed;
}

// A rational root of f, found by isolating real roots and testing denominators of lead(f).
inline std::optional<Rational> rational_root(const Poly& f) {
    if (f[0].is_zero()) return Rational(0);
    Integer lead = f.lead().num();
    if (lead < 0) lead = -lead;
    auto dens = divisors(lead);
    Rational w(1, lead * lead + 1);
    for (auto r : isolate_roots(f)) {
        if (r.is_exact()) return r.lo;
        refine_to_width(r, w);
        if (r.is_exact()) return r.lo;
        for (const auto& q : dens) {
            Rational t = Rational(floor(r.hi * Rational(q))) / Rational(q);
            if (r.lo < t && f.eval(t).is_zero()) return t;
        }
    }
    return std::nullopt;
}

// One nontrivial factor of a primitive squarefree integer polynomial, if any.
inline std::optional<Poly> kronecker_split(const Poly& f) {
    int n = f.degree();
    if (auto r = rational_root(f)) return Poly({-*r * f.lead(), f.lead()});
    auto allowed = possible_factor_degrees(primitive_integer(f));
    for (int d = 2; 2 * d <= n; ++d) {
        if (!allowed[static_cast<size_t>(d)]) continue;
        // Pick d+1 evaluation points with few divisors.
        struct Pt {
            Integer x, v;
            size_t ndiv;
        };
        std::vector<Pt> pts;
        for (long x = -(3L * n + 10); x <= 3L * n + 10; ++x) {
            Rational v = f.eval(Rational(x));
            if (v.is_zero()) return Poly({Rational(-x), Rational(1)});
            pts.push_back({Integer(x), v.num(), divisors(v.num()).size()});
        }
        std::stable_sort(pts.begin(), pts.end(),
                         [](const Pt& a, const Pt& b) { return a.ndiv < b.ndiv; });
        pts.resize(d + 1);
        std::vector<std::vector<Integer>> cand;
        for (size_t i = 0; i < pts.size(); ++i) {
            std::vector<Integer> c;
            for (const auto& dv : divisors(pts[i].v)) {
                c.push_back(dv);
                if (i > 0) c.push_back(-dv);
            }
            cand.push_back(c);
        }
        std::vector<Integer> xs;
        for (const auto& p : pts) xs.push_back(p.x);
        auto basis = lagrange_basis(xs);
        std::vector<size_t> idx(pts.size(), 0);
        while (true) {
            std::vector<Rational> gc(static_cast<size_t>(d) + 1);
            for (size_t i = 0; i < idx.size(); ++i) {
                Rational y(cand[i][idx[i]]);
                for (int e = 0; e <= basis[i].degree(); ++e) gc[static_cast<size_t>(e)] += y * basis[i][e];
            }
            Poly g(gc);
            if (g.degree() == d && integral(g) && divisible(f.lead().num(), g.lead().num()) &&
                divisible(f[0].num(), g[0].num())) {
                auto [q, r] = poly_divmod(f, g);
                if (r.is_zero()) return g;
            }
            size_t k = 0;
            while (k < idx.size() && ++idx[k] == cand[k].size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Monic irreducible factors over Q of a squarefree polynomial.
inline std::vector<Poly> irreducible_factors(const Poly& p) {
    require(!p.is_zero(), "zero_polynomial", "factorization of zero");
    std::vector<Poly> out;
    if (p.degree() < 1) return out;
    std::vector<Poly> work{from_integers(primitive_integer(squarefree_part(p)))};
    while (!work.empty()) {
        Poly f = work.back();
        work.pop_back();
        if (f.degree() == 1) {
            out.push_back(f.monic());
            continue;
        }
        auto g = detail::kronecker_split(f);
        if (!g) {
            out.push_back(f.monic());
            continue;
        }
        Poly h = exact_div(f, *g);
        work.push_back(from_integers(primitive_integer(*g)));
        work.push_back(from_integers(primitive_integer(h)));
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

inline bool is_irreducible(const Poly& p) {
    if (p.degree() < 1) return false;
    if (poly_gcd(p, p.derivative()).degree() > 0) return false;
    return irreducible_factors(p).size() == 1;
}

inline long count_real_roots(const Poly& p) {
    SturmSequence s(p);
    if (s.degree() < 1) return 0;
    Rational b = cauchy_bound(s.squarefree());
    return s.count_closed(-b, b);
}

}  // namespace signet
