#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "polyfactor.hpp"

namespace signet {

// Witt class over F_p, p odd prime.
struct WittClassFp {
    Integer p;
    int r_mod2 = 0;
    bool disc_is_square = true;  // signed discriminant (-1)^{r(r-1)/2} prod a_i
    std::optional<int> z4;       // present iff p = 3 mod 4

    static WittClassFp zero(const Integer& p) {
        WittClassFp w;
        w.p = p;
        if (mod(p, Integer(4)) == 3) w.z4 = 0;
        return w;
    }
    bool is_zero() const { return r_mod2 == 0 && disc_is_square && (!z4 || *z4 == 0); }
    bool p3() const { return mod(p, Integer(4)) == 3; }

    friend WittClassFp operator+(const WittClassFp& a, const WittClassFp& b) {
        require(a.p == b.p, "prime_mismatch", "adding Witt classes over different fields");
        WittClassFp w = zero(a.p);
        w.r_mod2 = a.r_mod2 ^ b.r_mod2;
        bool flip = a.p3() && a.r_mod2 && b.r_mod2;
        w.disc_is_square = (a.disc_is_square == b.disc_is_square) != flip;
        if (w.z4) w.z4 = (*a.z4 + *b.z4) % 4;
        return w;
    }
    friend bool operator==(const WittClassFp& a, const WittClassFp& b) {
        return a.p == b.p && a.r_mod2 == b.r_mod2 && a.disc_is_square == b.disc_is_square &&
               a.z4 == b.z4;
    }
};

inline WittClassFp witt_fp(const std::vector<Integer>& diag, const Integer& p) {
    require(p > 2 && is_probable_prime(p), "not_odd_prime", "witt_fp needs an odd prime");
    WittClassFp w = WittClassFp::zero(p);
    int leg = 1, z = 0;
    for (const auto& a : diag) {
        int l = legendre(a, p);
        require(l != 0, "zero_entry", "diagonal entry vanishes modulo p");
        leg *= l;
        z += (l > 0 ? 1 : 3);
    }
    size_t r = diag.size();
    if ((r * (r - 1) / 2) % 2) leg *= legendre(Integer(-1), p);
    w.r_mod2 = static_cast<int>(r % 2);
    w.disc_is_square = leg > 0;
    if (w.z4) w.z4 = z % 4;
    return w;
}

// Witt class over Q: signature, W(F_2) slot and odd local residues.
struct WittClassQ {
    long signature = 0;
    int dim_mod2 = 0;
    int residue2 = 0;  // parity of diagonal entries with odd 2-adic valuation
    std::map<Integer, WittClassFp> local;

    bool is_zero() const { return signature == 0 && residue2 == 0 && local.empty(); }

    WittClassQ& operator+=(const WittClassQ& o) {
        signature += o.signature;
        dim_mod2 ^= o.dim_mod2;
        residue2 ^= o.residue2;
        for (const auto& [p, w] : o.local) {
            auto it = local.find(p);
            WittClassFp s = (it == local.end()) ? w : it->second + w;
            if (s.is_zero()) local.erase(p);
            else local[p] = s;
        }
        return *this;
    }
    friend WittClassQ operator+(WittClassQ a, const WittClassQ& b) { return a += b; }
    WittClassQ operator-() const {
        WittClassQ r;
        r.signature = -signature;
        r.dim_mod2 = dim_mod2;
        r.residue2 = residue2;
        for (const auto& [p, w] : local) {
            WittClassFp n = w;
            // W(F_p) has exponent 2 unless p = 3 mod 4, where it is Z/4 on z4.
            if (n.z4) {
                n.z4 = (4 - *n.z4) % 4;
                n.r_mod2 = *n.z4 % 2;
                n.disc_is_square = (*n.z4 == 0 || *n.z4 == 1);
            }
            r.local[p] = n;
        }
        return r;
    }
    friend bool operator==(const WittClassQ& a, const WittClassQ& b) {
        return a.signature == b.signature && a.residue2 == b.residue2 && a.local == b.local;
    }
};

// Class of the rank one form [s] for a nonzero squarefree integer s.
inline WittClassQ witt_rank_one(const Integer& s) {
    WittClassQ w;
    w.signature = sgn(s);
    w.dim_mod2 = 1;
    for (const auto& [p, e] : factor_integer(s)) {
        if (e % 2 == 0) continue;
        if (p == 2) {
            w.residue2 ^= 1;
            continue;
        }
        w.local[p] = witt_fp({s / p}, p);
    }
    return w;
}

inline WittClassQ witt_q_diagonal(const std::vector<Rational>& d) {
    WittClassQ w;
    for (const auto& x : d) {
        require(!x.is_zero(), "singular_form", "witt_q needs a nonsingular form");
        w += witt_rank_one(squarefree_class(x));
    }
    return w;
}

inline WittClassQ witt_q(const Matrix<Rational>& s) {
    auto dg = diagonalize(s);
    return witt_q_diagonal(dg.D);
}

struct LinkingFormZ {
    std::vector<std::pair<Integer, Integer>> summands;  // (c, a) for (Z/c, a/c)
};

inline LinkingFormZ normalize(LinkingFormZ l) {
    LinkingFormZ out;
    for (auto [c, a] : l.summands) {
        require(c != 0, "zero_modulus", "linking summand with zero modulus");
        require(gcd(a, c) == 1, "not_coprime", "linking summand needs gcd(a, c) = 1");
        if (c < 0) {
            c = -c;
            a = -a;
        }
        if (c == 1) continue;
        out.summands.emplace_back(c, mod(a, c));
    }
    return out;
}

inline LinkingFormZ linking_boundary(const Matrix<Rational>& s) {
    auto dg = diagonalize(s);
    LinkingFormZ l;
    for (const auto& x : dg.D) {
        require(!x.is_zero(), "singular_form", "linking_boundary needs a nonsingular form");
        Integer q = squarefree_class(x);
        if (abs(q) != 1) l.summands.emplace_back(q, Integer(1));
    }
    return normalize(l);
}

// Devissage invariants: W(F_p) classes for odd p plus the Z/2 count at p = 2.
struct LinkingInvariant {
    int two = 0;
    std::map<Integer, WittClassFp> local;
    friend bool operator==(const LinkingInvariant&, const LinkingInvariant&) = default;
};

inline LinkingInvariant linking_invariant(const LinkingFormZ& l0) {
    LinkingFormZ l = normalize(l0);
    LinkingInvariant inv;
    for (const auto& [c, a] : l.summands) {
        for (const auto& [p, k] : factor_integer(c)) {
            if (k % 2 == 0) continue;
            if (p == 2) {
                inv.two ^= 1;
                continue;
            }
            Integer pk(1);
            for (int i = 0; i < k; ++i) pk *= p;
            Integer m = c / pk;
            WittClassFp piece = witt_fp({a * m}, p);
            auto it = inv.local.find(p);
            WittClassFp s = (it == inv.local.end()) ? piece : it->second + piece;
            if (s.is_zero()) inv.local.erase(p);
            else inv.local[p] = s;
        }
    }
    return inv;
}

inline bool linking_witt_eq(const LinkingFormZ& a, const LinkingFormZ& b) {
    return linking_invariant(a) == linking_invariant(b);
}

inline LinkingFormZ lens_linking(const Integer& c, const Integer& a) {
    require(c != 0, "zero_modulus", "lens space needs c != 0");
    require(gcd(a, c) == 1, "not_coprime", "lens space needs gcd(a, c) = 1");
    return normalize(LinkingFormZ{{{c, a}}});
}

// L(c, a) and L(c, a + k c) are the same space; canonical a in [0, |c|).
inline std::pair<Integer, Integer> lens_normalize(const Integer& c, const Integer& a) {
    return {c, mod(a, abs(c))};
}

// Multipliers (u, v) of the isomorphism Z/ac -> Z/c + Z/a, x -> (u x, v x),
// carrying 1/ac to a/c + c/a.
inline std::pair<Integer, Integer> trilinking_iso(const Integer& c, const Integer& a) {
    require(gcd(a, c) == 1, "not_coprime", "trilinking needs coprime a, c");
    Integer ac = abs(a), cc = abs(c);
    Integer u = (cc == 1) ? Integer(0) : mod_inverse(a, cc);
    Integer v = (ac == 1) ? Integer(0) : mod_inverse(c, ac);
    return {u, v};
}

// Checks that x -> (u x, v x) is bijective and carries 1/ac to a/c + c/a on samples.
inline bool verify_trilinking(const Integer& c, const Integer& a,
                              const std::vector<std::pair<Integer, Integer>>& samples) {
    auto [u, v] = trilinking_iso(c, a);
    if (abs(c) > 1 && gcd(u, abs(c)) != 1) return false;
    if (abs(a) > 1 && gcd(v, abs(a)) != 1) return false;
    auto frac = [](const Rational& r) { return r - Rational(floor(r)); };
    for (const auto& [x, y] : samples) {
        Rational lhs = frac(Rational(x * y, a * c));
        Rational rhs = frac(Rational(a * (u * x) * (u * y), c) + Rational(c * (v * x) * (v * y), a));
        if (lhs != rhs) return false;
    }
    return true;
}

// Euclidean chain p_{k-1} + p_{k+1} = p_k q_k with p_n = 1, p_{n+1} = 0.
struct EuclidChain {
    std::vector<Integer> p;  // p_0 .. p_n
    std::vector<Integer> q;  // q_1 .. q_n
};

inline EuclidChain euclid_chain(const std::vector<Integer>& q) {
    size_t n = q.size();
    EuclidChain e;
    e.q = q;
    e.p.assign(n + 2, Integer(0));
    e.p[n] = 1;
    for (size_t k = n; k >= 1; --k) e.p[k - 1] = e.p[k] * q[k - 1] - e.p[k + 1];
    e.p.pop_back();
    return e;
}

struct WittClassRX {
    long tau_inf = 0;
    std::vector<std::pair<RealAlgebraic, long>> real_part;
    std::vector<std::pair<Poly, int>> h_part;  // odd-parity entries only
};

inline bool operator==(const WittClassRX& a, const WittClassRX& b) {
    if (a.tau_inf != b.tau_inf || a.real_part.size() != b.real_part.size() ||
        a.h_part.size() != b.h_part.size())
        return false;
    for (size_t i = 0; i < a.real_part.size(); ++i) {
        if (a.real_part[i].second != b.real_part[i].second) return false;
        if (ra_compare(a.real_part[i].first, b.real_part[i].first) != Order::equal) return false;
    }
    for (const auto& h : a.h_part) {
        bool found = false;
        for (const auto& g : b.h_part) found = found || (g.first == h.first && g.second == h.second);
        if (!found) return false;
    }
    return true;
}

namespace detail {

// Rational points separating the sorted isolated roots, one before, between and after.
inline std::vector<Rational> separating_points(std::vector<RealAlgebraic>& roots) {
    for (size_t i = 0; i + 1 < roots.size(); ++i)
        while (!(roots[i].hi < roots[i + 1].lo)) {
            refine(roots[i]);
            refine(roots[i + 1]);
            if (roots[i].is_exact() && roots[i + 1].is_exact()) break;
        }
    std::vector<Rational> pts;
    if (roots.empty()) return {Rational(0)};
    pts.push_back(roots.front().lo - Rational(1));
    for (size_t i = 0; i + 1 < roots.size(); ++i)
        pts.push_back((roots[i].hi + roots[i + 1].lo) / Rational(2));
    pts.push_back(roots.back().hi + Rational(1));
    return pts;
}

inline int valuation(Poly f, const Poly& pi) {
    int v = 0;
    while (!f.is_zero()) {
        auto [q, r] = poly_divmod(f, pi);
        if (!r.is_zero()) break;
        f = q;
        ++v;
    }
    return v;
}

}  // namespace detail

inline WittClassRX witt_rx(const Matrix<RatFunc>& s) {
    check_hermitian(s);
    RatFunc d = det(s);
    require(!d.is_zero(), "singular_form", "witt_rx needs det(S) != 0");
    // Critical set: zeros and poles of det plus poles of entries.
    Poly crit = d.num() * d.den();
    for (size_t i = 0; i < s.rows(); ++i)
        for (size_t j = 0; j < s.cols(); ++j) crit *= s(i, j).den();
    auto roots = isolate_roots(crit);
    auto pts = detail::separating_points(roots);
    std::vector<long> tau;
    for (const auto& x : pts) tau.push_back(signature(eval_at(s, x)).tau());
    WittClassRX w;
    w.tau_inf = tau.back();
    for (size_t i = 0; i < roots.size(); ++i) {
        long jump = (tau[i + 1] - tau[i]) / 2;
        if (jump != 0) w.real_part.emplace_back(roots[i], jump);
    }
    // Odd-valuation factors of det with a non-real root.
    Poly odd(Rational(1));
    for (const Poly& part : {d.num(), d.den()})
        for (const auto& [f, m] : squarefree_factorization(part))
            if (m % 2 != 0) odd *= f;
    for (const auto& f : irreducible_factors(odd))
        if (count_real_roots(f) < f.degree()) w.h_part.emplace_back(f, 1);
    return w;
}

namespace detail {

inline Poly inverse_mod(const Poly& f, const Poly& pi) {
    Poly r0 = pi, r1 = f % pi, s0, s1(Rational(1));
    require(!r1.is_zero(), "not_invertible", "zero in residue field");
    while (!r1.is_zero()) {
        auto [quo, rem] = poly_divmod(r0, r1);
        Poly s2 = s0 - quo * s1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    return (s0 * Poly(Rational(1) / r0.constant())) % pi;
}

}  // namespace detail

struct ResidueClass {
    Poly pi;
    std::vector<Poly> diag;  // elements of Q[X]/pi
};

inline ResidueClass residue(const Matrix<RatFunc>& s, const Poly& pi0) {
    require(is_irreducible(pi0), "reducible", "residue needs an irreducible polynomial");
    Poly pi = pi0.monic();
    auto dg = diagonalize(s);
    ResidueClass out{pi, {}};
    for (const auto& f : dg.D) {
        require(!f.is_zero(), "singular_form", "residue needs det(S) != 0");
        Poly n = f.num(), d = f.den();
        int vn = detail::valuation(n, pi), vd = detail::valuation(d, pi);
        if ((vn - vd) % 2 == 0) continue;
        for (int i = 0; i < vn; ++i) n = exact_div(n, pi);
        for (int i = 0; i < vd; ++i) d = exact_div(d, pi);
        out.diag.push_back((n * detail::inverse_mod(d, pi)) % pi);
    }
    return out;
}

namespace detail {

// Square test in Q[X]/pi for deg pi <= 2.
inline bool is_square_in(const Poly& pi, const Poly& w0) {
    Poly w = w0 % pi;
    if (w.is_zero()) return true;
    if (pi.degree() == 1) return is_rational_square(w.eval(-pi[0] / pi[1]));
    require(pi.degree() == 2, "unsupported_degree", "square test supports deg pi <= 2");
    // pi = X^2 + bX + c, X = (-b + sqrt(D))/2, w = r + s sqrt(D).
    Rational b = pi[1] / pi[2], c = pi[0] / pi[2];
    Rational D = b * b - Rational(4) * c;
    Rational alpha = w[0], beta = w[1];
    Rational r = alpha - beta * b / Rational(2), s2 = beta / Rational(2);
    if (s2.is_zero()) return is_rational_square(r) || is_rational_square(r / D);
    Rational N = r * r - D * s2 * s2;
    if (!is_rational_square(N)) return false;
    Rational n = rational_sqrt(N);
    return is_rational_square((r + n) / Rational(2)) || is_rational_square((r - n) / Rational(2));
}

}  // namespace detail

// Witt equality in W(Q[X]/pi) for deg pi <= 2.
inline bool residue_witt_eq(const ResidueClass& a, const ResidueClass& b) {
    require(a.pi == b.pi, "field_mismatch", "residue classes over different fields");
    const Poly& pi = a.pi;
    require(pi.degree() <= 2, "unsupported_degree", "Witt equality supports deg pi <= 2");
    if (pi.degree() == 1) {
        Rational root = -pi[0] / pi[1];
        std::vector<Rational> da, db;
        for (const auto& x : a.diag) da.push_back(x.eval(root));
        for (const auto& x : b.diag) db.push_back(x.eval(root));
        return witt_q_diagonal(da) == witt_q_diagonal(db);
    }
    // Form a - b; cancel hyperbolic pairs <u> + <v> with -uv a square.
    std::vector<Poly> f = a.diag;
    for (const auto& x : b.diag) f.push_back(-x);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < f.size() && !changed; ++i)
            for (size_t j = i + 1; j < f.size() && !changed; ++j)
                if (detail::is_square_in(pi, -(f[i] * f[j]))) {
                    f.erase(f.begin() + j);
                    f.erase(f.begin() + i);
                    changed = true;
                }
    }
    if (f.empty()) return true;
    if (f.size() % 2 == 1 || f.size() == 2) return false;
    fail("unsupported", "Witt equality beyond rank-2 comparisons in a quadratic field");
}

}  // namespace signet
