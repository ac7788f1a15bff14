#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "forms.hpp"

namespace signet {

struct SturmChain {
    std::vector<Poly> remainders;  // P_0 .. P_n
    std::vector<Poly> quotients;   // Q_1 .. Q_n
};

// P_0 = P, P_1 = P', P_{k+1} = P_k Q_k - P_{k-1}.
inline SturmChain sturm_chain(const Poly& p) {
    require(p.degree() >= 1, "constant_polynomial", "Sturm chain needs deg P >= 1");
    SturmChain c;
    c.remainders = {p, p.derivative()};
    while (true) {
        const Poly& prev = c.remainders[c.remainders.size() - 2];
        const Poly& cur = c.remainders.back();
        auto [q, r] = poly_divmod(prev, cur);
        c.quotients.push_back(q);
        if (r.is_zero()) break;
        c.remainders.push_back(-r);
    }
    return c;
}

namespace detail {

using IntPoly = std::vector<Integer>;

inline int int_degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

inline void int_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void int_primitive(IntPoly& p) {
    Integer g(0);
    for (const auto& c : p) {
        g = gcd(g, c);
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Remainder of a by b scaled by a positive integer, made primitive.
inline IntPoly int_positive_rem(IntPoly a, const IntPoly& b) {
    int db = int_degree(b);
    const Integer& lb = b.back();
    Integer alb = abs(lb);
    int slb = sgn(lb);
    Integer t;
    while (int_degree(a) >= db && !a.empty()) {
        int da = int_degree(a);
        Integer la = a.back();
        // a <- |lb| a - sign(lb) la X^{da-db} b
        for (auto& c : a) c *= alb;
        for (int j = 0; j <= db; ++j) {
            t = la * b[j];
            if (slb > 0) a[da - db + j] -= t;
            else a[da - db + j] += t;
        }
        a.pop_back();
        int_trim(a);
    }
    int_primitive(a);
    return a;
}

// Sign of p(u/v) for v > 0, through v^deg p(u/v).
inline int int_sign_at(const IntPoly& p, const Integer& u, const std::vector<Integer>& vpow) {
    if (p.empty()) return 0;
    size_t n = p.size() - 1;
    Integer r = p[n];
    for (size_t i = n; i-- > 0;) {
        r *= u;
        r += p[i] * vpow[n - i];
    }
    return sgn(r);
}

}  // namespace detail

// Integer Sturm sequence of a squarefree polynomial for repeated sign counting.
class SturmSequence {
public:
    explicit SturmSequence(const Poly& p) {
        require(!p.is_zero(), "zero_polynomial", "Sturm sequence of zero");
        sq_ = squarefree_part(p);
        if (sq_.degree() < 1) return;
        chain_.push_back(primitive_integer(sq_));
        chain_.push_back(primitive_integer(sq_.derivative()));
        while (true) {
            auto r = detail::int_positive_rem(chain_[chain_.size() - 2], chain_.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            chain_.push_back(std::move(r));
        }
    }

    const Poly& squarefree() const { return sq_; }
    int degree() const { return sq_.degree(); }
    size_t length() const { return chain_.size(); }

    // Sign variations at x with vanishing entries dropped.
    long var_at(const Rational& x) const {
        if (chain_.empty()) return 0;
        Integer u = x.num(), v = x.den();
        std::vector<Integer> vpow(chain_[0].size());
        vpow[0] = 1;
        for (size_t i = 1; i < vpow.size(); ++i) vpow[i] = vpow[i - 1] * v;
        long var = 0;
        int last = 0;
        for (const auto& p : chain_) {
            int s = detail::int_sign_at(p, u, vpow);
            if (s == 0) continue;
            if (last != 0 && s != last) ++var;
            last = s;
        }
        return var;
    }

    bool is_root(const Rational& x) const { return sq_.degree() >= 1 && sq_.eval(x).is_zero(); }

    // Distinct roots in the half-open interval (a, b].
    long count_half_open(const Rational& a, const Rational& b) const {
        return var_at(a) - var_at(b);
    }

    // Distinct roots in [a, b].
    long count_closed(const Rational& a, const Rational& b) const {
        return count_half_open(a, b) + (is_root(a) ? 1 : 0);
    }

private:
    Poly sq_;
    std::vector<detail::IntPoly> chain_;
};

inline long count_roots(const Poly& p, const Rational& a, const Rational& b) {
    require(a < b, "bad_interval", "count_roots needs a < b");
    SturmSequence s(p);
    if (s.degree() < 1) return 0;
    return s.count_closed(a, b);
}

// Cauchy bound: every root satisfies |x| < 1 + max |c_i| / |c_n|.
inline Rational cauchy_bound(const Poly& p) {
    Rational m(0);
    Rational l = abs(p.lead());
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p[i]) / l);
    return Rational(1) + m;
}

struct RealAlgebraic {
    Poly minpoly;  // squarefree with primitive integer coefficients
    Rational lo, hi;

    bool is_exact() const { return lo == hi; }
};

inline Poly normalized_minpoly(const Poly& p) { return from_integers(primitive_integer(squarefree_part(p))); }

// Halves the isolating interval (lo, hi], keeping exactly one root.
inline void refine(RealAlgebraic& x) {
    if (x.is_exact()) return;
    Rational fh = x.minpoly.eval(x.hi);
    if (fh.is_zero()) {
        x.lo = x.hi;
        return;
    }
    Rational mid = (x.lo + x.hi) / Rational(2);
    Rational fm = x.minpoly.eval(mid);
    if (fm.is_zero()) {
        x.lo = x.hi = mid;
        return;
    }
    if (fm.sign() != fh.sign()) x.lo = mid;
    else x.hi = mid;
}

inline void refine_to_width(RealAlgebraic& x, const Rational& w) {
    while (!x.is_exact() && x.hi - x.lo > w) refine(x);
}

inline std::vector<RealAlgebraic> isolate_roots(const Poly& p) {
    std::vector<RealAlgebraic> out;
    SturmSequence s(p);
    if (s.degree() < 1) return out;
    Poly mp = from_integers(primitive_integer(s.squarefree()));
    Rational b = cauchy_bound(s.squarefree());
    struct Job {
        Rational lo, hi;
        long count;
    };
    std::vector<Job> stack{{-b, b, s.count_half_open(-b, b)}};
    while (!stack.empty()) {
        Job j = stack.back();
        stack.pop_back();
        if (j.count == 0) continue;
        if (j.count == 1) {
            RealAlgebraic r{mp, j.lo, j.hi};
            if (s.is_root(j.hi)) r.lo = j.hi;
            out.push_back(r);
            continue;
        }
        Rational mid = (j.lo + j.hi) / Rational(2);
        long left = s.count_half_open(j.lo, mid);
        stack.push_back({mid, j.hi, j.count - left});
        stack.push_back({j.lo, mid, left});
    }
    std::sort(out.begin(), out.end(), [](const RealAlgebraic& x, const RealAlgebraic& y) {
        return x.hi < y.hi;
    });
    return out;
}

enum class Order { less, equal, greater };

inline Order ra_compare(RealAlgebraic x, RealAlgebraic y) {
    // Non-exact intervals are half-open (lo, hi]; exact ones are the point lo = hi.
    auto below = [](const RealAlgebraic& u, const RealAlgebraic& v) {
        return u.hi < v.lo || (u.hi == v.lo && !v.is_exact());
    };
    while (true) {
        if (below(x, y)) return Order::less;
        if (below(y, x)) return Order::greater;
        if (x.is_exact() && y.is_exact()) return x.lo == y.lo ? Order::equal : (x.lo < y.lo ? Order::less : Order::greater);
        Poly g = poly_gcd(x.minpoly, y.minpoly);
        if (g.degree() >= 1) {
            bool common;
            if (x.is_exact() || y.is_exact()) {
                common = g.eval(x.is_exact() ? x.lo : y.lo).is_zero();
            } else {
                Rational lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
                common = SturmSequence(g).count_half_open(lo, hi) > 0;
            }
            if (common) return Order::equal;
        }
        refine(x);
        refine(y);
    }
}

// A rational number as a RealAlgebraic with linear minimal polynomial.
inline RealAlgebraic ra_from_rational(const Rational& r) {
    return {Poly({-r.num(), r.den()}), r, r};
}

template <class T>
Matrix<T> tri(const std::vector<T>& chi) {
    size_t n = chi.size();
    Matrix<T> m(n, n);
    for (size_t i = 0; i < n; ++i) {
        m(i, i) = chi[i];
        if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = T(1);
    }
    return m;
}

struct CfValue {
    Rational value;
    Rational num;  // det Tri(chi_1..chi_n)
    Rational den;  // det Tri(chi_2..chi_n)
};

inline CfValue cf_eval(const std::vector<Rational>& chi) {
    require(!chi.empty(), "empty_fraction", "continued fraction needs at least one entry");
    Rational x = chi.back();
    for (size_t k = chi.size() - 1; k-- > 0;) {
        require(!x.is_zero(), "zero_denominator", "zero intermediate continued fraction denominator");
        x = chi[k] - Rational(1) / x;
    }
    // Tail determinants: nu_k = chi_k nu_{k+1} - nu_{k+2}.
    Rational n2(0), n1(1);
    Rational d;
    for (size_t k = chi.size(); k-- > 0;) {
        Rational nk = chi[k] * n1 - n2;
        if (k == 0) d = n1;
        n2 = n1;
        n1 = nk;
    }
    return {x, n1, d};
}

enum class CfMode { even, big_entry };

namespace detail {

inline bool cf_search(const Rational& x, CfMode mode, int depth, long& budget,
                      std::vector<Rational>& out) {
    if (--budget < 0 || depth > 64) return false;
    auto ok_entry = [&](const Integer& v) {
        if (mode == CfMode::big_entry) return abs(v) >= 2;
        return mpz_even_p(v.get_mpz_t()) != 0;
    };
    if (x.is_integer() && ok_entry(x.num())) {
        out.push_back(x);
        return true;
    }
    std::vector<Integer> cand;
    Integer f = floor(x), c = ceil(x);
    if (mode == CfMode::big_entry) {
        cand = {c, f};
    } else {
        Integer e = mpz_even_p(f.get_mpz_t()) ? f : c;
        cand = {e};
        if (x.is_integer()) cand = {x.num() - 1, x.num() + 1};
    }
    std::vector<Integer> seen;
    for (const auto& v : cand) {
        if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
        seen.push_back(v);
        if (!ok_entry(v)) continue;
        Rational diff = Rational(v) - x;
        if (diff.is_zero()) continue;
        // Strict decrease of the denominator guarantees termination.
        if (!(abs(diff) < Rational(1))) continue;
        out.push_back(Rational(v));
        if (cf_search(Rational(1) / diff, mode, depth + 1, budget, out)) return true;
        out.pop_back();
    }
    return false;
}

}  // namespace detail

// Expansion a/c = [chi_1, ..., chi_n] subject to the mode's entry constraint.
inline std::vector<Rational> cf_expand(const Integer& a, const Integer& c, CfMode mode) {
    require(c != 0, "zero_denominator", "cf_expand needs c != 0");
    require(gcd(a, c) == 1, "not_coprime", "cf_expand needs gcd(a, c) = 1");
    if (mode == CfMode::even)
        require(mpz_even_p(a.get_mpz_t()) && mpz_odd_p(c.get_mpz_t()), "parity",
                "even mode needs an even numerator and odd denominator");
    std::vector<Rational> out;
    long budget = 100000;
    bool found = detail::cf_search(Rational(a, c), mode, 1, budget, out);
    require(found, "unsatisfiable", "no continued fraction expansion satisfies the constraint");
    return out;
}

inline void check_regular(const Poly& p) {
    require(p.degree() >= 1, "constant_polynomial", "polynomial must be non-constant");
    require(poly_gcd(p, p.derivative()).degree() == 0, "not_regular",
            "polynomial has repeated roots");
}

// Tri of the Sturm quotients.
inline Matrix<RatFunc> sturm_tri(const Poly& p) {
    check_regular(p);
    auto ch = sturm_chain(p);
    std::vector<RatFunc> chi;
    for (const auto& q : ch.quotients) chi.emplace_back(q);
    return tri(chi);
}

template <class T>
Matrix<Rational> eval_at(const Matrix<T>& m, const Rational& x) {
    return m.map([&](const T& f) { return f.eval(x); });
}

struct JacobiHermiteData {
    Matrix<Rational> companion;
    std::vector<Rational> powersums;  // sigma_0 .. sigma_{2n-2}
    Matrix<Rational> hermite;
};

inline JacobiHermiteData jacobi_hermite(const Poly& p) {
    require(p.degree() >= 1 && p.lead() == Rational(1), "not_monic", "Jacobi-Hermite needs monic P");
    check_regular(p);
    size_t n = static_cast<size_t>(p.degree());
    JacobiHermiteData d;
    d.companion = Matrix<Rational>(n, n);
    for (size_t i = 0; i + 1 < n; ++i) d.companion(i + 1, i) = 1;
    for (size_t i = 0; i < n; ++i) d.companion(i, n - 1) = -p[i];
    Matrix<Rational> pw = Matrix<Rational>::identity(n);
    for (size_t k = 0; k + 1 < 2 * n; ++k) {
        Rational tr(0);
        for (size_t i = 0; i < n; ++i) tr += pw(i, i);
        d.powersums.push_back(tr);
        pw = pw * d.companion;
    }
    d.hermite = Matrix<Rational>(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) d.hermite(i, j) = d.powersums[i + j];
    return d;
}

// (#roots < t) - (#roots > t).
inline long hermite_count(const Poly& p, const Rational& t) {
    auto d = jacobi_hermite(p);
    require(!p.eval(t).is_zero(), "root_threshold", "threshold is a root of P");
    const auto& s = d.hermite;
    const auto& c = d.companion;
    require(s * c == c.transpose() * s, "internal", "S(P) C(P) is not symmetric");
    size_t n = c.rows();
    Matrix<Rational> m = s * (t * Matrix<Rational>::identity(n) - c);
    return signature(m).tau();
}

// Coefficients of (P(X)Q(Y) - P(Y)Q(X)) / (X - Y).
inline Matrix<Rational> bezoutian(const Poly& p, const Poly& q) {
    require(!p.is_zero() && p.degree() > q.degree() && !q.is_zero(), "degree",
            "bezoutian needs deg P > deg Q >= 0");
    size_t n = static_cast<size_t>(p.degree());
    Matrix<Rational> b(n, n);
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = 0; j < i; ++j) {
            Rational f = p[i] * q[j] - p[j] * q[i];
            if (f.is_zero()) continue;
            for (size_t k = 0; k + j < i; ++k) b(j + k, i - 1 - k) += f;
        }
    return b;
}

}  // namespace signet
