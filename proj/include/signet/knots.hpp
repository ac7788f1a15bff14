#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "forms.hpp"
#include "sturm.hpp"

namespace signet {

struct BraidWord {
    int strands = 2;
    std::vector<int> letters;  // signed generator indices, 1 <= |i| <= strands - 1

    std::string str() const {
        std::ostringstream os;
        os << strands << ":";
        for (int l : letters) os << " " << l;
        return os.str();
    }
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline BraidWord make_braid(int strands, std::vector<int> letters) {
    require(strands >= 2, "bad_braid", "braid needs at least 2 strands");
    for (int l : letters)
        require(l != 0 && std::abs(l) <= strands - 1, "bad_braid", "generator index out of range");
    return {strands, std::move(letters)};
}

inline BraidWord parse_braid(const std::string& text) {
    auto colon = text.find(':');
    require(colon != std::string::npos, "bad_braid", "braid text must look like 'n: i1 i2 ...'");
    std::istringstream head(text.substr(0, colon));
    int n = 0;
    require(static_cast<bool>(head >> n), "bad_braid", "missing strand count");
    std::string rest;
    require(!(head >> rest), "bad_braid", "unexpected text before ':'");
    std::istringstream body(text.substr(colon + 1));
    std::vector<int> letters;
    std::string tok;
    while (body >> tok) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            fail("bad_braid", "malformed generator '" + tok + "'");
        }
        require(used == tok.size(), "bad_braid", "malformed generator '" + tok + "'");
        letters.push_back(v);
    }
    return make_braid(n, letters);
}

inline int closure_components(const BraidWord& b) {
    std::vector<int> perm(b.strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (int l : b.letters) {
        int i = std::abs(l) - 1;
        std::swap(perm[i], perm[i + 1]);
    }
    std::vector<bool> seen(b.strands, false);
    int cycles = 0;
    for (int s = 0; s < b.strands; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int t = s; !seen[t]; t = perm[t]) seen[t] = true;
    }
    return cycles;
}

inline BraidWord mirror(const BraidWord& b) {
    BraidWord m = b;
    for (int& l : m.letters) l = -l;
    return m;
}

// Adds a strand and the letter sigma_n.
inline BraidWord stabilize(const BraidWord& b, int sign = 1) {
    BraidWord s = b;
    s.strands += 1;
    s.letters.push_back(sign * b.strands);
    return s;
}

struct SeifertMatrix {
    Matrix<Rational> sigma;
    int components = 1;
};

// Seifert matrix of the canonical surface of a braid closure. Cycles run between
// consecutive bands of each generator; the right-handed trefoil gets signature -2.
inline SeifertMatrix seifert_matrix(const BraidWord& b) {
    const auto& x = b.letters;
    size_t len = x.size();
    for (int i = 1; i < b.strands; ++i)
        require(std::any_of(x.begin(), x.end(), [&](int l) { return std::abs(l) == i; }),
                "disconnected_surface", "generator " + std::to_string(i) + " never occurs");
    std::vector<size_t> next(len, len);
    for (size_t i = 0; i < len; ++i)
        for (size_t j = i + 1; j < len; ++j)
            if (std::abs(x[j]) == std::abs(x[i])) {
                next[i] = j;
                break;
            }
    std::vector<size_t> cyc;
    for (size_t i = 0; i < len; ++i)
        if (next[i] < len) cyc.push_back(i);
    size_t m = cyc.size();
    Matrix<Rational> s(m, m);
    for (size_t a = 0; a < m; ++a) {
        size_t i = cyc[a], hi = next[i];
        s(a, a) = Rational(-((x[i] > 0) + (x[hi] > 0) - (x[i] < 0) - (x[hi] < 0)) / 2);
        for (size_t c = a + 1; c < m; ++c) {
            size_t j = cyc[c], hj = next[j];
            if (hi < j || hi > hj) continue;  // disjoint or nested
            if (hi == j) {
                if (x[j] > 0) s(c, a) = Rational(1);
                else s(a, c) = Rational(-1);
                continue;
            }
            int di = std::abs(x[i]), dj = std::abs(x[j]);
            if (di - dj == 1) s(c, a) = Rational(-1);
            else if (dj - di == 1) s(a, c) = Rational(1);
        }
    }
    Matrix<Rational> inter = s - s.transpose();
    int comps = closure_components(b);
    if (comps == 1 && m > 0)
        require(det(inter) == Rational(1), "internal", "intersection form is not unimodular");
    return {s, comps};
}

// det(z S - S^T), shifted to nonzero constant term with positive leading coefficient.
inline Poly alexander(const SeifertMatrix& s) {
    size_t n = s.sigma.rows();
    if (n == 0) return Poly(Rational(1));
    Matrix<Poly> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m(i, j) = Poly({-s.sigma(j, i), s.sigma(i, j)});
    Poly d = det_bareiss(m);
    if (d.is_zero()) return d;
    d = d.shift_down(static_cast<size_t>(d.valuation()));
    if (d.lead().sign() < 0) d = -d;
    return d;
}

inline long knot_signature(const SeifertMatrix& s) {
    if (s.sigma.rows() == 0) return 0;
    return signature(s.sigma + s.sigma.transpose()).tau();
}

inline Matrix<CycNumber> omega_form(const SeifertMatrix& s, long a, unsigned long q) {
    CycNumber w = CycNumber::zeta(q, a);
    CycNumber u = CycNumber(1) - w, ub = CycNumber(1) - w.conj();
    size_t n = s.sigma.rows();
    Matrix<CycNumber> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m(i, j) = u * CycNumber(s.sigma(i, j)) + ub * CycNumber(s.sigma(j, i));
    return m;
}

inline CycNumber eval_cyc(const Poly& p, const CycNumber& z) {
    CycNumber r(0);
    for (int k = p.degree(); k >= 0; --k) r = r * z + CycNumber(p[static_cast<size_t>(k)]);
    return r;
}

inline long omega_signature(const SeifertMatrix& s, long a, unsigned long q) {
    require(q >= 2 && a > 0 && a < static_cast<long>(q), "bad_angle", "need 0 < a < q");
    require(gcd(Integer(a), Integer(q)) == 1, "bad_angle", "need gcd(a, q) = 1");
    if (s.sigma.rows() == 0) return 0;
    Poly d = alexander(s);
    require(!eval_cyc(d, CycNumber::zeta(q, a)).is_zero(), "alexander_root",
            "omega is a root of the Alexander polynomial");
    auto sp = signature(omega_form(s, a, q));
    require(sp.nullity == 0, "alexander_root", "degenerate omega form");
    return sp.tau();
}

struct SignatureFunction {
    // Circle roots e^{i theta}, 0 < theta < pi, stored as x = 2 cos theta, sorted by theta.
    std::vector<RealAlgebraic> breakpoints;
    std::vector<long> plateaus;
    // Sample angle 2 pi a / q used for each plateau.
    std::vector<std::pair<long, unsigned long>> samples;

    std::vector<long> jumps() const {
        std::vector<long> j;
        for (size_t i = 0; i + 1 < plateaus.size(); ++i) j.push_back((plateaus[i + 1] - plateaus[i]) / 2);
        return j;
    }
};

// p with z^{-d} f(z) = p(z + 1/z) for a palindromic f of degree 2d.
inline Poly reciprocal_to_x(const Poly& f) {
    int n = f.degree();
    require(n % 2 == 0, "internal", "reciprocal polynomial of odd degree");
    int d = n / 2;
    Poly x = Poly::X();
    std::vector<Poly> t{Poly(Rational(2)), x};
    for (int k = 2; k <= d; ++k) t.push_back(x * t[k - 1] - t[k - 2]);
    Poly p(f[static_cast<size_t>(d)]);
    for (int k = 1; k <= d; ++k) p += t[static_cast<size_t>(k)] * Poly(f[static_cast<size_t>(d + k)]);
    return p;
}

// Factor of the Alexander polynomial carrying its roots on the open upper unit semicircle.
inline Poly circle_part(const Poly& delta) {
    Poly g = poly_gcd(delta, delta.reversed());
    for (Rational r : {Rational(1), Rational(-1)}) {
        Poly lin({-r, Rational(1)});
        while (g.degree() > 0 && g.eval(r).is_zero()) g = exact_div(g, lin);
    }
    return g;
}

inline SignatureFunction signature_function(const SeifertMatrix& s) {
    SignatureFunction sf;
    Poly delta = alexander(s);
    require(!delta.is_zero(), "degenerate_alexander", "Alexander polynomial vanishes");
    Poly g = circle_part(delta);
    std::vector<RealAlgebraic> xs;
    if (g.degree() > 0) {
        Poly p = reciprocal_to_x(g.monic());
        for (auto& r : isolate_roots(p)) {
            refine_to_width(r, Rational(1, 1 << 10));
            if (r.hi <= Rational(-2) || r.lo >= Rational(2)) continue;
            xs.push_back(r);
        }
    }
    std::reverse(xs.begin(), xs.end());  // decreasing x = increasing angle
    sf.breakpoints = xs;
    // Arc k lies between breakpoints k-1 and k in x, bounded by 2 and -2 at the ends.
    for (size_t k = 0; k <= xs.size(); ++k) {
        bool found = false;
        for (unsigned long q = 3; !found; ++q) {
            for (long a = 1; 2 * a < static_cast<long>(q) && !found; ++a) {
                if (gcd(Integer(a), Integer(q)) != 1) continue;
                RInterval c = scale(cos_two_pi(a, q, 64), Rational(2));
                bool below_upper = (k == 0) || c.hi < xs[k - 1].lo;
                bool above_lower = (k == xs.size()) || c.lo > xs[k].hi;
                if (!(below_upper && above_lower)) continue;
                sf.samples.emplace_back(a, q);
                sf.plateaus.push_back(omega_signature(s, a, q));
                found = true;
            }
            if (!found && q % 64 == 0) {
                if (k > 0) refine_to_width(xs[k - 1], (xs[k - 1].hi - xs[k - 1].lo) / Rational(16));
                if (k < xs.size()) refine_to_width(xs[k], (xs[k].hi - xs[k].lo) / Rational(16));
            }
        }
    }
    sf.breakpoints = xs;
    return sf;
}

// Murasugi enlargement [[S, 0, 0], [0, 0, 1], [alpha, 0, 0]].
inline SeifertMatrix s_equiv_enlarge(const SeifertMatrix& s, const std::vector<Rational>& alpha) {
    size_t n = s.sigma.rows();
    require(alpha.size() == n, "size_mismatch", "alpha must have one entry per row");
    Matrix<Rational> m(n + 2, n + 2);
    m.set_block(0, 0, s.sigma);
    m(n, n + 1) = Rational(1);
    for (size_t j = 0; j < n; ++j) m(n + 1, j) = alpha[j];
    return {m, s.components};
}

// Seifert form theta (I - A)^{-1} of a fibred automorphism A.
inline SeifertMatrix fibred_seifert(const Matrix<Rational>& a, const Matrix<Rational>& theta) {
    require(a.square() && theta.square() && a.rows() == theta.rows(), "size_mismatch",
            "A and theta must be square of equal size");
    require(theta.transpose() == -theta, "not_skew", "theta must be skew-symmetric");
    require(a.transpose() * theta * a == theta, "not_symplectic", "A does not preserve theta");
    auto inv = inverse(Matrix<Rational>::identity(a.rows()) - a);
    require(inv.has_value(), "not_fibred", "1 is an eigenvalue of A");
    Matrix<Rational> sigma = theta * *inv;
    require(sigma - sigma.transpose() == theta, "internal", "Sigma - Sigma^T != theta");
    auto si = inverse(sigma);
    require(si && *si * sigma.transpose() == a, "internal", "Sigma^{-1} Sigma^T != A");
    return {sigma, 1};
}

}  // namespace signet
