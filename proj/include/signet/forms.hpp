#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace signet {

template <class T>
struct EpsSymMatrix {
    int epsilon = 1;
    Matrix<T> entries;

    EpsSymMatrix() = default;
    EpsSymMatrix(Matrix<T> m, int eps = 1) : epsilon(eps), entries(std::move(m)) {
        require(eps == 1 || eps == -1, "bad_epsilon", "epsilon must be +1 or -1");
        require(is_hermitian(entries, eps), "not_eps_symmetric",
                "matrix is not epsilon-symmetric for its involution");
    }
    size_t dim() const { return entries.rows(); }
};

struct SignatureProfile {
    long p = 0, q = 0, nullity = 0;
    long tau() const { return p - q; }
    long dim() const { return p + q + nullity; }
    friend bool operator==(const SignatureProfile&, const SignatureProfile&) = default;
};

inline SignatureProfile operator+(const SignatureProfile& a, const SignatureProfile& b) {
    return {a.p + b.p, a.q + b.q, a.nullity + b.nullity};
}

// Sign changes in a sequence of nonzero signs.
inline long variation(const std::vector<int>& signs) {
    long v = 0;
    for (size_t i = 0; i < signs.size(); ++i) {
        require(signs[i] != 0, "zero_entry", "variation of a sequence with a zero entry");
        if (i > 0 && signs[i] != signs[i - 1]) ++v;
    }
    return v;
}

template <class T>
long variation(const std::vector<T>& v) {
    std::vector<int> s;
    for (const auto& x : v) s.push_back(sign(x));
    return variation(s);
}

template <class T>
void check_hermitian(const Matrix<T>& s) {
    require(s.square(), "not_square", "form matrix must be square");
    require(is_hermitian(s, 1), "not_hermitian", "matrix is not symmetric/hermitian");
}

template <class T>
void check_real_minors(const std::vector<T>& mu) {
    for (const auto& m : mu)
        require(conj(m) == m, "hermitian_minor", "principal minor is not conjugation-fixed");
}

// SJGF fast path: defined only when every leading minor is nonzero.
template <class T>
std::optional<SignatureProfile> signature_sjgf(const Matrix<T>& s) {
    check_hermitian(s);
    auto mu = principal_minors(s);
    check_real_minors(mu);
    for (const auto& m : mu)
        if (is_zero(m)) return std::nullopt;
    long n = static_cast<long>(s.rows());
    long v = variation(mu);
    return SignatureProfile{n - v, v, 0};
}

template <class T>
struct Diagonalization {
    Matrix<T> A;
    std::vector<T> D;
};

// Hermitian Lagrange reduction: A* S A = diag(D).
template <class T>
Diagonalization<T> diagonalize(const Matrix<T>& s0) {
    check_hermitian(s0);
    size_t n = s0.rows();
    Matrix<T> s = s0;
    Matrix<T> a = Matrix<T>::identity(n);
    std::vector<bool> active(n, true);

    // e_j <- e_j + c e_i, applied as a congruence.
    auto add = [&](size_t j, size_t i, const T& c) {
        T cc = conj(c);
        for (size_t r = 0; r < n; ++r) s(r, j) += s(r, i) * c;
        for (size_t k = 0; k < n; ++k) s(j, k) += cc * s(i, k);
        for (size_t r = 0; r < n; ++r) a(r, j) += a(r, i) * c;
    };

    for (size_t step = 0; step < n; ++step) {
        size_t piv = n;
        for (size_t i = 0; i < n && piv == n; ++i)
            if (active[i] && !is_zero(s(i, i))) piv = i;
        if (piv == n) {
            size_t bi = n, bj = n;
            for (size_t i = 0; i < n && bi == n; ++i) {
                if (!active[i]) continue;
                for (size_t j = i + 1; j < n; ++j)
                    if (active[j] && !is_zero(s(i, j))) {
                        bi = i;
                        bj = j;
                        break;
                    }
            }
            if (bi == n) break;
            add(bi, bj, conj(s(bi, bj)));
            piv = bi;
        }
        T d = s(piv, piv);
        for (size_t j = 0; j < n; ++j) {
            if (j == piv || !active[j] || is_zero(s(piv, j))) continue;
            add(j, piv, -(s(piv, j) / d));
        }
        active[piv] = false;
    }
    std::vector<T> diag;
    for (size_t i = 0; i < n; ++i) diag.push_back(s(i, i));
    return {a, diag};
}

template <class T>
SignatureProfile profile_of_diagonal(const std::vector<T>& d) {
    SignatureProfile sp;
    for (const auto& x : d) {
        int sg = is_zero(x) ? 0 : sign(x);
        if (sg > 0) ++sp.p;
        else if (sg < 0) ++sp.q;
        else ++sp.nullity;
    }
    return sp;
}

template <class T>
SignatureProfile signature_lagrange(const Matrix<T>& s) {
    return profile_of_diagonal(diagonalize(s).D);
}

template <class T>
SignatureProfile signature(const Matrix<T>& s) {
    if (auto fast = signature_sjgf(s)) return *fast;
    return signature_lagrange(s);
}

// Sign of a polynomial in an infinitesimal epsilon > 0.
inline int eps_sign(const Poly& p) {
    int v = p.valuation();
    return v < 0 ? 0 : p[static_cast<size_t>(v)].sign();
}

inline Matrix<Poly> eps_shift(const Matrix<Rational>& s, int direction) {
    size_t n = s.rows();
    Matrix<Poly> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = Poly(s(i, j));
    for (size_t i = 0; i < n; ++i) m(i, i) += Poly({Rational(0), Rational(direction)});
    return m;
}

// Minors of S + eps I as polynomials in eps.
inline std::vector<Poly> eps_minors(const Matrix<Rational>& s, int direction = 1) {
    return principal_minors(eps_shift(s, direction));
}

// Full inertia from S + eps I and S - eps I for infinitesimal eps.
inline SignatureProfile signature_eps(const Matrix<Rational>& s) {
    check_hermitian(s);
    long n = static_cast<long>(s.rows());
    auto var_of = [](const std::vector<Poly>& mu) {
        std::vector<int> sg;
        for (const auto& m : mu) sg.push_back(eps_sign(m));
        return variation(sg);
    };
    long neg_plus = var_of(eps_minors(s, 1));
    long neg_minus = var_of(eps_minors(s, -1));
    long z = neg_minus - neg_plus;
    return {n - neg_plus - z, neg_plus, z};
}

// [[S, eps v*], [v, w]].
template <class T>
Matrix<T> plumb(const Matrix<T>& s, const Matrix<T>& v, const T& w, int eps = 1) {
    require(v.rows() == 1 && v.cols() == s.rows(), "dimension_mismatch",
            "plumbing vector length must equal matrix dimension");
    size_t n = s.rows();
    Matrix<T> m(n + 1, n + 1);
    m.set_block(0, 0, s);
    Matrix<T> vs = v.adjoint();
    for (size_t i = 0; i < n; ++i) {
        m(i, n) = eps > 0 ? vs(i, 0) : -vs(i, 0);
        m(n, i) = v(0, i);
    }
    m(n, n) = w;
    return m;
}

// E8 as the plumbing of its tree (chain of seven vertices plus a branch).
inline Matrix<Rational> e8_matrix() {
    Matrix<Rational> m(8, 8);
    for (size_t i = 0; i < 8; ++i) m(i, i) = 2;
    for (size_t i = 0; i + 1 < 7; ++i) m(i, i + 1) = m(i + 1, i) = -1;
    m(4, 7) = m(7, 4) = -1;
    return m;
}

struct Formation {
    Matrix<Rational> theta;
    int epsilon = 1;
    Matrix<Rational> F, G;
};

struct FormationBoundary {
    Matrix<Rational> form;
    int epsilon = 1;
    // Basis of the induced lagrangian in coordinates of the complement basis.
    Matrix<Rational> L;
    // Complement basis inside G-perp used for the coordinates above.
    Matrix<Rational> complement;
};

inline bool is_isotropic(const Matrix<Rational>& theta, const Matrix<Rational>& u) {
    return (u.transpose() * theta * u).is_zero();
}

inline FormationBoundary formation_boundary(const Formation& f) {
    const auto& th = f.theta;
    require(th.square() && is_hermitian(th, f.epsilon), "not_eps_symmetric",
            "formation ambient form is not epsilon-symmetric");
    require(rank(th) == th.rows(), "singular_form", "formation ambient form is singular");
    size_t dim = th.rows();
    require(dim % 2 == 0, "odd_dimension", "formation ambient dimension must be even");
    Matrix<Rational> F = column_echelon(f.F), G = column_echelon(f.G);
    require(F.cols() == dim / 2 && is_isotropic(th, F), "not_lagrangian",
            "F is not a lagrangian");
    require(G.cols() <= dim / 2 && is_isotropic(th, G), "not_sublagrangian",
            "G is not a sublagrangian");
    Matrix<Rational> perp = kernel(G.transpose() * th);
    // Extend G to a basis of G-perp by greedily appending perp columns.
    Matrix<Rational> basis = G;
    Matrix<Rational> comp(dim, 0);
    for (size_t j = 0; j < perp.cols(); ++j) {
        Matrix<Rational> trial = hconcat(basis, perp.column(j));
        if (rank(trial) > basis.cols()) {
            basis = trial;
            comp = hconcat(comp, perp.column(j));
        }
    }
    FormationBoundary out;
    out.epsilon = f.epsilon;
    out.complement = comp;
    out.form = comp.transpose() * th * comp;
    Matrix<Rational> fg = hconcat(F, G);
    Matrix<Rational> inter = intersect_spans(fg, perp);
    Matrix<Rational> coords(comp.cols(), 0);
    if (inter.cols() > 0) {
        auto x = solve(basis, inter);
        require(x.has_value(), "internal", "intersection not inside G-perp");
        coords = x->block(G.cols(), 0, comp.cols(), inter.cols());
    }
    out.L = column_echelon(coords);
    return out;
}

// Polynomial in formal Pontrjagin classes p_1..p_k.
struct LPolynomial {
    int k = 0;
    // Exponent vector (e_1..e_k) with sum i*e_i = k.
    std::map<std::vector<int>, Rational> terms;
};

namespace detail {

using MPoly = std::map<std::vector<int>, Rational>;

inline int weight(const std::vector<int>& e) {
    int w = 0;
    for (size_t i = 0; i < e.size(); ++i) w += static_cast<int>(i + 1) * e[i];
    return w;
}

inline MPoly mp_mul(const MPoly& a, const MPoly& b, int maxw) {
    MPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            if (weight(e) > maxw) continue;
            r[e] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

inline void mp_add(MPoly& a, const MPoly& b, const Rational& s) {
    for (const auto& [e, c] : b) {
        a[e] += s * c;
        if (a[e].is_zero()) a.erase(e);
    }
}

// Bernoulli numbers B_0..B_m via sum_{j<=m} C(m+1, j) B_j = 0.
inline std::vector<Rational> bernoulli(int m) {
    std::vector<Rational> b(m + 1);
    b[0] = 1;
    for (int n = 1; n <= m; ++n) {
        Rational s(0);
        Integer c(1);  // C(n+1, j)
        for (int j = 0; j < n; ++j) {
            s += Rational(c) * b[j];
            c = c * (n + 1 - j) / (j + 1);
        }
        b[n] = -s / Rational(n + 1);
    }
    return b;
}

}  // namespace detail

inline LPolynomial l_polynomial(int k) {
    require(k >= 1 && k <= 10, "out_of_range", "l_polynomial supports 1 <= k <= 10");
    using detail::MPoly;
    // Q(x) = sqrt(x)/tanh(sqrt(x)) = sum 2^{2j} B_{2j} x^j / (2j)!.
    auto B = detail::bernoulli(2 * k);
    std::vector<Rational> q(k + 1);
    Integer fact(1);
    for (int j = 0; j <= k; ++j) {
        if (j > 0) fact *= Integer(2 * j - 1) * Integer(2 * j);
        Integer p4(1);
        mpz_mul_2exp(p4.get_mpz_t(), p4.get_mpz_t(), 2 * j);
        q[j] = Rational(p4) * B[2 * j] / Rational(fact);
    }
    // Power series log Q = sum a_j x^j: a_j = q_j - (1/j) sum_{i<j} i a_i q_{j-i}.
    std::vector<Rational> a(k + 1);
    for (int j = 1; j <= k; ++j) {
        Rational s(0);
        for (int i = 1; i < j; ++i) s += Rational(i) * a[i] * q[j - i];
        a[j] = q[j] - s / Rational(j);
    }
    // Newton: s_j = sum_{i<j} (-1)^{i-1} p_i s_{j-i} + (-1)^{j-1} j p_j.
    auto gen = [&](int i) {
        std::vector<int> e(k, 0);
        e[i - 1] = 1;
        return MPoly{{e, Rational(1)}};
    };
    std::vector<MPoly> s(k + 1);
    for (int j = 1; j <= k; ++j) {
        MPoly sj;
        for (int i = 1; i < j; ++i)
            detail::mp_add(sj, detail::mp_mul(gen(i), s[j - i], k), Rational(i % 2 ? 1 : -1));
        detail::mp_add(sj, gen(j), Rational(j % 2 ? j : -j));
        s[j] = sj;
    }
    MPoly logL;
    for (int j = 1; j <= k; ++j) detail::mp_add(logL, s[j], a[j]);
    // exp with truncation at weight k.
    MPoly result{{std::vector<int>(k, 0), Rational(1)}};
    MPoly term = result;
    for (int m = 1; m <= k; ++m) {
        term = detail::mp_mul(term, logL, k);
        for (auto& [e, c] : term) c /= Rational(m);
        detail::mp_add(result, term, Rational(1));
    }
    LPolynomial out;
    out.k = k;
    for (const auto& [e, c] : result)
        if (detail::weight(e) == k) out.terms[e] = c;
    return out;
}

}  // namespace signet
