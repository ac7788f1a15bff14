#pragma once

#include <array>
#include <string>
#include <vector>

#include "arith.hpp"
#include "forms.hpp"
#include "interval.hpp"
#include "sturm.hpp"

namespace signet {

using QMatrix = Matrix<Rational>;

// Standard skew form [[0, I], [-I, 0]] on Q^{2n}.
inline QMatrix omega(size_t n) {
    QMatrix m(2 * n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        m(i, n + i) = Rational(1);
        m(n + i, i) = Rational(-1);
    }
    return m;
}

struct Lagrangian {
    QMatrix theta;  // ambient nonsingular skew form
    QMatrix basis;  // column-echelon, full column rank

    friend bool operator==(const Lagrangian& a, const Lagrangian& b) {
        return a.theta == b.theta && a.basis == b.basis;
    }
};

inline Lagrangian make_lagrangian(const QMatrix& theta, const QMatrix& span) {
    require(theta.square() && theta.rows() == span.rows(), "ambient_mismatch",
            "lagrangian basis does not fit the ambient space");
    require(theta.transpose() == -theta, "not_skew", "ambient form must be skew-symmetric");
    QMatrix b = column_echelon(span);
    require(2 * b.cols() == theta.rows(), "not_lagrangian", "lagrangian must have half dimension");
    require((b.transpose() * theta * b).is_zero(), "not_lagrangian", "form does not vanish on span");
    return {theta, b};
}

inline Lagrangian make_lagrangian(const QMatrix& span) {
    require(span.rows() % 2 == 0, "ambient_mismatch", "symplectic space has even dimension");
    return make_lagrangian(omega(span.rows() / 2), span);
}

// Wall form on ker(L1 + L2 + L3 -> H), psi(u, v) = theta(u1, v2).
inline QMatrix wall_form(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
    require(l1.theta == l2.theta && l2.theta == l3.theta, "ambient_mismatch",
            "lagrangians live in different spaces");
    size_t n = l1.basis.cols();
    QMatrix k = kernel(hconcat(hconcat(l1.basis, l2.basis), l3.basis));
    if (k.cols() == 0) return QMatrix(0, 0);
    QMatrix u1 = l1.basis * k.block(0, 0, n, k.cols());
    QMatrix u2 = l2.basis * k.block(n, 0, n, k.cols());
    QMatrix psi = u1.transpose() * l1.theta * u2;
    require(psi == psi.transpose(), "internal", "Wall form is not symmetric");
    return psi;
}

inline long wall_maslov(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
    QMatrix psi = wall_form(l1, l2, l3);
    if (psi.rows() == 0) return 0;
    return signature(psi).tau();
}

inline long cocycle_defect(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3,
                           const Lagrangian& l4) {
    return wall_maslov(l2, l3, l4) - wall_maslov(l1, l3, l4) + wall_maslov(l1, l2, l4) -
           wall_maslov(l1, l2, l3);
}

inline bool is_symplectic(const QMatrix& g) {
    if (!g.square() || g.rows() % 2) return false;
    QMatrix w = omega(g.rows() / 2);
    return g.transpose() * w * g == w;
}

// Graph {(x, g x)} in (Q^{2n} + Q^{2n}, Omega + (-Omega)).
inline Lagrangian graph_lagrangian(const QMatrix& g) {
    require(is_symplectic(g), "not_symplectic", "matrix does not preserve the symplectic form");
    size_t m = g.rows();
    QMatrix w = omega(m / 2);
    QMatrix theta = direct_sum(w, -w);
    return make_lagrangian(theta, vconcat(QMatrix::identity(m), g));
}

inline long meyer(const QMatrix& g0, const QMatrix& g1, const QMatrix& g2) {
    require(g0.rows() == g1.rows() && g1.rows() == g2.rows(), "ambient_mismatch",
            "symplectic matrices of different sizes");
    return wall_maslov(graph_lagrangian(g0), graph_lagrangian(g1), graph_lagrangian(g2));
}

// Non-homogeneous Meyer cocycle m(A, B) = Meyer(1, A, AB).
inline long meyer_m(const QMatrix& a, const QMatrix& b) {
    return meyer(QMatrix::identity(a.rows()), a, a * b);
}

// ---- PSL(2, Z) ----

using Mat2 = std::array<Integer, 4>;  // row-major a, b, c, d

inline Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}
inline Mat2 mat2_identity() { return {Integer(1), Integer(0), Integer(0), Integer(1)}; }
inline Mat2 mat2_S() { return {Integer(0), Integer(-1), Integer(1), Integer(0)}; }
inline Mat2 mat2_T() { return {Integer(1), Integer(1), Integer(0), Integer(1)}; }
inline Mat2 mat2_U() { return {Integer(1), Integer(-1), Integer(1), Integer(0)}; }
inline Mat2 mat2_inverse(const Mat2& m) { return {m[3], -m[1], -m[2], m[0]}; }
inline Integer mat2_det(const Mat2& m) { return m[0] * m[3] - m[1] * m[2]; }
inline bool pm_equal(const Mat2& x, const Mat2& y) {
    return x == y || (x[0] == -y[0] && x[1] == -y[1] && x[2] == -y[2] && x[3] == -y[3]);
}

inline QMatrix to_qmatrix(const Mat2& m) {
    return QMatrix{{Rational(m[0]), Rational(m[1])}, {Rational(m[2]), Rational(m[3])}};
}

// U^{e0} S U^{e1} S ... S U^{e_{k+1}}.
struct PSL2Word {
    std::vector<int> eps;
    friend bool operator==(const PSL2Word&, const PSL2Word&) = default;
};

// Letters: 0 = S, +1 = U, -1 = U^{-1}.
inline PSL2Word reduce_letters(const std::vector<int>& letters) {
    std::vector<int> st;
    for (int l : letters) {
        if (l == 0) {
            if (!st.empty() && st.back() == 0) st.pop_back();
            else st.push_back(0);
            continue;
        }
        if (!st.empty() && st.back() != 0) {
            int e = st.back() + l;  // in Z/3 represented by -1, 0, 1
            st.pop_back();
            if (e == 2) e = -1;
            if (e == -2) e = 1;
            if (e != 0) st.push_back(e);
        } else {
            st.push_back(l);
        }
    }
    PSL2Word w;
    int cur = 0;
    for (int l : st) {
        if (l == 0) {
            w.eps.push_back(cur);
            cur = 0;
        } else {
            cur = l;
        }
    }
    w.eps.push_back(cur);
    return w;
}

inline Mat2 eval_word(const PSL2Word& w) {
    Mat2 m = mat2_identity();
    for (size_t i = 0; i < w.eps.size(); ++i) {
        if (i > 0) m = mat2_mul(m, mat2_S());
        if (w.eps[i] == 1) m = mat2_mul(m, mat2_U());
        if (w.eps[i] == -1) m = mat2_mul(m, mat2_inverse(mat2_U()));
    }
    return m;
}

inline PSL2Word psl2_normal_form(const Mat2& a) {
    require(mat2_det(a) == 1, "not_sl2", "matrix must have determinant 1");
    // A = T^{q_1} S T^{q_2} S ... M_final, found by Euclid on the first column.
    std::vector<int> letters;
    auto push_t = [&](const Integer& q) {
        if (q > 0)
            for (Integer i = 0; i < q; ++i) {
                letters.push_back(1);
                letters.push_back(0);
            }
        else
            for (Integer i = 0; i < -q; ++i) {
                letters.push_back(0);
                letters.push_back(-1);
            }
    };
    Mat2 m = a;
    while (m[2] != 0) {
        Integer q = floor_div(m[0], m[2]);
        push_t(q);
        Mat2 m1 = {m[0] - q * m[2], m[1] - q * m[3], m[2], m[3]};
        letters.push_back(0);
        m = {m1[2], m1[3], -m1[0], -m1[1]};
    }
    push_t(m[0] * m[1]);
    PSL2Word w = reduce_letters(letters);
    require(pm_equal(eval_word(w), a), "internal", "normal form does not reproduce the matrix");
    return w;
}

inline long rademacher(const Mat2& a) {
    long r = 0;
    for (int e : psl2_normal_form(a).eps) r += e;
    return r;
}

// ---- Dedekind sums ----

inline Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    return x - Rational(floor(x)) - Rational(1, 2);
}

inline Rational dedekind_sum(const Integer& a, const Integer& c) {
    require(c != 0, "zero_modulus", "Dedekind sum needs c != 0");
    Rational s(0);
    Integer n = abs(c);
    for (Integer k = 1; k < n; ++k) s += sawtooth(Rational(k, c)) * sawtooth(Rational(k * a, c));
    return s;
}

// Same value by reciprocity: s(a,c) + s(c,a) = (a/c + c/a + 1/ac)/12 - 1/4 for coprime a, c > 0.
inline Rational dedekind_sum_fast(const Integer& a0, const Integer& c0) {
    require(c0 != 0, "zero_modulus", "Dedekind sum needs c != 0");
    require(gcd(a0, c0) == 1, "not_coprime", "reciprocity evaluation needs gcd(a, c) = 1");
    Integer c = abs(c0), a = mod(a0, c);
    Rational s(0);
    int sign = 1;
    while (c > 1 && a != 0) {
        s += Rational(sign) * ((Rational(a, c) + Rational(c, a) + Rational(Integer(1), a * c)) / Rational(12) -
                               Rational(1, 4));
        sign = -sign;
        Integer r = mod(c, a);
        c = a;
        a = r;
    }
    return s;
}

// Enclosure of (1/4c) sum cot(pi k/c) cot(pi k a/c), for c > 0.
inline RInterval dedekind_cot(long a, long c, long prec) {
    require(c > 0, "zero_modulus", "cotangent formula needs c > 0");
    RInterval s{Rational(0), Rational(0)};
    for (long k = 1; k < c; ++k) {
        long ka = ((k * a) % c + c) % c;
        if (ka == 0) return {Rational(0), Rational(0)};  // gcd(a, c) > 1 not supported
        s = s + cot_pi(k, c, prec) * cot_pi(ka, c, prec);
    }
    return scale(s, Rational(1, 4 * c));
}

// ---- Signature defect ----

enum class MatrixConvention { product, reverse, s_prefix, s_suffix, inverse, transpose };
enum class DedekindArg { ac, dc };
// literal: (a+d)/3 - 4 sgn(c) s(x, c), and b/3d when c = 0.
// rademacher: -(a+d)/3c + 4 sgn(c) s(x, c), and -b/3d when c = 0.
enum class DefectForm { literal, rademacher };

struct DefectConvention {
    MatrixConvention matrix;
    DedekindArg arg;
    DefectForm form = DefectForm::literal;
    std::string name() const {
        static const char* names[] = {"product", "reverse", "s-prefix", "s-suffix", "inverse",
                                      "transpose"};
        return std::string(names[static_cast<int>(matrix)]) + (arg == DedekindArg::ac ? ":ac" : ":dc") +
               (form == DefectForm::literal ? "" : ":rademacher");
    }
};

inline std::vector<DefectConvention> all_conventions() {
    std::vector<DefectConvention> out;
    for (int f = 0; f < 2; ++f)
        for (int m = 0; m < 6; ++m)
            for (int d = 0; d < 2; ++d)
                out.push_back({static_cast<MatrixConvention>(m), static_cast<DedekindArg>(d),
                               static_cast<DefectForm>(f)});
    return out;
}

// Survivor of the exhaustive search over all_conventions().
inline constexpr const char* kFrozenDefectConvention = "s-prefix:ac:rademacher";

inline std::optional<DefectConvention> parse_convention(const std::string& s) {
    for (const auto& c : all_conventions())
        if (c.name() == s) return c;
    return std::nullopt;
}

// M(x) = T^x S.
inline Mat2 cf_matrix(const Integer& x) { return {x, Integer(-1), Integer(1), Integer(0)}; }

inline Mat2 convention_matrix(const std::vector<Integer>& chi, MatrixConvention mc) {
    Mat2 prod = mat2_identity(), rev = mat2_identity();
    for (const auto& x : chi) prod = mat2_mul(prod, cf_matrix(x));
    for (auto it = chi.rbegin(); it != chi.rend(); ++it) rev = mat2_mul(rev, cf_matrix(*it));
    switch (mc) {
        case MatrixConvention::product: return prod;
        case MatrixConvention::reverse: return rev;
        case MatrixConvention::s_prefix: return mat2_mul(mat2_S(), prod);
        case MatrixConvention::s_suffix: return mat2_mul(prod, mat2_S());
        case MatrixConvention::inverse: return mat2_inverse(prod);
        case MatrixConvention::transpose: return {prod[0], prod[2], prod[1], prod[3]};
    }
    return prod;
}

struct DefectSides {
    Rational lhs, rhs;
    Mat2 matrix;
};

inline DefectSides signature_defect_check(const std::vector<Integer>& chi, const DefectConvention& conv) {
    Rational sum(0);
    std::vector<Rational> q;
    for (const auto& x : chi) {
        sum += Rational(x);
        q.emplace_back(x);
    }
    Rational lhs(0);
    if (!chi.empty()) {
        auto sp = signature(tri(q));
        require(sp.nullity == 0, "not_regular", "Tri(chi) must be nonsingular");
        lhs = Rational(sp.tau()) - sum / Rational(3);
    }
    Mat2 a = convention_matrix(chi, conv.matrix);
    Rational rhs;
    if (a[2] == 0) {
        require(a[3] != 0, "zero_denominator", "c = 0 branch needs d != 0");
        rhs = Rational(a[1]) / Rational(3 * a[3]);
        if (conv.form == DefectForm::rademacher) rhs = -rhs;
    } else {
        Integer x = conv.arg == DedekindArg::ac ? a[0] : a[3];
        Rational dd = Rational(4 * sgn(a[2])) * dedekind_sum_fast(x, a[2]);
        if (conv.form == DefectForm::literal)
            rhs = Rational(a[0] + a[3]) / Rational(3) - dd;
        else
            rhs = -Rational(a[0] + a[3]) / Rational(3 * a[2]) + dd;
    }
    return {lhs, rhs, a};
}

}  // namespace signet
