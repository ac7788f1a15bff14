#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "signet/maslov.hpp"

using namespace signet;

namespace {

std::mt19937_64& rng() {
    static std::mt19937_64 g(4242);
    return g;
}

long uni(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

QMatrix line(long x, long y) { return QMatrix{{Rational(x)}, {Rational(y)}}; }

// Product of elementary symplectic matrices; integral unless rational is set.
QMatrix random_symplectic(size_t n, bool rational, int steps = 4) {
    QMatrix g = QMatrix::identity(2 * n);
    auto entry = [&] { return rational ? Rational(uni(-3, 3), uni(1, 3)) : Rational(uni(-2, 2)); };
    for (int s = 0; s < steps; ++s) {
        QMatrix e = QMatrix::identity(2 * n);
        long kind = uni(0, 3);
        if (kind <= 1) {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i; j < n; ++j) {
                    Rational v = entry();
                    if (kind == 0) e(i, n + j) = e(j, n + i) = v;
                    else e(n + i, j) = e(n + j, i) = v;
                }
        } else if (kind == 2) {
            QMatrix a = QMatrix::identity(n);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j) a(i, j) = entry();
            QMatrix ainv_t = inverse(a)->transpose();
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    e(i, j) = a(i, j);
                    e(n + i, n + j) = ainv_t(i, j);
                }
        } else {
            e = omega(n);
        }
        g = g * e;
    }
    return g;
}

Lagrangian random_lagrangian(size_t n) {
    QMatrix s(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) s(i, j) = s(j, i) = Rational(uni(-3, 3), uni(1, 2));
    QMatrix span = vconcat(QMatrix::identity(n), s);
    if (uni(0, 2) == 0) span = vconcat(s, QMatrix::identity(n));
    return make_lagrangian(random_symplectic(n, true, 2) * span);
}

Lagrangian act(const QMatrix& g, const Lagrangian& l) { return make_lagrangian(l.theta, g * l.basis); }

Rational omega2(const QMatrix& u, const QMatrix& v) { return u(0, 0) * v(1, 0) - u(1, 0) * v(0, 0); }

// Three lines in the symplectic plane: sign of the cyclic product of pairings.
long plane_index_oracle(const QMatrix& u, const QMatrix& v, const QMatrix& w) {
    Rational p = omega2(u, v) * omega2(v, w) * omega2(w, u);
    return p.sign();
}

Mat2 random_sl2(int len) {
    Mat2 m = mat2_identity();
    for (int i = 0; i < len; ++i) {
        long k = uni(-3, 3);
        Mat2 t = {Integer(1), Integer(k), Integer(0), Integer(1)};
        m = mat2_mul(m, uni(0, 1) ? t : mat2_S());
        m = mat2_mul(m, mat2_S());
    }
    return m;
}

Mat2 letters_matrix(const std::vector<int>& letters) {
    Mat2 m = mat2_identity();
    for (int l : letters)
        m = mat2_mul(m, l == 0 ? mat2_S() : (l == 1 ? mat2_U() : mat2_inverse(mat2_U())));
    return m;
}

std::vector<Integer> regular_chi(size_t maxlen) {
    for (;;) {
        std::vector<Integer> chi;
        std::vector<Rational> q;
        for (long n = uni(1, static_cast<long>(maxlen)); n > 0; --n) {
            chi.emplace_back(uni(-5, 5));
            q.emplace_back(chi.back());
        }
        if (!det(tri(q)).is_zero()) return chi;
    }
}

}  // namespace

TEST(Lagrangian, RejectsNonLagrangians) {
    EXPECT_THROW(make_lagrangian(QMatrix{{Rational(1), Rational(0)}, {Rational(0), Rational(0)}, {Rational(0), Rational(1)}, {Rational(0), Rational(0)}}),
                 domain_error);
    EXPECT_THROW(make_lagrangian(line(1, 0).block(0, 0, 1, 1)), domain_error);
    EXPECT_NO_THROW(make_lagrangian(vconcat(QMatrix::identity(2), QMatrix(2, 2))));
    EXPECT_EQ(make_lagrangian(line(2, 4)), make_lagrangian(line(-1, -2)));
}

TEST(WallMaslov, TransversePlaneExample) {
    for (long t = -4; t <= 4; ++t) {
        if (t == 0) continue;
        long expect = t > 0 ? 1 : -1;
        EXPECT_EQ(wall_maslov(make_lagrangian(line(1, 0)), make_lagrangian(line(0, 1)), make_lagrangian(line(1, t))), expect);
    }
}

TEST(WallMaslov, PlaneMatchesCyclicOracle) {
    for (int k = 0; k < 200; ++k) {
        QMatrix u = line(uni(-4, 4), uni(-4, 4)), v = line(uni(-4, 4), uni(-4, 4)), w = line(uni(-4, 4), uni(-4, 4));
        if (u.is_zero() || v.is_zero() || w.is_zero()) continue;
        EXPECT_EQ(wall_maslov(make_lagrangian(u), make_lagrangian(v), make_lagrangian(w)), plane_index_oracle(u, v, w));
    }
}

TEST(WallMaslovProperty, AlternatingAndRepeats) {
    for (int k = 0; k < 150; ++k) {
        size_t n = static_cast<size_t>(uni(1, 3));
        Lagrangian a = random_lagrangian(n), b = random_lagrangian(n), c = random_lagrangian(n);
        long t = wall_maslov(a, b, c);
        EXPECT_EQ(wall_maslov(b, a, c), -t);
        EXPECT_EQ(wall_maslov(a, c, b), -t);
        EXPECT_EQ(wall_maslov(c, b, a), -t);
        EXPECT_EQ(wall_maslov(b, c, a), t);
        EXPECT_EQ(wall_maslov(a, a, c), 0);
        EXPECT_EQ(wall_maslov(a, b, a), 0);
        EXPECT_LE(std::abs(t), static_cast<long>(n));
    }
}

TEST(WallMaslovProperty, SymplecticInvariance) {
    for (int k = 0; k < 150; ++k) {
        size_t n = static_cast<size_t>(uni(1, 3));
        Lagrangian a = random_lagrangian(n), b = random_lagrangian(n), c = random_lagrangian(n);
        QMatrix g = random_symplectic(n, true);
        ASSERT_TRUE(is_symplectic(g));
        EXPECT_EQ(wall_maslov(act(g, a), act(g, b), act(g, c)), wall_maslov(a, b, c));
    }
}

TEST(WallMaslovProperty, CocycleDefectVanishes) {
    for (int k = 0; k < 200; ++k) {
        size_t n = static_cast<size_t>(uni(1, 3));
        Lagrangian l[4] = {random_lagrangian(n), random_lagrangian(n), random_lagrangian(n), random_lagrangian(n)};
        if (uni(0, 4) == 0) l[uni(0, 3)] = l[uni(0, 3)];
        EXPECT_EQ(cocycle_defect(l[0], l[1], l[2], l[3]), 0);
    }
}

TEST(GraphLagrangian, IdentityAndIntersections) {
    EXPECT_THROW(graph_lagrangian(QMatrix{{Rational(2), Rational(0)}, {Rational(0), Rational(1)}}), domain_error);
    for (int k = 0; k < 100; ++k) {
        size_t n = static_cast<size_t>(uni(1, 2));
        QMatrix g = random_symplectic(n, false), h = uni(0, 3) ? random_symplectic(n, false) : g;
        auto lg = graph_lagrangian(g), lh = graph_lagrangian(h);
        long inter = static_cast<long>(4 * n) - static_cast<long>(rank(hconcat(lg.basis, lh.basis)));
        EXPECT_EQ(inter, static_cast<long>(kernel(g - h).cols()));
    }
    auto d = graph_lagrangian(QMatrix::identity(2));
    EXPECT_EQ(d.basis, column_echelon(vconcat(QMatrix::identity(2), QMatrix::identity(2))));
}

TEST(Meyer, RepeatedGraphVanishes) {
    for (int k = 0; k < 30; ++k) {
        QMatrix g = random_symplectic(1, false);
        QMatrix i = QMatrix::identity(2);
        EXPECT_EQ(meyer(i, i, g), 0);
        EXPECT_EQ(meyer_m(i, g), 0);
        EXPECT_EQ(meyer_m(g, i), 0);
    }
}

TEST(MeyerProperty, AntisymmetricAndLeftInvariant) {
    for (int k = 0; k < 100; ++k) {
        size_t n = static_cast<size_t>(uni(1, 2));
        QMatrix a = random_symplectic(n, false), b = random_symplectic(n, false), c = random_symplectic(n, false),
                g = random_symplectic(n, false);
        long m = meyer(a, b, c);
        EXPECT_EQ(meyer(b, a, c), -m);
        EXPECT_EQ(meyer(a, c, b), -m);
        EXPECT_EQ(meyer(g * a, g * b, g * c), m);
    }
}

TEST(MeyerProperty, NonHomogeneousCocycle) {
    for (int k = 0; k < 150; ++k) {
        size_t n = static_cast<size_t>(uni(1, 2));
        QMatrix a = random_symplectic(n, false), b = random_symplectic(n, false), c = random_symplectic(n, false);
        long mab = meyer_m(a, b);
        EXPECT_EQ(meyer_m(b, c) - meyer_m(a * b, c) + meyer_m(a, b * c) - mab, 0);
        QMatrix psi = wall_form(graph_lagrangian(QMatrix::identity(2 * n)), graph_lagrangian(a), graph_lagrangian(a * b));
        EXPECT_LE(std::abs(mab), psi.rows() == 0 ? 0l : static_cast<long>(rank(psi)));
        EXPECT_LE(std::abs(mab), static_cast<long>(2 * n));
    }
}

TEST(PSL2, NormalFormExamples) {
    EXPECT_EQ(psl2_normal_form(mat2_U()).eps, std::vector<int>({1}));
    EXPECT_EQ(psl2_normal_form(mat2_S()).eps, std::vector<int>({0, 0}));
    auto t = psl2_normal_form(mat2_T());
    EXPECT_TRUE(pm_equal(eval_word(t), mat2_T()));
    EXPECT_EQ(rademacher(mat2_T()), 1);
    EXPECT_EQ(rademacher(mat2_identity()), 0);
    EXPECT_EQ(rademacher(mat2_U()), 1);
    EXPECT_TRUE(pm_equal(mat2_mul(mat2_U(), mat2_S()), mat2_T()));
    EXPECT_THROW(psl2_normal_form({Integer(2), Integer(0), Integer(0), Integer(1)}), domain_error);
}

TEST(PSL2, AlternatingWordSums) {
    for (int k = 0; k < 100; ++k) {
        std::vector<int> letters;
        long plus = 0, minus = 0;
        for (long j = uni(1, 8); j > 0; --j) {
            int e = uni(0, 1) ? 1 : -1;
            (e == 1 ? plus : minus)++;
            letters.push_back(e);
            letters.push_back(0);
        }
        EXPECT_EQ(rademacher(letters_matrix(letters)), plus - minus);
    }
}

TEST(PSL2Property, NormalFormOfRandomWords) {
    for (int k = 0; k < 300; ++k) {
        std::vector<int> letters;
        long usum = 0;
        for (long j = uni(0, 20); j > 0; --j) {
            int l = static_cast<int>(uni(-1, 1));
            letters.push_back(l);
            usum += l;
        }
        Mat2 m = letters_matrix(letters);
        PSL2Word w = psl2_normal_form(m);
        EXPECT_TRUE(pm_equal(eval_word(w), m));
        EXPECT_EQ(w, reduce_letters(letters));
        for (size_t i = 1; i + 1 < w.eps.size(); ++i) EXPECT_NE(w.eps[i], 0);
        EXPECT_EQ(((rademacher(m) - usum) % 3 + 3) % 3, 0);
    }
}

TEST(PSL2Property, NormalFormOfProducts) {
    for (int k = 0; k < 200; ++k) {
        Mat2 a = random_sl2(static_cast<int>(uni(1, 4))), b = random_sl2(static_cast<int>(uni(1, 4)));
        auto wa = psl2_normal_form(a), wb = psl2_normal_form(b);
        std::vector<int> letters;
        for (const auto* w : {&wa, &wb})
            for (size_t i = 0; i < w->eps.size(); ++i) {
                if (i > 0) letters.push_back(0);
                if (w->eps[i]) letters.push_back(w->eps[i]);
            }
        EXPECT_EQ(psl2_normal_form(mat2_mul(a, b)), reduce_letters(letters));
    }
}

TEST(Dedekind, SawtoothExamples) {
    EXPECT_EQ(sawtooth(Rational(1, 3)), Rational(-1, 6));
    EXPECT_EQ(sawtooth(Rational(5)), Rational(0));
    EXPECT_EQ(sawtooth(Rational(-1, 3)), Rational(1, 6));
    for (long p = -12; p <= 12; ++p)
        for (long q = 1; q <= 6; ++q)
            for (long r = -12; r <= 12; ++r) {
                Rational x(p, q), y(r, 5);
                Rational d = sawtooth(x) + sawtooth(y) - sawtooth(x + y);
                EXPECT_TRUE(d == Rational(0) || d == Rational(1, 2) || d == Rational(-1, 2)) << x.str() << " " << y.str();
            }
}

TEST(Dedekind, SumExamples) {
    EXPECT_EQ(dedekind_sum(Integer(1), Integer(3)), Rational(1, 18));
    EXPECT_EQ(dedekind_sum(Integer(1), Integer(2)), Rational(0));
    EXPECT_THROW(dedekind_sum(Integer(1), Integer(0)), domain_error);
    for (long c = 1; c <= 30; ++c)
        for (long a = -30; a <= 30; ++a) EXPECT_EQ(dedekind_sum(Integer(-a), Integer(c)), -dedekind_sum(Integer(a), Integer(c)));
}

TEST(DedekindProperty, ReciprocityRouteMatchesDirectSum) {
    for (long c = -40; c <= 40; ++c)
        for (long a = -40; a <= 40; ++a) {
            if (c == 0 || std::gcd(a, c) != 1) continue;
            EXPECT_EQ(dedekind_sum_fast(Integer(a), Integer(c)), dedekind_sum(Integer(a), Integer(c))) << a << "/" << c;
        }
}

TEST(DedekindProperty, CotangentEnclosure) {
    for (long c = 2; c <= 50; ++c)
        for (long a = 1; a < c; ++a) {
            if (std::gcd(a, c) != 1) continue;
            RInterval e = dedekind_cot(a, c, 96);
            Rational s = dedekind_sum(Integer(a), Integer(c));
            EXPECT_LE(e.lo, s);
            EXPECT_GE(e.hi, s);
            EXPECT_LE(e.width(), Rational(1, 1000000000));
        }
}

TEST(Defect, SpecExamples) {
    DefectConvention lit{MatrixConvention::product, DedekindArg::ac, DefectForm::literal};
    auto r = signature_defect_check({Integer(2), Integer(2)}, lit);
    EXPECT_EQ(r.matrix, (Mat2{Integer(3), Integer(-2), Integer(2), Integer(-1)}));
    EXPECT_EQ(r.lhs, Rational(2, 3));
    EXPECT_EQ(r.rhs, Rational(2, 3));
    for (const auto& conv : all_conventions()) EXPECT_EQ(signature_defect_check({}, conv).lhs, Rational(0));
    EXPECT_EQ(all_conventions().size(), 24u);
    for (const auto& conv : all_conventions()) EXPECT_EQ(parse_convention(conv.name())->name(), conv.name());
    EXPECT_FALSE(parse_convention("nonsense").has_value());
}

TEST(Defect, FrozenConventionHolds) {
    auto frozen = parse_convention(kFrozenDefectConvention);
    ASSERT_TRUE(frozen.has_value());
    for (int k = 0; k < 300; ++k) {
        auto chi = regular_chi(7);
        auto r = signature_defect_check(chi, *frozen);
        EXPECT_EQ(r.lhs, r.rhs);
    }
}

TEST(Defect, SurvivorsAreTheSPrefixRademacherPair) {
    std::vector<std::vector<Integer>> sample;
    for (int k = 0; k < 120; ++k) sample.push_back(regular_chi(6));
    std::vector<std::string> survivors;
    for (const auto& conv : all_conventions()) {
        bool ok = true;
        for (const auto& chi : sample) {
            auto r = signature_defect_check(chi, conv);
            if (r.lhs != r.rhs) {
                ok = false;
                break;
            }
        }
        if (ok) survivors.push_back(conv.name());
    }
    std::sort(survivors.begin(), survivors.end());
    EXPECT_EQ(survivors, (std::vector<std::string>{"s-prefix:ac:rademacher", "s-prefix:dc:rademacher"}));
}
