#include <cmath>
#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "signet/knots.hpp"

using namespace signet;

namespace {

using QM = Matrix<Rational>;
using RM = Matrix<RatFunc>;

std::mt19937_64& rng() {
    static std::mt19937_64 g(777);
    return g;
}

long uni(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

Poly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Poly(v);
}

QM qm(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) {
        r.emplace_back();
        for (long x : row) r.back().emplace_back(x);
    }
    QM m(r.size(), r.empty() ? 0 : r[0].size());
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) m(i, j) = r[i][j];
    return m;
}

BraidWord random_knot_braid(int max_strands, int max_len) {
    for (;;) {
        int n = static_cast<int>(uni(2, max_strands));
        std::vector<int> letters;
        for (long k = uni(1, max_len); k > 0; --k) letters.push_back(static_cast<int>(uni(1, n - 1) * (uni(0, 1) ? 1 : -1)));
        BraidWord b = make_braid(n, letters);
        bool all = true;
        for (int i = 1; i < n; ++i)
            all = all && std::any_of(letters.begin(), letters.end(), [&](int l) { return std::abs(l) == i; });
        if (all && closure_components(b) == 1) return b;
    }
}

Poly normalize_unit(Poly d) {
    if (d.is_zero()) return d;
    d = d.shift_down(static_cast<size_t>(d.valuation()));
    if (d.lead().sign() < 0) d = -d;
    return d;
}

// Reduced Burau image of a braid; (1 + t + ... + t^{n-1}) Delta = det(I - B) up to units.
Poly burau_alexander(const BraidWord& b) {
    size_t n = static_cast<size_t>(b.strands), m = n - 1;
    RatFunc t(P({0, 1}));
    RM acc = RM::identity(m);
    for (int l : b.letters) {
        size_t i = static_cast<size_t>(std::abs(l)) - 1;
        RM g = RM::identity(m);
        g(i, i) = -t;
        if (i > 0) g(i, i - 1) = t;
        if (i + 1 < m) g(i, i + 1) = RatFunc(1);
        if (l < 0) g = *inverse(g);
        acc = acc * g;
    }
    RatFunc d = det(RM::identity(m) - acc);
    Poly geo;
    for (size_t k = 0; k < n; ++k) geo += Poly::monomial(Rational(1), k);
    RatFunc delta = d / RatFunc(geo);
    EXPECT_TRUE(delta.den().degree() == 0 || delta.den() == Poly::monomial(Rational(1), delta.den().degree()))
        << b.str();
    return normalize_unit(delta.num());
}

// det(z S - S^T) from scalar determinants and interpolation.
Poly alexander_by_interpolation(const QM& s) {
    size_t n = s.rows();
    if (n == 0) return Poly(Rational(1));
    Poly r;
    for (size_t i = 0; i <= n; ++i) {
        Rational xi(static_cast<long>(i) + 1);
        Rational yi = det(xi * s - s.transpose());
        Poly basis(Rational(1));
        Rational denom(1);
        for (size_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            Rational xj(static_cast<long>(j) + 1);
            basis *= Poly({-xj, Rational(1)});
            denom *= xi - xj;
        }
        r += basis * Poly(yi / denom);
    }
    return normalize_unit(r);
}

// Eigenvalue signature of a complex hermitian matrix through its real 2n x 2n form.
long float_hermitian_signature(const std::vector<std::vector<std::complex<double>>>& h, double& gap) {
    size_t n = h.size(), m = 2 * n;
    std::vector<std::vector<double>> a(m, std::vector<double>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            a[i][j] = a[n + i][n + j] = h[i][j].real();
            a[i][n + j] = -h[i][j].imag();
            a[n + i][j] = h[i][j].imag();
        }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (size_t p = 0; p < m; ++p)
            for (size_t q = p + 1; q < m; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-24) break;
        for (size_t p = 0; p < m; ++p)
            for (size_t q = p + 1; q < m; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (size_t k = 0; k < m; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < m; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    long sig = 0;
    gap = 1e300;
    for (size_t i = 0; i < m; ++i) {
        sig += a[i][i] > 0 ? 1 : -1;
        gap = std::min(gap, std::abs(a[i][i]));
    }
    return sig / 2;
}

long float_omega_signature(const QM& s, long a, unsigned long q, double& gap) {
    std::complex<double> w = std::polar(1.0, 2 * M_PI * double(a) / double(q));
    size_t n = s.rows();
    std::vector<std::vector<std::complex<double>>> h(n, std::vector<std::complex<double>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            h[i][j] = (1.0 - w) * s(i, j).value().get_d() + (1.0 - std::conj(w)) * s(j, i).value().get_d();
    return float_hermitian_signature(h, gap);
}

std::vector<std::pair<long, unsigned long>> sample_angles() {
    return {{1, 2}, {1, 3}, {1, 5}, {2, 5}, {1, 7}, {3, 7}, {1, 8}, {3, 8}, {1, 12}, {5, 12}};
}

struct Invariants {
    Poly delta;
    long tau;
    std::vector<std::optional<long>> omegas;
    friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants invariants(const BraidWord& b) {
    auto s = seifert_matrix(b);
    Invariants inv{alexander(s), knot_signature(s), {}};
    for (auto [a, q] : sample_angles()) {
        try {
            inv.omegas.push_back(omega_signature(s, a, q));
        } catch (const domain_error&) {
            inv.omegas.push_back(std::nullopt);
        }
    }
    return inv;
}

}  // namespace

TEST(Braid, ParseExamples) {
    EXPECT_EQ(parse_braid("2: 1 1 1"), make_braid(2, {1, 1, 1}));
    EXPECT_EQ(parse_braid("3: 1 -2 1 -2"), make_braid(3, {1, -2, 1, -2}));
    EXPECT_THROW(parse_braid("2: 5"), domain_error);
    EXPECT_THROW(parse_braid("2 1 1"), domain_error);
    EXPECT_THROW(parse_braid("2: 1 x"), domain_error);
    EXPECT_THROW(parse_braid("1: "), domain_error);
    EXPECT_EQ(parse_braid(make_braid(4, {3, -1, 2}).str()), make_braid(4, {3, -1, 2}));
}

TEST(Braid, ClosureComponents) {
    EXPECT_EQ(closure_components(make_braid(2, {1, 1, 1})), 1);
    EXPECT_EQ(closure_components(make_braid(3, {})), 3);
    EXPECT_EQ(closure_components(make_braid(2, {1, 1})), 2);
    EXPECT_EQ(closure_components(make_braid(3, {1, 2})), 1);
}

TEST(Seifert, TrefoilMatchesStandardMatrix) {
    auto s = seifert_matrix(make_braid(2, {1, 1, 1}));
    QM standard = qm({{-1, 1}, {0, -1}});
    EXPECT_EQ(signature(s.sigma + s.sigma.transpose()), signature(standard + standard.transpose()));
    EXPECT_EQ(det(s.sigma + s.sigma.transpose()), det(standard + standard.transpose()));
    EXPECT_EQ(alexander(s), P({1, -1, 1}));
    EXPECT_EQ(alexander_by_interpolation(standard), P({1, -1, 1}));
    EXPECT_EQ(knot_signature(s), -2);
    EXPECT_EQ(knot_signature(seifert_matrix(mirror(make_braid(2, {1, 1, 1})))), 2);
}

TEST(Seifert, FigureEightMatchesStandardMatrix) {
    auto s = seifert_matrix(make_braid(3, {1, -2, 1, -2}));
    QM standard = qm({{-1, 1}, {0, 1}});
    EXPECT_EQ(knot_signature(s), 0);
    EXPECT_EQ(det(s.sigma + s.sigma.transpose()), Rational(-5));
    EXPECT_EQ(det(standard + standard.transpose()), Rational(-5));
    EXPECT_EQ(alexander(s), P({1, -3, 1}));
    EXPECT_EQ(alexander_by_interpolation(standard), P({1, -3, 1}));
}

TEST(Seifert, UnknotAndDisconnected) {
    auto u = seifert_matrix(make_braid(2, {1}));
    EXPECT_EQ(u.sigma.rows(), 0u);
    EXPECT_EQ(alexander(u), P({1}));
    EXPECT_EQ(knot_signature(u), 0);
    EXPECT_THROW(seifert_matrix(make_braid(3, {1, 1, 1})), domain_error);
}

TEST(SeifertProperty, AlexanderMatchesBurau) {
    for (int k = 0; k < 120; ++k) {
        BraidWord b = random_knot_braid(5, 10);
        auto s = seifert_matrix(b);
        EXPECT_EQ(alexander(s), burau_alexander(b)) << b.str();
        EXPECT_EQ(alexander(s), alexander_by_interpolation(s.sigma)) << b.str();
    }
}

TEST(SeifertProperty, UnimodularAndSymmetricAlexander) {
    for (int k = 0; k < 150; ++k) {
        BraidWord b = random_knot_braid(5, 12);
        auto s = seifert_matrix(b);
        if (s.sigma.rows() > 0) EXPECT_EQ(det(s.sigma - s.sigma.transpose()), Rational(1)) << b.str();
        Poly d = alexander(s);
        Poly r = d.reversed();
        EXPECT_TRUE(r == d || r == -d) << b.str();
        EXPECT_EQ(d.eval(Rational(1)).sign() * d.eval(Rational(1)), Rational(1)) << b.str();
    }
}

TEST(SeifertProperty, StabilizationInvariance) {
    for (int k = 0; k < 50; ++k) {
        BraidWord b = random_knot_braid(4, 10);
        auto base = seifert_matrix(b);
        for (int sign : {1, -1}) {
            auto st = seifert_matrix(stabilize(b, sign));
            EXPECT_EQ(alexander(st), alexander(base)) << b.str();
            EXPECT_EQ(knot_signature(st), knot_signature(base)) << b.str();
        }
    }
}

TEST(SeifertProperty, BraidRelationInvariance) {
    int tried = 0;
    for (int k = 0; k < 400 && tried < 40; ++k) {
        BraidWord b = random_knot_braid(5, 12);
        auto& x = b.letters;
        for (size_t i = 0; i + 2 < x.size(); ++i) {
            int a = std::abs(x[i]), c = std::abs(x[i + 1]);
            if (x[i] == x[i + 2] && std::abs(a - c) == 1 && (x[i] > 0) == (x[i + 1] > 0)) {
                BraidWord r = b;
                r.letters[i] = r.letters[i + 2] = x[i + 1];
                r.letters[i + 1] = x[i];
                EXPECT_EQ(invariants(r), invariants(b)) << b.str();
                ++tried;
                break;
            }
        }
        for (size_t i = 0; i + 1 < x.size(); ++i) {
            if (std::abs(std::abs(x[i]) - std::abs(x[i + 1])) >= 2) {
                BraidWord r = b;
                std::swap(r.letters[i], r.letters[i + 1]);
                EXPECT_EQ(invariants(r), invariants(b)) << b.str();
                ++tried;
                break;
            }
        }
    }
    EXPECT_GT(tried, 20);
}

TEST(Omega, TrefoilExamples) {
    auto s = seifert_matrix(make_braid(2, {1, 1, 1}));
    EXPECT_EQ(omega_signature(s, 1, 2), -2);
    EXPECT_EQ(omega_signature(s, 1, 12), 0);
    EXPECT_EQ(omega_signature(s, 1, 3), -2);
    EXPECT_THROW(omega_signature(s, 1, 6), domain_error);
    EXPECT_THROW(omega_signature(s, 2, 4), domain_error);
    EXPECT_THROW(omega_signature(s, 0, 4), domain_error);
}

TEST(OmegaProperty, MatchesFloatingEigenvalues) {
    int compared = 0;
    for (int k = 0; k < 60; ++k) {
        auto s = seifert_matrix(random_knot_braid(4, 9));
        if (s.sigma.rows() == 0) continue;
        for (auto [a, q] : sample_angles()) {
            double gap = 0;
            long f = float_omega_signature(s.sigma, a, q, gap);
            if (gap < 1e-6) continue;
            EXPECT_EQ(omega_signature(s, a, q), f);
            ++compared;
        }
    }
    EXPECT_GT(compared, 200);
}

TEST(OmegaProperty, MinusOneIsKnotSignature) {
    for (int k = 0; k < 100; ++k) {
        auto s = seifert_matrix(random_knot_braid(5, 10));
        EXPECT_EQ(omega_signature(s, 1, 2), knot_signature(s));
    }
}

TEST(SignatureFunction, TrefoilAndUnknot) {
    auto sf = signature_function(seifert_matrix(make_braid(2, {1, 1, 1})));
    ASSERT_EQ(sf.breakpoints.size(), 1u);
    EXPECT_EQ(ra_compare(sf.breakpoints[0], ra_from_rational(Rational(1))), Order::equal);
    EXPECT_EQ(sf.plateaus, std::vector<long>({0, -2}));
    EXPECT_EQ(sf.jumps(), std::vector<long>({-1}));
    auto u = signature_function(seifert_matrix(make_braid(2, {1})));
    EXPECT_TRUE(u.breakpoints.empty());
    EXPECT_EQ(u.plateaus, std::vector<long>({0}));
}

TEST(SignatureFunctionProperty, PlateausEvenAndBounded) {
    for (int k = 0; k < 60; ++k) {
        auto s = seifert_matrix(random_knot_braid(4, 10));
        auto sf = signature_function(s);
        ASSERT_EQ(sf.plateaus.size(), sf.breakpoints.size() + 1);
        EXPECT_EQ(sf.plateaus.front(), 0);
        long variation = 0;
        for (size_t i = 0; i < sf.plateaus.size(); ++i) {
            EXPECT_EQ(sf.plateaus[i] % 2, 0);
            if (i > 0) variation += std::abs(sf.plateaus[i] - sf.plateaus[i - 1]);
        }
        EXPECT_LE(variation, 2 * static_cast<long>(s.sigma.rows()));
        for (size_t i = 0; i < sf.samples.size(); ++i) {
            auto [a, q] = sf.samples[i];
            EXPECT_EQ(sf.plateaus[i], omega_signature(s, a, q));
            double x = 2 * std::cos(2 * M_PI * double(a) / double(q));
            if (i > 0) EXPECT_LT(x, sf.breakpoints[i - 1].lo.value().get_d() + 1e-12);
            if (i < sf.breakpoints.size()) EXPECT_GT(x, sf.breakpoints[i].hi.value().get_d() - 1e-12);
        }
        Poly c = circle_part(alexander(s));
        for (const auto& bp : sf.breakpoints) {
            EXPECT_TRUE(bp.lo >= Rational(-2) && bp.hi <= Rational(2));
            EXPECT_TRUE(reciprocal_to_x(c.monic()).eval(bp.hi).sign() * reciprocal_to_x(c.monic()).eval(bp.lo).sign() <= 0 ||
                        bp.is_exact());
        }
    }
}

TEST(SEquivalence, EnlargementKeepsInvariants) {
    auto u = s_equiv_enlarge(seifert_matrix(make_braid(2, {1})), {});
    EXPECT_EQ(alexander(u), P({1}));
    auto t = seifert_matrix(make_braid(2, {1, 1, 1}));
    for (int k = 0; k < 40; ++k) {
        std::vector<Rational> alpha;
        for (size_t i = 0; i < t.sigma.rows(); ++i) alpha.emplace_back(uni(-4, 4));
        auto e = s_equiv_enlarge(t, alpha);
        EXPECT_EQ(knot_signature(e), -2);
        EXPECT_EQ(alexander(e), alexander(t));
    }
    EXPECT_THROW(s_equiv_enlarge(t, {Rational(1)}), domain_error);
}

TEST(SEquivalenceProperty, DoubleEnlargementKeepsOmegaSignatures) {
    for (int k = 0; k < 12; ++k) {
        auto s = seifert_matrix(random_knot_braid(4, 7));
        std::vector<Rational> a1, a2;
        for (size_t i = 0; i < s.sigma.rows(); ++i) a1.emplace_back(uni(-3, 3));
        auto e1 = s_equiv_enlarge(s, a1);
        for (size_t i = 0; i < e1.sigma.rows(); ++i) a2.emplace_back(uni(-3, 3));
        auto e2 = s_equiv_enlarge(e1, a2);
        EXPECT_EQ(alexander(e2), alexander(s));
        for (int j = 0; j < 20; ++j) {
            unsigned long q = static_cast<unsigned long>(uni(3, 16));
            long a = uni(1, static_cast<long>(q) - 1);
            if (std::gcd(a, static_cast<long>(q)) != 1) continue;
            if (eval_cyc(alexander(s), CycNumber::zeta(q, a)).is_zero()) continue;
            EXPECT_EQ(omega_signature(e2, a, q), omega_signature(s, a, q));
        }
    }
}

TEST(Fibred, MinusIdentity) {
    QM theta = qm({{0, 1}, {-1, 0}});
    auto s = fibred_seifert(-QM::identity(2), theta);
    EXPECT_EQ(s.sigma, Rational(1, 2) * theta);
    EXPECT_THROW(fibred_seifert(QM::identity(2), theta), domain_error);
    EXPECT_THROW(fibred_seifert(qm({{2, 0}, {0, 1}}), theta), domain_error);
}

TEST(Fibred, RotationJumps) {
    QM theta = qm({{0, 1}, {-1, 0}});
    QM rot{{Rational(3, 5), Rational(-4, 5)}, {Rational(4, 5), Rational(3, 5)}};
    auto s = fibred_seifert(rot, theta);
    auto sf = signature_function(s);
    ASSERT_EQ(sf.breakpoints.size(), 1u);
    EXPECT_EQ(ra_compare(sf.breakpoints[0], ra_from_rational(Rational(6, 5))), Order::equal);
    EXPECT_EQ(sf.plateaus, std::vector<long>({0, 2}));
    EXPECT_EQ(sf.jumps(), std::vector<long>({1}));
    auto sfm = signature_function(fibred_seifert(rot.transpose(), theta));
    EXPECT_EQ(sfm.jumps(), std::vector<long>({-1}));
}

TEST(FibredProperty, RoundTrip) {
    QM theta = qm({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
    int done = 0;
    for (int k = 0; k < 200 && done < 40; ++k) {
        QM a = QM::identity(4);
        for (int step = 0; step < 3; ++step) {
            QM e = QM::identity(4);
            Rational v(uni(-3, 3), uni(1, 2)), w(uni(-3, 3));
            if (uni(0, 1)) {
                e(0, 2) = v;
                e(1, 3) = w;
                e(0, 3) = e(1, 2) = Rational(uni(-1, 1));
            } else {
                e(2, 0) = v;
                e(3, 1) = w;
                e(2, 1) = e(3, 0) = Rational(uni(-1, 1));
            }
            a = a * e;
        }
        if (det(a - QM::identity(4)).is_zero()) continue;
        auto s = fibred_seifert(a, theta);
        EXPECT_EQ(*inverse(s.sigma) * s.sigma.transpose(), a);
        EXPECT_EQ(s.sigma - s.sigma.transpose(), theta);
        ++done;
    }
    EXPECT_GE(done, 20);
}
