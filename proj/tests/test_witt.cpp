#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "signet/witt.hpp"

using namespace signet;

namespace {

using QM = Matrix<Rational>;
using RM = Matrix<RatFunc>;

std::mt19937_64& rng() {
    static std::mt19937_64 g(31337);
    return g;
}

long uni(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

Poly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Poly(v);
}

std::vector<Integer> iv(std::initializer_list<long> x) {
    std::vector<Integer> v;
    for (long e : x) v.emplace_back(e);
    return v;
}

// Brute force over F_p: the diagonal form d is Witt-trivial iff it has a totally
// isotropic subspace of dimension r/2. Searched over spans of r/2 vectors for r <= 4.
bool fp_zero_bruteforce(const std::vector<long>& d, long p) {
    size_t r = d.size();
    if (r % 2) return false;
    if (r == 0) return true;
    auto b = [&](const std::vector<long>& x, const std::vector<long>& y) {
        long s = 0;
        for (size_t i = 0; i < r; ++i) s = (s + d[i] * x[i] % p * y[i]) % p;
        return ((s % p) + p) % p;
    };
    std::vector<std::vector<long>> iso;
    long total = 1;
    for (size_t i = 0; i < r; ++i) total *= p;
    for (long code = 1; code < total; ++code) {
        std::vector<long> x(r);
        long c = code;
        for (size_t i = 0; i < r; ++i) {
            x[i] = c % p;
            c /= p;
        }
        if (b(x, x) == 0) iso.push_back(x);
    }
    if (r == 2) return !iso.empty();
    for (size_t i = 0; i < iso.size(); ++i)
        for (size_t j = i + 1; j < iso.size(); ++j) {
            if (b(iso[i], iso[j]) != 0) continue;
            bool dependent = false;
            for (long t = 1; t < p && !dependent; ++t) {
                bool same = true;
                for (size_t k = 0; k < r; ++k) same = same && (iso[i][k] * t - iso[j][k]) % p == 0;
                dependent = same;
            }
            if (!dependent) return true;
        }
    return false;
}

// Brute force over a finite abelian group Z/c1 + Z/c2 of odd order: the linking form
// a1/c1 + a2/c2 is metabolic iff some subgroup H has |H|^2 = |G| and b(H, H) = 0.
bool linking_metabolic_bruteforce(long c1, long a1, long c2, long a2) {
    long g = c1 * c2;
    auto b = [&](long x1, long x2, long y1, long y2) {
        Rational v = Rational(a1 * x1 * y1, c1) + Rational(a2 * x2 * y2, c2);
        return v.is_integer();
    };
    long h = 1;
    while (h * h < g) ++h;
    if (h * h != g) return false;
    for (long x1 = 0; x1 < c1; ++x1)
        for (long x2 = 0; x2 < c2; ++x2)
            for (long y1 = 0; y1 < c1; ++y1)
                for (long y2 = 0; y2 < c2; ++y2) {
                    if (!b(x1, x2, x1, x2) || !b(x1, x2, y1, y2) || !b(y1, y2, y1, y2)) continue;
                    std::set<std::pair<long, long>> span{{0, 0}};
                    std::vector<std::pair<long, long>> frontier{{0, 0}};
                    while (!frontier.empty() && static_cast<long>(span.size()) <= h) {
                        auto [u1, u2] = frontier.back();
                        frontier.pop_back();
                        for (auto [v1, v2] : {std::pair{(u1 + x1) % c1, (u2 + x2) % c2},
                                              std::pair{(u1 + y1) % c1, (u2 + y2) % c2}})
                            if (span.insert({v1, v2}).second) frontier.push_back({v1, v2});
                    }
                    if (static_cast<long>(span.size()) == h) return true;
                }
    return false;
}

QM random_invertible(size_t n) {
    for (;;) {
        QM m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m(i, j) = Rational(uni(-3, 3));
        if (!det(m).is_zero()) return m;
    }
}

QM diagq(std::initializer_list<long> d) {
    std::vector<Rational> v;
    for (long x : d) v.emplace_back(x);
    return QM::diagonal(v);
}

Rational nonzero(long bound) {
    for (;;) {
        long n = uni(-bound, bound);
        if (n) return Rational(n, uni(1, 5));
    }
}

Poly random_monic_squarefree(int maxdeg) {
    for (;;) {
        int d = static_cast<int>(uni(1, maxdeg));
        std::vector<Rational> c(static_cast<size_t>(d) + 1);
        for (int i = 0; i < d; ++i) c[static_cast<size_t>(i)] = Rational(uni(-6, 6));
        c[static_cast<size_t>(d)] = 1;
        Poly p(c);
        if (poly_gcd(p, p.derivative()).degree() == 0) return p;
    }
}

}  // namespace

TEST(WittFp, Examples) {
    EXPECT_TRUE(witt_fp(iv({1, -1}), Integer(5)).is_zero());
    auto w7 = witt_fp(iv({1}), Integer(7));
    ASSERT_TRUE(w7.z4.has_value());
    EXPECT_EQ(*w7.z4, 1);
    auto w3 = witt_fp(iv({1, 1, 1, 1}), Integer(3));
    ASSERT_TRUE(w3.z4.has_value());
    EXPECT_EQ(*w3.z4, 0);
    EXPECT_TRUE(w3.is_zero());
    EXPECT_FALSE(witt_fp(iv({1, 1}), Integer(3)).is_zero());
    EXPECT_THROW(witt_fp(iv({1}), Integer(9)), domain_error);
}

TEST(WittFpProperty, ZeroTestMatchesIsotropicSearch) {
    for (long p : {3l, 5l, 7l, 11l}) {
        for (int k = 0; k < 60; ++k) {
            size_t r = static_cast<size_t>(uni(0, 4));
            if (p == 11 && r == 4) r = 2;
            std::vector<long> d;
            std::vector<Integer> di;
            for (size_t i = 0; i < r; ++i) {
                d.push_back(uni(1, p - 1));
                di.emplace_back(d.back());
            }
            EXPECT_EQ(witt_fp(di, Integer(p)).is_zero(), fp_zero_bruteforce(d, p)) << p;
        }
    }
}

TEST(WittFpProperty, AdditionMatchesConcatenation) {
    for (long p : {3l, 5l, 7l, 13l}) {
        for (int k = 0; k < 80; ++k) {
            std::vector<Integer> a, b;
            for (long i = uni(0, 3); i > 0; --i) a.emplace_back(uni(1, p - 1));
            for (long i = uni(0, 3); i > 0; --i) b.emplace_back(uni(1, p - 1));
            std::vector<Integer> ab = a;
            ab.insert(ab.end(), b.begin(), b.end());
            EXPECT_EQ(witt_fp(a, Integer(p)) + witt_fp(b, Integer(p)), witt_fp(ab, Integer(p)));
        }
    }
}

TEST(WittQ, Examples) {
    EXPECT_EQ(witt_q(diagq({1, -1})), WittClassQ{});
    EXPECT_EQ(witt_q(diagq({1, 2, -2})), witt_q(diagq({1})));
    auto e8 = witt_q(e8_matrix());
    EXPECT_EQ(e8.signature, 8);
    EXPECT_TRUE(e8.local.empty());
    EXPECT_EQ(e8.residue2, 0);
    EXPECT_THROW(witt_q(diagq({1, 0})), domain_error);
}

TEST(WittQProperty, AdditiveAndNegation) {
    for (int k = 0; k < 120; ++k) {
        size_t n = static_cast<size_t>(uni(1, 4)), m = static_cast<size_t>(uni(1, 4));
        std::vector<Rational> a, b;
        for (size_t i = 0; i < n; ++i) a.push_back(nonzero(12));
        for (size_t i = 0; i < m; ++i) b.push_back(nonzero(12));
        QM s = QM::diagonal(a), t = QM::diagonal(b);
        EXPECT_EQ(witt_q(direct_sum(s, t)), witt_q(s) + witt_q(t));
        EXPECT_EQ(witt_q(direct_sum(s, -s)), WittClassQ{});
        EXPECT_EQ(witt_q(-s), -witt_q(s));
        QM c = random_invertible(n);
        EXPECT_EQ(witt_q(c.transpose() * s * c), witt_q(s));
    }
}

TEST(WittQProperty, HyperbolicPlanesVanish) {
    for (int k = 0; k < 60; ++k) {
        Rational l = nonzero(9), a(uni(-9, 9));
        EXPECT_EQ(witt_q(QM{{Rational(0), l}, {l, a}}), WittClassQ{});
    }
}

TEST(WittQProperty, GeneratorRelation) {
    for (int k = 0; k < 200; ++k) {
        Rational x = nonzero(20), y = nonzero(20);
        if ((x + y).is_zero()) continue;
        EXPECT_EQ(witt_q_diagonal({x, y}), witt_q_diagonal({x + y, x * y / (x + y)}));
    }
}

TEST(Linking, Examples) {
    auto l7 = lens_linking(Integer(7), Integer(1));
    ASSERT_EQ(l7.summands.size(), 1u);
    EXPECT_EQ(l7.summands[0], std::make_pair(Integer(7), Integer(1)));
    EXPECT_TRUE(lens_linking(Integer(1), Integer(0)).summands.empty());
    auto b = linking_boundary(QM{{Rational(1, 7)}});
    EXPECT_TRUE(linking_witt_eq(b, LinkingFormZ{{{Integer(7), Integer(1)}}}));
    EXPECT_TRUE(linking_boundary(diagq({2, -2})).summands.size() <= 2);
    EXPECT_TRUE(linking_witt_eq(linking_boundary(diagq({2, -2})), LinkingFormZ{}));
    EXPECT_TRUE(linking_witt_eq(LinkingFormZ{{{Integer(9), Integer(2)}}}, LinkingFormZ{}));
    EXPECT_FALSE(linking_witt_eq(LinkingFormZ{{{Integer(7), Integer(1)}}}, LinkingFormZ{}));
}

TEST(Linking, SplitBoundaryOfProduct) {
    for (long c = 2; c <= 30; ++c)
        for (long a = 2; a <= 30; ++a) {
            if (gcd(Integer(a), Integer(c)) != 1) continue;
            LinkingFormZ split{{{Integer(c), Integer(a)}, {Integer(a), Integer(c)}}};
            EXPECT_TRUE(linking_witt_eq(linking_boundary(QM{{Rational(a * c)}}), split));
        }
}

TEST(LinkingProperty, WittEqualityMatchesMetabolicSearch) {
    for (long c1 : {3l, 5l, 7l, 9l})
        for (long c2 : {3l, 5l, 7l, 9l, 15l})
            for (int k = 0; k < 3; ++k) {
                long a1 = uni(1, c1 - 1), a2 = uni(1, c2 - 1);
                if (std::gcd(a1, c1) != 1 || std::gcd(a2, c2) != 1) continue;
                LinkingFormZ x{{{Integer(c1), Integer(a1)}}}, y{{{Integer(c2), Integer(a2)}}};
                EXPECT_EQ(linking_witt_eq(x, y), linking_metabolic_bruteforce(c1, a1, c2, -a2))
                    << c1 << " " << a1 << " " << c2 << " " << a2;
            }
}

TEST(LinkingProperty, EuclideanChainBoundary) {
    for (int k = 0; k < 100; ++k) {
        std::vector<Integer> q;
        for (long n = uni(1, 6); n > 0; --n) q.emplace_back(uni(2, 7));
        auto e = euclid_chain(q);
        ASSERT_EQ(e.p.size(), q.size() + 1);
        EXPECT_EQ(e.p.back(), Integer(1));
        for (size_t j = 1; j < q.size(); ++j) EXPECT_EQ(e.p[j - 1] + e.p[j + 1], e.p[j] * q[j - 1]);
        std::vector<Rational> qr(q.begin(), q.end());
        EXPECT_EQ(det(tri(qr)), Rational(e.p[0]));
        LinkingFormZ expect{{{e.p[0], e.p[1]}}};
        EXPECT_TRUE(linking_witt_eq(linking_boundary(tri(qr)), expect));
    }
}

TEST(Trilinking, BijectiveAndCarriesForm) {
    for (long c = 1; c <= 20; ++c)
        for (long a = 1; a <= 20; ++a) {
            if (std::gcd(a, c) != 1) continue;
            auto [u, v] = trilinking_iso(Integer(c), Integer(a));
            std::set<std::pair<long, long>> image;
            for (long x = 0; x < a * c; ++x)
                image.insert({mod(Integer(u * x), Integer(c)).get_si(), mod(Integer(v * x), Integer(a)).get_si()});
            EXPECT_EQ(static_cast<long>(image.size()), a * c);
            std::vector<std::pair<Integer, Integer>> samples;
            for (long x = 0; x < std::min(a * c, 12l); ++x)
                for (long y = 0; y < std::min(a * c, 12l); ++y) samples.emplace_back(x, y);
            EXPECT_TRUE(verify_trilinking(Integer(c), Integer(a), samples));
        }
}

TEST(WittRX, LinearForm) {
    Rational a(3, 2);
    auto w = witt_rx(RM{{RatFunc(Poly({-a, Rational(1)}))}});
    EXPECT_EQ(w.tau_inf, 1);
    ASSERT_EQ(w.real_part.size(), 1u);
    EXPECT_EQ(ra_compare(w.real_part[0].first, ra_from_rational(a)), Order::equal);
    EXPECT_EQ(w.real_part[0].second, 1);
    EXPECT_TRUE(w.h_part.empty());
}

TEST(WittRX, DoubledComplexFactorIsTrivial) {
    Poly pz = P({5, -2, 1});  // roots 1 +- 2i
    auto w = witt_rx(RM{{RatFunc(pz), RatFunc(0)}, {RatFunc(0), RatFunc(pz)}});
    EXPECT_EQ(w, witt_rx(RM{{RatFunc(1), RatFunc(0)}, {RatFunc(0), RatFunc(1)}}));
    EXPECT_TRUE(w.h_part.empty());
    EXPECT_TRUE(w.real_part.empty());
    EXPECT_EQ(w.tau_inf, 2);
    // the explicit isometry [[X - 1, 2], [-2, X - 1]]
    RM g{{RatFunc(P({-1, 1})), RatFunc(2)}, {RatFunc(-2), RatFunc(P({-1, 1}))}};
    EXPECT_EQ(g.transpose() * g, (RM{{RatFunc(pz), RatFunc(0)}, {RatFunc(0), RatFunc(pz)}}));
}

TEST(WittRXProperty, SturmTriDecomposition) {
    for (int k = 0; k < 60; ++k) {
        Poly p = random_monic_squarefree(5);
        auto w = witt_rx(sturm_tri(p));
        auto roots = isolate_roots(p);
        EXPECT_EQ(w.tau_inf, static_cast<long>(roots.size()));
        ASSERT_EQ(w.real_part.size(), roots.size());
        for (size_t i = 0; i < roots.size(); ++i) {
            EXPECT_EQ(ra_compare(w.real_part[i].first, roots[i]), Order::equal);
            EXPECT_EQ(w.real_part[i].second, 1);
        }
        size_t complex_factors = 0;
        for (const auto& f : irreducible_factors(p))
            if (count_real_roots(f) < f.degree()) ++complex_factors;
        EXPECT_EQ(w.h_part.size(), complex_factors);
    }
}

TEST(WittRXProperty, JumpsOnlyAtZerosAndPoles) {
    for (int k = 0; k < 60; ++k) {
        size_t n = static_cast<size_t>(uni(1, 3));
        RM s(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                Poly num({Rational(uni(-4, 4)), Rational(uni(-2, 2))});
                Poly den = uni(0, 2) ? Poly(Rational(1)) : Poly({Rational(uni(-4, 4)), Rational(1)});
                s(i, j) = s(j, i) = RatFunc(num, den);
            }
        RatFunc d = det(s);
        if (d.is_zero()) continue;
        auto w = witt_rx(s);
        Poly crit = d.num() * d.den();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) crit *= s(i, j).den();
        for (const auto& [x, jump] : w.real_part) {
            bool hit = false;
            for (const auto& r : isolate_roots(crit)) hit = hit || ra_compare(x, r) == Order::equal;
            EXPECT_TRUE(hit);
        }
    }
}

TEST(WittRXProperty, KernelOfBoundaryIsConstant) {
    for (long p = 0; p <= 3; ++p)
        for (long q = 0; q <= 3; ++q) {
            std::vector<RatFunc> d;
            for (long i = 0; i < p; ++i) d.emplace_back(1);
            for (long i = 0; i < q; ++i) d.emplace_back(-1);
            if (d.empty()) continue;
            auto w = witt_rx(RM::diagonal(d));
            EXPECT_EQ(w.tau_inf, p - q);
            EXPECT_TRUE(w.real_part.empty() && w.h_part.empty());
        }
}

TEST(Residue, Examples) {
    Poly u = P({3, 1});
    auto r = residue(RM{{RatFunc(P({0, 1}) * u)}}, P({0, 1}));
    ASSERT_EQ(r.diag.size(), 1u);
    EXPECT_EQ(r.diag[0], Poly(u.eval(Rational(0))));
    auto none = residue(RM{{RatFunc(u)}}, P({0, 1}));
    EXPECT_TRUE(none.diag.empty());
    EXPECT_THROW(residue(RM{{RatFunc(u)}}, P({-1, 0, 1})), domain_error);
}

TEST(ResidueProperty, SturmTriResiduesAreDerivatives) {
    for (int k = 0; k < 40; ++k) {
        Poly p = random_monic_squarefree(5);
        auto s = sturm_tri(p);
        auto factors = irreducible_factors(p);
        for (const auto& f : factors) {
            if (f.degree() > 2) continue;
            Poly pi = f.monic();
            ResidueClass expect{pi, {pi.derivative() % pi}};
            auto got = residue(s, pi);
            EXPECT_TRUE(residue_witt_eq(got, expect)) << p.str() << " at " << pi.str();
            if (pi.degree() == 1) {
                ResidueClass one{pi, {Poly(Rational(1))}};
                EXPECT_TRUE(residue_witt_eq(got, one));
            }
        }
        for (long c = -3; c <= 3; ++c) {
            Poly pi({Rational(c), Rational(1)});
            if (!p.eval(Rational(-c)).is_zero()) EXPECT_TRUE(residue_witt_eq(residue(s, pi), ResidueClass{pi, {}}));
        }
    }
}

TEST(ResidueProperty, QuadraticSquareTest) {
    Poly pi = P({1, 0, 1});  // Q(i)
    ResidueClass two{pi, {Poly(Rational(2))}}, minus_two{pi, {Poly(Rational(-2))}};
    ResidueClass x2{pi, {P({0, 2})}};  // 2i = (1 + i)^2
    ResidueClass one{pi, {Poly(Rational(1))}};
    EXPECT_TRUE(residue_witt_eq(x2, one));
    EXPECT_TRUE(residue_witt_eq(two, minus_two));  // -1 is a square in Q(i)
    EXPECT_FALSE(residue_witt_eq(two, one));
    ResidueClass pair{pi, {Poly(Rational(3)), Poly(Rational(-3))}};
    EXPECT_TRUE(residue_witt_eq(pair, ResidueClass{pi, {}}));
}

TEST(FactorProperty, RecoversPlantedIrreducibles) {
    for (int k = 0; k < 60; ++k) {
        std::vector<Poly> planted;
        Poly prod(Rational(1));
        for (long n = uni(1, 5); n > 0; --n) {
            Poly f;
            if (uni(0, 1)) {
                f = Poly({Rational(uni(-9, 9), uni(1, 3)), Rational(1)});
            } else {
                long b = uni(-6, 6), c = uni(-9, 9);
                if (is_rational_square(Rational(b * b - 4 * c))) continue;
                f = Poly({Rational(c), Rational(b), Rational(1)});
            }
            if (std::find(planted.begin(), planted.end(), f) != planted.end()) continue;
            planted.push_back(f);
            prod *= f;
        }
        if (prod.degree() < 1) continue;
        auto got = irreducible_factors(Rational(uni(1, 5)) * prod * prod.derivative().monic());
        for (const auto& f : planted) EXPECT_NE(std::find(got.begin(), got.end(), f), got.end()) << f.str();
        Poly back(Rational(1));
        for (const auto& f : got) back *= f;
        EXPECT_TRUE((squarefree_part(prod * prod.derivative().monic()).monic() - back.monic()).is_zero());
    }
}
