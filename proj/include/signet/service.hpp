#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "knots.hpp"
#include "maslov.hpp"
#include "sturm.hpp"
#include "witt.hpp"

namespace signet {

using json = nlohmann::json;

// Malformed request: unknown command, missing or mistyped parameter.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace codec {

inline std::string num(long v) { return std::to_string(v); }
inline std::string num(const Integer& v) { return v.get_str(); }

inline Rational rational(const json& j) {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const domain_error& e) {
            throw usage_error(std::string("bad rational: ") + e.what());
        } catch (const std::invalid_argument&) {
            throw usage_error("bad rational: " + j.get<std::string>());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw usage_error("expected a rational string, got " + j.dump());
}

inline Integer integer(const json& j) {
    Rational r = rational(j);
    if (!r.is_integer()) throw usage_error("expected an integer, got " + j.dump());
    return r.num();
}

inline long small_int(const json& j) {
    Integer v = integer(j);
    if (!v.fits_slong_p()) throw usage_error("integer out of range: " + j.dump());
    return v.get_si();
}

inline json enc(const Rational& r) { return r.str(); }

inline Poly poly(const json& j) {
    if (!j.is_array()) throw usage_error("expected a polynomial coefficient array");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational(x));
    return Poly(c);
}

inline json enc(const Poly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

inline RatFunc ratfunc(const json& j) {
    if (j.is_object()) {
        if (!j.contains("num")) throw usage_error("rational function needs 'num'");
        Poly d = j.contains("den") ? poly(j["den"]) : Poly(Rational(1));
        if (d.is_zero()) throw usage_error("rational function with zero denominator");
        return RatFunc(poly(j["num"]), d);
    }
    if (j.is_array()) return RatFunc(poly(j));
    return RatFunc(Poly(rational(j)));
}

inline json enc(const RatFunc& f) {
    if (f.is_polynomial()) return enc(f.num());
    return json{{"num", enc(f.num())}, {"den", enc(f.den())}};
}

inline CycNumber cyc(const json& j) {
    if (j.is_object() && j.contains("q") && j.contains("rep")) {
        long q = small_int(j["q"]);
        if (q < 1) throw usage_error("cyclotomic conductor must be positive");
        return CycNumber(static_cast<unsigned long>(q), poly(j["rep"]));
    }
    return CycNumber(rational(j));
}

inline json enc(const CycNumber& x) {
    return json{{"q", num(static_cast<long>(x.conductor()))}, {"rep", enc(x.rep())}};
}

json enc(const SignatureProfile& s);
json enc(const RealAlgebraic& r);
json enc(const WittClassFp& w);
json enc(const WittClassQ& w);
json enc(const WittClassRX& w);
json enc(const LinkingFormZ& l);
json enc(const Mat2& m);

template <class T, class F>
Matrix<T> matrix(const json& j, F&& scalar) {
    if (!j.is_array()) throw usage_error("expected a matrix (array of rows)");
    std::vector<std::vector<T>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw usage_error("matrix rows must be arrays");
        std::vector<T> row;
        for (const auto& x : r) row.push_back(scalar(x));
        if (!rows.empty() && row.size() != rows[0].size())
            throw usage_error("matrix rows differ in length");
        rows.push_back(row);
    }
    if (rows.empty()) return Matrix<T>(0, 0);
    return Matrix<T>::from_rows(rows);
}

inline Matrix<Rational> qmatrix(const json& j) { return matrix<Rational>(j, rational); }
inline Matrix<RatFunc> rxmatrix(const json& j) { return matrix<RatFunc>(j, ratfunc); }
inline Matrix<CycNumber> cycmatrix(const json& j) { return matrix<CycNumber>(j, cyc); }

template <class T>
json enc(const Matrix<T>& m) {
    json a = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (size_t j = 0; j < m.cols(); ++j) r.push_back(enc(m(i, j)));
        a.push_back(r);
    }
    return a;
}

template <class T>
json enc_vec(const std::vector<T>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(enc(x));
    return a;
}

inline std::vector<Rational> rvec(const json& j) {
    if (!j.is_array()) throw usage_error("expected an array");
    std::vector<Rational> v;
    for (const auto& x : j) v.push_back(rational(x));
    return v;
}

inline std::vector<Integer> ivec(const json& j) {
    if (!j.is_array()) throw usage_error("expected an array");
    std::vector<Integer> v;
    for (const auto& x : j) v.push_back(integer(x));
    return v;
}

inline json enc(const SignatureProfile& s) {
    return json{{"p", num(s.p)}, {"q", num(s.q)}, {"nullity", num(s.nullity)}, {"tau", num(s.tau())}};
}

inline json enc(const RealAlgebraic& r) {
    return json{{"minpoly", enc(r.minpoly)}, {"lo", r.lo.str()}, {"hi", r.hi.str()}};
}

inline RealAlgebraic real_algebraic(const json& j) {
    if (j.is_string() || j.is_number_integer()) return ra_from_rational(rational(j));
    if (!j.is_object() || !j.contains("minpoly") || !j.contains("lo") || !j.contains("hi"))
        throw usage_error("real algebraic number needs minpoly, lo, hi");
    RealAlgebraic r{normalized_minpoly(poly(j["minpoly"])), rational(j["lo"]), rational(j["hi"])};
    if (r.hi < r.lo) throw usage_error("isolating interval has lo > hi");
    long c = r.is_exact() ? (r.minpoly.eval(r.lo).is_zero() ? 1 : 0)
                          : SturmSequence(r.minpoly).count_half_open(r.lo, r.hi);
    if (c != 1) fail("not_isolating", "interval does not isolate exactly one root");
    return r;
}

inline json enc(const WittClassFp& w) {
    json j{{"p", num(w.p)}, {"r_mod2", num(long(w.r_mod2))}, {"disc_is_square", w.disc_is_square}};
    if (w.z4) j["z4"] = num(long(*w.z4));
    return j;
}

inline json enc(const WittClassQ& w) {
    json local = json::object();
    for (const auto& [p, c] : w.local) local[num(p)] = enc(c);
    return json{{"signature", num(w.signature)}, {"dim_mod2", num(long(w.dim_mod2))},
                {"residue2", num(long(w.residue2))}, {"local", local}};
}

inline json enc(const WittClassRX& w) {
    json real = json::array(), h = json::array();
    for (const auto& [x, jump] : w.real_part) real.push_back({{"root", enc(x)}, {"jump", num(jump)}});
    for (const auto& [f, par] : w.h_part) h.push_back({{"factor", enc(f)}, {"parity", num(long(par))}});
    return json{{"tau_inf", num(w.tau_inf)}, {"real_part", real}, {"h_part", h}};
}

inline json enc(const LinkingFormZ& l) {
    json a = json::array();
    for (const auto& [c, x] : l.summands) a.push_back({num(c), num(x)});
    return a;
}

inline LinkingFormZ linking(const json& j) {
    if (!j.is_array()) throw usage_error("linking form must be an array of [c, a] pairs");
    LinkingFormZ l;
    for (const auto& s : j) {
        if (!s.is_array() || s.size() != 2) throw usage_error("linking summand must be [c, a]");
        l.summands.emplace_back(integer(s[0]), integer(s[1]));
    }
    return l;
}

inline Mat2 mat2(const json& j) {
    auto m = qmatrix(j);
    if (m.rows() != 2 || m.cols() != 2) throw usage_error("expected a 2x2 integer matrix");
    Mat2 r;
    for (size_t i = 0; i < 4; ++i) {
        const Rational& x = m(i / 2, i % 2);
        if (!x.is_integer()) throw usage_error("expected integer entries");
        r[i] = x.num();
    }
    return r;
}

inline json enc(const Mat2& m) {
    return json::array({json::array({num(m[0]), num(m[1])}), json::array({num(m[2]), num(m[3])})});
}

}  // namespace codec

struct Provenance {
    std::string tag, note;
};

// Documented identity anchors attached to responses.
inline const std::map<std::string, std::string>& provenance_tags() {
    static const std::map<std::string, std::string> tags = {
        {"exact", "exact arithmetic only"},
        {"inertia", "law of inertia via congruence diagonalization"},
        {"sjgf", "signature from sign variations of leading principal minors"},
        {"eps-perturbation", "inertia from minors of S + eps I and S - eps I"},
        {"plumbing", "plumbing of a form along a vector"},
        {"formation-boundary", "boundary of a formation as a form on G-perp / G"},
        {"l-genus", "Hirzebruch L-polynomials from the power series sqrt(x)/tanh(sqrt(x))"},
        {"sturm", "Sturm sequence sign variation count"},
        {"sylvester-tri", "signature of the tridiagonal matrix of Sturm quotients"},
        {"jacobi-hermite", "signature of the Hankel matrix of power sums"},
        {"bezout", "signature of the Bezoutian of P and P'"},
        {"continued-fraction", "improper continued fractions and tridiagonal determinants"},
        {"witt-q", "W(Q) through signature and residues at primes"},
        {"witt-fp", "Witt group of a finite field"},
        {"witt-rx", "W(R(X)) through total signature and non-real discriminant parities"},
        {"residue", "second residue at an irreducible polynomial"},
        {"linking", "linking form boundary and devissage"},
        {"lens", "linking form of a lens space"},
        {"wall-maslov", "Wall form of a lagrangian triple"},
        {"meyer", "Meyer cocycle from graph lagrangians"},
        {"psl2", "normal form in the free product Z/2 * Z/3"},
        {"dedekind", "Dedekind sums via the sawtooth function"},
        {"signature-defect", "tridiagonal signature defect against Dedekind sums"},
        {"seifert", "Seifert matrix of the canonical surface of a braid closure"},
        {"alexander", "Alexander polynomial det(z S - S^T)"},
        {"levine-tristram", "omega-signatures of (1 - w) S + (1 - conj w) S^T"},
        {"fibred", "Seifert form of a fibred automorphism"},
    };
    return tags;
}

struct Outcome {
    json result;
    std::vector<Provenance> provenance;
};

using Handler = std::function<Outcome(const json&)>;

namespace detail {

inline const json& param(const json& p, const char* key) {
    if (!p.is_object() || !p.contains(key))
        throw usage_error(std::string("missing parameter '") + key + "'");
    return p.at(key);
}

inline bool has(const json& p, const char* key) { return p.is_object() && p.contains(key); }

inline Outcome out(json r, std::vector<Provenance> prov) { return {std::move(r), std::move(prov)}; }

inline std::vector<Rational> chi_param(const json& p) { return codec::rvec(param(p, "chi")); }

inline SeifertMatrix seifert_param(const json& p) {
    if (has(p, "braid")) {
        const json& b = p.at("braid");
        if (!b.is_string()) throw usage_error("braid must be a string like '2: 1 1 1'");
        return seifert_matrix(parse_braid(b.get<std::string>()));
    }
    if (has(p, "sigma")) return {codec::qmatrix(p.at("sigma")), 1};
    throw usage_error("need 'braid' or 'sigma'");
}

inline std::pair<long, unsigned long> angle_param(const json& p) {
    Rational r = codec::rational(param(p, "angle"));
    if (!r.num().fits_slong_p() || !r.den().fits_ulong_p()) throw usage_error("angle out of range");
    return {r.num().get_si(), r.den().get_ui()};
}

inline Lagrangian lagrangian_param(const json& p, const char* key, const json& all) {
    QMatrix span = codec::qmatrix(param(p, key));
    if (has(all, "theta")) return make_lagrangian(codec::qmatrix(all.at("theta")), span);
    return make_lagrangian(span);
}

inline json word_json(const PSL2Word& w) {
    json a = json::array();
    for (int e : w.eps) a.push_back(codec::num(long(e)));
    return a;
}

// Random regular chi with |chi_j| >= 2, deterministic in the seed.
inline std::vector<std::vector<Integer>> defect_corpus(size_t count, unsigned seed) {
    std::vector<std::vector<Integer>> out{{Integer(2), Integer(2)}};
    unsigned long long s = seed;
    auto next = [&]() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((s >> 33) % 1000003);
    };
    while (out.size() < count) {
        size_t n = 1 + next() % 8;
        std::vector<Integer> chi;
        std::vector<Rational> q;
        for (size_t i = 0; i < n; ++i) {
            long v = 2 + next() % 5;
            if (next() % 2) v = -v;
            chi.emplace_back(v);
            q.emplace_back(v);
        }
        if (is_zero(det(tri(q)))) continue;
        out.push_back(chi);
    }
    return out;
}

}  // namespace detail

inline const std::map<std::string, Handler>& handlers() {
    using namespace detail;
    namespace c = codec;
    static const std::map<std::string, Handler> table = {
        // ---- exact ----
        {"exact divmod",
         [](const json& p) {
             auto [q, r] = poly_divmod(c::poly(param(p, "P")), c::poly(param(p, "Q")));
             return out({{"quotient", c::enc(q)}, {"remainder", c::enc(r)}}, {{"exact", "division"}});
         }},
        {"exact gcd",
         [](const json& p) {
             return out(c::enc(poly_gcd(c::poly(param(p, "P")), c::poly(param(p, "Q")))),
                        {{"exact", "monic gcd"}});
         }},
        {"exact squarefree",
         [](const json& p) {
             return out(c::enc(squarefree_part(c::poly(param(p, "P")))), {{"exact", "P / gcd(P, P')"}});
         }},
        {"exact cyclotomic",
         [](const json& p) {
             long q = c::small_int(param(p, "q"));
             if (q < 1) throw usage_error("q must be positive");
             return out(c::enc(cyclotomic_polynomial(static_cast<unsigned long>(q))), {{"exact", "Moebius product"}});
         }},
        {"exact cyc_sign",
         [](const json& p) {
             return out(c::num(long(cyc_sign(c::cyc(param(p, "x"))))), {{"exact", "certified interval sign"}});
         }},
        // ---- forms ----
        {"forms signature",
         [](const json& p) {
             std::string method = has(p, "method") ? p.at("method").get<std::string>() : "auto";
             std::string field = has(p, "field") ? p.at("field").get<std::string>() : "rational";
             if (field == "cyclotomic") {
                 auto s = c::cycmatrix(param(p, "S"));
                 return out(c::enc(signature(s)), {{"inertia", "hermitian over Q(zeta)"}});
             }
             if (field != "rational") throw usage_error("field must be 'rational' or 'cyclotomic'");
             auto s = c::qmatrix(param(p, "S"));
             if (method == "sjgf") {
                 auto r = signature_sjgf(s);
                 if (!r) fail("not_regular", "a leading principal minor vanishes");
                 return out(c::enc(*r), {{"sjgf", "n - 2 var(mu)"}});
             }
             if (method == "lagrange") return out(c::enc(signature_lagrange(s)), {{"inertia", "Lagrange"}});
             if (method == "eps") return out(c::enc(signature_eps(s)), {{"eps-perturbation", ""}});
             if (method != "auto") throw usage_error("unknown method " + method);
             return out(c::enc(signature(s)), {{"sjgf", "fast path when regular"}, {"inertia", "fallback"}});
         }},
        {"forms minors",
         [](const json& p) {
             return out(c::enc_vec(principal_minors(c::qmatrix(param(p, "S")))), {{"sjgf", "leading minors"}});
         }},
        {"forms diagonalize",
         [](const json& p) {
             auto d = diagonalize(c::qmatrix(param(p, "S")));
             return out({{"A", c::enc(d.A)}, {"D", c::enc_vec(d.D)}}, {{"inertia", "A^T S A = D"}});
         }},
        {"forms e8",
         [](const json&) {
             auto m = e8_matrix();
             return out({{"S", c::enc(m)}, {"signature", c::enc(signature(m))},
                         {"minors", c::enc_vec(principal_minors(m))}},
                        {{"plumbing", "E8 tree"}, {"sjgf", "minors 1..8, 1"}});
         }},
        {"forms plumb",
         [](const json& p) {
             int eps = has(p, "epsilon") ? static_cast<int>(c::small_int(p.at("epsilon"))) : 1;
             auto s = c::qmatrix(param(p, "S"));
             auto v = c::rvec(param(p, "v"));
             QMatrix row(1, v.size());
             for (size_t i = 0; i < v.size(); ++i) row(0, i) = v[i];
             return out(c::enc(plumb(s, row, c::rational(param(p, "w")), eps)), {{"plumbing", ""}});
         }},
        {"forms formation",
         [](const json& p) {
             Formation f{c::qmatrix(param(p, "theta")),
                         has(p, "epsilon") ? static_cast<int>(c::small_int(p.at("epsilon"))) : 1,
                         c::qmatrix(param(p, "F")), c::qmatrix(param(p, "G"))};
             auto b = formation_boundary(f);
             return out({{"form", c::enc(b.form)}, {"epsilon", c::num(long(b.epsilon))},
                         {"lagrangian", c::enc(b.L)}, {"complement", c::enc(b.complement)}},
                        {{"formation-boundary", ""}});
         }},
        {"forms lpoly",
         [](const json& p) {
             auto l = l_polynomial(static_cast<int>(c::small_int(param(p, "k"))));
             json terms = json::array();
             for (const auto& [e, coef] : l.terms) {
                 json ex = json::array();
                 for (int x : e) ex.push_back(c::num(long(x)));
                 terms.push_back({{"exponents", ex}, {"coefficient", coef.str()}});
             }
             return out({{"k", c::num(long(l.k))}, {"terms", terms}}, {{"l-genus", ""}});
         }},
        // ---- sturm ----
        {"sturm chain",
         [](const json& p) {
             auto ch = sturm_chain(c::poly(param(p, "P")));
             return out({{"remainders", c::enc_vec(ch.remainders)}, {"quotients", c::enc_vec(ch.quotients)}},
                        {{"sturm", "P_{k+1} = P_k Q_k - P_{k-1}"}});
         }},
        {"sturm count",
         [](const json& p) {
             return out(c::num(count_roots(c::poly(param(p, "P")), c::rational(param(p, "a")),
                                           c::rational(param(p, "b")))),
                        {{"sturm", "distinct roots in [a, b]"}});
         }},
        {"sturm isolate",
         [](const json& p) {
             auto r = isolate_roots(c::poly(param(p, "P")));
             if (has(p, "width")) {
                 Rational w = c::rational(p.at("width"));
                 if (w.sign() <= 0) throw usage_error("width must be positive");
                 for (auto& x : r) refine_to_width(x, w);
             }
             return out(c::enc_vec(r), {{"sturm", "bisection on half-open counts"}});
         }},
        {"sturm compare",
         [](const json& p) {
             auto o = ra_compare(c::real_algebraic(param(p, "x")), c::real_algebraic(param(p, "y")));
             const char* s = o == Order::less ? "<" : (o == Order::equal ? "=" : ">");
             return out(s, {{"sturm", "refinement and common-root count"}});
         }},
        {"sturm tri",
         [](const json& p) {
             if (has(p, "chi")) return out(c::enc(tri(chi_param(p))), {{"continued-fraction", ""}});
             auto m = sturm_tri(c::poly(param(p, "P")));
             json r{{"matrix", c::enc(m)}};
             if (has(p, "x")) {
                 auto s = signature(eval_at(m, c::rational(p.at("x"))));
                 r["signature_at_x"] = c::enc(s);
             }
             return out(r, {{"sylvester-tri", ""}});
         }},
        {"sturm cf_eval",
         [](const json& p) {
             auto v = cf_eval(chi_param(p));
             return out({{"value", v.value.str()}, {"num", v.num.str()}, {"den", v.den.str()}},
                        {{"continued-fraction", "tail determinants"}});
         }},
        {"sturm cf_expand",
         [](const json& p) {
             std::string m = has(p, "mode") ? p.at("mode").get<std::string>() : "big-entry";
             CfMode mode;
             if (m == "even") mode = CfMode::even;
             else if (m == "big-entry") mode = CfMode::big_entry;
             else throw usage_error("mode must be 'even' or 'big-entry'");
             return out(c::enc_vec(cf_expand(c::integer(param(p, "a")), c::integer(param(p, "c")), mode)),
                        {{"continued-fraction", m}});
         }},
        {"roots hermite",
         [](const json& p) {
             Poly P = c::poly(param(p, "P"));
             if (has(p, "t"))
                 return out(c::num(hermite_count(P, c::rational(p.at("t")))), {{"jacobi-hermite", "tau(S(tI - C))"}});
             auto d = jacobi_hermite(P);
             return out({{"companion", c::enc(d.companion)}, {"powersums", c::enc_vec(d.powersums)},
                         {"hermite", c::enc(d.hermite)}, {"signature", c::enc(signature(d.hermite))}},
                        {{"jacobi-hermite", ""}});
         }},
        {"roots bezout",
         [](const json& p) {
             Poly P = c::poly(param(p, "P"));
             Poly Q = has(p, "Q") ? c::poly(p.at("Q")) : P.derivative();
             auto b = bezoutian(P, Q);
             return out({{"bezoutian", c::enc(b)}, {"signature", c::enc(signature(b))}}, {{"bezout", ""}});
         }},
        // ---- witt ----
        {"witt q", [](const json& p) { return out(c::enc(witt_q(c::qmatrix(param(p, "S")))), {{"witt-q", ""}}); }},
        {"witt fp",
         [](const json& p) {
             return out(c::enc(witt_fp(c::ivec(param(p, "diag")), c::integer(param(p, "p")))), {{"witt-fp", ""}});
         }},
        {"witt rx",
         [](const json& p) {
             Matrix<RatFunc> s = has(p, "P") ? sturm_tri(c::poly(p.at("P"))) : c::rxmatrix(param(p, "S"));
             return out(c::enc(witt_rx(s)), {{"witt-rx", "sample-point signatures"}});
         }},
        {"witt residue",
         [](const json& p) {
             Matrix<RatFunc> s = has(p, "P") ? sturm_tri(c::poly(p.at("P"))) : c::rxmatrix(param(p, "S"));
             auto r = residue(s, c::poly(param(p, "pi")));
             json res{{"pi", c::enc(r.pi)}, {"diag", c::enc_vec(r.diag)}};
             if (has(p, "compare")) {
                 ResidueClass other{r.pi, {}};
                 for (const auto& x : p.at("compare")) other.diag.push_back(c::poly(x) % r.pi);
                 res["equal"] = residue_witt_eq(r, other);
             }
             return out(res, {{"residue", ""}});
         }},
        {"link boundary",
         [](const json& p) {
             QMatrix s = has(p, "q") ? tri(c::rvec(p.at("q"))) : c::qmatrix(param(p, "S"));
             return out(c::enc(linking_boundary(s)), {{"linking", "boundary"}});
         }},
        {"link eq",
         [](const json& p) {
             return out(linking_witt_eq(c::linking(param(p, "L1")), c::linking(param(p, "L2"))),
                        {{"linking", "devissage"}});
         }},
        {"lens",
         [](const json& p) {
             Integer cc = c::integer(param(p, "c")), a = c::integer(param(p, "a"));
             auto [nc, na] = lens_normalize(cc, a);
             return out({{"linking", c::enc(lens_linking(cc, a))}, {"normalized", {c::num(nc), c::num(na)}}},
                        {{"lens", ""}});
         }},
        // ---- maslov ----
        {"maslov triple",
         [](const json& p) {
             auto l1 = lagrangian_param(p, "L1", p), l2 = lagrangian_param(p, "L2", p),
                  l3 = lagrangian_param(p, "L3", p);
             QMatrix psi = wall_form(l1, l2, l3);
             return out({{"index", c::num(wall_maslov(l1, l2, l3))}, {"wall_form", c::enc(psi)}},
                        {{"wall-maslov", ""}});
         }},
        {"maslov cocycle",
         [](const json& p) {
             return out(c::num(cocycle_defect(lagrangian_param(p, "L1", p), lagrangian_param(p, "L2", p),
                                              lagrangian_param(p, "L3", p), lagrangian_param(p, "L4", p))),
                        {{"wall-maslov", "alternating sum"}});
         }},
        {"maslov meyer",
         [](const json& p) {
             if (has(p, "A") && has(p, "B"))
                 return out(c::num(meyer_m(c::qmatrix(p.at("A")), c::qmatrix(p.at("B")))),
                            {{"meyer", "m(A, B) = Meyer(1, A, AB)"}});
             return out(c::num(meyer(c::qmatrix(param(p, "g0")), c::qmatrix(param(p, "g1")),
                                     c::qmatrix(param(p, "g2")))),
                        {{"meyer", ""}});
         }},
        {"mod normal_form",
         [](const json& p) { return out(word_json(psl2_normal_form(c::mat2(param(p, "A")))), {{"psl2", ""}}); }},
        {"mod rademacher",
         [](const json& p) {
             return out(c::num(rademacher(c::mat2(param(p, "A")))), {{"psl2", "sum of U exponents"}});
         }},
        {"mod sawtooth",
         [](const json& p) { return out(sawtooth(c::rational(param(p, "x"))).str(), {{"dedekind", ""}}); }},
        {"mod dedekind",
         [](const json& p) {
             return out(dedekind_sum(c::integer(param(p, "a")), c::integer(param(p, "c"))).str(),
                        {{"dedekind", "sawtooth sum"}});
         }},
        {"mod defect",
         [](const json& p) {
             if (has(p, "search") && p.at("search").get<bool>()) {
                 std::vector<std::vector<Integer>> corpus;
                 if (has(p, "chis"))
                     for (const auto& x : p.at("chis")) corpus.push_back(c::ivec(x));
                 else
                     corpus = defect_corpus(has(p, "count") ? c::small_int(p.at("count")) : 200, 1);
                 json surv = json::array();
                 for (const auto& conv : all_conventions()) {
                     bool ok = true;
                     for (const auto& chi : corpus) {
                         auto d = signature_defect_check(chi, conv);
                         if (d.lhs != d.rhs) {
                             ok = false;
                             break;
                         }
                     }
                     if (ok) surv.push_back(conv.name());
                 }
                 return out({{"instances", c::num(long(corpus.size()))}, {"survivors", surv}},
                            {{"signature-defect", "convention search"}});
             }
             std::string name = has(p, "convention") ? p.at("convention").get<std::string>() : std::string(kFrozenDefectConvention);
             auto conv = parse_convention(name);
             if (!conv) throw usage_error("unknown convention " + name);
             auto d = signature_defect_check(c::ivec(param(p, "chi")), *conv);
             return out({{"lhs", d.lhs.str()}, {"rhs", d.rhs.str()}, {"equal", d.lhs == d.rhs},
                         {"matrix", c::enc(d.matrix)}, {"convention", name}},
                        {{"signature-defect", name}});
         }},
        // ---- knots ----
        {"knot seifert",
         [](const json& p) {
             auto s = seifert_param(p);
             return out({{"sigma", c::enc(s.sigma)}, {"components", c::num(long(s.components))}},
                        {{"seifert", ""}});
         }},
        {"knot alexander",
         [](const json& p) { return out(c::enc(alexander(seifert_param(p))), {{"alexander", ""}}); }},
        {"knot signature",
         [](const json& p) { return out(c::num(knot_signature(seifert_param(p))), {{"seifert", "tau(S + S^T)"}}); }},
        {"knot omega",
         [](const json& p) {
             auto [a, q] = angle_param(p);
             return out(c::num(omega_signature(seifert_param(p), a, q)), {{"levine-tristram", ""}});
         }},
        {"knot profile",
         [](const json& p) {
             auto sf = signature_function(seifert_param(p));
             json bp = json::array(), pl = json::array(), sm = json::array(), jp = json::array();
             for (const auto& x : sf.breakpoints) bp.push_back(c::enc(x));
             for (long v : sf.plateaus) pl.push_back(c::num(v));
             for (const auto& [a, q] : sf.samples) sm.push_back(c::num(a) + "/" + c::num(long(q)));
             for (long v : sf.jumps()) jp.push_back(c::num(v));
             return out({{"breakpoints_x", bp}, {"plateaus", pl}, {"sample_angles", sm}, {"jumps", jp}},
                        {{"levine-tristram", "plateaus between circle roots"}});
         }},
        {"knot enlarge",
         [](const json& p) {
             auto s = s_equiv_enlarge(seifert_param(p), c::rvec(param(p, "alpha")));
             return out(c::enc(s.sigma), {{"seifert", "S-equivalence"}});
         }},
        {"knot fibred",
         [](const json& p) {
             auto s = fibred_seifert(c::qmatrix(param(p, "A")), c::qmatrix(param(p, "theta")));
             return out(c::enc(s.sigma), {{"fibred", "theta (I - A)^{-1}"}});
         }},
    };
    return table;
}

struct Response {
    json body;
    int exit_code = 0;  // 0 ok, 1 domain error, 2 usage error
};

inline Response dispatch(const std::string& cmd, const json& params) {
    const auto& h = handlers();
    auto it = h.find(cmd);
    if (it == h.end())
        return {{{"ok", false}, {"error", {{"code", "unknown_command"}, {"message", "unknown command '" + cmd + "'"}}}},
                2};
    try {
        Outcome o = it->second(params);
        json prov = json::array();
        for (const auto& pv : o.provenance) prov.push_back({{"tag", pv.tag}, {"note", pv.note}});
        return {{{"ok", true}, {"result", o.result}, {"provenance", prov}}, 0};
    } catch (const usage_error& e) {
        return {{{"ok", false}, {"error", {{"code", "usage"}, {"message", e.what()}}}}, 2};
    } catch (const json::exception& e) {
        return {{{"ok", false}, {"error", {{"code", "usage"}, {"message", e.what()}}}}, 2};
    } catch (const domain_error& e) {
        return {{{"ok", false}, {"error", {{"code", e.code()}, {"message", e.what()}}}}, 1};
    }
}

// A request object carries its command under "cmd".
inline Response dispatch(const json& request) {
    if (!request.is_object() || !request.contains("cmd") || !request["cmd"].is_string())
        return {{{"ok", false}, {"error", {{"code", "usage"}, {"message", "request needs a string 'cmd'"}}}}, 2};
    return dispatch(request["cmd"].get<std::string>(), request);
}

}  // namespace signet
