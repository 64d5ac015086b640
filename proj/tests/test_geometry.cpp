#include <gtest/gtest.h>

#include <chrono>
#include <set>

#include "tatekit/errors.hpp"
#include "tatekit/geometry.hpp"
#include "tatekit/sampling.hpp"

using namespace tatekit;

namespace {

using P = std::vector<long>;

// Schoolbook arithmetic over F_p, kept apart from the library.
P trim(P a, long p) {
    for (auto& c : a) c = ((c % p) + p) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}
P pmul(const P& a, const P& b, long p) {
    if (a.empty() || b.empty()) return {};
    P r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return trim(r, p);
}
P psub(P a, const P& b, long p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return trim(a, p);
}
// Remainder modulo a monic m by long division.
P prem(P a, const P& m, long p) {
    a = trim(a, p);
    while (a.size() >= m.size()) {
        long c = a.back();
        size_t s = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) a[s + i] -= c * m[i];
        a = trim(a, p);
    }
    return a;
}
P from(const polymod::Poly& f) { return P(f.begin(), f.end()); }

// f(a) mod m by Horner.
P eval_mod(const P& f, const P& a, const P& m, long p) {
    P r;
    for (size_t i = f.size(); i-- > 0;) {
        r = pmul(r, a, p);
        if (r.empty()) r = {0};
        r[0] += f[i];
        r = prem(r, m, p);
    }
    return r;
}

P ppow(const P& a, int e, long p) {
    P r = {1};
    while (e-- > 0) r = pmul(r, a, p);
    return r;
}

}  // namespace

TEST(Geometry, HenselFirstCorrection) {
    auto m = hensel_coefficient_field(5, {-2, 0, 1}, 2);
    // a = x + x*pi modulo pi^2.
    EXPECT_TRUE(m.digits.coeff({0}) == FieldScalar::residue(m.kappa, {0, 1}));
    EXPECT_TRUE(m.digits.coeff({1}) == FieldScalar::residue(m.kappa, {0, 1}));
    const long p = 5;
    P f = {3, 0, 1};
    P x_plus_xf = psub(P{0, 1}, psub(P{}, pmul({0, 1}, f, p), p), p);
    P f2 = pmul(f, f, p);
    EXPECT_TRUE(prem(psub(pmul(x_plus_xf, x_plus_xf, p), {2}, p), f2, p).empty());
    EXPECT_EQ(prem(from(m.root), f2, p), prem(x_plus_xf, f2, p));
}

TEST(Geometry, HenselTrivialCases) {
    auto base = hensel_coefficient_field(5, {-2, 0, 1}, 1);
    EXPECT_EQ(base.root, (polymod::Poly{0, 1}));
    EXPECT_EQ(base.error_exponents, (std::vector<int>{1}));
    for (int N : {1, 3, 6}) {
        auto lin = hensel_coefficient_field(5, {0, 1}, N);
        // f = x: the root is 0 once N > 1, and kappa = F_5 sits as constants.
        if (N > 1) EXPECT_TRUE(lin.root.empty());
        EXPECT_EQ(lin.embedding, (std::vector<polymod::Poly>{{1}}));
    }
    EXPECT_THROW(hensel_coefficient_field(5, {3}, 2), InvalidSpec);
    EXPECT_THROW(hensel_coefficient_field(5, {-1, 0, 1}, 3), NotIrreducible);
}

TEST(GeometryProperty, HenselContract) {
    struct Case {
        long p;
        polymod::Poly f;
    };
    std::vector<Case> cases = {{5, {-2, 0, 1}}, {2, {1, 1, 1}}, {3, {1, 0, 1}}, {7, {3, 0, 0, 1}},
                               {2, {1, 1, 0, 1}}, {11, {4, 1}}, {13, {2, 0, 1}}};
    for (const auto& c : cases)
        for (int N = 1; N <= 12; ++N) {
            auto m = hensel_coefficient_field(c.p, c.f, N);
            P f = from(m.f), fN = ppow(f, N, c.p);
            EXPECT_TRUE(eval_mod(f, from(m.root), fN, c.p).empty()) << c.p << " N=" << N;
            EXPECT_EQ(prem(from(m.root), f, c.p), prem({0, 1}, f, c.p));
            // Error exponents at least double per step until they reach N.
            for (size_t i = 1; i < m.error_exponents.size(); ++i)
                EXPECT_GE(m.error_exponents[i], std::min(N, 2 * m.error_exponents[i - 1]));
            EXPECT_EQ(m.error_exponents.back(), N);
            // The digits reassemble to the root.
            P sum;
            P pw = {1};
            for (int j = 0; j < N; ++j) {
                auto cj = m.digits.coeff({j});
                if (!cj.is_zero()) {
                    P term = pmul(from(cj.as_residue()), pw, c.p);
                    sum = psub(sum, psub({}, term, c.p), c.p);
                }
                pw = pmul(pw, f, c.p);
            }
            EXPECT_EQ(sum, prem(from(m.root), fN, c.p));
        }
}

TEST(Geometry, HenselIsFast) {
    auto t0 = std::chrono::steady_clock::now();
    auto m = hensel_coefficient_field(5, {-2, 0, 1}, 8);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_LT(s, 1.0);
    P f = from(m.f);
    EXPECT_TRUE(prem(psub(pmul(from(m.root), from(m.root), 5), {2}, 5), ppow(f, 8, 5), 5).empty());
}

TEST(Geometry, AdeleLine) {
    auto d = adele_line(5, {-2, 0, 1});
    EXPECT_EQ(d.field, "F_25((pi))");
    EXPECT_EQ(d.steps.size(), 1u);
    EXPECT_EQ(adele_line(2, {0, 1}).field, "F_2((pi))");
    EXPECT_THROW(adele_line(5, {-1, 0, 1}), NotIrreducible);
    // 1 - pi inverts to the geometric series.
    auto one = FieldScalar::one(d.base);
    TruncatedSeries::Terms t;
    t.emplace(Exponent{0}, one);
    t.emplace(Exponent{1}, -one);
    auto inv = s_inv(TruncatedSeries::from_terms(d.base, 1, t, {8}), {5});
    for (int j = 0; j < 5; ++j) EXPECT_TRUE(inv.coeff({j}).is_one());
}

TEST(Geometry, AdelePlaneStaircase) {
    auto Q = FieldSpec::rationals();
    auto d = adele_plane_smooth(Q);
    ASSERT_EQ(d.steps.size(), 2u);
    EXPECT_EQ(d.steps[0].residue, "Q((x))");
    EXPECT_EQ(d.steps[1].ring, "Q[[x]]");
    TruncatedSeries::Terms t;
    t.emplace(Exponent{-1, 1}, FieldScalar::one(Q));
    t.emplace(Exponent{0, 0}, FieldScalar::one(Q));
    auto a = TruncatedSeries::from_terms(Q, 2, t, {4, 3});
    EXPECT_EQ(staircase_residue(d, 1, a).to_string(), "1 + O(t1^4)");
    TruncatedSeries::Terms v;
    v.emplace(Exponent{-2, 3}, FieldScalar::one(Q));
    EXPECT_EQ(lex_valuation(TruncatedSeries::from_terms(Q, 2, v, {4, 5})), (Exponent{-2, 3}));
    sampling::Rng rng(3);
    for (int s = 0; s < 50; ++s) {
        auto b = sampling::random_polynomial(rng, Q, 1, 4, 3);
        EXPECT_EQ(staircase_residue(d, 1, staircase_lift(d, 1, b, 2)), b);
        auto c = TruncatedSeries::from_terms(Q, 1, {}, {3});
        if (!b.terms().empty() && b.terms().begin()->first[0] >= 0) c = b;
        EXPECT_EQ(staircase_residue(d, 2, staircase_lift(d, 2, residue(c), 2)), residue(c));
    }
    EXPECT_THROW(staircase_residue(d, 2, a), ArityMismatch);
}

TEST(Geometry, SemigroupGaps) {
    EXPECT_EQ(semigroup_gaps({2, 3}), (std::vector<std::int64_t>{1}));
    EXPECT_EQ(semigroup_gaps({3, 5}), (std::vector<std::int64_t>{1, 2, 4, 7}));
    EXPECT_TRUE(semigroup_gaps({1}).empty());
    EXPECT_THROW(semigroup_gaps({4, 6}), NotCoprime);
}

TEST(GeometryProperty, GapsMatchBruteForce) {
    sampling::Rng rng(6);
    for (int t = 0; t < 100; ++t) {
        std::vector<std::int64_t> g;
        int k = static_cast<int>(sampling::uniform(rng, 1, 3));
        for (int i = 0; i < k; ++i) g.push_back(sampling::uniform(rng, 2, 9));
        std::int64_t gg = 0;
        for (auto a : g) gg = std::gcd(gg, a);
        if (gg != 1) {
            EXPECT_THROW(semigroup_gaps(g), NotCoprime);
            continue;
        }
        // Representable values by nested loops up to 120.
        std::set<std::int64_t> reach = {0};
        for (std::int64_t v = 1; v <= 120; ++v)
            for (auto a : g)
                if (v >= a && reach.count(v - a)) reach.insert(v);
        std::vector<std::int64_t> expect;
        for (std::int64_t v = 0; v <= 120; ++v)
            if (!reach.count(v)) expect.push_back(v);
        EXPECT_EQ(semigroup_gaps(g), expect);
    }
}

TEST(Geometry, CuspRealizability) {
    auto v0 = cusp_is_beilinson_realizable(MonomialLattice::standard(1, 0));
    EXPECT_TRUE(v0.realizable);
    auto v2 = cusp_is_beilinson_realizable(MonomialLattice::standard(1, 2));
    EXPECT_TRUE(v2.realizable);
    EXPECT_EQ(v2.generator, (std::pair<std::int64_t, std::int64_t>(1, 0)));
    auto v1 = cusp_is_beilinson_realizable(MonomialLattice::standard(1, 1));
    EXPECT_FALSE(v1.realizable);
    EXPECT_EQ(v1.gap, std::optional<std::int64_t>(1));
    EXPECT_FALSE(cusp_is_beilinson_realizable(MonomialLattice::standard(1, -1)).realizable);
    EXPECT_THROW(cusp_is_beilinson_realizable(MonomialLattice::standard(2, 0)), NotStandardForm);
}

TEST(GeometryProperty, CuspAgreesWithGapsAndIsMonotone) {
    auto gaps = semigroup_gaps({2, 3});
    for (std::int64_t v = 0; v <= 40; ++v) {
        auto r = cusp_is_beilinson_realizable(MonomialLattice::standard(1, v));
        bool gap = std::find(gaps.begin(), gaps.end(), v) != gaps.end();
        EXPECT_EQ(r.realizable, !gap) << v;
        if (r.realizable) {
            EXPECT_EQ(2 * r.generator->first + 3 * r.generator->second, v);
            for (std::int64_t s : {0, 2, 3, 4, 5, 7})
                EXPECT_TRUE(cusp_is_beilinson_realizable(MonomialLattice::standard(1, v + s)).realizable);
        }
    }
}

TEST(Geometry, StrictnessWitnesses) {
    auto w = lattice_strictness();
    ASSERT_EQ(w.size(), 2u);
    for (const auto& s : w) EXPECT_TRUE(s.holds) << s.claim;
}

TEST(Geometry, ParshinExamples) {
    OpenProfile V;  // U_i = t1^i k[[t1]] below 0, everything from 0 on
    auto r = parshin_cover(V, {-9, -4}, {-8, -3});
    ASSERT_EQ(r.entries.size(), 1u);
    EXPECT_EQ(r.entries[0].left, (Exponent{-9, 6}));
    EXPECT_EQ(r.entries[0].right, (Exponent{0, -10}));
    EXPECT_TRUE(r.entries[0].verified);
    auto one = parshin_cover(V, {0, 0}, {1, 1});
    EXPECT_EQ(one.entries[0].left, (Exponent{0, 0}));
    EXPECT_EQ(one.entries[0].right, (Exponent{0, 0}));
    auto box = parshin_cover(V, {-3, -3}, {4, 4});
    EXPECT_EQ(box.entries.size(), 49u);
    EXPECT_TRUE(box.all_verified());
}

TEST(GeometryProperty, ParshinCoversAnyProfile) {
    sampling::Rng rng(12);
    for (int t = 0; t < 100; ++t) {
        OpenProfile V;
        V.threshold = sampling::uniform(rng, -3, 3);
        V.base = sampling::uniform(rng, -5, 5);
        V.slope = sampling::uniform(rng, -3, 3);
        for (int e = 0; e < 3; ++e) V.exceptions[sampling::uniform(rng, -15, 2)] = sampling::uniform(rng, -10, 10);
        auto r = parshin_cover(V, {-6, -6}, {7, 7});
        ASSERT_TRUE(r.all_verified()) << r.to_string();
        // Independent membership re-check.
        for (const auto& e : r.entries)
            for (const auto& f : {e.left, e.right}) {
                bool in = f[1] >= V.threshold;
                if (!in) {
                    auto it = V.exceptions.find(f[1]);
                    std::int64_t lo = it != V.exceptions.end() ? it->second : V.base + V.slope * f[1];
                    in = f[0] >= lo;
                }
                EXPECT_TRUE(in);
            }
    }
}
