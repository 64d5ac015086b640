#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tatekit/errors.hpp"
#include "tatekit/sampling.hpp"
#include "tatekit/series.hpp"

using namespace tatekit;

namespace {

FieldRef Q = FieldSpec::rationals();

FieldScalar q(long a, unsigned long b = 1) { return FieldScalar::rational(Q, mpq_class(a, b)); }

TruncatedSeries poly(int n, std::initializer_list<std::pair<Exponent, FieldScalar>> terms,
                     std::vector<std::int64_t> hi) {
    TruncatedSeries::Terms t;
    for (const auto& [e, c] : terms) t.emplace(e, c);
    return TruncatedSeries::from_terms(Q, n, std::move(t), hi);
}

bool is_one_on(const TruncatedSeries& s, const std::vector<std::int64_t>& window) {
    const int n = s.n();
    for (int k = 0; k < n; ++k)
        if (s.cert().hi()[k] < window[k]) return false;
    if (s.terms().size() != 1) return false;
    return s.terms().begin()->first == Exponent(n, 0) && s.terms().begin()->second.is_one();
}

}  // namespace

// ============================================================================
// Certificates
// ============================================================================

TEST(Certificate, StatusWalksFromOutermostAxis) {
    // lo_2 = 0, axis-1 lower bound -x, precision (4, 3).
    BoundCertificate c(0, {SliceRule::affine(0, -1)}, {4, 3});
    EXPECT_EQ(c.status({0, -1}), PointStatus::Zero);   // below lo_2
    EXPECT_EQ(c.status({-3, 2}), PointStatus::Zero);   // below -x at x=2
    EXPECT_EQ(c.status({-2, 2}), PointStatus::Known);
    EXPECT_EQ(c.status({4, 0}), PointStatus::Unknown);  // beyond hi_1
    EXPECT_EQ(c.status({-100, 3}), PointStatus::Unknown);  // beyond hi_2, inner unconstrained
}

TEST(Certificate, CanonicalFormCompressesAffineTail) {
    std::map<std::int64_t, std::int64_t> pts = {{0, 5}, {1, 0}, {2, -1}, {3, -2}};
    auto c = BoundCertificate::build(2, 0, {8, 4}, [&](int, std::int64_t x) -> std::optional<std::int64_t> {
        return pts.at(x);
    });
    const SliceRule& r = c.rules()[0];
    ASSERT_TRUE(r.tail.has_value());
    EXPECT_EQ(r.tail->second, -1);
    EXPECT_EQ(r.tail_start, 1);
    EXPECT_EQ(r.exceptions.size(), 1u);
    EXPECT_EQ(r.at(0), 5);
    // Rebuilding from the canonical rule is idempotent.
    BoundCertificate again(c.lo_top(), c.rules(), c.hi());
    EXPECT_EQ(again, c);
}

TEST(Certificate, LowerBoundsAreClampedToPrecision) {
    BoundCertificate c(10, {SliceRule::constant(20)}, {4, 3});
    EXPECT_EQ(c.lo_top(), 3);
    EXPECT_EQ(c.ranges()[1].lo, 3);
}

// ============================================================================
// Worked values
// ============================================================================

TEST(Series, AddCancelsConstant) {
    auto a = poly(1, {{{0}, q(1)}, {{1}, q(1)}}, {8});
    auto b = poly(1, {{{0}, q(-1)}}, {8});
    auto s = s_add(a, b);
    ASSERT_EQ(s.terms().size(), 1u);
    EXPECT_EQ(s.terms().begin()->first, Exponent{1});
}

TEST(Series, MulOfLaurentPolynomials) {
    auto a = poly(1, {{{-1}, q(1)}, {{0}, q(1)}}, {8});
    auto b = poly(1, {{{1}, q(1)}, {{0}, q(-1)}}, {8});
    auto s = s_mul(a, b);
    EXPECT_EQ(s.to_string(), "-1*t1^-1 + t1 + O(t1^7)");
}

TEST(Series, ProductOfDiagonalCertificateShiftsSlope) {
    TruncatedSeries::Terms t;
    for (std::int64_t al = 0; al < 4; ++al) t.emplace(Exponent{-al, al}, q(1));
    auto diag = TruncatedSeries::from_terms(Q, 2, t, {8, 4});
    auto g = TruncatedSeries::monomial(Q, {2, 0}, q(1), {20, 20});
    auto p = s_mul(diag, g);
    for (std::int64_t x = 0; x < 4; ++x) EXPECT_EQ(p.cert().bound(0, x), 2 - x);
}

TEST(Series, InverseOfOuterVariable) {
    auto t2 = poly(2, {{{0, 1}, q(1)}}, {8, 8});
    auto inv = s_inv(t2, {4, 4});
    EXPECT_EQ(inv.to_string(), "t2^-1 + O(t1^4, t2^4)");
}

TEST(Series, GeometricInverse) {
    auto a = poly(1, {{{0}, q(1)}, {{1}, q(-1)}}, {16});
    auto inv = s_inv(a, {4});
    EXPECT_EQ(inv.to_string(), "1 + t1 + t1^2 + t1^3 + O(t1^4)");
}

TEST(Series, InverseOfMixedBinomialHasDiagonalCertificate) {
    auto a = poly(2, {{{1, 0}, q(1)}, {{0, 1}, q(1)}}, {16, 16});
    auto inv = s_inv(a, {4, 4});
    EXPECT_EQ(inv.to_string(), "t1^-1 + -1*t1^-2*t2 + t1^-3*t2^2 + -1*t1^-4*t2^3 + O(t1^4, t2^4)");
    EXPECT_EQ(inv.cert().lo_top(), 0);
    for (std::int64_t x = 0; x < 4; ++x) EXPECT_EQ(inv.cert().bound(0, x), -1 - x);
}

TEST(Series, LexValuationUsesOutermostAxisFirst) {
    auto a = poly(2, {{{-2, 3}, q(1)}, {{5, 3}, q(1)}, {{0, 4}, q(1)}}, {8, 8});
    EXPECT_EQ(lex_valuation(a), (Exponent{-2, 3}));
    auto c = poly(3, {{{0, 0, 0}, q(7)}}, {8, 8, 8});
    EXPECT_EQ(lex_valuation(c), (Exponent{0, 0, 0}));
    EXPECT_THROW(lex_valuation(poly(2, {}, {4, 4})), ZeroSeries);
}

TEST(Series, LexValuationRefusesHiddenSlices) {
    // The t2^0 slice is known only up to t1^4; beyond that it may hide a
    // lex-smaller term than t2.
    BoundCertificate c(0, {SliceRule::constant(0)}, {4, 4});
    TruncatedSeries::Terms t;
    t.emplace(Exponent{0, 1}, q(1));
    TruncatedSeries a(Q, 2, t, c);
    EXPECT_THROW(lex_valuation(a), IndeterminateLeading);
    EXPECT_THROW(s_inv(a, {2, 2}), NonUnitLeading);
}

TEST(Series, ResidueKeepsConstantSlice) {
    auto a = poly(2, {{{0, 0}, q(1)}, {{1, 0}, q(1)}, {{-5, 1}, q(1)}}, {8, 8});
    EXPECT_EQ(residue(a).to_string(), "1 + t1 + O(t1^8)");
    EXPECT_THROW(residue(poly(2, {{{0, -1}, q(1)}}, {8, 8})), NotIntegral);
}

TEST(Series, LiftThenResidueIsIdentity) {
    auto a = poly(1, {{{-2}, q(3)}, {{1}, q(1, 2)}}, {6});
    auto l = lift_std(a, 4);
    EXPECT_EQ(residue(l), a);
}

TEST(Series, MismatchedInputsAreRejected) {
    auto a = poly(1, {{{0}, q(1)}}, {4});
    auto b = TruncatedSeries::from_terms(FieldSpec::prime(5), 1, {}, {4});
    EXPECT_THROW(s_add(a, b), SpecMismatch);
    EXPECT_THROW(s_add(a, poly(2, {}, {4, 4})), ArityMismatch);
}

TEST(Series, ZeroCertifiedTermIsRejected) {
    TruncatedSeries::Terms t;
    t.emplace(Exponent{-1}, q(1));
    EXPECT_THROW(TruncatedSeries(Q, 1, t, BoundCertificate::rectangular({0}, {4})), PreconditionViolated);
}

// ============================================================================
// Properties
// ============================================================================

namespace {

struct Pair {
    TruncatedSeries a, b;
};

Pair random_pair(sampling::Rng& rng, int n) {
    auto k = sampling::random_field(rng);
    sampling::SeriesShape shape{n, 4, -2, 0.35};
    return {sampling::random_series(rng, k, shape), sampling::random_series(rng, k, shape)};
}

}  // namespace

TEST(SeriesProperty, CertificatesAreSoundForAnyCompletion) {
    sampling::Rng rng(2024);
    for (int i = 0; i < 150; ++i) {
        int n = 1 + i % 3;
        auto [a, b] = random_pair(rng, n);
        oracle::Box box = oracle::hull(oracle::around(a, 3), oracle::around(b, 3));
        auto fa = oracle::complete(a, rng, box);
        auto fb = oracle::complete(b, rng, box);
        oracle::Box wide = box;
        for (int k = 0; k < n; ++k) {
            wide.lo[k] = 2 * box.lo[k];
            wide.hi[k] = 2 * box.hi[k];
        }
        std::string why;
        auto sum = s_add(a, b);
        sum.check_invariants();
        EXPECT_TRUE(oracle::consistent(sum, oracle::dense_add(fa, fb), box, &why)) << why;
        auto prod = s_mul(a, b);
        prod.check_invariants();
        // Only points whose contributing pairs lie inside the completion box
        // are comparable.
        oracle::Box inner = box;
        for (int k = 0; k < n; ++k) {
            inner.lo[k] = box.lo[k] + box.lo[k];
            inner.hi[k] = box.lo[k] + box.hi[k];
        }
        for (int k = 0; k < n; ++k) inner.hi[k] = std::min(inner.hi[k], prod.cert().hi()[k]);
        EXPECT_TRUE(oracle::consistent(prod, oracle::dense_mul(fa, fb), inner, &why)) << why;
        (void)wide;
    }
}

TEST(SeriesProperty, RingAxiomsOnCommonWindow) {
    sampling::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + i % 3;
        auto k = sampling::random_field(rng);
        sampling::SeriesShape shape{n, n == 3 ? 4 : 6, -2, 0.3};
        auto a = sampling::random_series(rng, k, shape);
        auto b = sampling::random_series(rng, k, shape);
        auto c = sampling::random_series(rng, k, shape);
        std::string why;
        EXPECT_TRUE(agree_on_common(s_add(a, b), s_add(b, a), &why)) << why;
        EXPECT_TRUE(agree_on_common(s_mul(a, b), s_mul(b, a), &why)) << why;
        EXPECT_TRUE(agree_on_common(s_add(s_add(a, b), c), s_add(a, s_add(b, c)), &why)) << why;
        EXPECT_TRUE(agree_on_common(s_mul(s_mul(a, b), c), s_mul(a, s_mul(b, c)), &why)) << why;
        EXPECT_TRUE(agree_on_common(s_mul(a, s_add(b, c)), s_add(s_mul(a, b), s_mul(a, c)), &why)) << why;
        EXPECT_TRUE(s_sub(a, a).is_zero());
    }
}

TEST(SeriesProperty, InverseIsExactOnRequestedWindow) {
    sampling::Rng rng(99);
    for (int i = 0; i < 60; ++i) {
        int n = 1 + i % 3;
        auto k = sampling::random_field(rng);
        sampling::SeriesShape shape{n, 4, -2, 0.3};
        auto u = sampling::random_unit_series(rng, k, shape, 48);
        Exponent shift(n);
        for (int j = 0; j < n; ++j) shift[j] = sampling::uniform(rng, -2, 2);
        auto a = s_shift(u, shift);
        std::vector<std::int64_t> window(n, n == 3 ? 3 : 5);
        // Ask for enough precision that the product a * a^-1 is certified
        // on the whole window.
        std::vector<std::int64_t> ask(n);
        for (int j = 0; j < n; ++j) ask[j] = window[j] - std::min<std::int64_t>(0, a.cert().ranges()[j].lo);
        auto inv = s_inv(a, ask);
        inv.check_invariants();
        for (int j = 0; j < n; ++j) EXPECT_EQ(inv.cert().hi()[j], ask[j]);
        auto prod = s_mul(a, inv);
        for (int j = 0; j < n; ++j) EXPECT_GE(prod.cert().hi()[j], window[j]) << prod.to_string();
        EXPECT_EQ(prod.status(Exponent(n, 0)), PointStatus::Known);
        EXPECT_EQ(prod.terms().size(), 1u) << prod.to_string();
        EXPECT_TRUE(prod.coeff(Exponent(n, 0)).is_one()) << prod.to_string();
    }
}

TEST(SeriesProperty, ValuationIsAdditiveAndUltrametric) {
    sampling::Rng rng(5);
    int compared = 0;
    for (int i = 0; i < 200; ++i) {
        int n = 1 + i % 3;
        auto k = sampling::random_field(rng);
        sampling::SeriesShape shape{n, 4, -2, 0.3};
        Exponent va(n), vb(n);
        for (int j = 0; j < n; ++j) {
            va[j] = sampling::uniform(rng, -3, 3);
            vb[j] = sampling::uniform(rng, -3, 3);
        }
        auto a = s_shift(sampling::random_unit_series(rng, k, shape, 12), va);
        auto b = s_shift(sampling::random_unit_series(rng, k, shape, 12), vb);
        // Brute-force leading exponent of the stored terms.
        EXPECT_EQ(lex_valuation(a), va);
        Exponent sum(n);
        for (int j = 0; j < n; ++j) sum[j] = va[j] + vb[j];
        EXPECT_EQ(lex_valuation(s_mul(a, b)), sum);
        auto s = s_add(a, b);
        if (s.is_zero()) continue;
        Exponent vs;
        try {
            vs = lex_valuation(s);
        } catch (const IndeterminateLeading&) {
            continue;
        }
        ++compared;
        const Exponent& lo = lex_compare(va, vb) < 0 ? va : vb;
        EXPECT_GE(lex_compare(vs, lo), 0);
    }
    EXPECT_GT(compared, 150);
}
