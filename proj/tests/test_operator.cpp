#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tatekit/errors.hpp"
#include "tatekit/operator.hpp"
#include "tatekit/sampling.hpp"

using namespace tatekit;
using K = OperatorExpr::Kind;

namespace {

FieldRef Q = FieldSpec::rationals();

FieldScalar q(long a, unsigned long b = 1) { return FieldScalar::rational(Q, mpq_class(a, b)); }

TruncatedSeries poly(int n, std::initializer_list<std::pair<Exponent, FieldScalar>> terms, std::vector<std::int64_t> hi) {
    TruncatedSeries::Terms t;
    for (const auto& [e, c] : terms) t.emplace(e, c);
    return TruncatedSeries::from_terms(Q, n, std::move(t), hi);
}

OperatorExpr mono_op(const Exponent& e) {
    TruncatedSeries::Terms t;
    t.emplace(e, q(1));
    Exponent hi = e;
    for (auto& v : hi) ++v;
    return OperatorExpr::mul_by(TruncatedSeries(Q, int(e.size()), t, BoundCertificate::rectangular(e, hi)));
}

// Smallest axis-k exponent in f(t^a), or nullopt for a zero image.
std::optional<std::int64_t> min_out(const OperatorExpr& f, const Exponent& a, int k) {
    auto y = apply(f, probe_monomial(f.spec(), a));
    std::optional<std::int64_t> m;
    for (const auto& [e, c] : y.terms()) m = m ? std::min(*m, e[k]) : e[k];
    return m;
}

// Re-checks an OUT witness by evaluation: for plus the image must run off to
// -infinity along the family, for minus no member may be annihilated.
bool witness_holds(const OperatorExpr& f, const IdealVerdict& v, int k, bool plus) {
    if (v.state != Membership::Out || v.witness.size() < 2) return false;
    std::vector<std::int64_t> lows;
    for (const auto& a : v.witness) {
        auto m = min_out(f, a, k);
        if (!m) return false;
        lows.push_back(*m);
    }
    if (!plus) return true;
    for (size_t i = 1; i < lows.size(); ++i)
        if (lows[i] >= lows[i - 1]) return false;
    return true;
}

sampling::SeriesShape shape_for(int n) {
    sampling::SeriesShape s;
    s.n = n;
    s.window = n == 3 ? 4 : 6;
    return s;
}

}  // namespace

TEST(Operator, ProjectionKeepsNonnegativeExponents) {
    auto x = poly(1, {{{-2}, q(1)}, {{0}, q(3)}, {{5}, q(1)}}, {8});
    auto y = apply(OperatorExpr::proj(Q, 1, 1, 0), x);
    EXPECT_EQ(y.to_string(), "3 + t1^5 + O(t1^8)");
    EXPECT_EQ(apply(OperatorExpr::id(Q, 1), x), x);
}

TEST(Operator, MultiplicationByOuterVariable) {
    auto x = poly(2, {{{0, -1}, q(1)}}, {4, 4});
    auto y = apply(mono_op({0, 1}), x);
    ASSERT_EQ(y.terms().size(), 1u);
    EXPECT_EQ(y.terms().begin()->first, (Exponent{0, 0}));
    EXPECT_TRUE(y.terms().begin()->second.is_one());
}

TEST(Operator, ConstructionChecks) {
    EXPECT_THROW(OperatorExpr::proj(Q, 2, 3, 0), InvalidSpec);
    EXPECT_THROW(OperatorExpr::sum({OperatorExpr::id(Q, 1), OperatorExpr::id(Q, 2)}), ArityMismatch);
    EXPECT_THROW(apply(OperatorExpr::id(Q, 2), poly(1, {{{0}, q(1)}}, {3})), ArityMismatch);
    // A sloped certificate is not a valid multiplier.
    TruncatedSeries::Terms t;
    t.emplace(Exponent{0, 0}, q(1));
    TruncatedSeries sloped(Q, 2, t, BoundCertificate(0, {SliceRule::affine(0, -1)}, {4, 4}));
    EXPECT_THROW(OperatorExpr::mul_by(sloped), InvalidSpec);
    // Reading a coefficient past the input precision.
    auto fr = OperatorExpr::finite_rank({{{5}, q(1)}}, poly(1, {{{0}, q(1)}}, {1}));
    EXPECT_THROW(apply(fr, poly(1, {{{0}, q(1)}}, {3})), EmptyPrecision);
}

TEST(Operator, TransferOfProjectionIsConstant) {
    for (int i = 1; i <= 3; ++i) {
        auto w = transfer(OperatorExpr::proj(Q, 3, i, 0));
        EXPECT_TRUE(w.axes[i - 1].lower_bounded());
        EXPECT_EQ(w.axes[i - 1].lower_text(i), "0");
    }
}

TEST(Operator, TransferOfShiftDependsOnWindow) {
    auto w = transfer(mono_op({-5, 0}));
    EXPECT_FALSE(w.axes[0].lower_bounded());
    EXPECT_EQ(w.axes[0].lower_text(1), "-e1 - 5");
    EXPECT_EQ(*w.axes[0].lower(-2), -7);
    EXPECT_EQ(w.axes[0].upper_text(1), "j1 - 5");
    EXPECT_FALSE(w.axes[0].kernel.has_value());
}

TEST(Operator, TransferOfFiniteRankIsConstantAndKilling) {
    sampling::Rng rng(3);
    auto v = poly(2, {{{1, -1}, q(2)}, {{-2, 0}, q(1)}}, {4, 4});
    auto f = OperatorExpr::finite_rank({{{0, 0}, q(1)}, {{1, 2}, q(-3)}}, v);
    auto w = transfer(f);
    for (int k = 0; k < 2; ++k) {
        EXPECT_TRUE(w.axes[k].lower_bounded());
        EXPECT_FALSE(w.axes[k].hi_shift.has_value());
        ASSERT_TRUE(w.axes[k].kernel.has_value());
    }
    EXPECT_EQ(*w.axes[0].kernel, 2);
    EXPECT_EQ(*w.axes[1].kernel, 3);
    // Every output lies in the span of v.
    for (int s = 0; s < 100; ++s) {
        auto x = sampling::random_series(rng, Q, shape_for(2));
        TruncatedSeries y = x;
        try {
            y = apply(f, x);
        } catch (const EmptyPrecision&) {
            continue;
        }
        if (y.is_zero()) continue;
        FieldScalar ratio = y.coeff({-2, 0});
        ASSERT_FALSE(ratio.is_zero());
        for (const auto& [e, c] : y.terms()) EXPECT_EQ(c, ratio * v.coeff(e));
        EXPECT_EQ(y.terms().size(), 2u);
    }
}

TEST(Operator, TateClassificationOfPrimitives) {
    for (int i = 1; i <= 2; ++i) {
        auto fl = classify_tate(OperatorExpr::proj(Q, 2, i, 0));
        EXPECT_EQ(fl.plus[i - 1].state, Membership::In);
        EXPECT_EQ(fl.minus[i - 1].state, Membership::Out);
        auto cl = classify_tate(OperatorExpr::coproj(Q, 2, i, 0));
        EXPECT_EQ(cl.minus[i - 1].state, Membership::In);
        EXPECT_EQ(cl.plus[i - 1].state, Membership::Out);
    }
    auto f = mono_op({-5, 0});
    auto fl = classify_tate(f);
    for (int k = 0; k < 2; ++k) {
        EXPECT_TRUE(witness_holds(f, fl.plus[k], k, true)) << fl.to_string();
        EXPECT_TRUE(witness_holds(f, fl.minus[k], k, false)) << fl.to_string();
        EXPECT_EQ(fl.plus[k].witness.size(), 12u);
    }
}

TEST(Operator, CancellationIsSeen) {
    auto m = mono_op({-1, 0});
    auto zero = OperatorExpr::sum({m, OperatorExpr::compose({OperatorExpr::scale(q(-1), 2), m})});
    auto fl = classify_tate(zero);
    for (int k = 0; k < 2; ++k) {
        EXPECT_EQ(fl.plus[k].state, Membership::In);
        EXPECT_EQ(fl.minus[k].state, Membership::In);
    }
    // Proj + CoProj is the identity again.
    auto idish = OperatorExpr::sum({OperatorExpr::proj(Q, 2, 1, 2), OperatorExpr::coproj(Q, 2, 1, 2)});
    auto nf = normal_form(idish);
    ASSERT_EQ(nf.diag.size(), 1u);
    ASSERT_EQ(nf.diag.begin()->second.size(), 1u);
    EXPECT_EQ(nf.diag.begin()->second[0].box, (std::vector<Interval>{{}, {}}));
}

TEST(Operator, YekutieliExamples) {
    auto p = classify_yekutieli(OperatorExpr::proj(Q, 2, 2, 0));
    EXPECT_EQ(p.plus[1].state, Membership::In);
    EXPECT_NE(p.plus[1].certificate.find("(t2^0 O, t2^0 O)"), std::string::npos) << p.plus[1].certificate;
    auto m = classify_yekutieli(mono_op({0, 3}));
    EXPECT_EQ(m.plus[1].state, Membership::Out);
    EXPECT_EQ(m.minus[1].state, Membership::Out);
    // Past the radius the answer is UNKNOWN rather than a guess.
    auto far = classify_yekutieli(OperatorExpr::proj(Q, 2, 1, 9));
    EXPECT_EQ(far.plus[0].state, Membership::Unknown);
}

TEST(Operator, DecomposeSplitsShiftedUnit) {
    auto [fp, fm] = decompose(OperatorExpr::id(Q, 1), 1);
    EXPECT_EQ(fp.to_string(), "Compose(Proj(1,0), Id)");
    EXPECT_EQ(fm.to_string(), "Compose(CoProj(1,0), Id)");
    auto f = mono_op({-1});
    auto [gp, gm] = decompose(f, 1);
    auto x = poly(1, {{{0}, q(1)}, {{1}, q(1)}}, {6});
    EXPECT_EQ(apply(gp, x).to_string(), "1 + O(t1^5)");
    EXPECT_EQ(apply(gm, x).to_string(), "t1^-1 + O(t1^5)");
    EXPECT_EQ(s_add(apply(gp, x), apply(gm, x)), apply(f, x));
}

TEST(Operator, FiniteRankLiesInEveryIdeal) {
    sampling::Rng rng(4);
    for (int s = 0; s < 50; ++s) {
        int n = int(sampling::uniform(rng, 1, 3));
        OperatorExpr::Functional phi{{Exponent(n, sampling::uniform(rng, -3, 3)), q(1)}};
        auto f = OperatorExpr::finite_rank(phi, sampling::random_polynomial(rng, Q, n, 3));
        auto fl = classify_tate(f);
        for (int k = 0; k < n; ++k) {
            EXPECT_EQ(fl.plus[k].state, Membership::In);
            EXPECT_EQ(fl.minus[k].state, Membership::In);
        }
    }
}

// ---------------------------------------------------------------- properties

TEST(OperatorProperty, ApplyMatchesDenseEvaluation) {
    sampling::Rng rng(21);
    int checked = 0;
    for (int s = 0; s < 300; ++s) {
        FieldRef k = sampling::random_field(rng);
        int n = int(sampling::uniform(rng, 1, 3));
        auto f = sampling::random_operator(rng, k, n);
        auto x = sampling::random_series(rng, k, shape_for(n));
        TruncatedSeries y = x;
        try {
            y = apply(f, x);
        } catch (const EmptyPrecision&) {
            continue;
        }
        auto box = oracle::hull(oracle::around(x, 3), oracle::around(y, 3));
        auto exact = oracle::complete(x, rng, box);
        std::string why;
        EXPECT_TRUE(oracle::consistent(y, oracle::dense_apply(f, exact), box, &why)) << f.to_string() << ": " << why;
        ++checked;
    }
    EXPECT_GT(checked, 200);
}

TEST(OperatorProperty, TransferIsSound) {
    sampling::Rng rng(22);
    int checked = 0, skipped = 0;
    while (checked < 1000) {
        FieldRef k = sampling::random_field(rng);
        int n = int(sampling::uniform(rng, 1, 3));
        auto f = sampling::random_operator(rng, k, n);
        auto x = sampling::random_series(rng, k, shape_for(n));
        TruncatedSeries y = x;
        try {
            y = apply(f, x);
        } catch (const EmptyPrecision&) {
            ++skipped;
            continue;
        }
        auto w = transfer(f);
        for (const auto& [e, c] : y.terms()) {
            for (int a = 0; a < n; ++a) {
                auto lo = w.axes[a].lower(x.cert().ranges()[a].lo);
                auto hi = w.axes[a].upper(x.cert().hi()[a]);
                ASSERT_TRUE(lo && hi) << f.to_string();
                EXPECT_GE(e[a], *lo) << f.to_string() << " on " << x.to_string();
                EXPECT_LT(e[a], *hi) << f.to_string() << " on " << x.to_string();
            }
        }
        ++checked;
    }
    EXPECT_LT(skipped, checked);
}

TEST(OperatorProperty, Linearity) {
    sampling::Rng rng(23);
    for (int s = 0; s < 150; ++s) {
        FieldRef k = sampling::random_field(rng);
        int n = int(sampling::uniform(rng, 1, 2));
        auto f = sampling::random_operator(rng, k, n), g = sampling::random_operator(rng, k, n);
        auto x = sampling::random_series(rng, k, shape_for(n));
        try {
            EXPECT_EQ(apply(OperatorExpr::sum({f, g}), x), s_add(apply(f, x), apply(g, x)));
        } catch (const EmptyPrecision&) {
        }
    }
}

TEST(OperatorProperty, DecomposeSumsBack) {
    sampling::Rng rng(24);
    int checked = 0;
    while (checked < 100) {
        FieldRef k = sampling::random_field(rng);
        int n = int(sampling::uniform(rng, 1, 3));
        int i = int(sampling::uniform(rng, 1, n));
        auto f = sampling::random_operator(rng, k, n);
        auto x = sampling::random_series(rng, k, shape_for(n));
        auto [fp, fm] = decompose(f, i);
        try {
            auto whole = apply(f, x);
            auto parts = s_add(apply(fp, x), apply(fm, x));
            std::string why;
            EXPECT_TRUE(agree_on_common(parts, whole, &why)) << why;
            EXPECT_EQ(parts.cert().hi(), whole.cert().hi());
            EXPECT_EQ(parts.terms(), whole.terms());
        } catch (const EmptyPrecision&) {
            continue;
        }
        EXPECT_EQ(classify_tate(fp).plus[i - 1].state, Membership::In);
        EXPECT_EQ(classify_tate(fm).minus[i - 1].state, Membership::In);
        ++checked;
    }
}

TEST(OperatorProperty, IdealsAreTwoSided) {
    sampling::Rng rng(25);
    const int n = 2;
    int count[2][2] = {{0, 0}, {0, 0}};
    for (int s = 0; s < 4000; ++s) {
        FieldRef k = sampling::random_field(rng);
        auto f = sampling::random_operator(rng, k, n), g = sampling::random_operator(rng, k, n);
        auto ff = classify_tate(f);
        auto left = classify_tate(OperatorExpr::compose({g, f}));
        auto right = classify_tate(OperatorExpr::compose({f, g}));
        for (int a = 0; a < n; ++a) {
            if (ff.plus[a].state == Membership::In) {
                EXPECT_EQ(left.plus[a].state, Membership::In) << f.to_string() << " / " << g.to_string();
                EXPECT_EQ(right.plus[a].state, Membership::In) << f.to_string() << " / " << g.to_string();
                count[a][0] += 2;
            }
            if (ff.minus[a].state == Membership::In) {
                EXPECT_EQ(left.minus[a].state, Membership::In) << f.to_string() << " / " << g.to_string();
                EXPECT_EQ(right.minus[a].state, Membership::In) << f.to_string() << " / " << g.to_string();
                count[a][1] += 2;
            }
        }
        if (count[0][0] >= 100 && count[0][1] >= 100 && count[1][0] >= 100 && count[1][1] >= 100) break;
    }
    for (auto& row : count)
        for (int c : row) EXPECT_GE(c, 100);
}

TEST(OperatorProperty, ClassifiersAgree) {
    sampling::Rng rng(26);
    int unknown = 0, compared = 0;
    const int total = 200;
    for (int s = 0; s < total; ++s) {
        FieldRef k = sampling::random_field(rng);
        auto f = sampling::random_operator(rng, k, 2);
        auto t = classify_tate(f);
        auto y = classify_yekutieli(f);
        bool any_unknown = false;
        for (int a = 0; a < 2; ++a) {
            EXPECT_NE(t.plus[a].state, Membership::Unknown) << f.to_string();
            EXPECT_NE(t.minus[a].state, Membership::Unknown) << f.to_string();
            for (auto [tv, yv] : {std::make_pair(&t.plus[a], &y.plus[a]), std::make_pair(&t.minus[a], &y.minus[a])}) {
                if (yv->state == Membership::Unknown) {
                    any_unknown = true;
                    continue;
                }
                ++compared;
                EXPECT_EQ(tv->state, yv->state) << f.to_string() << "\n" << t.to_string() << y.to_string();
            }
        }
        unknown += any_unknown;
    }
    EXPECT_LE(unknown * 20, total);
    EXPECT_GT(compared, 700);
}

TEST(OperatorProperty, OutWitnessesReplay) {
    sampling::Rng rng(27);
    int seen = 0;
    for (int s = 0; s < 150; ++s) {
        FieldRef k = sampling::random_field(rng);
        int n = int(sampling::uniform(rng, 1, 3));
        auto f = sampling::random_operator(rng, k, n);
        auto fl = classify_tate(f);
        for (int a = 0; a < n; ++a) {
            if (fl.plus[a].state == Membership::Out) {
                EXPECT_TRUE(witness_holds(f, fl.plus[a], a, true)) << f.to_string();
                ++seen;
            }
            if (fl.minus[a].state == Membership::Out) EXPECT_TRUE(witness_holds(f, fl.minus[a], a, false)) << f.to_string();
        }
    }
    EXPECT_GT(seen, 50);
}

TEST(OperatorProperty, GoodIdempotents) {
    for (int n : {2, 3}) {
        auto rep = idempotent_suite(n, 7, 100);
        EXPECT_TRUE(rep.ok()) << rep.to_string();
        ASSERT_EQ(rep.checks.size(), 4u);
        for (const auto& c : rep.checks) EXPECT_EQ(c.total, 100);
    }
}
