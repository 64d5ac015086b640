#include "tatekit/suite.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "tatekit/errors.hpp"
#include "tatekit/geometry.hpp"
#include "tatekit/lattice.hpp"
#include "tatekit/liftings.hpp"
#include "tatekit/sampling.hpp"

namespace tatekit {

namespace {

using sampling::Rng;

constexpr size_t kMaxViolations = 5;

struct Check {
    SuiteCheck c;
    explicit Check(std::string name) { c.name = std::move(name); }
    void record(bool ok, const std::function<std::string()>& why) {
        ++c.total;
        if (ok) ++c.passed;
        else if (c.violations.size() < kMaxViolations) c.violations.push_back(why());
    }
};

Rng suite_rng(std::uint64_t seed, int salt) {
    std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt)};
    return Rng(s);
}

std::string pair_text(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.to_string() + " ; " + b.to_string();
}

// ------------------------------------------------------------------- ring

SuiteReport ring_suite(const RunConfig& cfg) {
    SuiteReport r{"ring", cfg.seed, {}, {}};
    Rng rng = suite_rng(cfg.seed, 1);
    Check add_comm("add commutative"), add_assoc("add associative"), mul_comm("mul commutative"),
        mul_assoc("mul associative"), distrib("distributive"), neg("additive inverse"), unit("multiplicative identity"),
        inv("inverse exact on requested window");
    for (int i = 0; i < cfg.ring_samples; ++i) {
        int n = 1 + i % 3;
        auto k = sampling::random_field(rng);
        sampling::SeriesShape shape{n, n == 1 ? 8 : n == 2 ? 6 : 4, -2, 0.3};
        auto a = sampling::random_series(rng, k, shape);
        auto b = sampling::random_series(rng, k, shape);
        auto c = sampling::random_series(rng, k, shape);
        std::string why;
        auto agree = [&](const TruncatedSeries& x, const TruncatedSeries& y) { return agree_on_common(x, y, &why); };
        auto msg = [&] { return why + " for " + pair_text(a, b); };
        add_comm.record(agree(s_add(a, b), s_add(b, a)), msg);
        add_assoc.record(agree(s_add(s_add(a, b), c), s_add(a, s_add(b, c))), msg);
        mul_comm.record(agree(s_mul(a, b), s_mul(b, a)), msg);
        mul_assoc.record(agree(s_mul(s_mul(a, b), c), s_mul(a, s_mul(b, c))), msg);
        distrib.record(agree(s_mul(a, s_add(b, c)), s_add(s_mul(a, b), s_mul(a, c))), msg);
        neg.record(s_sub(a, a).is_zero(), msg);
        auto one = TruncatedSeries::constant(k, n, FieldScalar::one(k), std::vector<std::int64_t>(n, 64));
        unit.record(s_mul(a, one) == a || agree(s_mul(a, one), a), msg);

        // a * a^-1 = 1 on every point of the window [.., w)^n.
        auto u = sampling::random_unit_series(rng, k, sampling::SeriesShape{n, 4, -2, 0.3}, 48);
        Exponent shift(n);
        for (int j = 0; j < n; ++j) shift[j] = sampling::uniform(rng, -2, 2);
        auto x = s_shift(u, shift);
        std::vector<std::int64_t> window(n, n == 3 ? 3 : 5), ask(n);
        for (int j = 0; j < n; ++j) ask[j] = window[j] - std::min<std::int64_t>(0, x.cert().ranges()[j].lo);
        auto prod = s_mul(x, s_inv(x, ask));
        bool exact = prod.status(Exponent(n, 0)) == PointStatus::Known && prod.terms().size() == 1 &&
                     prod.coeff(Exponent(n, 0)).is_one();
        for (int j = 0; j < n; ++j) exact = exact && prod.cert().hi()[j] >= window[j];
        inv.record(exact, [&] { return "a = " + x.to_string() + " gives " + prod.to_string(); });
    }
    Check additive("valuation additive"), ultra("valuation ultrametric");
    for (int guard = 0; (additive.c.total < cfg.ring_samples || ultra.c.total < cfg.ring_samples) && guard < 20 * cfg.ring_samples;
         ++guard) {
        int n = 1 + guard % 3;
        auto k = sampling::random_field(rng);
        sampling::SeriesShape shape{n, 4, -2, 0.3};
        Exponent va(n), vb(n), sum(n);
        for (int j = 0; j < n; ++j) {
            va[j] = sampling::uniform(rng, -3, 3);
            vb[j] = sampling::uniform(rng, -3, 3);
            sum[j] = va[j] + vb[j];
        }
        auto a = s_shift(sampling::random_unit_series(rng, k, shape, 12), va);
        auto b = s_shift(sampling::random_unit_series(rng, k, shape, 12), vb);
        if (additive.c.total < cfg.ring_samples)
            additive.record(lex_valuation(s_mul(a, b)) == sum, [&] { return pair_text(a, b); });
        auto s = s_add(a, b);
        if (s.is_zero() || ultra.c.total >= cfg.ring_samples) continue;
        Exponent vs;
        try {
            vs = lex_valuation(s);
        } catch (const IndeterminateLeading&) {
            continue;
        }
        const Exponent& lo = lex_compare(va, vb) < 0 ? va : vb;
        bool ok = lex_compare(vs, lo) >= 0 && (lex_compare(va, vb) == 0 || vs == lo);
        ultra.record(ok, [&] { return pair_text(a, b); });
    }
    for (auto* c : {&add_comm, &add_assoc, &mul_comm, &mul_assoc, &distrib, &neg, &unit, &inv, &additive, &ultra})
        r.checks.push_back(c->c);
    return r;
}

// ---------------------------------------------------------------- lattice

void for_box(int n, std::int64_t rad, const std::function<void(const Exponent&)>& f) {
    Exponent e(n, -rad);
    while (true) {
        f(e);
        int k = 0;
        while (k < n && ++e[k] > rad) e[k++] = -rad;
        if (k == n) return;
    }
}

SuiteReport lattice_suite(const RunConfig& cfg) {
    SuiteReport r{"lattice", cfg.seed, {}, {}};
    Rng rng = suite_rng(cfg.seed, 2);
    Check meet_pt("intersection is pointwise AND"), join_pt("union is pointwise OR"),
        cont("contains agrees with points"), bounds("meet below, join above"), sand("sandwich containments"),
        tight("sandwich is tightest"), lat_closed("meet and join of lattices are lattices");
    for (int i = 0; i < cfg.lattice_samples; ++i) {
        int n = 1 + i % 3;
        std::int64_t rad = n == 3 ? 5 : 8;
        auto a = sampling::random_subspace(rng, n, 3, true);
        auto b = sampling::random_subspace(rng, n, 3, true);
        auto in = intersect(*a, *b), un = unite(*a, *b);
        bool and_ok = true, or_ok = true, sub_pts = true;
        for_box(n, rad, [&](const Exponent& e) {
            bool pa = a->contains_point(e), pb = b->contains_point(e);
            and_ok = and_ok && in->contains_point(e) == (pa && pb);
            or_ok = or_ok && un->contains_point(e) == (pa || pb);
            if (pb && !pa) sub_pts = false;
        });
        auto txt = [&] { return a->to_string() + " ; " + b->to_string(); };
        meet_pt.record(and_ok, txt);
        join_pt.record(or_ok, txt);
        // contains(a, b) may only claim what the box shows.
        cont.record(!contains(*a, *b) || sub_pts, txt);

        auto la = sampling::random_lattice(rng, n, 3), lb = sampling::random_lattice(rng, n, 3);
        MonomialLattice lo = meet(la, lb), hi = join(la, lb);
        lat_closed.record(is_lattice(lo.subspace()) && is_lattice(hi.subspace()),
                          [&] { return la.subspace().to_string() + " ; " + lb.subspace().to_string(); });
        bounds.record(contains(la.subspace(), lo.subspace()) && contains(lb.subspace(), lo.subspace()) &&
                          contains(hi.subspace(), la.subspace()) && contains(hi.subspace(), lb.subspace()),
                      [&] { return la.subspace().to_string() + " ; " + lb.subspace().to_string(); });
        auto [m, M] = sandwich_standard(la);
        const auto& s = la.subspace();
        sand.record(contains(*MonomialSubspace::standard(n, m), s) && contains(s, *MonomialSubspace::standard(n, M)),
                    [&] { return s.to_string(); });
        tight.record(!contains(*MonomialSubspace::standard(n, m + 1), s) &&
                         !contains(s, *MonomialSubspace::standard(n, M - 1)),
                     [&] { return s.to_string(); });
    }
    for (auto* c : {&meet_pt, &join_pt, &cont, &bounds, &lat_closed, &sand, &tight}) r.checks.push_back(c->c);
    return r;
}

// ---------------------------------------------------------------- cubical

sampling::SeriesShape op_shape(int n) {
    sampling::SeriesShape s;
    s.n = n;
    s.window = n == 3 ? 4 : 6;
    return s;
}

SuiteReport cubical_suite(const RunConfig& cfg) {
    SuiteReport r{"cubical", cfg.seed, {}, {}};
    for (int n : {2, 3}) {
        auto rep = idempotent_suite(n, cfg.seed, cfg.cubical_samples);
        for (auto c : rep.checks) {
            c.name = "n=" + std::to_string(n) + " " + c.name;
            r.checks.push_back(c);
        }
    }
    Rng rng = suite_rng(cfg.seed, 3);
    Check dec("decompose sums back"), dec_in("decompose parts lie in their ideals");
    for (int guard = 0; dec.c.total < cfg.cubical_samples && guard < 50 * cfg.cubical_samples; ++guard) {
        auto k = sampling::random_field(rng);
        int n = static_cast<int>(sampling::uniform(rng, 1, 3));
        int i = static_cast<int>(sampling::uniform(rng, 1, n));
        auto f = sampling::random_operator(rng, k, n);
        auto x = sampling::random_series(rng, k, op_shape(n));
        auto [fp, fm] = decompose(f, i);
        TruncatedSeries whole, parts;
        try {
            whole = apply(f, x);
            parts = s_add(apply(fp, x), apply(fm, x));
        } catch (const EmptyPrecision&) {
            continue;
        }
        dec.record(parts == whole, [&] { return f.to_string() + " on " + x.to_string(); });
        dec_in.record(classify_tate(fp).plus[i - 1].state == Membership::In &&
                          classify_tate(fm).minus[i - 1].state == Membership::In,
                      [&] { return f.to_string(); });
    }
    r.checks.push_back(dec.c);
    r.checks.push_back(dec_in.c);
    // Two-sided: compositions with an ideal member on either side stay inside.
    std::vector<Check> sided;
    for (int a = 1; a <= 2; ++a)
        for (const char* sign : {"+", "-"}) sided.emplace_back("I_" + std::to_string(a) + sign + " two-sided");
    auto done = [&] {
        return std::all_of(sided.begin(), sided.end(), [&](const Check& c) { return c.c.total >= cfg.cubical_samples; });
    };
    for (int guard = 0; !done() && guard < 100 * cfg.cubical_samples; ++guard) {
        auto k = sampling::random_field(rng);
        auto f = sampling::random_operator(rng, k, 2), g = sampling::random_operator(rng, k, 2);
        auto ff = classify_tate(f);
        auto left = classify_tate(OperatorExpr::compose({g, f}));
        auto right = classify_tate(OperatorExpr::compose({f, g}));
        for (int a = 0; a < 2; ++a) {
            auto txt = [&] { return f.to_string() + " with " + g.to_string(); };
            if (ff.plus[a].state == Membership::In) {
                sided[2 * a].record(left.plus[a].state == Membership::In, txt);
                sided[2 * a].record(right.plus[a].state == Membership::In, txt);
            }
            if (ff.minus[a].state == Membership::In) {
                sided[2 * a + 1].record(left.minus[a].state == Membership::In, txt);
                sided[2 * a + 1].record(right.minus[a].state == Membership::In, txt);
            }
        }
    }
    for (auto& c : sided) r.checks.push_back(c.c);
    return r;
}

// -------------------------------------------------------------- agreement

bool witness_replays(const OperatorExpr& f, const IdealVerdict& v, int k, bool plus) {
    if (v.witness.size() < 2) return false;
    std::vector<std::int64_t> lows;
    for (const auto& a : v.witness) {
        auto y = apply(f, probe_monomial(f.spec(), a));
        if (y.is_zero()) return false;
        std::int64_t m = kPosInf;
        for (const auto& [e, c] : y.terms()) m = std::min(m, e[k]);
        lows.push_back(m);
    }
    if (!plus) return true;
    for (size_t i = 1; i < lows.size(); ++i)
        if (lows[i] >= lows[i - 1]) return false;
    return true;
}

SuiteReport agreement_suite(const RunConfig& cfg) {
    SuiteReport r{"agreement", cfg.seed, {}, {}};
    Rng rng = suite_rng(cfg.seed, 4);
    Check agree("classifiers agree"), decided("Tate classifier decides"), replay("OUT witnesses replay");
    int unknown_ops = 0, compared = 0;
    YekutieliConfig ycfg;
    ycfg.radius = cfg.radius;
    for (int s = 0; s < cfg.agreement_samples; ++s) {
        auto k = sampling::random_field(rng);
        auto f = sampling::random_operator(rng, k, 2);
        auto t = classify_tate(f);
        auto y = classify_yekutieli(f, ycfg);
        bool any_unknown = false;
        for (int a = 0; a < 2; ++a) {
            for (bool plus : {true, false}) {
                const auto& tv = plus ? t.plus[a] : t.minus[a];
                const auto& yv = plus ? y.plus[a] : y.minus[a];
                decided.record(tv.state != Membership::Unknown, [&] { return f.to_string(); });
                if (tv.state == Membership::Out)
                    replay.record(witness_replays(f, tv, a, plus), [&] { return f.to_string(); });
                if (yv.state == Membership::Unknown) {
                    any_unknown = true;
                    continue;
                }
                ++compared;
                agree.record(tv.state == yv.state, [&] {
                    return f.to_string() + ": axis " + std::to_string(a + 1) + (plus ? "+" : "-") + " tate " +
                           membership_name(tv.state) + ", yekutieli " + membership_name(yv.state);
                });
            }
        }
        unknown_ops += any_unknown;
    }
    Check rate("UNKNOWN rate at most 5%");
    rate.record(unknown_ops * 20 <= cfg.agreement_samples, [&] {
        return std::to_string(unknown_ops) + " of " + std::to_string(cfg.agreement_samples) + " operators";
    });
    r.notes.push_back("corpus " + std::to_string(cfg.agreement_samples) + " operators, " + std::to_string(compared) +
                      " verdict pairs compared, " + std::to_string(unknown_ops) + " with an UNKNOWN verdict, radius " +
                      std::to_string(cfg.radius));

    Check sound("transfer bounds hold");
    int skipped = 0;
    for (int guard = 0; sound.c.total < cfg.transfer_samples && guard < 20 * cfg.transfer_samples; ++guard) {
        auto k = sampling::random_field(rng);
        int n = static_cast<int>(sampling::uniform(rng, 1, 3));
        auto f = sampling::random_operator(rng, k, n);
        auto x = sampling::random_series(rng, k, op_shape(n));
        TruncatedSeries y;
        try {
            y = apply(f, x);
        } catch (const EmptyPrecision&) {
            ++skipped;
            continue;
        }
        auto w = transfer(f);
        bool ok = true;
        for (const auto& [e, c] : y.terms())
            for (int a = 0; a < n; ++a) {
                auto lo = w.axes[a].lower(x.cert().ranges()[a].lo);
                auto hi = w.axes[a].upper(x.cert().hi()[a]);
                ok = ok && lo && hi && e[a] >= *lo && e[a] < *hi;
            }
        sound.record(ok, [&] { return f.to_string() + " on " + x.to_string(); });
    }
    r.notes.push_back("transfer: " + std::to_string(sound.c.total) + " pairs, " + std::to_string(skipped) +
                      " skipped for precision");
    for (auto* c : {&agree, &decided, &rate, &replay, &sound}) r.checks.push_back(c->c);
    return r;
}

// --------------------------------------------------------------- liftings

SuiteReport liftings_suite(const RunConfig& cfg) {
    SuiteReport r{"liftings", cfg.seed, {}, {}};
    Rng rng = suite_rng(cfg.seed, 5);
    auto neg = LiftingSpec::preset("neg-identity", 10);
    Check refute("Q(i) = -i is refuted at radius 10"), plausible("STANDARD and Q(i) = +i are plausible"),
        section("residue after lift is the identity"), degenerate("unperturbed twist equals STANDARD"),
        fixed("rational subfield fixed"), mono("refutation is monotone in the radius");
    auto v = falsify_tate(neg, 10);
    auto images = generator_images(neg, 10);
    bool valid = !v.plausible && v.witnesses.size() == 10;
    for (const auto& w : v.witnesses) {
        bool found = false;
        for (const auto& [i, img] : images)
            if (i == w.index) found = !img.coeff(w.exponent).is_zero();
        valid = valid && found && w.exponent[0] < -w.m;
    }
    refute.record(valid, [&] { return v.to_string(); });
    for (const auto& s : {LiftingSpec::standard(), LiftingSpec::preset("pos-identity", 10)}) {
        auto pv = falsify_tate(s, 10);
        plausible.record(pv.plausible && pv.containing == std::optional<std::int64_t>(0),
                         [&] { return s.to_string() + ": " + pv.to_string(); });
    }
    auto bare = neg;
    for (auto& g : bare.generators) g.q.reset();
    FieldRef Q = FieldSpec::rationals();
    for (int t = 0; t < cfg.lifting_samples; ++t) {
        auto a = sampling::random_polynomial(rng, Q, 1, 9, 4);
        for (const auto& s : {LiftingSpec::standard(), neg, LiftingSpec::preset("pos-identity", 10),
                              LiftingSpec::preset("zero", 10)})
            section.record(residue(lift(s, a)) == a, [&] { return s.to_string() + " on " + a.to_string(); });
        degenerate.record(lift(bare, a) == lift(LiftingSpec::standard(), a), [&] { return a.to_string(); });
    }
    fixed.record(fixes_rational_subfield(neg, 50, cfg.seed), [] { return std::string("neg-identity"); });
    fixed.record(fixes_rational_subfield(LiftingSpec::standard(), 5, cfg.seed), [] { return std::string("standard"); });
    bool seen = false, mono_ok = true;
    for (int rad = 1; rad <= 30; ++rad) {
        bool refuted = !falsify_tate(LiftingSpec::preset("neg-identity", 30), rad).plausible;
        if (seen && !refuted) mono_ok = false;
        seen = seen || refuted;
    }
    mono.record(mono_ok && seen, [] { return std::string("radius 1..30"); });
    for (auto* c : {&refute, &plausible, &section, &degenerate, &fixed, &mono}) r.checks.push_back(c->c);
    return r;
}

// --------------------------------------------------------------- geometry

SuiteReport geometry_suite(const RunConfig& cfg) {
    SuiteReport r{"geometry", cfg.seed, {}, {}};
    Rng rng = suite_rng(cfg.seed, 6);
    Check hensel("Hensel root satisfies f(a) = 0 mod pi^N"), gaps("semigroup gaps"), cusp("cusp realizability"),
        cusp_gap("cusp matches the gap set"), cover("Parshin cover of the 7x7 box"),
        profiles("Parshin cover for random profiles"), strict("lattice notions separate");
    struct Case {
        std::int64_t p;
        polymod::Poly f;
    };
    const std::vector<Case> cases = {{5, {-2, 0, 1}}, {2, {1, 1, 1}}, {3, {1, 0, 1}}, {7, {3, 0, 0, 1}}, {2, {1, 1, 0, 1}}};
    for (const auto& c : cases)
        for (int N = 1; N <= 10; ++N) {
            auto m = hensel_coefficient_field(c.p, c.f, N);
            const auto fN = polymod::power(m.f, N, c.p);
            bool ok = polymod::compose_mod(m.f, m.root, fN, c.p).empty() &&
                      polymod::mod(polymod::sub(m.root, {0, 1}, c.p), m.f, c.p).empty();
            hensel.record(ok, [&] { return "p=" + std::to_string(c.p) + " N=" + std::to_string(N); });
        }
    gaps.record(semigroup_gaps({2, 3}) == std::vector<std::int64_t>{1}, [] { return std::string("(2,3)"); });
    gaps.record(semigroup_gaps({3, 5}) == std::vector<std::int64_t>{1, 2, 4, 7}, [] { return std::string("(3,5)"); });
    gaps.record(semigroup_gaps({1}).empty(), [] { return std::string("(1)"); });
    const bool expect[] = {true, false, true};
    for (int v = 0; v <= 2; ++v) {
        auto cv = cusp_is_beilinson_realizable(MonomialLattice::standard(1, v));
        bool ok = cv.realizable == expect[v] && (cv.realizable || cv.gap == std::optional<std::int64_t>(v));
        cusp.record(ok, [&] { return cv.to_string(); });
    }
    auto g23 = semigroup_gaps({2, 3});
    for (std::int64_t v = 0; v <= 30; ++v) {
        bool gap = std::find(g23.begin(), g23.end(), v) != g23.end();
        cusp_gap.record(cusp_is_beilinson_realizable(MonomialLattice::standard(1, v)).realizable == !gap,
                        [&] { return "v=" + std::to_string(v); });
    }
    auto box = parshin_cover(OpenProfile{}, {-3, -3}, {4, 4});
    cover.record(box.entries.size() == 49 && box.all_verified(), [&] { return box.to_string(); });
    for (int t = 0; t < cfg.geometry_samples; ++t) {
        OpenProfile V;
        V.threshold = sampling::uniform(rng, -3, 3);
        V.base = sampling::uniform(rng, -5, 5);
        V.slope = sampling::uniform(rng, -3, 3);
        for (int e = 0; e < 3; ++e) {
            std::int64_t row = sampling::uniform(rng, -15, 2);
            if (row < V.threshold) V.exceptions[row] = sampling::uniform(rng, -10, 10);
        }
        auto rep = parshin_cover(V, {-6, -6}, {7, 7});
        profiles.record(rep.all_verified(), [&] { return rep.to_string(); });
    }
    for (const auto& w : lattice_strictness()) strict.record(w.holds, [&] { return w.claim; });
    for (auto* c : {&hensel, &gaps, &cusp, &cusp_gap, &cover, &profiles, &strict}) r.checks.push_back(c->c);
    return r;
}

}  // namespace

io::Json to_json(const RunConfig& c) {
    const char* fmt = c.format == OutputFormat::Json ? "json" : c.format == OutputFormat::Svg ? "svg" : "text";
    return {{"seed", c.seed},
            {"samples",
             {{"ring", c.ring_samples},
              {"lattice", c.lattice_samples},
              {"cubical", c.cubical_samples},
              {"agreement", c.agreement_samples},
              {"transfer", c.transfer_samples},
              {"liftings", c.lifting_samples},
              {"geometry", c.geometry_samples}}},
            {"radius", c.radius},
            {"precision", c.precision},
            {"format", fmt}};
}

RunConfig run_config_from_json(const io::Json& j, const std::string& path) {
    RunConfig c;
    if (!j.is_object()) throw SchemaError(path + ": expected an object");
    auto get_int = [&](const io::Json& o, const char* key, const std::string& p, auto& out) {
        if (!o.contains(key)) return;
        if (!o[key].is_number_integer()) throw SchemaError(p + "." + key + ": expected an integer");
        out = o[key].get<std::remove_reference_t<decltype(out)>>();
    };
    get_int(j, "seed", path, c.seed);
    get_int(j, "radius", path, c.radius);
    get_int(j, "precision", path, c.precision);
    if (j.contains("samples")) {
        const auto& s = j["samples"];
        if (!s.is_object()) throw SchemaError(path + ".samples: expected an object");
        std::string sp = path + ".samples";
        get_int(s, "ring", sp, c.ring_samples);
        get_int(s, "lattice", sp, c.lattice_samples);
        get_int(s, "cubical", sp, c.cubical_samples);
        get_int(s, "agreement", sp, c.agreement_samples);
        get_int(s, "transfer", sp, c.transfer_samples);
        get_int(s, "liftings", sp, c.lifting_samples);
        get_int(s, "geometry", sp, c.geometry_samples);
    }
    if (j.contains("format")) {
        if (!j["format"].is_string()) throw SchemaError(path + ".format: expected a string");
        std::string f = j["format"];
        if (f == "text") c.format = OutputFormat::Text;
        else if (f == "json") c.format = OutputFormat::Json;
        else if (f == "svg") c.format = OutputFormat::Svg;
        else throw SchemaError(path + ".format: expected text, json or svg");
    }
    return c;
}

bool SuiteReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.ok(); });
}

std::string SuiteReport::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << " (seed " << seed << "): " << (ok() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : checks) {
        os << "  [" << (c.ok() ? "ok" : "FAIL") << "] " << c.name << ": " << c.passed << "/" << c.total << "\n";
        for (const auto& v : c.violations) os << "      witness: " << v << "\n";
    }
    for (const auto& n : notes) os << "  note: " << n << "\n";
    return os.str();
}

io::Json SuiteReport::to_json() const {
    io::Json checks_j = io::Json::array();
    for (const auto& c : checks) checks_j.push_back(io::to_json(c));
    return {{"suite", suite}, {"seed", seed}, {"ok", ok()}, {"checks", checks_j}, {"notes", notes}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"ring", "lattice", "cubical", "agreement", "liftings", "geometry"};
    return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const RunConfig& cfg) {
    using Fn = SuiteReport (*)(const RunConfig&);
    static const std::vector<std::pair<std::string, Fn>> table = {
        {"ring", ring_suite},         {"lattice", lattice_suite},   {"cubical", cubical_suite},
        {"agreement", agreement_suite}, {"liftings", liftings_suite}, {"geometry", geometry_suite}};
    std::vector<SuiteReport> out;
    for (const auto& [n, f] : table)
        if (name == "all" || name == n) out.push_back(f(cfg));
    if (out.empty()) throw UnknownSuite("unknown suite '" + name + "'; expected one of ring, lattice, cubical, "
                                        "agreement, liftings, geometry, all");
    return out;
}

}  // namespace tatekit
