#include "tatekit/liftings.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tatekit/errors.hpp"
#include "tatekit/sampling.hpp"

namespace tatekit {

bool operator==(const LiftingGenerator& a, const LiftingGenerator& b) {
    return a.index == b.index && a.degree == b.degree && a.q == b.q;
}

LiftingSpec LiftingSpec::standard() { return {}; }

LiftingSpec LiftingSpec::preset(const std::string& name, int count) {
    std::int64_t sign;
    if (name == "neg-identity") sign = -1;
    else if (name == "pos-identity") sign = 1;
    else if (name == "zero") sign = 0;
    else throw InvalidSpec("unknown lifting preset '" + name + "'");
    LiftingSpec s;
    s.mode = Mode::Twisted;
    s.generators.push_back({0, 1, std::nullopt});
    for (int i = 2; i <= count; ++i) s.generators.push_back({i, i, sign * i});
    return s;
}

void LiftingSpec::validate() const {
    if (mode == Mode::Standard) {
        if (!generators.empty()) throw InvalidSpec("a STANDARD lifting carries no generators");
        return;
    }
    std::set<int> idx;
    std::set<std::int64_t> deg;
    for (const auto& g : generators) {
        if (g.degree < 1) throw InvalidSpec("generator b_" + std::to_string(g.index) + " has degree below 1");
        if (!idx.insert(g.index).second) throw InvalidSpec("generator index " + std::to_string(g.index) + " repeats");
        if (!deg.insert(g.degree).second)
            throw InvalidSpec("two generators equal t1^" + std::to_string(g.degree));
    }
}

const LiftingGenerator* LiftingSpec::find(int index) const {
    for (const auto& g : generators)
        if (g.index == index) return &g;
    return nullptr;
}

std::string LiftingSpec::to_string() const {
    if (mode == Mode::Standard) return "STANDARD";
    std::ostringstream os;
    os << "TWISTED{";
    for (size_t i = 0; i < generators.size(); ++i) {
        const auto& g = generators[i];
        if (i) os << ", ";
        os << "b" << g.index << "=t1^" << g.degree;
        if (g.q) os << "+t1^" << *g.q << "*t2";
    }
    os << "}";
    return os.str();
}

bool LiftingSpec::operator==(const LiftingSpec& o) const { return mode == o.mode && generators == o.generators; }

std::vector<int> exponent_word(const LiftingSpec& spec, std::int64_t d) {
    if (d < 0) throw PreconditionViolated("exponent_word expects d >= 0");
    std::vector<const LiftingGenerator*> by_deg;
    for (const auto& g : spec.generators) by_deg.push_back(&g);
    std::sort(by_deg.begin(), by_deg.end(), [](auto* a, auto* b) { return a->degree > b->degree; });
    std::vector<int> word;
    std::int64_t rest = d;
    while (rest > 0) {
        auto it = std::find_if(by_deg.begin(), by_deg.end(), [&](auto* g) { return g->degree <= rest; });
        if (it == by_deg.end())
            throw NotInGeneratedModel("t1^" + std::to_string(d) + " is not a product of the listed generators");
        word.push_back((*it)->index);
        rest -= (*it)->degree;
    }
    return word;
}

TruncatedSeries lift(const LiftingSpec& spec, const TruncatedSeries& a) {
    spec.validate();
    if (spec.mode == LiftingSpec::Mode::Standard) return lift_std(a, 2);
    if (a.n() != 1) throw ArityMismatch("a twisted lifting acts on arity-1 series");
    const std::int64_t h = a.cert().hi()[0];
    const FieldRef& k = a.spec();
    TruncatedSeries::Terms t;
    std::map<std::int64_t, FieldScalar> row1;
    for (const auto& [e, c] : a.terms()) {
        const std::int64_t d = e[0];
        t.emplace(Exponent{d, 0}, c);
        // (x + eps t2)^-1 = x^-1 - eps x^-2 t2 modulo t2^2.
        FieldScalar sc = d < 0 ? -c : c;
        for (int i : exponent_word(spec, d < 0 ? -d : d)) {
            const auto* g = spec.find(i);
            if (!g->q) continue;
            std::int64_t x = d - g->degree + *g->q;
            if (x >= h)
                throw EmptyPrecision("correction t1^" + std::to_string(x) + "*t2 lies past the input precision t1^" +
                                     std::to_string(h));
            auto [it, fresh] = row1.emplace(x, sc);
            if (!fresh) it->second += sc;
        }
    }
    std::optional<std::int64_t> low1;
    for (const auto& [x, c] : row1) {
        if (c.is_zero()) continue;
        t.emplace(Exponent{x, 1}, c);
        if (!low1) low1 = x;
    }
    if (!low1) return lift_std(a, 2);
    const std::int64_t lo0 = a.cert().lo_top();
    auto cert = BoundCertificate::build(2, 0, {h, 2}, [&](int, std::int64_t x) -> std::optional<std::int64_t> {
        if (x == 0) return lo0;
        if (x == 1) return low1;
        return std::nullopt;
    });
    return TruncatedSeries(k, 2, std::move(t), std::move(cert));
}

std::vector<std::pair<int, TruncatedSeries>> generator_images(const LiftingSpec& spec, int radius) {
    spec.validate();
    FieldRef Q = FieldSpec::rationals();
    std::vector<std::pair<int, TruncatedSeries>> out;
    if (spec.mode == LiftingSpec::Mode::Standard) {
        for (int i = 1; i <= radius; ++i)
            out.emplace_back(i, lift(spec, TruncatedSeries::monomial(Q, {i}, FieldScalar::one(Q), {i + 1})));
        return out;
    }
    std::vector<const LiftingGenerator*> gens;
    for (const auto& g : spec.generators)
        if (g.index <= radius) gens.push_back(&g);
    std::sort(gens.begin(), gens.end(), [](auto* a, auto* b) { return a->index < b->index; });
    for (const auto* g : gens) {
        std::int64_t hi = std::max(g->degree, g->q.value_or(0)) + 1;
        out.emplace_back(g->index, lift(spec, TruncatedSeries::monomial(Q, {g->degree}, FieldScalar::one(Q), {hi})));
    }
    return out;
}

std::string FalsifierVerdict::to_string() const {
    std::ostringstream os;
    if (plausible) {
        os << "MORPHISM_PLAUSIBLE";
        if (containing) os << " (images lie in t1^" << -*containing << " k[[t1]][[t2]])";
        return os.str();
    }
    os << "NOT_A_TATE_MORPHISM";
    for (const auto& w : witnesses)
        os << "\n  m=" << w.m << ": b" << w.index << " has image term at " << exponent_to_string(w.exponent);
    return os.str();
}

FalsifierVerdict falsify_tate(const LiftingSpec& spec, int radius) {
    if (radius < 1) throw PreconditionViolated("radius must be at least 1");
    auto images = generator_images(spec, radius);
    FalsifierVerdict v;
    for (std::int64_t m = 0; m < radius; ++m) {
        std::optional<FalsifierWitness> w;
        for (const auto& [i, img] : images) {
            for (const auto& [e, c] : img.terms())
                if (e[0] < -m) {
                    w = FalsifierWitness{m, i, e};
                    break;
                }
            if (w) break;
        }
        if (!w) {
            v.containing = m;
            return v;
        }
        v.witnesses.push_back(*w);
    }
    v.plausible = false;
    return v;
}

bool fixes_rational_subfield(const LiftingSpec& spec, int samples, std::uint64_t seed) {
    spec.validate();
    if (spec.mode == LiftingSpec::Mode::Standard) return true;
    const auto* b0 = spec.find(0);
    if (!b0 || b0->degree != 1 || b0->q)
        throw PreconditionViolated("the check needs b_0 = t1 without perturbation");
    FieldRef Q = FieldSpec::rationals();
    const std::int64_t hi = 12;
    auto sigma_t1 = lift(spec, TruncatedSeries::monomial(Q, {1}, FieldScalar::one(Q), {hi}));
    auto power = [&](int d) {
        auto r = lift_std(TruncatedSeries::constant(Q, 1, FieldScalar::one(Q), {hi}), 2);
        for (int j = 0; j < d; ++j) r = s_mul(r, sigma_t1);
        return r;
    };
    sampling::Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        // p(sigma(b_0)) against the standard lift of p.
        int deg = static_cast<int>(sampling::uniform(rng, 0, 5));
        TruncatedSeries::Terms pt;
        auto acc = lift_std(TruncatedSeries::constant(Q, 1, FieldScalar::zero(Q), {hi}), 2);
        for (int d = 0; d <= deg; ++d) {
            FieldScalar c = sampling::random_scalar(rng, Q);
            if (c.is_zero()) continue;
            pt.emplace(Exponent{d}, c);
            acc = s_add(acc, s_scale(c, power(d)));
        }
        auto p = TruncatedSeries::from_terms(Q, 1, std::move(pt), {hi});
        if (!agree_on_common(acc, lift_std(p, 2))) return false;
        // t2 is fixed: sigma(t1)^a t2^b is the monomial itself.
        int ea = static_cast<int>(sampling::uniform(rng, 0, 5));
        std::int64_t eb = sampling::uniform(rng, 0, 1);
        auto mono = s_shift(power(ea), {0, eb});
        if (!agree_on_common(mono, TruncatedSeries::monomial(Q, {ea, eb}, FieldScalar::one(Q), {hi, 2})))
            return false;
        if (mono.terms().size() != 1) return false;
    }
    return true;
}

}  // namespace tatekit
