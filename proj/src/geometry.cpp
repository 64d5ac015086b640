#include "tatekit/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tatekit/errors.hpp"

namespace tatekit {

namespace pm = polymod;

namespace {

std::string poly_text(const pm::Poly& f) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = pm::degree(f); d >= 0; --d) {
        std::int64_t c = f[d];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (d == 0 || c != 1) os << c;
        if (d > 0) os << (c != 1 ? "*x" : "x");
        if (d > 1) os << "^" << d;
    }
    return os.str();
}

pm::Poly checked_modulus(std::int64_t p, const pm::Poly& f) {
    if (!pm::is_prime(p)) throw InvalidSpec(std::to_string(p) + " is not prime");
    pm::Poly g = pm::normalized(f, p);
    if (pm::degree(g) < 1) throw InvalidSpec("f must have positive degree");
    g = pm::monic(g, p);
    if (!pm::is_irreducible(g, p)) throw NotIrreducible(poly_text(g) + " is reducible over F_" + std::to_string(p));
    return g;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

int fadic_valuation(const pm::Poly& g0, const pm::Poly& f, std::int64_t p, int cap) {
    pm::Poly g = pm::normalized(g0, p);
    int j = 0;
    while (j < cap && !g.empty()) {
        pm::Poly q, r;
        pm::divmod(g, f, p, q, r);
        if (!r.empty()) break;
        g = q;
        ++j;
    }
    return g.empty() ? cap : j;
}

TruncatedSeries fadic_digits(const FieldRef& kappa, const pm::Poly& g0, const pm::Poly& f, int N) {
    const std::int64_t p = kappa->p();
    pm::Poly g = pm::mod(g0, pm::power(f, N, p), p);
    TruncatedSeries::Terms t;
    for (int j = 0; j < N && !g.empty(); ++j) {
        pm::Poly q, r;
        pm::divmod(g, f, p, q, r);
        if (!r.empty()) t.emplace(Exponent{j}, FieldScalar::residue(kappa, r));
        g = q;
    }
    return TruncatedSeries(kappa, 1, std::move(t), BoundCertificate::rectangular({0}, {N}));
}

CompletionModel hensel_coefficient_field(std::int64_t p, const pm::Poly& f0, int N) {
    if (N < 1) throw PreconditionViolated("precision N must be at least 1");
    CompletionModel m;
    m.p = p;
    m.f = checked_modulus(p, f0);
    m.precision = N;
    m.kappa = FieldSpec::extension(p, m.f);
    const pm::Poly fN = pm::power(m.f, N, p);
    const pm::Poly df = pm::derivative(m.f, p);
    pm::Poly a = pm::mod({0, 1}, fN, p);
    int err = fadic_valuation(pm::compose_mod(m.f, a, fN, p), m.f, p, N);
    m.error_exponents.push_back(err);
    // Newton steps a <- a - f(a)/f'(a) modulo f^N; f is separable, so f'(a)
    // stays a unit.
    while (err < N) {
        pm::Poly fa = pm::compose_mod(m.f, a, fN, p);
        pm::Poly inv = pm::inv_mod_poly(pm::compose_mod(df, a, fN, p), fN, p);
        a = pm::sub(a, pm::mod(pm::mul(fa, inv, p), fN, p), p);
        err = fadic_valuation(pm::compose_mod(m.f, a, fN, p), m.f, p, N);
        m.error_exponents.push_back(err);
    }
    m.root = a;
    m.digits = fadic_digits(m.kappa, a, m.f, N);
    pm::Poly power = {1};
    for (int d = 0; d < pm::degree(m.f); ++d) {
        m.embedding.push_back(power);
        power = pm::mod(pm::mul(power, a, p), fN, p);
    }
    return m;
}

std::string AdeleDescription::to_string() const {
    std::ostringstream os;
    os << "flag " << flag << "\nK = " << field << "\n";
    for (size_t i = 0; i < steps.size(); ++i)
        os << "step " << i + 1 << ": O = " << steps[i].ring << ", residue " << steps[i].residue << "\n";
    return os.str();
}

AdeleDescription adele_line(std::int64_t p, const pm::Poly& f0) {
    pm::Poly f = checked_modulus(p, f0);
    AdeleDescription d;
    d.base = FieldSpec::extension(p, f);
    std::string k = "F_" + std::to_string(ipow(p, pm::degree(f)));
    d.flag = "((0) > (" + poly_text(f) + "))";
    d.field = k + "((pi))";
    d.n = 1;
    d.steps.push_back({k + "[[pi]]", k, 1});
    return d;
}

AdeleDescription adele_plane_smooth(const FieldRef& base) {
    AdeleDescription d;
    d.base = base;
    std::string k = base->to_string();
    d.flag = "((0) > (y) > (x,y))";
    d.field = k + "((x))((y))";
    d.n = 2;
    d.steps.push_back({k + "((x))[[y]]", k + "((x))", 2});
    d.steps.push_back({k + "[[x]]", k, 1});
    return d;
}

static void check_step(const AdeleDescription& d, int step, int arity) {
    if (step < 1 || step > d.n) throw PreconditionViolated("no staircase step " + std::to_string(step));
    if (arity != d.n - step + 1) throw ArityMismatch("step " + std::to_string(step) + " acts on arity " +
                                                     std::to_string(d.n - step + 1));
}

TruncatedSeries staircase_residue(const AdeleDescription& d, int step, const TruncatedSeries& a) {
    check_step(d, step, a.n());
    return residue(a);
}

TruncatedSeries staircase_lift(const AdeleDescription& d, int step, const TruncatedSeries& a, std::int64_t hi_top) {
    check_step(d, step, a.n() + 1);
    return lift_std(a, hi_top);
}

static void check_generators(const std::vector<std::int64_t>& gens) {
    if (gens.empty()) throw NotCoprime("no generators");
    std::int64_t g = 0;
    for (auto a : gens) {
        if (a < 1) throw InvalidSpec("generators must be positive");
        g = std::gcd(g, a);
    }
    if (g != 1) throw NotCoprime("generators have gcd " + std::to_string(g));
}

static std::vector<bool> sieve(const std::vector<std::int64_t>& gens, std::int64_t limit) {
    std::vector<bool> in(limit + 1, false);
    in[0] = true;
    for (std::int64_t v = 1; v <= limit; ++v)
        for (auto a : gens)
            if (a <= v && in[v - a]) {
                in[v] = true;
                break;
            }
    return in;
}

std::vector<std::int64_t> semigroup_gaps(const std::vector<std::int64_t>& gens) {
    check_generators(gens);
    // Past (min - 1)(max - 1) every integer is representable.
    auto [lo, hi] = std::minmax_element(gens.begin(), gens.end());
    std::int64_t limit = (*lo - 1) * (*hi - 1);
    auto in = sieve(gens, limit);
    std::vector<std::int64_t> out;
    for (std::int64_t v = 0; v <= limit; ++v)
        if (!in[v]) out.push_back(v);
    return out;
}

bool in_semigroup(const std::vector<std::int64_t>& gens, std::int64_t v) {
    check_generators(gens);
    if (v < 0) return false;
    return sieve(gens, v)[v];
}

std::string CuspVerdict::to_string() const {
    std::ostringstream os;
    os << "u^" << v << " k[[u]]: " << (realizable ? "REALIZABLE" : "UNREALIZABLE");
    if (generator) os << " (generator t^" << generator->first << " s^" << generator->second << ")";
    if (gap) os << " (gap " << *gap << ")";
    if (!explanation.empty()) os << "\n  " << explanation;
    return os.str();
}

CuspVerdict cusp_is_beilinson_realizable(const MonomialLattice& target) {
    if (target.n() != 1) throw NotStandardForm("the cusp target is a lattice in u alone");
    auto [m, M] = sandwich_standard(target);
    if (m != M) throw NotStandardForm("target is not of the form u^v k[[u]]");
    CuspVerdict r;
    r.v = m;
    const std::vector<std::int64_t> S = {2, 3};
    if (in_semigroup(S, m)) {
        r.realizable = true;
        std::int64_t b = m % 2, a = (m - 3 * b) / 2;
        r.generator = std::make_pair(a, b);
        r.explanation = "t^" + std::to_string(a) + " s^" + std::to_string(b) + " maps to u^" + std::to_string(m);
        return r;
    }
    r.gap = m;
    if (m < 0)
        r.explanation = "generators are polynomials in s, t, so every valuation is at least 0";
    else
        r.explanation = "no element with support in <2,3> has valuation " + std::to_string(m);
    return r;
}

std::vector<StrictnessWitness> lattice_strictness() {
    std::vector<StrictnessWitness> out;
    auto cusp = cusp_is_beilinson_realizable(MonomialLattice::standard(1, 1));
    out.push_back({"standard lattice that no polynomial lattice realizes", "u k[[u]]: " + cusp.explanation,
                   is_lattice(*MonomialSubspace::standard(1, 1)) && !cusp.realizable});
    std::vector<Slice> slices = {Sym::Full, Sym::Zero};
    auto s = std::make_shared<MonomialSubspace>(2, -2, 0, slices, Sym::Zero, TailRule::full());
    bool lat = is_lattice(*s);
    bool nonstandard = false;
    if (lat) {
        auto [m, M] = sandwich_standard(MonomialLattice(s));
        nonstandard = m != M;
    }
    out.push_back({"monomial lattice that is not standard", s->to_string(), lat && nonstandard});
    return out;
}

std::optional<std::int64_t> OpenProfile::lower(std::int64_t i) const {
    if (i >= threshold) return std::nullopt;
    auto it = exceptions.find(i);
    if (it != exceptions.end()) return it->second;
    return base + slope * i;
}

bool OpenProfile::contains(const Exponent& e) const {
    if (e.size() != 2) throw ArityMismatch("open profiles live in arity 2");
    auto l = lower(e[1]);
    return !l || e[0] >= *l;
}

bool CoverReport::all_verified() const {
    return std::all_of(entries.begin(), entries.end(), [](const CoverEntry& e) { return e.verified; });
}

std::string CoverReport::to_string() const {
    std::ostringstream os;
    for (const auto& e : entries)
        os << exponent_to_string(e.monomial) << " = " << exponent_to_string(e.left) << " + "
           << exponent_to_string(e.right) << (e.verified ? "" : "  FAILED") << "\n";
    return os.str();
}

CoverReport parshin_cover(const OpenProfile& V, const Exponent& lo, const Exponent& hi, std::int64_t lead) {
    if (lo.size() != 2 || hi.size() != 2) throw ArityMismatch("parshin_cover takes a 2-dimensional box");
    CoverReport rep;
    const Exponent one = {0, 0};
    for (std::int64_t b = lo[1]; b < hi[1]; ++b)
        for (std::int64_t a = lo[0]; a < hi[0]; ++a) {
            CoverEntry c;
            c.monomial = {a, b};
            if (V.contains(c.monomial) && V.contains(one)) {
                c.left = c.monomial;
                c.right = one;
            } else {
                // The left factor sits where U is everything; the right one
                // only needs a t1-exponent above the bound of its row.
                std::int64_t K = std::max(lead, V.threshold - b);
                std::int64_t r = std::max<std::int64_t>(0, V.lower(-K).value_or(0));
                c.left = {a - r, b + K};
                c.right = {r, -K};
            }
            c.verified = V.contains(c.left) && V.contains(c.right) && c.left[0] + c.right[0] == a &&
                         c.left[1] + c.right[1] == b;
            rep.entries.push_back(std::move(c));
        }
    return rep;
}

}  // namespace tatekit
