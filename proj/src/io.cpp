#include "tatekit/io.hpp"

#include <cctype>
#include <sstream>

#include "tatekit/errors.hpp"

namespace tatekit::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw SchemaError(path + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing \"") + key + "\"");
    return *it;
}

std::int64_t as_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<std::int64_t>();
}

std::string as_string(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

std::vector<std::int64_t> int_list(const Json& j, const std::string& path) {
    std::vector<std::int64_t> out;
    for (size_t i = 0; i < as_array(j, path).size(); ++i) out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::string idx(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }

// Infinite bounds travel as null.
Json bound_json(std::int64_t v) { return v <= kNegInf || v >= kPosInf ? Json(nullptr) : Json(v); }

FieldScalar scalar_from_json(const FieldRef& k, const Json& j, const std::string& path) {
    try {
        if (j.is_number_integer()) return FieldScalar::from_int(k, j.get<std::int64_t>());
        return FieldScalar::parse(k, as_string(j, path));
    } catch (const SchemaError& e) {
        fail(path, e.what());
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

template <class F>
auto wrap(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        fail(path, std::string(e.kind()) + ": " + e.what());
    }
}

}  // namespace

Json parse_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(what + " is not valid JSON: " + e.what());
    }
}

Json exponent_json(const Exponent& e) { return Json(e); }

Exponent exponent_from_json(const Json& j, int n, const std::string& path) {
    auto e = int_list(j, path);
    if (n >= 0 && static_cast<int>(e.size()) != n)
        fail(path, "expected " + std::to_string(n) + " coordinates, got " + std::to_string(e.size()));
    return e;
}

// ------------------------------------------------------------------- fields

Json to_json(const FieldRef& k) {
    switch (k->kind()) {
        case FieldKind::Rationals:
            return {{"kind", "Q"}};
        case FieldKind::FinitePrime:
            return {{"kind", "Fp"}, {"p", k->p()}};
        case FieldKind::FiniteExt:
            return {{"kind", "Fq"}, {"p", k->p()}, {"modulus", k->modulus()}};
    }
    return {};
}

FieldRef field_from_json(const Json& j, const std::string& path) {
    std::string kind = as_string(field(j, "kind", path), path + ".kind");
    if (kind == "Q") return FieldSpec::rationals();
    if (kind != "Fp" && kind != "Fq") fail(path + ".kind", "unknown field kind '" + kind + "'");
    std::int64_t p = as_int(field(j, "p", path), path + ".p");
    if (kind == "Fq") {
        auto f = int_list(field(j, "modulus", path), path + ".modulus");
        return wrap(path, [&] { return FieldSpec::extension(p, f); });
    }
    return wrap(path, [&] { return FieldSpec::prime(p); });
}

// ------------------------------------------------------------- certificates

Json to_json(const BoundCertificate& c) {
    Json rules = Json::array();
    for (const auto& r : c.rules()) {
        Json ex = Json::array();
        for (const auto& [x, v] : r.exceptions) ex.push_back({x, v ? Json(*v) : Json(nullptr)});
        Json tail = r.tail ? Json::array({r.tail->first, r.tail->second}) : Json(nullptr);
        rules.push_back({{"exceptions", ex}, {"tail_start", bound_json(r.tail_start)}, {"tail", tail}});
    }
    return {{"lo_top", c.lo_top()}, {"hi", c.hi()}, {"rules", rules}};
}

BoundCertificate cert_from_json(const Json& j, int n, const std::string& path) {
    auto hi = int_list(field(j, "hi", path), path + ".hi");
    if (static_cast<int>(hi.size()) != n) fail(path + ".hi", "expected " + std::to_string(n) + " entries");
    if (j.contains("lo")) {
        auto lo = int_list(j["lo"], path + ".lo");
        if (lo.size() != hi.size()) fail(path + ".lo", "expected " + std::to_string(n) + " entries");
        for (int k = 0; k < n; ++k)
            if (lo[k] > hi[k])
                fail(path, "lo > hi on axis " + std::to_string(k + 1) + " (" + std::to_string(lo[k]) + " > " +
                               std::to_string(hi[k]) + ")");
        return BoundCertificate::rectangular(lo, hi);
    }
    if (n == 0) return BoundCertificate(0, {}, {});
    std::int64_t lo_top = as_int(field(j, "lo_top", path), path + ".lo_top");
    if (lo_top > hi[n - 1])
        fail(path, "lo > hi on axis " + std::to_string(n) + " (" + std::to_string(lo_top) + " > " +
                       std::to_string(hi[n - 1]) + ")");
    const Json& rj = as_array(field(j, "rules", path), path + ".rules");
    if (static_cast<int>(rj.size()) != n - 1) fail(path + ".rules", "expected " + std::to_string(n - 1) + " rules");
    std::vector<SliceRule> rules;
    for (size_t k = 0; k < rj.size(); ++k) {
        std::string rp = idx(path + ".rules", k);
        SliceRule r;
        const Json& ex = as_array(field(rj[k], "exceptions", rp), rp + ".exceptions");
        for (size_t i = 0; i < ex.size(); ++i) {
            std::string ep = idx(rp + ".exceptions", i);
            if (!ex[i].is_array() || ex[i].size() != 2) fail(ep, "expected [x, bound|null]");
            std::optional<std::int64_t> v;
            if (!ex[i][1].is_null()) v = as_int(ex[i][1], ep + "[1]");
            r.exceptions[as_int(ex[i][0], ep + "[0]")] = v;
        }
        const Json& ts = field(rj[k], "tail_start", rp);
        r.tail_start = ts.is_null() ? kNegInf : as_int(ts, rp + ".tail_start");
        const Json& tl = field(rj[k], "tail", rp);
        if (!tl.is_null()) {
            if (!tl.is_array() || tl.size() != 2) fail(rp + ".tail", "expected [base, slope] or null");
            r.tail = std::make_pair(as_int(tl[0], rp + ".tail[0]"), as_int(tl[1], rp + ".tail[1]"));
        }
        rules.push_back(std::move(r));
    }
    return wrap(path, [&] { return BoundCertificate(lo_top, std::move(rules), hi); });
}

// ------------------------------------------------------------------- series

Json to_json(const TruncatedSeries& s, bool with_field) {
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back({{"e", e}, {"c", c.to_string()}});
    Json j;
    if (with_field) j["field"] = to_json(s.spec());
    j["n"] = s.n();
    j["terms"] = terms;
    j["cert"] = to_json(s.cert());
    return j;
}

TruncatedSeries series_from_json(const Json& j, const FieldRef& context, const std::string& path) {
    // "spec" and "coeffs" are accepted as input spellings of "field" and "terms".
    const char* fkey = j.is_object() && !j.contains("field") && j.contains("spec") ? "spec" : "field";
    const char* tkey = j.is_object() && !j.contains("terms") && j.contains("coeffs") ? "coeffs" : "terms";
    FieldRef k = j.is_object() && j.contains(fkey) ? field_from_json(j[fkey], path + "." + fkey) : context;
    if (!k) fail(path, "missing \"field\"");
    int n = static_cast<int>(as_int(field(j, "n", path), path + ".n"));
    if (n < 0) fail(path + ".n", "arity must be nonnegative");
    auto cert = cert_from_json(field(j, "cert", path), n, path + ".cert");
    TruncatedSeries::Terms terms;
    const Json& tj = as_array(field(j, tkey, path), path + "." + tkey);
    for (size_t i = 0; i < tj.size(); ++i) {
        std::string tp = idx(path + "." + tkey, i);
        Exponent e = exponent_from_json(field(tj[i], "e", tp), n, tp + ".e");
        FieldScalar c = scalar_from_json(k, field(tj[i], "c", tp), tp + ".c");
        if (cert.status(e) == PointStatus::Zero) fail(tp, "term lies where the certificate says zero");
        if (!terms.emplace(e, c).second) fail(tp, "repeated exponent " + exponent_to_string(e));
    }
    return wrap(path, [&] { return TruncatedSeries(k, n, std::move(terms), std::move(cert)); });
}

// ---------------------------------------------------------------- subspaces

static Json slice_json(const Slice& s) {
    if (auto y = std::get_if<Sym>(&s)) return *y == Sym::Zero ? "zero" : "full";
    return to_json(*std::get<SubspaceRef>(s));
}

static Json tail_json(const TailRule& t) {
    switch (t.kind) {
        case TailRule::Zero:
            return {{"kind", "zero"}};
        case TailRule::Full:
            return {{"kind", "full"}};
        case TailRule::Shifted:
            return {{"kind", "shifted"}, {"base", t.base}, {"slope", t.slope}};
    }
    return {};
}

Json to_json(const MonomialSubspace& s) {
    Json slices = Json::array();
    for (const auto& x : s.slices()) slices.push_back(slice_json(x));
    return {{"n", s.n()},
            {"m", s.m()},
            {"head", s.head() == Sym::Zero ? "zero" : "full"},
            {"slices", slices},
            {"tail", tail_json(s.tail())}};
}

static Sym sym_from(const Json& j, const std::string& path) {
    std::string s = as_string(j, path);
    if (s == "zero") return Sym::Zero;
    if (s == "full") return Sym::Full;
    fail(path, "expected \"zero\" or \"full\"");
}

SubspaceRef subspace_from_json(const Json& j, const std::string& path) {
    int n = static_cast<int>(as_int(field(j, "n", path), path + ".n"));
    if (n < 1) fail(path + ".n", "arity must be at least 1");
    std::int64_t m = as_int(field(j, "m", path), path + ".m");
    Sym head = sym_from(field(j, "head", path), path + ".head");
    std::vector<Slice> slices;
    const Json& sj = as_array(field(j, "slices", path), path + ".slices");
    for (size_t i = 0; i < sj.size(); ++i) {
        std::string sp = idx(path + ".slices", i);
        if (sj[i].is_string())
            slices.push_back(sym_from(sj[i], sp));
        else {
            if (n == 1) fail(sp, "arity-1 subspaces only have \"zero\"/\"full\" slices");
            auto sub = subspace_from_json(sj[i], sp);
            if (sub->n() != n - 1) fail(sp + ".n", "slice arity must be " + std::to_string(n - 1));
            slices.push_back(sub);
        }
    }
    const Json& tj = field(j, "tail", path);
    std::string kind = as_string(field(tj, "kind", path + ".tail"), path + ".tail.kind");
    TailRule tail;
    if (kind == "zero") tail = TailRule::zero();
    else if (kind == "full") tail = TailRule::full();
    else if (kind == "shifted") {
        if (n == 1) fail(path + ".tail", "arity-1 subspaces have no shifted tail");
        tail = TailRule::shifted(as_int(field(tj, "base", path + ".tail"), path + ".tail.base"),
                                 as_int(field(tj, "slope", path + ".tail"), path + ".tail.slope"));
    } else
        fail(path + ".tail.kind", "unknown tail kind '" + kind + "'");
    std::int64_t M = m + static_cast<std::int64_t>(slices.size());
    return wrap(path, [&] { return std::make_shared<const MonomialSubspace>(n, m, M, std::move(slices), head, tail); });
}

MonomialLattice lattice_from_json(const Json& j, const std::string& path) {
    auto s = subspace_from_json(j, path);
    std::string why;
    if (!is_lattice(*s, &why)) fail(path, "not a lattice: " + why);
    return MonomialLattice(s);
}

// ---------------------------------------------------------------- operators

static Json functional_json(const OperatorExpr::Functional& phi) {
    Json out = Json::array();
    for (const auto& [e, c] : phi) out.push_back({{"e", e}, {"c", c.to_string()}});
    return out;
}

static Json node_json(const OperatorExpr& f) {
    using K = OperatorExpr::Kind;
    switch (f.kind()) {
        case K::Id:
            return {{"op", "id"}};
        case K::Scale:
            return {{"op", "scale"}, {"c", f.scalar().to_string()}};
        case K::MulBy:
            return {{"op", "mul_by"}, {"payload", to_json(f.payload(), false)}};
        case K::Proj:
            return {{"op", "proj"}, {"axis", f.axis()}, {"c", f.cutoff()}};
        case K::CoProj:
            return {{"op", "coproj"}, {"axis", f.axis()}, {"c", f.cutoff()}};
        case K::FiniteRank:
            return {{"op", "finite_rank"}, {"phi", functional_json(f.functional())}, {"v", to_json(f.payload(), false)}};
        case K::Sum:
        case K::Compose: {
            Json kids = Json::array();
            for (const auto& c : f.children()) kids.push_back(node_json(c));
            return {{"op", f.kind() == K::Sum ? "sum" : "compose"}, {"terms", kids}};
        }
    }
    return {};
}

Json to_json(const OperatorExpr& f) { return {{"field", to_json(f.spec())}, {"n", f.n()}, {"expr", node_json(f)}}; }

static OperatorExpr node_from(const Json& j, const FieldRef& k, int n, const std::string& path) {
    std::string op = as_string(field(j, "op", path), path + ".op");
    auto series = [&](const char* key) {
        auto s = series_from_json(field(j, key, path), k, path + "." + key);
        if (s.n() != n) fail(path + "." + key + ".n", "expected arity " + std::to_string(n));
        return s;
    };
    return wrap(path, [&]() -> OperatorExpr {
        if (op == "id") return OperatorExpr::id(k, n);
        if (op == "scale") return OperatorExpr::scale(scalar_from_json(k, field(j, "c", path), path + ".c"), n);
        if (op == "mul_by") return OperatorExpr::mul_by(series("payload"));
        if (op == "proj" || op == "coproj") {
            int axis = static_cast<int>(as_int(field(j, "axis", path), path + ".axis"));
            std::int64_t c = as_int(field(j, "c", path), path + ".c");
            return op == "proj" ? OperatorExpr::proj(k, n, axis, c) : OperatorExpr::coproj(k, n, axis, c);
        }
        if (op == "finite_rank") {
            OperatorExpr::Functional phi;
            const Json& pj = as_array(field(j, "phi", path), path + ".phi");
            for (size_t i = 0; i < pj.size(); ++i) {
                std::string pp = idx(path + ".phi", i);
                phi.emplace_back(exponent_from_json(field(pj[i], "e", pp), n, pp + ".e"),
                                 scalar_from_json(k, field(pj[i], "c", pp), pp + ".c"));
            }
            return OperatorExpr::finite_rank(std::move(phi), series("v"));
        }
        if (op == "sum" || op == "compose") {
            std::vector<OperatorExpr> kids;
            const Json& tj = as_array(field(j, "terms", path), path + ".terms");
            for (size_t i = 0; i < tj.size(); ++i) kids.push_back(node_from(tj[i], k, n, idx(path + ".terms", i)));
            if (kids.empty()) fail(path + ".terms", "needs at least one operator");
            return op == "sum" ? OperatorExpr::sum(std::move(kids)) : OperatorExpr::compose(std::move(kids));
        }
        fail(path + ".op", "unknown operator '" + op + "'");
    });
}

OperatorExpr operator_from_json(const Json& j, const std::string& path) {
    FieldRef k = field_from_json(field(j, "field", path), path + ".field");
    int n = static_cast<int>(as_int(field(j, "n", path), path + ".n"));
    if (n < 1) fail(path + ".n", "arity must be at least 1");
    return node_from(field(j, "expr", path), k, n, path + ".expr");
}

// ----------------------------------------------------------------- liftings

Json to_json(const LiftingSpec& s) {
    if (s.mode == LiftingSpec::Mode::Standard) return {{"mode", "standard"}};
    Json gens = Json::array();
    for (const auto& g : s.generators)
        gens.push_back({{"index", g.index}, {"degree", g.degree}, {"q", g.q ? Json(*g.q) : Json(nullptr)}});
    return {{"mode", "twisted"}, {"generators", gens}};
}

LiftingSpec lifting_from_json(const Json& j, const std::string& path) {
    std::string mode = as_string(field(j, "mode", path), path + ".mode");
    LiftingSpec s;
    if (mode == "standard") return s;
    if (mode != "twisted") fail(path + ".mode", "expected \"standard\" or \"twisted\"");
    s.mode = LiftingSpec::Mode::Twisted;
    const Json& gj = as_array(field(j, "generators", path), path + ".generators");
    for (size_t i = 0; i < gj.size(); ++i) {
        std::string gp = idx(path + ".generators", i);
        LiftingGenerator g;
        g.index = static_cast<int>(as_int(field(gj[i], "index", gp), gp + ".index"));
        g.degree = as_int(field(gj[i], "degree", gp), gp + ".degree");
        const Json& q = field(gj[i], "q", gp);
        if (!q.is_null()) g.q = as_int(q, gp + ".q");
        s.generators.push_back(g);
    }
    wrap(path, [&] {
        s.validate();
        return 0;
    });
    return s;
}

// ------------------------------------------------------------------ profile

Json to_json(const OpenProfile& v) {
    Json ex = Json::array();
    for (const auto& [i, l] : v.exceptions) ex.push_back({i, l});
    return {{"threshold", v.threshold}, {"base", v.base}, {"slope", v.slope}, {"exceptions", ex}};
}

OpenProfile profile_from_json(const Json& j, const std::string& path) {
    OpenProfile v;
    v.threshold = as_int(field(j, "threshold", path), path + ".threshold");
    v.base = as_int(field(j, "base", path), path + ".base");
    v.slope = as_int(field(j, "slope", path), path + ".slope");
    const Json& ex = as_array(field(j, "exceptions", path), path + ".exceptions");
    for (size_t i = 0; i < ex.size(); ++i) {
        std::string ep = idx(path + ".exceptions", i);
        if (!ex[i].is_array() || ex[i].size() != 2) fail(ep, "expected [row, lower bound]");
        std::int64_t row = as_int(ex[i][0], ep + "[0]");
        if (row >= v.threshold) fail(ep, "rows from the threshold on are FULL");
        v.exceptions[row] = as_int(ex[i][1], ep + "[1]");
    }
    return v;
}

// ------------------------------------------------------------------ reports

static Json verdict_json(const IdealVerdict& v) {
    Json w = Json::array();
    for (const auto& e : v.witness) w.push_back(e);
    return {{"state", membership_name(v.state)}, {"certificate", v.certificate}, {"witness", w}};
}

Json to_json(const IdealFlags& f) {
    Json plus = Json::array(), minus = Json::array();
    for (int k = 0; k < f.n; ++k) {
        plus.push_back(verdict_json(f.plus[k]));
        minus.push_back(verdict_json(f.minus[k]));
    }
    return {{"n", f.n}, {"plus", plus}, {"minus", minus}};
}

Json to_json(const WindowTransfer& w) {
    Json axes = Json::array();
    for (int k = 0; k < w.n; ++k) {
        const auto& a = w.axes[k];
        axes.push_back({{"axis", k + 1},
                        {"lower", a.lower_text(k + 1)},
                        {"upper", a.upper_text(k + 1)},
                        {"kernel", a.kernel ? bound_json(*a.kernel) : Json(nullptr)}});
    }
    return {{"n", w.n}, {"axes", axes}};
}

Json to_json(const FalsifierVerdict& v) {
    Json w = Json::array();
    for (const auto& x : v.witnesses) w.push_back({{"m", x.m}, {"index", x.index}, {"exponent", x.exponent}});
    return {{"verdict", v.plausible ? "MORPHISM_PLAUSIBLE" : "NOT_A_TATE_MORPHISM"},
            {"containing_m", v.containing ? Json(*v.containing) : Json(nullptr)},
            {"witnesses", w}};
}

Json to_json(const CuspVerdict& v) {
    return {{"v", v.v},
            {"verdict", v.realizable ? "REALIZABLE" : "UNREALIZABLE"},
            {"generator", v.generator ? Json::array({v.generator->first, v.generator->second}) : Json(nullptr)},
            {"gap", v.gap ? Json(*v.gap) : Json(nullptr)},
            {"explanation", v.explanation}};
}

Json to_json(const CompletionModel& m) {
    return {{"p", m.p},           {"f", m.f},
            {"precision", m.precision}, {"kappa", to_json(m.kappa)},
            {"root", m.root},     {"digits", to_json(m.digits, false)},
            {"embedding", m.embedding}, {"error_exponents", m.error_exponents}};
}

Json to_json(const AdeleDescription& d) {
    Json steps = Json::array();
    for (const auto& s : d.steps) steps.push_back({{"ring", s.ring}, {"residue", s.residue}, {"arity", s.arity_before}});
    return {{"flag", d.flag}, {"field", d.field}, {"base", to_json(d.base)}, {"n", d.n}, {"steps", steps}};
}

Json to_json(const CoverReport& r) {
    Json e = Json::array();
    for (const auto& c : r.entries)
        e.push_back({{"monomial", c.monomial}, {"left", c.left}, {"right", c.right}, {"verified", c.verified}});
    return {{"all_verified", r.all_verified()}, {"entries", e}};
}

Json to_json(const SuiteCheck& c) {
    return {{"name", c.name}, {"passed", c.passed}, {"total", c.total}, {"violations", c.violations}};
}

Json to_json(const IdempotentReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"n", r.n}, {"ok", r.ok()}, {"checks", checks}};
}

// ------------------------------------------------------------- polynomials

polymod::Poly parse_poly(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    auto bad = [&](const std::string& why) { throw SchemaError("polynomial '" + text + "': " + why); };
    if (t.empty()) bad("empty");
    polymod::Poly out;
    auto add = [&](size_t deg, std::int64_t c) {
        if (deg > 4096) bad("degree too large");
        if (out.size() <= deg) out.resize(deg + 1, 0);
        out[deg] += c;
    };
    auto number = [&](const std::string& s) -> std::int64_t {
        size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            bad("bad number '" + s + "'");
        }
        if (used != s.size()) bad("bad number '" + s + "'");
        return v;
    };
    if (t.find('x') == std::string::npos) {
        std::stringstream ss(t);
        std::string item;
        size_t deg = 0;
        while (std::getline(ss, item, ',')) add(deg++, number(item));
        if (!t.empty() && t.back() == ',') bad("trailing comma");
    } else {
        size_t i = 0;
        while (i < t.size()) {
            int sign = 1;
            if (t[i] == '+' || t[i] == '-') sign = t[i++] == '-' ? -1 : 1;
            size_t j = i;
            while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
            std::string term = t.substr(i, j - i);
            if (term.empty()) bad("empty term");
            i = j;
            auto xpos = term.find('x');
            if (xpos == std::string::npos) {
                add(0, sign * number(term));
                continue;
            }
            std::string coef = term.substr(0, xpos), rest = term.substr(xpos + 1);
            if (!coef.empty() && coef.back() == '*') coef.pop_back();
            std::int64_t c = coef.empty() ? 1 : number(coef);
            std::int64_t d = 1;
            if (!rest.empty()) {
                if (rest[0] != '^') bad("expected '^' after x");
                d = number(rest.substr(1));
                if (d < 0) bad("negative exponent");
            }
            add(static_cast<size_t>(d), sign * c);
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::string poly_to_string(const polymod::Poly& f, const std::string& var) {
    std::string s;
    for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d) {
        std::int64_t c = f[d];
        if (c == 0) continue;
        std::int64_t a = c < 0 ? -c : c;
        if (s.empty()) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        if (a != 1 || d == 0) s += std::to_string(a);
        if (d >= 1) s += var;
        if (d >= 2) s += "^" + std::to_string(d);
    }
    return s.empty() ? "0" : s;
}

}  // namespace tatekit::io
