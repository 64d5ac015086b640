#include "tatekit/operator.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "tatekit/errors.hpp"
#include "tatekit/sampling.hpp"

namespace tatekit {

namespace {

constexpr std::int64_t kProbeMargin = 64;
constexpr int kWitnessSize = 12;

bool finite_lo(const Interval& i) { return i.lo != kNegInf; }
bool finite_hi(const Interval& i) { return i.hi != kPosInf; }

std::string poly_text(const TruncatedSeries::Terms& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        bool mono = false;
        std::ostringstream m;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (mono) m << "*";
            m << "t" << k + 1;
            if (e[k] != 1) m << "^" << e[k];
            mono = true;
        }
        if (!mono)
            os << c.to_string();
        else if (c.is_one())
            os << m.str();
        else
            os << c.to_string() << "*" << m.str();
    }
    return os.str();
}

void require_compatible(const OperatorExpr& a, int n, const FieldRef& spec) {
    if (a.n() != n) throw ArityMismatch("operators of arity " + std::to_string(a.n()) + " and " + std::to_string(n));
    if (!same_field(a.spec(), spec)) throw SpecMismatch("operators over different fields");
}

}  // namespace

// --------------------------------------------------------------- construction

OperatorExpr OperatorExpr::id(FieldRef spec, int n) {
    if (n < 1) throw InvalidSpec("operator arity must be positive");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Id;
    node->n = n;
    node->spec = std::move(spec);
    return OperatorExpr(node);
}

OperatorExpr OperatorExpr::scale(const FieldScalar& c, int n) {
    if (n < 1) throw InvalidSpec("operator arity must be positive");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Scale;
    node->n = n;
    node->spec = c.spec();
    node->scalar = c;
    return OperatorExpr(node);
}

OperatorExpr OperatorExpr::mul_by(const TruncatedSeries& g) {
    if (g.n() < 1) throw InvalidSpec("operator arity must be positive");
    if (!g.cert().is_rectangular()) throw InvalidSpec("MulBy payload needs a rectangular certificate");
    // Re-certified on the bounding box of its terms.
    const int n = g.n();
    std::vector<std::int64_t> lo = g.cert().hi();
    for (const auto& [e, c] : g.terms())
        for (int k = 0; k < n; ++k) lo[k] = std::min(lo[k], e[k]);
    auto node = std::make_shared<Node>();
    node->kind = Kind::MulBy;
    node->n = n;
    node->spec = g.spec();
    node->payload = TruncatedSeries(g.spec(), n, g.terms(), BoundCertificate::rectangular(lo, g.cert().hi()));
    return OperatorExpr(node);
}

OperatorExpr OperatorExpr::proj(FieldRef spec, int n, int axis, std::int64_t c) {
    auto node = std::make_shared<Node>();
    if (n < 1) throw InvalidSpec("operator arity must be positive");
    if (axis < 1 || axis > n) throw InvalidSpec("projection axis " + std::to_string(axis) + " out of range");
    node->kind = Kind::Proj;
    node->n = n;
    node->spec = std::move(spec);
    node->axis = axis;
    node->cutoff = c;
    return OperatorExpr(node);
}

OperatorExpr OperatorExpr::coproj(FieldRef spec, int n, int axis, std::int64_t c) {
    OperatorExpr p = proj(std::move(spec), n, axis, c);
    auto node = std::make_shared<Node>(*p.node_);
    node->kind = Kind::CoProj;
    return OperatorExpr(node);
}

OperatorExpr OperatorExpr::finite_rank(Functional phi, const TruncatedSeries& v) {
    if (v.n() < 1) throw InvalidSpec("operator arity must be positive");
    for (const auto& [e, w] : phi) {
        if (static_cast<int>(e.size()) != v.n()) throw ArityMismatch("functional point has wrong arity");
        if (!same_field(w.spec(), v.spec())) throw SpecMismatch("functional weight over a different field");
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::FiniteRank;
    node->n = v.n();
    node->spec = v.spec();
    node->payload = v;
    node->functional = std::move(phi);
    return OperatorExpr(node);
}

OperatorExpr OperatorExpr::sum(std::vector<OperatorExpr> terms) {
    if (terms.empty()) throw InvalidSpec("empty sum");
    for (const auto& t : terms) require_compatible(t, terms[0].n(), terms[0].spec());
    auto node = std::make_shared<Node>();
    node->kind = Kind::Sum;
    node->n = terms[0].n();
    node->spec = terms[0].spec();
    node->children = std::move(terms);
    return OperatorExpr(node);
}

OperatorExpr OperatorExpr::compose(std::vector<OperatorExpr> chain) {
    if (chain.empty()) throw InvalidSpec("empty composition");
    for (const auto& t : chain) require_compatible(t, chain[0].n(), chain[0].spec());
    auto node = std::make_shared<Node>();
    node->kind = Kind::Compose;
    node->n = chain[0].n();
    node->spec = chain[0].spec();
    node->children = std::move(chain);
    return OperatorExpr(node);
}

std::string OperatorExpr::to_string() const {
    std::ostringstream os;
    switch (kind()) {
        case Kind::Id:
            return "Id";
        case Kind::Scale:
            return "Scale(" + scalar().to_string() + ")";
        case Kind::MulBy:
            return "MulBy(" + poly_text(payload().terms()) + ")";
        case Kind::Proj:
        case Kind::CoProj:
            os << (kind() == Kind::Proj ? "Proj(" : "CoProj(") << axis() << "," << cutoff() << ")";
            return os.str();
        case Kind::FiniteRank: {
            os << "FiniteRank([";
            for (size_t i = 0; i < functional().size(); ++i)
                os << (i ? ", " : "") << functional()[i].second.to_string() << "@"
                   << exponent_to_string(functional()[i].first);
            os << "] -> " << poly_text(payload().terms()) << ")";
            return os.str();
        }
        case Kind::Sum:
        case Kind::Compose:
            os << (kind() == Kind::Sum ? "Sum(" : "Compose(");
            for (size_t i = 0; i < children().size(); ++i) os << (i ? ", " : "") << children()[i].to_string();
            os << ")";
            return os.str();
    }
    return "?";
}

// ---------------------------------------------------------------------- apply

namespace {

TruncatedSeries apply_proj(const OperatorExpr& f, const TruncatedSeries& x) {
    const int n = x.n();
    const int k = f.axis() - 1;
    const std::int64_t cut = f.cutoff();
    TruncatedSeries::Terms t;
    for (const auto& [e, c] : x.terms())
        if ((e[k] >= cut) == (f.kind() == OperatorExpr::Kind::Proj)) t.emplace(e, c);
    if (f.kind() == OperatorExpr::Kind::CoProj) return TruncatedSeries(x.spec(), n, std::move(t), x.cert());
    const auto& c = x.cert();
    std::int64_t lo_top = k == n - 1 ? std::max(c.lo_top(), cut) : c.lo_top();
    auto cert = BoundCertificate::build(n, lo_top, c.hi(), [&](int kk, std::int64_t outer) {
        auto b = c.bound(kk, outer);
        if (b && kk == k) b = std::max(*b, cut);
        return b;
    });
    return TruncatedSeries(x.spec(), n, std::move(t), std::move(cert));
}

TruncatedSeries apply_finite_rank(const OperatorExpr& f, const TruncatedSeries& x) {
    FieldScalar s = FieldScalar::zero(x.spec());
    for (const auto& [p, w] : f.functional()) {
        if (x.status(p) == PointStatus::Unknown)
            throw EmptyPrecision("functional reads " + exponent_to_string(p) + " beyond the input precision");
        s = s + w * x.coeff(p);
    }
    const int n = x.n();
    std::vector<std::int64_t> hi = x.cert().hi();
    TruncatedSeries::Terms t;
    for (const auto& [q, c] : f.payload().terms()) {
        for (int k = 0; k < n; ++k) hi[k] = std::max(hi[k], q[k] + 1);
        if (!s.is_zero()) t.emplace(q, s * c);
    }
    return TruncatedSeries::from_terms(x.spec(), n, std::move(t), hi);
}

}  // namespace

TruncatedSeries apply(const OperatorExpr& f, const TruncatedSeries& x) {
    if (x.n() != f.n()) throw ArityMismatch("operator of arity " + std::to_string(f.n()) + " applied to series of arity " +
                                            std::to_string(x.n()));
    if (!same_field(x.spec(), f.spec())) throw SpecMismatch("operator and series fields differ");
    using K = OperatorExpr::Kind;
    switch (f.kind()) {
        case K::Id:
            return x;
        case K::Scale:
            return s_scale(f.scalar(), x);
        case K::MulBy: {
            const auto& terms = f.payload().terms();
            if (terms.empty()) return s_scale(FieldScalar::zero(x.spec()), x);
            std::optional<TruncatedSeries> acc;
            for (const auto& [g, c] : terms) {
                TruncatedSeries part = s_shift(s_scale(c, x), g);
                acc = acc ? s_add(*acc, part) : part;
            }
            return *acc;
        }
        case K::Proj:
        case K::CoProj:
            return apply_proj(f, x);
        case K::FiniteRank:
            return apply_finite_rank(f, x);
        case K::Sum: {
            TruncatedSeries acc = apply(f.children()[0], x);
            for (size_t i = 1; i < f.children().size(); ++i) acc = s_add(acc, apply(f.children()[i], x));
            return acc;
        }
        case K::Compose: {
            TruncatedSeries acc = x;
            for (auto it = f.children().rbegin(); it != f.children().rend(); ++it) acc = apply(*it, acc);
            return acc;
        }
    }
    return x;
}

TruncatedSeries probe_monomial(const FieldRef& spec, const Exponent& e) {
    std::vector<std::int64_t> hi(e.size());
    for (size_t k = 0; k < e.size(); ++k) hi[k] = e[k] + kProbeMargin;
    return TruncatedSeries::monomial(spec, e, FieldScalar::one(spec), hi);
}

// ---------------------------------------------------------------- normal form

namespace {

using Box = std::vector<Interval>;

Box full_box(int n) { return Box(n); }

std::int64_t shift_end(std::int64_t v, std::int64_t d) { return v == kNegInf || v == kPosInf ? v : v + d; }

bool intersect_into(const Box& a, const Box& b, Box& out) {
    out.resize(a.size());
    for (size_t k = 0; k < a.size(); ++k) {
        out[k].lo = std::max(a[k].lo, b[k].lo);
        out[k].hi = std::min(a[k].hi, b[k].hi);
        if (out[k].lo >= out[k].hi) return false;
    }
    return true;
}

bool box_contains(const Box& b, const Exponent& e) {
    for (size_t k = 0; k < b.size(); ++k)
        if (e[k] < b[k].lo || e[k] >= b[k].hi) return false;
    return true;
}

FieldScalar value_at(const std::vector<Cell>& cells, const Exponent& e, const FieldRef& spec) {
    FieldScalar s = FieldScalar::zero(spec);
    for (const auto& c : cells)
        if (box_contains(c.box, e)) s = s + c.coeff;
    return s;
}

// Disjoint cells on the common grid of all endpoints, zero cells dropped.
std::vector<Cell> refine(const std::vector<Cell>& cells, int n, const FieldRef& spec) {
    if (cells.size() <= 1) {
        std::vector<Cell> out;
        for (const auto& c : cells)
            if (!c.coeff.is_zero()) out.push_back(c);
        return out;
    }
    std::vector<std::vector<Interval>> grid(n);
    for (int k = 0; k < n; ++k) {
        std::vector<std::int64_t> cuts;
        for (const auto& c : cells) {
            if (finite_lo(c.box[k])) cuts.push_back(c.box[k].lo);
            if (finite_hi(c.box[k])) cuts.push_back(c.box[k].hi);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        std::int64_t prev = kNegInf;
        for (auto c : cuts) {
            grid[k].push_back({prev, c});
            prev = c;
        }
        grid[k].push_back({prev, kPosInf});
    }
    std::vector<Cell> out;
    std::vector<size_t> idx(n, 0);
    for (;;) {
        Box b(n);
        for (int k = 0; k < n; ++k) b[k] = grid[k][idx[k]];
        FieldScalar s = FieldScalar::zero(spec);
        for (const auto& c : cells) {
            bool inside = true;
            for (int k = 0; k < n && inside; ++k) inside = c.box[k].lo <= b[k].lo && b[k].hi <= c.box[k].hi;
            if (inside) s = s + c.coeff;
        }
        if (!s.is_zero()) out.push_back({b, s});
        int k = 0;
        while (k < n && ++idx[k] == grid[k].size()) idx[k++] = 0;
        if (k == n) break;
    }
    // Merge neighbours along each axis when they agree everywhere else.
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < out.size() && !merged; ++i) {
            for (size_t j = 0; j < out.size() && !merged; ++j) {
                if (i == j || out[i].coeff != out[j].coeff) continue;
                int diff = -1;
                bool ok = true;
                for (int k = 0; k < n && ok; ++k) {
                    if (out[i].box[k] == out[j].box[k]) continue;
                    if (diff >= 0 || out[i].box[k].hi != out[j].box[k].lo) ok = false;
                    diff = k;
                }
                if (!ok || diff < 0) continue;
                out[i].box[diff].hi = out[j].box[diff].hi;
                out.erase(out.begin() + j);
                merged = true;
            }
        }
    }
    return out;
}

void normalize(NormalForm& nf) {
    for (auto it = nf.diag.begin(); it != nf.diag.end();) {
        it->second = refine(it->second, nf.n, nf.spec);
        it = it->second.empty() ? nf.diag.erase(it) : std::next(it);
    }
    for (auto it = nf.finite.begin(); it != nf.finite.end();) it = it->second.is_zero() ? nf.finite.erase(it) : std::next(it);
}

void add_finite(NormalForm& nf, const Exponent& in, const Exponent& out, const FieldScalar& c) {
    auto [it, fresh] = nf.finite.emplace(std::make_pair(in, out), c);
    if (!fresh) it->second = it->second + c;
}

// F o G.
NormalForm compose_nf(const NormalForm& F, const NormalForm& G) {
    NormalForm r;
    r.n = F.n;
    r.spec = F.spec;
    const int n = r.n;
    Box shifted(n), meet;
    for (const auto& [eps, gcells] : G.diag) {
        for (const auto& [delta, fcells] : F.diag) {
            Exponent total(n);
            for (int k = 0; k < n; ++k) total[k] = eps[k] + delta[k];
            for (const auto& cg : gcells) {
                for (const auto& cf : fcells) {
                    for (int k = 0; k < n; ++k)
                        shifted[k] = {shift_end(cf.box[k].lo, -eps[k]), shift_end(cf.box[k].hi, -eps[k])};
                    if (intersect_into(cg.box, shifted, meet)) r.diag[total].push_back({meet, cg.coeff * cf.coeff});
                }
            }
        }
    }
    for (const auto& [io, m] : F.finite) {
        const auto& [p, out] = io;
        for (const auto& [eps, gcells] : G.diag) {
            Exponent a(n);
            for (int k = 0; k < n; ++k) a[k] = p[k] - eps[k];
            FieldScalar d = value_at(gcells, a, r.spec);
            if (!d.is_zero()) add_finite(r, a, out, d * m);
        }
    }
    for (const auto& [io, m] : G.finite) {
        const auto& [a, q] = io;
        for (const auto& [delta, fcells] : F.diag) {
            FieldScalar d = value_at(fcells, q, r.spec);
            if (d.is_zero()) continue;
            Exponent out(n);
            for (int k = 0; k < n; ++k) out[k] = q[k] + delta[k];
            add_finite(r, a, out, m * d);
        }
        for (const auto& [io2, m2] : F.finite)
            if (io2.first == q) add_finite(r, a, io2.second, m * m2);
    }
    normalize(r);
    return r;
}

}  // namespace

NormalForm normal_form(const OperatorExpr& f) {
    using K = OperatorExpr::Kind;
    NormalForm nf;
    nf.n = f.n();
    nf.spec = f.spec();
    const int n = nf.n;
    const Exponent zero(n, 0);
    switch (f.kind()) {
        case K::Id:
            nf.diag[zero].push_back({full_box(n), FieldScalar::one(nf.spec)});
            break;
        case K::Scale:
            nf.diag[zero].push_back({full_box(n), f.scalar()});
            break;
        case K::MulBy:
            for (const auto& [g, c] : f.payload().terms()) nf.diag[g].push_back({full_box(n), c});
            break;
        case K::Proj:
        case K::CoProj: {
            Box b = full_box(n);
            if (f.kind() == K::Proj)
                b[f.axis() - 1].lo = f.cutoff();
            else
                b[f.axis() - 1].hi = f.cutoff();
            nf.diag[zero].push_back({b, FieldScalar::one(nf.spec)});
            break;
        }
        case K::FiniteRank:
            for (const auto& [p, w] : f.functional())
                for (const auto& [q, c] : f.payload().terms()) add_finite(nf, p, q, w * c);
            break;
        case K::Sum:
            for (const auto& child : f.children()) {
                NormalForm c = normal_form(child);
                for (auto& [d, cells] : c.diag)
                    for (auto& cell : cells) nf.diag[d].push_back(std::move(cell));
                for (const auto& [io, m] : c.finite) add_finite(nf, io.first, io.second, m);
            }
            break;
        case K::Compose: {
            NormalForm acc = normal_form(f.children().back());
            for (int i = static_cast<int>(f.children().size()) - 2; i >= 0; --i)
                acc = compose_nf(normal_form(f.children()[i]), acc);
            return acc;
        }
    }
    normalize(nf);
    return nf;
}

// ------------------------------------------------------------ window transfer

namespace {

void min_into(std::optional<std::int64_t>& a, std::int64_t v) { a = a ? std::min(*a, v) : v; }
void max_into(std::optional<std::int64_t>& a, std::int64_t v) { a = a ? std::max(*a, v) : v; }

std::string offset_text(const std::string& var, std::int64_t d) {
    if (d == 0) return var;
    return var + (d > 0 ? " + " : " - ") + std::to_string(d > 0 ? d : -d);
}

WindowTransfer transfer_of(const NormalForm& nf) {
    WindowTransfer w;
    w.n = nf.n;
    w.axes.resize(nf.n);
    for (int k = 0; k < nf.n; ++k) {
        AxisTransfer& t = w.axes[k];
        std::optional<std::int64_t> kernel;
        bool killable = true;
        for (const auto& [d, cells] : nf.diag) {
            for (const auto& c : cells) {
                const Interval& iv = c.box[k];
                if (finite_lo(iv))
                    min_into(t.lo_const, iv.lo + d[k]);
                else
                    min_into(t.lo_shift, d[k]);
                if (finite_hi(iv)) {
                    max_into(t.hi_const, iv.hi + d[k]);
                    max_into(kernel, iv.hi);
                } else {
                    max_into(t.hi_shift, d[k]);
                    killable = false;
                }
            }
        }
        for (const auto& [io, m] : nf.finite) {
            min_into(t.lo_const, io.second[k]);
            max_into(t.hi_const, io.second[k] + 1);
            max_into(kernel, io.first[k] + 1);
        }
        if (killable) t.kernel = kernel ? *kernel : kNegInf;
    }
    return w;
}

}  // namespace

std::optional<std::int64_t> AxisTransfer::lower(std::int64_t lo_in) const {
    std::optional<std::int64_t> r = lo_const;
    if (lo_shift) min_into(r, lo_in + *lo_shift);
    return r;
}

std::optional<std::int64_t> AxisTransfer::upper(std::int64_t hi_in) const {
    std::optional<std::int64_t> r = hi_const;
    if (hi_shift) max_into(r, hi_in + *hi_shift);
    return r;
}

std::string AxisTransfer::lower_text(int axis) const {
    std::string v = offset_text("-e" + std::to_string(axis), lo_shift.value_or(0));
    if (!lo_const && !lo_shift) return "none";
    if (!lo_shift) return std::to_string(*lo_const);
    if (!lo_const) return v;
    return "min(" + std::to_string(*lo_const) + ", " + v + ")";
}

std::string AxisTransfer::upper_text(int axis) const {
    std::string v = offset_text("j" + std::to_string(axis), hi_shift.value_or(0));
    if (!hi_const && !hi_shift) return "none";
    if (!hi_shift) return std::to_string(*hi_const);
    if (!hi_const) return v;
    return "max(" + std::to_string(*hi_const) + ", " + v + ")";
}

std::string WindowTransfer::to_string() const {
    std::ostringstream os;
    for (int k = 0; k < n; ++k) {
        const auto& t = axes[k];
        os << "axis " << k + 1 << ": alpha >= " << t.lower_text(k + 1) << ", alpha < " << t.upper_text(k + 1)
           << ", kernel ";
        if (!t.kernel)
            os << "NONE";
        else if (*t.kernel == kNegInf)
            os << "everything";
        else
            os << "alpha >= " << *t.kernel;
        os << "\n";
    }
    return os.str();
}

WindowTransfer transfer(const OperatorExpr& f) { return transfer_of(normal_form(f)); }

// ------------------------------------------------------------- classification

std::string membership_name(Membership m) {
    switch (m) {
        case Membership::In:
            return "IN";
        case Membership::Out:
            return "OUT";
        case Membership::Unknown:
            return "UNKNOWN";
    }
    return "?";
}

std::string IdealFlags::to_string() const {
    std::ostringstream os;
    auto line = [&](const char* sign, int k, const IdealVerdict& v) {
        os << "axis " << k + 1 << " " << sign << " " << membership_name(v.state);
        if (!v.certificate.empty()) os << ": " << v.certificate;
        if (!v.witness.empty()) {
            os << " witness";
            for (size_t i = 0; i < v.witness.size() && i < 3; ++i) os << " " << exponent_to_string(v.witness[i]);
            if (v.witness.size() > 3) os << " ... (" << v.witness.size() << " monomials)";
        }
        os << "\n";
    };
    for (int k = 0; k < n; ++k) {
        line("plus ", k, plus[k]);
        line("minus", k, minus[k]);
    }
    return os.str();
}

namespace {

// Monomial family inside an unbounded cell, running to -infinity (dir -1)
// or +infinity (dir +1) on axis k and avoiding the finite matrix. Each
// member is checked by evaluating f.
IdealVerdict out_verdict(const OperatorExpr& f, const NormalForm& nf, int k, int dir) {
    IdealVerdict v;
    v.state = Membership::Unknown;
    for (const auto& [d, cells] : nf.diag) {
        for (const auto& c : cells) {
            const Interval& iv = c.box[k];
            if (dir < 0 ? finite_lo(iv) : finite_hi(iv)) continue;
            Exponent p(nf.n);
            for (int j = 0; j < nf.n; ++j) {
                const Interval& b = c.box[j];
                p[j] = finite_lo(b) ? b.lo : finite_hi(b) ? std::min<std::int64_t>(0, b.hi - 1) : 0;
            }
            std::int64_t start = dir < 0 ? (finite_hi(iv) ? std::min<std::int64_t>(iv.hi - 1, 0) : 0)
                                         : (finite_lo(iv) ? std::max<std::int64_t>(iv.lo, 0) : 0);
            for (const auto& [io, m] : nf.finite)
                start = dir < 0 ? std::min(start, io.first[k] - 1) : std::max(start, io.first[k] + 1);
            std::vector<Exponent> family;
            bool verified = true;
            for (int s = 0; s < kWitnessSize && verified; ++s) {
                Exponent a = p;
                a[k] = start + dir * s;
                Exponent out = a;
                for (int j = 0; j < nf.n; ++j) out[j] += d[j];
                TruncatedSeries y = apply(f, probe_monomial(nf.spec, a));
                verified = y.status(out) == PointStatus::Known && y.coeff(out) == c.coeff;
                family.push_back(a);
            }
            if (!verified) {
                v.certificate = "witness evaluation disagrees with the normal form";
                return v;
            }
            std::ostringstream os;
            os << "image term shifted by " << exponent_to_string(d) << " with coefficient " << c.coeff.to_string()
               << " for alpha" << k + 1
               << (dir < 0 ? " -> -infinity" : " -> +infinity");
            v.state = Membership::Out;
            v.certificate = os.str();
            v.witness = std::move(family);
            return v;
        }
    }
    v.certificate = "no unbounded cell found";
    return v;
}

}  // namespace

IdealFlags classify_tate(const OperatorExpr& f) {
    NormalForm nf = normal_form(f);
    WindowTransfer w = transfer_of(nf);
    IdealFlags r;
    r.n = nf.n;
    r.plus.resize(nf.n);
    r.minus.resize(nf.n);
    for (int k = 0; k < nf.n; ++k) {
        const AxisTransfer& t = w.axes[k];
        const std::string ax = std::to_string(k + 1);
        if (t.lower_bounded()) {
            r.plus[k].state = Membership::In;
            r.plus[k].certificate = t.lo_const ? "output alpha" + ax + " >= " + std::to_string(*t.lo_const) +
                                                     " independent of the input window"
                                               : "zero operator";
        } else {
            r.plus[k] = out_verdict(f, nf, k, -1);
        }
        if (t.kernel) {
            r.minus[k].state = Membership::In;
            r.minus[k].certificate = *t.kernel == kNegInf ? "zero operator"
                                                          : "vanishes on alpha" + ax + " >= " + std::to_string(*t.kernel);
        } else {
            r.minus[k] = out_verdict(f, nf, k, +1);
        }
    }
    return r;
}

namespace {

struct Extent {
    std::int64_t breakpoints = 0;
    std::int64_t shift = 0;
};

Extent extent(const OperatorExpr& f) {
    using K = OperatorExpr::Kind;
    Extent e;
    switch (f.kind()) {
        case K::Id:
        case K::Scale:
            break;
        case K::MulBy:
            for (const auto& [g, c] : f.payload().terms())
                for (auto v : g) e.shift = std::max(e.shift, std::abs(v));
            break;
        case K::Proj:
        case K::CoProj:
            e.breakpoints = std::abs(f.cutoff());
            break;
        case K::FiniteRank:
            for (const auto& [p, w] : f.functional())
                for (auto v : p) e.breakpoints = std::max(e.breakpoints, std::abs(v));
            break;
        case K::Sum:
            for (const auto& c : f.children()) {
                Extent x = extent(c);
                e.breakpoints = std::max(e.breakpoints, x.breakpoints);
                e.shift = std::max(e.shift, x.shift);
            }
            break;
        case K::Compose: {
            e = extent(f.children().back());
            for (int i = static_cast<int>(f.children().size()) - 2; i >= 0; --i) {
                Extent outer = extent(f.children()[i]);
                e.breakpoints = std::max(e.breakpoints, outer.breakpoints + e.shift);
                e.shift += outer.shift;
            }
            break;
        }
    }
    return e;
}

struct Component {
    std::int64_t min_in = kPosInf, max_in = kNegInf, min_out = kPosInf;
    std::vector<Exponent> low_edge, high_edge;
};

}  // namespace

std::int64_t structural_radius(const OperatorExpr& f) { return extent(f).breakpoints; }

IdealFlags classify_yekutieli(const OperatorExpr& f, const YekutieliConfig& cfg) {
    const int n = f.n();
    const std::int64_t R = cfg.radius;
    IdealFlags r;
    r.n = n;
    r.plus.resize(n);
    r.minus.resize(n);
    const std::int64_t B = structural_radius(f);
    if (B >= R) {
        for (int k = 0; k < n; ++k) {
            r.plus[k].certificate = r.minus[k].certificate =
                "structural radius " + std::to_string(B) + " is not inside the search radius " + std::to_string(R);
        }
        return r;
    }
    // Images of the monomials of the radius box. Beyond the structural
    // radius every standard-lattice graded piece behaves like the edge one.
    std::vector<std::pair<Exponent, TruncatedSeries::Terms>> probes;
    Exponent a(n, -R);
    for (;;) {
        TruncatedSeries y = apply(f, probe_monomial(f.spec(), a));
        if (!y.terms().empty()) probes.emplace_back(a, y.terms());
        int k = 0;
        while (k < n && ++a[k] > R) a[k++] = -R;
        if (k == n) break;
    }
    for (int k = 0; k < n; ++k) {
        // Graded components C_{y,x}: x the input, y the output coordinates
        // on the axes outside k.
        std::map<std::pair<Exponent, Exponent>, Component> comps;
        for (const auto& [in, out] : probes) {
            Exponent xo(in.begin() + k + 1, in.end());
            for (const auto& [e, c] : out) {
                Component& cp = comps[{xo, Exponent(e.begin() + k + 1, e.end())}];
                cp.min_in = std::min(cp.min_in, in[k]);
                cp.max_in = std::max(cp.max_in, in[k]);
                cp.min_out = std::min(cp.min_out, e[k]);
                if (in[k] == -R && (cp.low_edge.empty() || cp.low_edge.back() != in)) cp.low_edge.push_back(in);
                if (in[k] == R && (cp.high_edge.empty() || cp.high_edge.back() != in)) cp.high_edge.push_back(in);
            }
        }
        const std::string ax = std::to_string(k + 1);
        const std::string where = k == n - 1 ? "" : " in each of " + std::to_string(comps.size()) + " graded components";
        std::int64_t i0 = kPosInf, m = kPosInf, c = kNegInf;
        const Component* low = nullptr;
        const Component* high = nullptr;
        for (const auto& [key, cp] : comps) {
            i0 = std::min(i0, cp.min_in);
            m = std::min(m, cp.min_out);
            c = std::max(c, cp.max_in + 1);
            if (!low && !cp.low_edge.empty()) low = &cp;
            if (!high && !cp.high_edge.empty()) high = &cp;
        }
        if (comps.empty()) {
            r.plus[k] = {Membership::In, "f vanishes on the radius box", {}};
            r.minus[k] = {Membership::In, "f vanishes on the radius box", {}};
            continue;
        }
        if (low) {
            r.plus[k].state = Membership::Out;
            r.plus[k].certificate = "image of t" + ax + "^" + std::to_string(-R) +
                                    "-graded piece is nonzero: no refinement stabilizes within the radius";
            r.plus[k].witness = low->low_edge;
        } else {
            r.plus[k].state = Membership::In;
            r.plus[k].certificate = "f-refinement (t" + ax + "^" + std::to_string(i0) + " O, t" + ax + "^" +
                                    std::to_string(m) + " O)" + where;
        }
        if (high) {
            r.minus[k].state = Membership::Out;
            r.minus[k].certificate = "f(t" + ax + "^" + std::to_string(R) + " O) is nonzero";
            r.minus[k].witness = high->high_edge;
        } else {
            r.minus[k].state = Membership::In;
            r.minus[k].certificate = "f(t" + ax + "^" + std::to_string(c) + " O) = 0" + where;
        }
    }
    return r;
}

std::pair<OperatorExpr, OperatorExpr> decompose(const OperatorExpr& f, int axis) {
    return {OperatorExpr::compose({OperatorExpr::proj(f.spec(), f.n(), axis, 0), f}),
            OperatorExpr::compose({OperatorExpr::coproj(f.spec(), f.n(), axis, 0), f})};
}

// ------------------------------------------------------------- idempotents

bool IdempotentReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.ok(); });
}

std::string IdempotentReport::to_string() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << "n=" << n << " " << c.name << ": " << c.passed << "/" << c.total << (c.ok() ? " pass" : " FAIL") << "\n";
        for (const auto& v : c.violations) os << "  violation: " << v << "\n";
    }
    return os.str();
}

IdempotentReport idempotent_suite(int n, std::uint64_t seed, int samples) {
    if (n < 1) throw InvalidSpec("idempotent suite needs n >= 1");
    sampling::Rng rng(seed);
    IdempotentReport rep;
    rep.n = n;
    SuiteCheck commute{"[P_i+, P_j+] = 0", 0, 0, {}}, idem{"P_i+ P_i+ = P_i+", 0, 0, {}};
    SuiteCheck plus{"P_i+ A in I_i+", 0, 0, {}}, minus{"P_i- A in I_i-", 0, 0, {}};
    sampling::SeriesShape shape;
    shape.n = n;
    shape.window = n >= 3 ? 4 : 6;
    for (int s = 0; s < samples; ++s) {
        FieldRef k = sampling::random_field(rng);
        TruncatedSeries x = sampling::random_series(rng, k, shape);
        int i = static_cast<int>(sampling::uniform(rng, 1, n));
        int j = static_cast<int>(sampling::uniform(rng, 1, n));
        auto Pi = OperatorExpr::proj(k, n, i, 0);
        auto Pj = OperatorExpr::proj(k, n, j, 0);
        ++commute.total;
        if (apply(OperatorExpr::compose({Pi, Pj}), x) == apply(OperatorExpr::compose({Pj, Pi}), x))
            ++commute.passed;
        else
            commute.violations.push_back("i=" + std::to_string(i) + " j=" + std::to_string(j) + " x=" + x.to_string());
        ++idem.total;
        if (apply(OperatorExpr::compose({Pi, Pi}), x) == apply(Pi, x))
            ++idem.passed;
        else
            idem.violations.push_back("i=" + std::to_string(i) + " x=" + x.to_string());

        OperatorExpr g = sampling::random_operator(rng, k, n);
        ++plus.total;
        auto fp = classify_tate(OperatorExpr::compose({Pi, g}));
        if (fp.plus[i - 1].state == Membership::In)
            ++plus.passed;
        else
            plus.violations.push_back("i=" + std::to_string(i) + " a=" + g.to_string());
        // P_i- is 1 - P_i+ as an operator sum, not the CoProj primitive.
        auto Pm = OperatorExpr::sum({OperatorExpr::id(k, n),
                                     OperatorExpr::compose({OperatorExpr::scale(-FieldScalar::one(k), n), Pi})});
        ++minus.total;
        auto fm = classify_tate(OperatorExpr::compose({Pm, g}));
        if (fm.minus[i - 1].state == Membership::In)
            ++minus.passed;
        else
            minus.violations.push_back("i=" + std::to_string(i) + " a=" + g.to_string());
    }
    rep.checks = {commute, idem, plus, minus};
    return rep;
}

}  // namespace tatekit
