#include "tatekit/series.hpp"

#include <algorithm>
#include <sstream>

#include "tatekit/errors.hpp"

namespace tatekit {

namespace {

constexpr std::int64_t kMaxWindow = std::int64_t{1} << 20;

std::optional<std::int64_t> min_opt(std::optional<std::int64_t> a, std::optional<std::int64_t> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

SliceRule compress(const AxisRange& domain, const std::vector<std::optional<std::int64_t>>& values) {
    if (domain.empty()) return SliceRule::empty();
    const std::int64_t L = static_cast<std::int64_t>(values.size());
    SliceRule r;
    std::int64_t j = L - 1;
    if (!values[L - 1]) {
        while (j > 0 && !values[j - 1]) --j;
        r.tail.reset();
    } else if (L == 1 || !values[L - 2]) {
        r.tail = std::make_pair(*values[L - 1], std::int64_t{0});
    } else {
        std::int64_t slope = *values[L - 1] - *values[L - 2];
        std::int64_t base = *values[L - 1] - slope * (domain.lo + L - 1);
        j = L - 2;
        while (j > 0 && values[j - 1] && *values[j - 1] == base + slope * (domain.lo + j - 1)) --j;
        r.tail = std::make_pair(base, slope);
    }
    r.tail_start = j == 0 ? kNegInf : domain.lo + j;
    for (std::int64_t i = 0; i < j; ++i) r.exceptions[domain.lo + i] = values[i];
    return r;
}

void check_same(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!same_field(a.spec(), b.spec()))
        throw SpecMismatch("series over " + a.spec()->to_string() + " and " + b.spec()->to_string());
    if (a.n() != b.n())
        throw ArityMismatch("series of arity " + std::to_string(a.n()) + " and " + std::to_string(b.n()));
}

}  // namespace

bool LexLess::operator()(const Exponent& a, const Exponent& b) const { return lex_compare(a, b) < 0; }

int lex_compare(const Exponent& a, const Exponent& b) {
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::string exponent_to_string(const Exponent& e) {
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------------- SliceRule

SliceRule SliceRule::constant(std::int64_t c) { return affine(c, 0); }

SliceRule SliceRule::affine(std::int64_t base, std::int64_t slope, std::int64_t start) {
    SliceRule r;
    r.tail = std::make_pair(base, slope);
    r.tail_start = start;
    return r;
}

SliceRule SliceRule::empty() { return SliceRule{}; }

std::optional<std::int64_t> SliceRule::at(std::int64_t x) const {
    auto it = exceptions.find(x);
    if (it != exceptions.end()) return it->second;
    if (tail && x >= tail_start) return tail->first + tail->second * x;
    return std::nullopt;
}

bool SliceRule::is_constant() const {
    return exceptions.empty() && tail && tail->second == 0 && tail_start == kNegInf;
}

// --------------------------------------------------------- BoundCertificate

BoundCertificate::BoundCertificate(std::int64_t lo_top, std::vector<SliceRule> rules, std::vector<std::int64_t> hi)
    : lo_top_(lo_top), rules_(std::move(rules)), hi_(std::move(hi)) {
    if (!hi_.empty() && rules_.size() + 1 != hi_.size())
        throw ArityMismatch("certificate needs " + std::to_string(hi_.size() - 1) + " slice rules");
    if (hi_.empty() && !rules_.empty()) throw ArityMismatch("arity-0 certificate carries slice rules");
    canonicalize();
}

BoundCertificate BoundCertificate::rectangular(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi) {
    if (lo.size() != hi.size()) throw ArityMismatch("lo and hi differ in length");
    if (hi.empty()) return BoundCertificate(0, {}, {});
    std::vector<SliceRule> rules;
    for (size_t k = 0; k + 1 < lo.size(); ++k) rules.push_back(SliceRule::constant(lo[k]));
    return BoundCertificate(lo.back(), std::move(rules), hi);
}

BoundCertificate BoundCertificate::build(int n, std::int64_t lo_top, std::vector<std::int64_t> hi,
                                         const std::function<std::optional<std::int64_t>(int, std::int64_t)>& value) {
    if (static_cast<int>(hi.size()) != n) throw ArityMismatch("hi has wrong length");
    BoundCertificate c;
    c.hi_ = std::move(hi);
    if (n == 0) return c;
    c.lo_top_ = std::min(lo_top, c.hi_[n - 1]);
    c.ranges_.assign(n, AxisRange{0, 0});
    c.ranges_[n - 1] = AxisRange{c.lo_top_, c.hi_[n - 1]};
    c.rules_.assign(n - 1, SliceRule::empty());
    for (int k = n - 2; k >= 0; --k) {
        const AxisRange dom = c.ranges_[k + 1];
        std::vector<std::optional<std::int64_t>> vals;
        std::int64_t xmin = c.hi_[k];
        if (!dom.empty()) {
            if (dom.hi - dom.lo > kMaxWindow) throw PreconditionViolated("certificate window too large");
            vals.reserve(dom.hi - dom.lo);
            for (std::int64_t x = dom.lo; x < dom.hi; ++x) {
                auto v = value(k, x);
                if (v) {
                    v = std::min(*v, c.hi_[k]);
                    xmin = std::min(xmin, *v);
                }
                vals.push_back(v);
            }
        }
        c.ranges_[k] = AxisRange{xmin, c.hi_[k]};
        c.rules_[k] = compress(dom, vals);
    }
    return c;
}

void BoundCertificate::canonicalize() {
    std::vector<SliceRule> old = std::move(rules_);
    *this = build(n(), lo_top_, hi_, [&](int k, std::int64_t x) { return old[k].at(x); });
}

PointStatus BoundCertificate::status(const Exponent& e) const {
    const int n = this->n();
    for (int k = n - 1; k >= 0; --k) {
        std::optional<std::int64_t> lb = k == n - 1 ? std::optional<std::int64_t>(lo_top_) : rules_[k].at(e[k + 1]);
        if (!lb || e[k] < *lb) return PointStatus::Zero;
        if (e[k] >= hi_[k]) return PointStatus::Unknown;
    }
    return PointStatus::Known;
}

std::optional<std::int64_t> BoundCertificate::bound(int k, std::int64_t outer) const {
    if (k == n() - 1) return lo_top_;
    const AxisRange& r = ranges_[k + 1];
    if (outer < r.lo || outer >= r.hi) return std::nullopt;
    return rules_[k].at(outer);
}

bool BoundCertificate::is_rectangular() const {
    return std::all_of(rules_.begin(), rules_.end(), [](const SliceRule& r) { return r.is_constant(); });
}

// ---------------------------------------------------------- TruncatedSeries

TruncatedSeries::TruncatedSeries(FieldRef spec, int n, Terms terms, BoundCertificate cert)
    : spec_(std::move(spec)), n_(n), cert_(std::move(cert)) {
    if (cert_.n() != n_) throw ArityMismatch("certificate arity differs from series arity");
    for (auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != n_) throw ArityMismatch("exponent " + exponent_to_string(e) + " has wrong arity");
        if (!same_field(c.spec(), spec_)) throw SpecMismatch("coefficient field differs from series field");
        if (c.is_zero()) continue;
        switch (cert_.status(e)) {
            case PointStatus::Zero:
                throw PreconditionViolated("term at " + exponent_to_string(e) + " is certified zero");
            case PointStatus::Unknown:
                continue;
            case PointStatus::Known:
                terms_.emplace(e, std::move(c));
        }
    }
}

TruncatedSeries TruncatedSeries::from_terms(FieldRef spec, int n, Terms terms, const std::vector<std::int64_t>& hi) {
    if (static_cast<int>(hi.size()) != n) throw ArityMismatch("hi has wrong length");
    for (auto it = terms.begin(); it != terms.end();) {
        if (static_cast<int>(it->first.size()) != n) throw ArityMismatch("exponent has wrong arity");
        for (int k = 0; k < n; ++k)
            if (it->first[k] >= hi[k])
                throw PreconditionViolated("term " + exponent_to_string(it->first) + " lies beyond the precision");
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
    if (n == 0) return TruncatedSeries(spec, 0, std::move(terms), BoundCertificate(0, {}, {}));
    std::int64_t lo_top = hi[n - 1];
    std::vector<std::map<std::int64_t, std::int64_t>> slice_min(n);
    for (const auto& [e, c] : terms) {
        lo_top = std::min(lo_top, e[n - 1]);
        for (int k = 0; k + 1 < n; ++k) {
            auto [it, fresh] = slice_min[k].emplace(e[k + 1], e[k]);
            if (!fresh) it->second = std::min(it->second, e[k]);
        }
    }
    auto cert = BoundCertificate::build(n, lo_top, hi, [&](int k, std::int64_t x) -> std::optional<std::int64_t> {
        auto it = slice_min[k].find(x);
        return it == slice_min[k].end() ? hi[k] : it->second;
    });
    return TruncatedSeries(spec, n, std::move(terms), std::move(cert));
}

TruncatedSeries TruncatedSeries::monomial(FieldRef spec, const Exponent& e, const FieldScalar& c,
                                          const std::vector<std::int64_t>& hi) {
    Terms t;
    t.emplace(e, c);
    return from_terms(std::move(spec), static_cast<int>(e.size()), std::move(t), hi);
}

TruncatedSeries TruncatedSeries::constant(FieldRef spec, int n, const FieldScalar& c, const std::vector<std::int64_t>& hi) {
    return monomial(std::move(spec), Exponent(n, 0), c, hi);
}

FieldScalar TruncatedSeries::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldScalar::zero(spec_) : it->second;
}

void TruncatedSeries::check_invariants() const {
    for (const auto& [e, c] : terms_) {
        if (c.is_zero()) throw PreconditionViolated("stored zero coefficient at " + exponent_to_string(e));
        if (cert_.status(e) != PointStatus::Known)
            throw PreconditionViolated("stored term " + exponent_to_string(e) + " is not in the known region");
    }
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return same_field(spec_, o.spec_) && n_ == o.n_ && terms_ == o.terms_ && cert_ == o.cert_;
}

static std::string monomial_text(const Exponent& e) {
    std::string s;
    for (size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += "t" + std::to_string(k + 1);
        if (e[k] != 1) s += "^" + std::to_string(e[k]);
    }
    return s;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string m = monomial_text(e);
        if (m.empty())
            os << c.to_string();
        else if (c.is_one())
            os << m;
        else
            os << c.to_string() << "*" << m;
    }
    if (first) os << "0";
    if (n_ > 0) {
        os << " + O(";
        for (int k = 0; k < n_; ++k) os << (k ? ", " : "") << "t" << k + 1 << "^" << cert_.hi()[k];
        os << ")";
    }
    return os.str();
}

// --------------------------------------------------------------- arithmetic

TruncatedSeries s_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same(a, b);
    const int n = a.n();
    const auto& ca = a.cert();
    const auto& cb = b.cert();
    std::vector<std::int64_t> hi(n);
    for (int k = 0; k < n; ++k) hi[k] = std::min(ca.hi()[k], cb.hi()[k]);
    auto cert = BoundCertificate::build(n, n ? std::min(ca.lo_top(), cb.lo_top()) : 0, hi,
                                        [&](int k, std::int64_t x) { return min_opt(ca.bound(k, x), cb.bound(k, x)); });
    TruncatedSeries::Terms t = a.terms();
    for (const auto& [e, c] : b.terms()) {
        auto [it, fresh] = t.emplace(e, c);
        if (!fresh) it->second = it->second + c;
    }
    return TruncatedSeries(a.spec(), n, std::move(t), std::move(cert));
}

TruncatedSeries s_neg(const TruncatedSeries& a) { return s_scale(-FieldScalar::one(a.spec()), a); }

TruncatedSeries s_sub(const TruncatedSeries& a, const TruncatedSeries& b) { return s_add(a, s_neg(b)); }

TruncatedSeries s_scale(const FieldScalar& c, const TruncatedSeries& a) {
    if (!same_field(c.spec(), a.spec())) throw SpecMismatch("scalar and series fields differ");
    TruncatedSeries::Terms t;
    if (!c.is_zero())
        for (const auto& [e, v] : a.terms()) t.emplace(e, c * v);
    return TruncatedSeries(a.spec(), a.n(), std::move(t), a.cert());
}

static TruncatedSeries mul_unchecked(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = a.n();
    const auto& ca = a.cert();
    const auto& cb = b.cert();
    std::vector<std::int64_t> hi(n);
    for (int k = 0; k < n; ++k)
        hi[k] = std::min(ca.hi()[k] + cb.ranges()[k].lo, cb.hi()[k] + ca.ranges()[k].lo);
    auto cert = BoundCertificate::build(
        n, n ? ca.lo_top() + cb.lo_top() : 0, hi, [&](int k, std::int64_t x) -> std::optional<std::int64_t> {
            const AxisRange& ra = ca.ranges()[k + 1];
            const AxisRange& rb = cb.ranges()[k + 1];
            std::optional<std::int64_t> best;
            for (std::int64_t al = std::max(ra.lo, x - rb.hi + 1); al < ra.hi && x - al >= rb.lo; ++al) {
                auto va = ca.rules()[k].at(al);
                if (!va) continue;
                auto vb = cb.rules()[k].at(x - al);
                if (vb) best = min_opt(best, *va + *vb);
            }
            return best;
        });
    TruncatedSeries::Terms t;
    Exponent g(n);
    for (const auto& [ea, va] : a.terms()) {
        for (const auto& [eb, vb] : b.terms()) {
            for (int k = 0; k < n; ++k) g[k] = ea[k] + eb[k];
            if (cert.status(g) != PointStatus::Known) continue;
            auto [it, fresh] = t.emplace(g, va * vb);
            if (!fresh) it->second = it->second + va * vb;
        }
    }
    return TruncatedSeries(a.spec(), n, std::move(t), std::move(cert));
}

TruncatedSeries s_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same(a, b);
    TruncatedSeries r = mul_unchecked(a, b);
    const int n = a.n();
    if (n > 0 && r.cert().ranges()[n - 1].empty() && !a.cert().ranges()[n - 1].empty() &&
        !b.cert().ranges()[n - 1].empty())
        throw EmptyPrecision("no coefficient of the product is certifiable");
    return r;
}

TruncatedSeries s_shift(const TruncatedSeries& a, const Exponent& v) {
    const int n = a.n();
    if (static_cast<int>(v.size()) != n) throw ArityMismatch("shift exponent has wrong arity");
    const auto& ca = a.cert();
    std::vector<std::int64_t> hi(n);
    for (int k = 0; k < n; ++k) hi[k] = ca.hi()[k] + v[k];
    auto cert = BoundCertificate::build(n, n ? ca.lo_top() + v[n - 1] : 0, hi,
                                        [&](int k, std::int64_t x) -> std::optional<std::int64_t> {
                                            auto b = ca.bound(k, x - v[k + 1]);
                                            if (!b) return b;
                                            return *b + v[k];
                                        });
    TruncatedSeries::Terms t;
    for (const auto& [e, c] : a.terms()) {
        Exponent s = e;
        for (int k = 0; k < n; ++k) s[k] += v[k];
        t.emplace(std::move(s), c);
    }
    return TruncatedSeries(a.spec(), n, std::move(t), std::move(cert));
}

TruncatedSeries s_truncate(const TruncatedSeries& a, const std::vector<std::int64_t>& prec) {
    const int n = a.n();
    if (static_cast<int>(prec.size()) != n) throw ArityMismatch("precision vector has wrong arity");
    const auto& ca = a.cert();
    std::vector<std::int64_t> hi(n);
    for (int k = 0; k < n; ++k) hi[k] = std::min(ca.hi()[k], prec[k]);
    auto cert = BoundCertificate::build(n, ca.lo_top(), hi, [&](int k, std::int64_t x) { return ca.bound(k, x); });
    return TruncatedSeries(a.spec(), n, a.terms(), std::move(cert));
}

Exponent lex_valuation(const TruncatedSeries& a) {
    if (a.terms().empty()) throw ZeroSeries("series has no nonzero known coefficient");
    const Exponent v = a.terms().begin()->first;
    const auto& c = a.cert();
    const int n = a.n();
    // Every point lex-below v must be certified zero. Within the innermost
    // axis that is automatic (known region); further out the intervening
    // slices must be empty, otherwise they hide unknown coefficients.
    for (int k = n - 1; k >= 1; --k) {
        std::int64_t lo = k == n - 1 ? c.lo_top() : *c.rules()[k].at(v[k + 1]);
        for (std::int64_t x = lo; x < v[k]; ++x) {
            if (c.rules()[k - 1].at(x))
                throw IndeterminateLeading("slice t" + std::to_string(k + 1) + "^" + std::to_string(x) +
                                           " below the leading term is not certified zero");
        }
    }
    return v;
}

namespace {

// Lower bound for axis k of any product of at most `count` possible points
// of u whose leading axis lies above k, as a function of the axis-(k+1)
// coordinate: the min-plus closure of u's slice rule.
std::map<std::int64_t, std::int64_t> closure_rule(const BoundCertificate& cu, int k, std::int64_t count) {
    const AxisRange yr = cu.ranges()[k + 1];
    std::map<std::int64_t, std::int64_t> best{{0, 0}};
    std::map<std::int64_t, std::int64_t> cur = best;
    for (std::int64_t m = 1; m <= count && !cur.empty(); ++m) {
        std::map<std::int64_t, std::int64_t> next;
        for (const auto& [x, v] : cur) {
            for (std::int64_t y = yr.lo; y < yr.hi; ++y) {
                auto r = cu.rules()[k].at(y);
                if (!r) continue;
                auto [it, fresh] = next.emplace(x + y, v + *r);
                if (!fresh) it->second = std::min(it->second, v + *r);
            }
        }
        bool improved = false;
        for (const auto& [x, v] : next) {
            auto [it, fresh] = best.emplace(x, v);
            if (fresh || v < it->second) {
                it->second = v;
                improved = true;
            }
        }
        if (!improved) break;
        cur = std::move(next);
    }
    return best;
}

}  // namespace

TruncatedSeries s_inv(const TruncatedSeries& a, const std::vector<std::int64_t>& prec) {
    const int n = a.n();
    if (static_cast<int>(prec.size()) != n) throw ArityMismatch("precision vector has wrong arity");
    Exponent v;
    try {
        v = lex_valuation(a);
    } catch (const IndeterminateLeading& e) {
        throw NonUnitLeading(e.what());
    }
    const FieldRef& k_spec = a.spec();
    const FieldScalar c_inv = f_inv(a.coeff(v));
    Exponent neg_v(n);
    for (int k = 0; k < n; ++k) neg_v[k] = -v[k];
    // a = c t^v (1 + u); every possibly nonzero point of u is lex-positive.
    TruncatedSeries normed = s_scale(c_inv, s_shift(a, neg_v));
    TruncatedSeries::Terms ut = normed.terms();
    ut.erase(Exponent(n, 0));
    const BoundCertificate& cu = normed.cert();

    // A point of S = (1+u)^-1 below P uses at most cnt[j] factors led by
    // axis j; factors led further out contribute at least d[j] on axis j.
    std::vector<std::int64_t> P(n), d(n), cnt(n), outer_cnt(n);
    for (int k = 0; k < n; ++k) {
        P[k] = prec[k] + v[k];
        d[k] = std::min<std::int64_t>(0, cu.ranges()[k].lo);
    }
    std::int64_t outer = 0;
    std::vector<std::int64_t> hi(n);
    for (int k = n - 1; k >= 0; --k) {
        outer_cnt[k] = outer;
        cnt[k] = std::max<std::int64_t>(0, P[k] - 1 - d[k] * outer);
        // Products containing an unknown factor land at or beyond this.
        hi[k] = std::min(P[k], cu.hi()[k] + d[k] * outer);
        if (hi[k] < P[k])
            throw EmptyPrecision("inverse is certifiable only to t" + std::to_string(k + 1) + "^" +
                                 std::to_string(hi[k] - v[k]));
        outer += cnt[k];
    }
    std::vector<std::map<std::int64_t, std::int64_t>> rules(n > 0 ? n - 1 : 0);
    for (int k = 0; k + 1 < n; ++k) rules[k] = closure_rule(cu, k, outer_cnt[k]);
    auto cert = BoundCertificate::build(n, 0, hi, [&](int k, std::int64_t x) -> std::optional<std::int64_t> {
        auto it = rules[k].find(x);
        if (it == rules[k].end()) return std::nullopt;
        return it->second;
    });

    // Exact coefficients of (1 + u_known)^-1 by the recurrence
    // S_r = [r = 0] - sum_d u_d S_{r-d}; u_known differs from u only by
    // terms whose products stay outside the certified region.
    std::vector<std::int64_t> dk(n, 0);
    for (const auto& [e, c] : ut) {
        int lead = n - 1;
        while (lead > 0 && e[lead] == 0) --lead;
        for (int j = 0; j < lead; ++j) dk[j] = std::min(dk[j], e[j]);
    }
    auto possible = [&](const Exponent& r) {
        std::int64_t above = 0;
        for (int j = n - 1; j >= 0; --j) {
            std::int64_t room = r[j] - dk[j] * above;
            if (room < 0) return false;
            above += room;
        }
        return true;
    };
    std::map<Exponent, FieldScalar, LexLess> memo;
    const FieldScalar zero = FieldScalar::zero(k_spec);
    std::function<FieldScalar(const Exponent&)> coeff = [&](const Exponent& r) -> FieldScalar {
        if (!possible(r)) return zero;
        auto it = memo.find(r);
        if (it != memo.end()) return it->second;
        FieldScalar acc = std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; })
                              ? FieldScalar::one(k_spec)
                              : zero;
        Exponent q(n);
        for (const auto& [e, c] : ut) {
            for (int j = 0; j < n; ++j) q[j] = r[j] - e[j];
            FieldScalar sq = coeff(q);
            if (!sq.is_zero()) acc = acc - c * sq;
        }
        memo.emplace(r, acc);
        return acc;
    };
    TruncatedSeries::Terms st;
    if (n == 0) {
        st.emplace(Exponent{}, FieldScalar::one(k_spec));
    } else {
        Exponent r(n);
        for (int j = 0; j < n; ++j) r[j] = cert.ranges()[j].lo;
        bool empty_box = false;
        for (int j = 0; j < n; ++j) empty_box |= cert.ranges()[j].empty();
        while (!empty_box) {
            if (cert.status(r) == PointStatus::Known) {
                FieldScalar c = coeff(r);
                if (!c.is_zero()) st.emplace(r, c);
            }
            int j = 0;
            while (j < n && ++r[j] == cert.ranges()[j].hi) {
                r[j] = cert.ranges()[j].lo;
                ++j;
            }
            if (j == n) break;
        }
    }
    TruncatedSeries S(k_spec, n, std::move(st), std::move(cert));
    return s_truncate(s_scale(c_inv, s_shift(S, neg_v)), prec);
}

TruncatedSeries residue(const TruncatedSeries& a) {
    const int n = a.n();
    if (n == 0) throw ArityMismatch("residue of an arity-0 series");
    const auto& c = a.cert();
    if (c.hi()[n - 1] <= 0) throw EmptyPrecision("the t" + std::to_string(n) + "^0 slice is unknown");
    for (const auto& [e, v] : a.terms())
        if (e[n - 1] < 0) throw NotIntegral("term at " + exponent_to_string(e) + " has negative outer exponent");
    for (std::int64_t x = c.lo_top(); x < 0; ++x)
        if (n >= 2 && c.rules()[n - 2].at(x))
            throw NotIntegral("slice t" + std::to_string(n) + "^" + std::to_string(x) + " is not certified zero");
    std::vector<std::int64_t> hi(c.hi().begin(), c.hi().end() - 1);
    std::optional<std::int64_t> top;
    if (n >= 2) top = c.lo_top() <= 0 ? c.rules()[n - 2].at(0) : std::nullopt;
    std::int64_t lo_top = n >= 2 ? (top ? *top : hi[n - 2]) : 0;
    auto cert = BoundCertificate::build(n - 1, lo_top, hi, [&](int k, std::int64_t x) { return c.bound(k, x); });
    TruncatedSeries::Terms t;
    for (const auto& [e, v] : a.terms())
        if (e[n - 1] == 0) t.emplace(Exponent(e.begin(), e.end() - 1), v);
    return TruncatedSeries(a.spec(), n - 1, std::move(t), std::move(cert));
}

TruncatedSeries lift_std(const TruncatedSeries& a, std::int64_t hi_top) {
    const int n = a.n();
    const auto& c = a.cert();
    std::vector<std::int64_t> hi = c.hi();
    hi.push_back(hi_top);
    auto cert = BoundCertificate::build(n + 1, 0, hi, [&](int k, std::int64_t x) -> std::optional<std::int64_t> {
        if (k == n - 1) return x == 0 ? std::optional<std::int64_t>(c.lo_top()) : std::nullopt;
        return c.bound(k, x);
    });
    TruncatedSeries::Terms t;
    for (const auto& [e, v] : a.terms()) {
        Exponent l = e;
        l.push_back(0);
        t.emplace(std::move(l), v);
    }
    return TruncatedSeries(a.spec(), n + 1, std::move(t), std::move(cert));
}

bool agree_on_common(const TruncatedSeries& a, const TruncatedSeries& b, std::string* why) {
    check_same(a, b);
    auto side = [&](const TruncatedSeries& x, const TruncatedSeries& y) {
        for (const auto& [e, c] : x.terms()) {
            PointStatus st = y.status(e);
            if (st == PointStatus::Unknown) continue;
            if (st == PointStatus::Zero || y.coeff(e) != c) {
                if (why) *why = "coefficients differ at " + exponent_to_string(e);
                return false;
            }
        }
        return true;
    };
    return side(a, b) && side(b, a);
}

}  // namespace tatekit
