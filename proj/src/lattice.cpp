#include "tatekit/lattice.hpp"

#include <sstream>

#include "tatekit/errors.hpp"

namespace tatekit {

namespace {

SubspaceRef to_sub(int n, const Slice& s) {
    if (auto sym = std::get_if<Sym>(&s)) return *sym == Sym::Full ? MonomialSubspace::full(n) : MonomialSubspace::zero(n);
    return std::get<SubspaceRef>(s);
}

Slice normalize_slice(const Slice& s) {
    if (auto sub = std::get_if<SubspaceRef>(&s)) {
        if ((*sub)->is_full()) return Sym::Full;
        if ((*sub)->is_zero()) return Sym::Zero;
    }
    return s;
}

Slice tail_slice(int n, const TailRule& t, std::int64_t x) {
    switch (t.kind) {
        case TailRule::Zero:
            return Sym::Zero;
        case TailRule::Full:
            return Sym::Full;
        case TailRule::Shifted:
            return MonomialSubspace::standard(n - 1, t.base + t.slope * x);
    }
    return Sym::Zero;
}

bool is_sym(const Slice& s, Sym v) {
    auto p = std::get_if<Sym>(&s);
    return p && *p == v;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

// Tail of the pointwise meet (or join) of two tails and the first x >= from
// where it is valid.
std::pair<TailRule, std::int64_t> combine_tails(const TailRule& a, const TailRule& b, std::int64_t from, bool meet) {
    const TailRule::Kind absorb = meet ? TailRule::Zero : TailRule::Full;
    const TailRule::Kind unit = meet ? TailRule::Full : TailRule::Zero;
    if (a.kind == absorb || b.kind == absorb) return {meet ? TailRule::zero() : TailRule::full(), from};
    if (a.kind == unit) return {b, from};
    if (b.kind == unit) return {a, from};
    if (a.slope == b.slope)
        return {TailRule::shifted(meet ? std::max(a.base, b.base) : std::min(a.base, b.base), a.slope), from};
    // The meet keeps the larger bound, which eventually follows the larger
    // slope; the join follows the smaller one.
    const TailRule& dom = (a.slope > b.slope) == meet ? a : b;
    const TailRule& oth = &dom == &a ? b : a;
    std::int64_t x;
    if (meet)
        x = ceil_div(oth.base - dom.base, dom.slope - oth.slope);  // dom(x) >= oth(x)
    else
        x = ceil_div(dom.base - oth.base, oth.slope - dom.slope);  // dom(x) <= oth(x)
    return {dom, std::max(from, x)};
}

SubspaceRef combine(const MonomialSubspace& a, const MonomialSubspace& b, bool meet);

Slice combine_slice(int n, const Slice& a, const Slice& b, bool meet) {
    const Sym absorb = meet ? Sym::Zero : Sym::Full;
    const Sym unit = meet ? Sym::Full : Sym::Zero;
    if (is_sym(a, absorb) || is_sym(b, absorb)) return absorb;
    if (is_sym(a, unit)) return b;
    if (is_sym(b, unit)) return a;
    return normalize_slice(combine(*to_sub(n - 1, a), *to_sub(n - 1, b), meet));
}

SubspaceRef combine(const MonomialSubspace& a, const MonomialSubspace& b, bool meet) {
    if (a.n() != b.n()) throw ArityMismatch("subspaces of arity " + std::to_string(a.n()) + " and " + std::to_string(b.n()));
    const int n = a.n();
    Sym head;
    if (meet)
        head = a.head() == Sym::Full && b.head() == Sym::Full ? Sym::Full : Sym::Zero;
    else
        head = a.head() == Sym::Full || b.head() == Sym::Full ? Sym::Full : Sym::Zero;
    std::int64_t lo = std::min(a.m(), b.m());
    std::int64_t hi = std::max(a.M(), b.M());
    auto [tail, X] = combine_tails(a.tail(), b.tail(), hi, meet);
    std::vector<Slice> slices;
    for (std::int64_t x = lo; x < X; ++x) slices.push_back(combine_slice(n, a.slice_at(x), b.slice_at(x), meet));
    return std::make_shared<MonomialSubspace>(n, lo, X, std::move(slices), head, tail);
}

bool slice_contains(int n, const Slice& a, const Slice& b) {
    if (is_sym(b, Sym::Zero) || is_sym(a, Sym::Full)) return true;
    if (n == 1) return false;
    return contains(*to_sub(n - 1, a), *to_sub(n - 1, b));
}

bool tail_contains(const TailRule& a, const TailRule& b, std::int64_t from) {
    if (b.kind == TailRule::Zero || a.kind == TailRule::Full) return true;
    if (b.kind == TailRule::Full || a.kind == TailRule::Zero) return false;
    return b.slope >= a.slope && b.base + b.slope * from >= a.base + a.slope * from;
}

bool admissible(const Slice& s) {
    auto sub = std::get_if<SubspaceRef>(&s);
    if (!sub) return true;
    if ((*sub)->tail().kind == TailRule::Shifted) return false;
    for (const auto& inner : (*sub)->slices())
        if (!admissible(inner)) return false;
    return true;
}

const char* sym_name(Sym s) { return s == Sym::Full ? "FULL" : "ZERO"; }

std::string slice_text(const Slice& s) {
    if (auto sym = std::get_if<Sym>(&s)) return sym_name(*sym);
    return "{" + std::get<SubspaceRef>(s)->to_string() + "}";
}

}  // namespace

bool slice_equal(const Slice& a, const Slice& b) {
    Slice na = normalize_slice(a), nb = normalize_slice(b);
    auto sa = std::get_if<Sym>(&na);
    auto sb = std::get_if<Sym>(&nb);
    if (sa || sb) return sa && sb && *sa == *sb;
    return *std::get<SubspaceRef>(na) == *std::get<SubspaceRef>(nb);
}

MonomialSubspace::MonomialSubspace(int n, std::int64_t m, std::int64_t M, std::vector<Slice> slices, Sym head,
                                   TailRule tail)
    : n_(n), m_(m), M_(M), slices_(std::move(slices)), head_(head), tail_(tail) {
    if (n_ < 1) throw ArityMismatch("subspace arity must be positive");
    if (M_ < m_ || static_cast<std::int64_t>(slices_.size()) != M_ - m_)
        throw PreconditionViolated("window [" + std::to_string(m_) + ", " + std::to_string(M_) +
                                   ") does not match the slice count");
    if (n_ == 1 && tail_.kind == TailRule::Shifted) throw PreconditionViolated("arity-1 subspace with a sloped tail");
    for (auto& s : slices_) {
        if (auto sub = std::get_if<SubspaceRef>(&s)) {
            if (n_ == 1) throw PreconditionViolated("arity-1 subspace slices must be FULL or ZERO");
            if (!*sub || (*sub)->n() != n_ - 1) throw ArityMismatch("slice arity must be n-1");
        }
        s = normalize_slice(s);
    }
    while (m_ < M_ && slice_equal(slices_.front(), head_)) {
        slices_.erase(slices_.begin());
        ++m_;
    }
    while (M_ > m_ && slice_equal(slices_.back(), tail_slice(n_, tail_, M_ - 1))) {
        slices_.pop_back();
        --M_;
    }
    if (m_ == M_ && tail_.kind != TailRule::Shifted &&
        (tail_.kind == TailRule::Full) == (head_ == Sym::Full))
        m_ = M_ = 0;
}

SubspaceRef MonomialSubspace::full(int n) {
    return std::make_shared<MonomialSubspace>(n, 0, 0, std::vector<Slice>{}, Sym::Full, TailRule::full());
}

SubspaceRef MonomialSubspace::zero(int n) {
    return std::make_shared<MonomialSubspace>(n, 0, 0, std::vector<Slice>{}, Sym::Zero, TailRule::zero());
}

SubspaceRef MonomialSubspace::standard(int n, std::int64_t i) {
    return std::make_shared<MonomialSubspace>(n, i, i, std::vector<Slice>{}, Sym::Zero, TailRule::full());
}

Slice MonomialSubspace::slice_at(std::int64_t x) const {
    if (x < m_) return head_;
    if (x >= M_) return tail_slice(n_, tail_, x);
    return slices_[x - m_];
}

bool MonomialSubspace::contains_point(const Exponent& e) const {
    if (static_cast<int>(e.size()) != n_) throw ArityMismatch("point has wrong arity");
    Slice s = slice_at(e[n_ - 1]);
    if (auto sym = std::get_if<Sym>(&s)) return *sym == Sym::Full;
    return std::get<SubspaceRef>(s)->contains_point(Exponent(e.begin(), e.end() - 1));
}

std::string MonomialSubspace::to_string() const {
    std::ostringstream os;
    os << "t" << n_ << ": below " << m_ << " " << sym_name(head_);
    for (std::int64_t x = m_; x < M_; ++x) os << "; " << x << " " << slice_text(slices_[x - m_]);
    os << "; from " << M_ << " ";
    if (tail_.kind == TailRule::Shifted)
        os << "t" << n_ - 1 << "^(" << tail_.base << (tail_.slope >= 0 ? "+" : "") << tail_.slope << "x)O";
    else
        os << (tail_.kind == TailRule::Full ? "FULL" : "ZERO");
    return os.str();
}

bool MonomialSubspace::operator==(const MonomialSubspace& o) const {
    if (n_ != o.n_ || m_ != o.m_ || M_ != o.M_ || head_ != o.head_ || !(tail_ == o.tail_)) return false;
    for (size_t i = 0; i < slices_.size(); ++i)
        if (!slice_equal(slices_[i], o.slices_[i])) return false;
    return true;
}

bool is_lattice(const MonomialSubspace& s, std::string* reason) {
    if (s.head() != Sym::Zero) {
        if (reason) *reason = "unbounded below: slices below t" + std::to_string(s.n()) + "^" + std::to_string(s.m()) + " are nonzero";
        return false;
    }
    if (s.tail().kind != TailRule::Full) {
        if (reason) *reason = "no FULL tail";
        return false;
    }
    for (std::int64_t x = s.m(); x < s.M(); ++x) {
        if (!admissible(s.slice_at(x))) {
            if (reason) *reason = "slice at t" + std::to_string(s.n()) + "^" + std::to_string(x) + " has a sloped tail";
            return false;
        }
    }
    return true;
}

MonomialLattice::MonomialLattice(SubspaceRef s) : s_(std::move(s)) {
    std::string why;
    if (!s_ || !is_lattice(*s_, &why)) throw NotALattice(why);
}

bool contains(const MonomialSubspace& a, const MonomialSubspace& b) {
    if (a.n() != b.n()) throw ArityMismatch("subspaces of different arity");
    if (b.head() == Sym::Full && a.head() == Sym::Zero) return false;
    const std::int64_t lo = std::min(a.m(), b.m());
    const std::int64_t hi = std::max(a.M(), b.M());
    for (std::int64_t x = lo; x < hi; ++x)
        if (!slice_contains(a.n(), a.slice_at(x), b.slice_at(x))) return false;
    return tail_contains(a.tail(), b.tail(), hi);
}

SubspaceRef intersect(const MonomialSubspace& a, const MonomialSubspace& b) { return combine(a, b, true); }
SubspaceRef unite(const MonomialSubspace& a, const MonomialSubspace& b) { return combine(a, b, false); }

MonomialLattice meet(const MonomialLattice& a, const MonomialLattice& b) {
    return MonomialLattice(intersect(a.subspace(), b.subspace()));
}

MonomialLattice join(const MonomialLattice& a, const MonomialLattice& b) {
    return MonomialLattice(unite(a.subspace(), b.subspace()));
}

std::pair<std::int64_t, std::int64_t> sandwich_standard(const MonomialLattice& l) {
    const MonomialSubspace& s = l.subspace();
    // Canonical windows start at the first nonzero slice and end after the
    // last slice that is not FULL.
    return {s.m() < s.M() ? s.m() : s.M(), s.M()};
}

std::vector<QuotientSlice> quotient(const MonomialLattice& big, const MonomialLattice& small) {
    if (big.n() != small.n()) throw ArityMismatch("lattices of different arity");
    if (!contains(big.subspace(), small.subspace())) throw NotContained("the smaller lattice is not contained in the larger");
    std::vector<QuotientSlice> out;
    const std::int64_t lo = std::min(big.subspace().m(), small.subspace().m());
    const std::int64_t hi = std::max(big.subspace().M(), small.subspace().M());
    for (std::int64_t x = lo; x < hi; ++x) {
        Slice b = big.subspace().slice_at(x), s = small.subspace().slice_at(x);
        if (!slice_equal(b, s)) out.push_back({x, b, s});
    }
    return out;
}

}  // namespace tatekit
