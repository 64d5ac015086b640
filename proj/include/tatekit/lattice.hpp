#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "tatekit/series.hpp"

namespace tatekit {

enum class Sym { Zero, Full };

class MonomialSubspace;
using SubspaceRef = std::shared_ptr<const MonomialSubspace>;

// One t_n^x slice of a subspace: all of V(n-1), nothing, or a subspace of
// arity n-1. Arity-1 subspaces only have symbolic slices.
using Slice = std::variant<Sym, SubspaceRef>;

// Behaviour of the slices above the window. Shifted(base, slope) means the
// slice at x is t_{n-1}^(base + slope*x) O_1, which is how the non-Tate
// diagonal subspaces are described.
struct TailRule {
    enum Kind { Zero, Full, Shifted } kind = Full;
    std::int64_t base = 0;
    std::int64_t slope = 0;
    static TailRule zero() { return {Zero, 0, 0}; }
    static TailRule full() { return {Full, 0, 0}; }
    static TailRule shifted(std::int64_t base, std::int64_t slope) { return {Shifted, base, slope}; }
    bool operator==(const TailRule& o) const {
        return kind == o.kind && (kind != Shifted || (base == o.base && slope == o.slope));
    }
};

// A subspace of V(n) = k((t1))...((tn)) spanned by monomials, described by
// its outer window [m, M): explicit slices inside, `head` below m and the
// tail rule from M on. Construction canonicalizes: the window is trimmed to
// slices that differ from head and tail, and symbolic slices are collapsed.
class MonomialSubspace {
public:
    MonomialSubspace(int n, std::int64_t m, std::int64_t M, std::vector<Slice> slices, Sym head, TailRule tail);

    static SubspaceRef full(int n);
    static SubspaceRef zero(int n);
    // t_n^i O_1 with O_1 = k((t1..t_{n-1}))[[t_n]].
    static SubspaceRef standard(int n, std::int64_t i);

    int n() const { return n_; }
    std::int64_t m() const { return m_; }
    std::int64_t M() const { return M_; }
    Sym head() const { return head_; }
    const TailRule& tail() const { return tail_; }
    const std::vector<Slice>& slices() const { return slices_; }

    Slice slice_at(std::int64_t x) const;
    bool contains_point(const Exponent& e) const;
    bool is_full() const { return head_ == Sym::Full && tail_.kind == TailRule::Full && m_ == M_; }
    bool is_zero() const { return head_ == Sym::Zero && tail_.kind == TailRule::Zero && m_ == M_; }
    std::string to_string() const;

    bool operator==(const MonomialSubspace& o) const;

private:
    int n_;
    std::int64_t m_, M_;
    std::vector<Slice> slices_;
    Sym head_;
    TailRule tail_;
};

bool slice_equal(const Slice& a, const Slice& b);

// Predicate for a Tate lattice: nothing below the window, everything from
// some t_n^M on, and every slice an admissible subspace (no sloped tails at
// any depth). On failure the reason names the first violated condition.
bool is_lattice(const MonomialSubspace& s, std::string* reason = nullptr);

class MonomialLattice {
public:
    explicit MonomialLattice(SubspaceRef s);  // NotALattice on failure
    static MonomialLattice standard(int n, std::int64_t i) { return MonomialLattice(MonomialSubspace::standard(n, i)); }
    const MonomialSubspace& subspace() const { return *s_; }
    const SubspaceRef& ref() const { return s_; }
    int n() const { return s_->n(); }
    bool operator==(const MonomialLattice& o) const { return *s_ == *o.s_; }

private:
    SubspaceRef s_;
};

// True when b is a subspace of a.
bool contains(const MonomialSubspace& a, const MonomialSubspace& b);
SubspaceRef intersect(const MonomialSubspace& a, const MonomialSubspace& b);
SubspaceRef unite(const MonomialSubspace& a, const MonomialSubspace& b);

MonomialLattice meet(const MonomialLattice& a, const MonomialLattice& b);
MonomialLattice join(const MonomialLattice& a, const MonomialLattice& b);

// (m, M) with standard(M) <= L <= standard(m), m maximal and M minimal.
std::pair<std::int64_t, std::int64_t> sandwich_standard(const MonomialLattice& l);

struct QuotientSlice {
    std::int64_t x;
    Slice big;
    Slice small;
};

// Graded pieces of big/small: the slices where the two differ, in
// increasing t_n order. NotContained unless small <= big.
std::vector<QuotientSlice> quotient(const MonomialLattice& big, const MonomialLattice& small);

}  // namespace tatekit
