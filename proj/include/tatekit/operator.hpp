#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tatekit/series.hpp"

namespace tatekit {

// Finitely presented endomorphisms of V(n). Axes are 1-based in the public
// interface, matching t1..tn.
class OperatorExpr {
public:
    enum class Kind { Id, Scale, MulBy, Proj, CoProj, FiniteRank, Sum, Compose };
    using Functional = std::vector<std::pair<Exponent, FieldScalar>>;

    static OperatorExpr id(FieldRef spec, int n);
    static OperatorExpr scale(const FieldScalar& c, int n);
    // The payload must carry a rectangular certificate; its stored terms are
    // used as an exact Laurent polynomial.
    static OperatorExpr mul_by(const TruncatedSeries& g);
    // Keeps the monomials with alpha_axis >= c.
    static OperatorExpr proj(FieldRef spec, int n, int axis, std::int64_t c);
    static OperatorExpr coproj(FieldRef spec, int n, int axis, std::int64_t c);
    // x -> phi(x) v, with phi reading finitely many coefficients of x.
    static OperatorExpr finite_rank(Functional phi, const TruncatedSeries& v);
    static OperatorExpr sum(std::vector<OperatorExpr> terms);
    // compose({f1, ..., fk}) is f1 o ... o fk: fk is applied first.
    static OperatorExpr compose(std::vector<OperatorExpr> chain);

    Kind kind() const { return node_->kind; }
    int n() const { return node_->n; }
    const FieldRef& spec() const { return node_->spec; }
    const FieldScalar& scalar() const { return node_->scalar; }
    const TruncatedSeries& payload() const { return *node_->payload; }
    int axis() const { return node_->axis; }
    std::int64_t cutoff() const { return node_->cutoff; }
    const Functional& functional() const { return node_->functional; }
    const std::vector<OperatorExpr>& children() const { return node_->children; }

    std::string to_string() const;

private:
    struct Node {
        Kind kind = Kind::Id;
        int n = 0;
        FieldRef spec;
        FieldScalar scalar;
        std::optional<TruncatedSeries> payload;
        int axis = 0;
        std::int64_t cutoff = 0;
        Functional functional;
        std::vector<OperatorExpr> children;
    };
    explicit OperatorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

TruncatedSeries apply(const OperatorExpr& f, const TruncatedSeries& x);

// Monomial input known exactly far enough past the exponent that every
// operator in the generated class sees it as exact.
TruncatedSeries probe_monomial(const FieldRef& spec, const Exponent& e);

// ---------------------------------------------------------------- normal form

// Half-open [lo, hi) with kNegInf/kPosInf for missing ends.
struct Interval {
    std::int64_t lo = kNegInf;
    std::int64_t hi = kPosInf;
    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

struct Cell {
    std::vector<Interval> box;
    FieldScalar coeff;
};

// f(e_a) = sum over shifts d of D_d(a) e_{a+d}, plus a finite matrix. Each
// D_d is piecewise constant on axis-aligned cells; after normalization the
// cells of one shift are disjoint and carry nonzero coefficients.
struct NormalForm {
    int n = 0;
    FieldRef spec;
    std::map<Exponent, std::vector<Cell>, LexLess> diag;
    std::map<std::pair<Exponent, Exponent>, FieldScalar, std::less<>> finite;  // (input, output)
};

NormalForm normal_form(const OperatorExpr& f);

// ------------------------------------------------------------ window transfer

// Output bounds for an input window lo_k <= alpha_k < hi_k, written with
// lo_k = -e_k and hi_k = j_k. The lower bound on axis k is
// min(constant, -e_k + shift); either part may be absent.
struct AxisTransfer {
    std::optional<std::int64_t> lo_const, lo_shift;
    std::optional<std::int64_t> hi_const, hi_shift;  // exclusive: max(constant, j_k + shift)
    std::optional<std::int64_t> kernel;              // inputs with alpha_k >= kernel are annihilated

    bool lower_bounded() const { return !lo_shift.has_value(); }
    std::optional<std::int64_t> lower(std::int64_t lo_in) const;
    std::optional<std::int64_t> upper(std::int64_t hi_in) const;
    std::string lower_text(int axis) const;
    std::string upper_text(int axis) const;
};

struct WindowTransfer {
    int n = 0;
    std::vector<AxisTransfer> axes;
    std::string to_string() const;
};

WindowTransfer transfer(const OperatorExpr& f);

// ------------------------------------------------------------- classification

enum class Membership { In, Out, Unknown };
std::string membership_name(Membership m);

struct IdealVerdict {
    Membership state = Membership::Unknown;
    std::string certificate;       // why IN, or the reason for UNKNOWN
    std::vector<Exponent> witness;  // input monomial family for OUT
};

struct IdealFlags {
    int n = 0;
    std::vector<IdealVerdict> plus, minus;  // index k is axis k+1
    std::string to_string() const;
};

IdealFlags classify_tate(const OperatorExpr& f);

struct YekutieliConfig {
    std::int64_t radius = 8;
};
IdealFlags classify_yekutieli(const OperatorExpr& f, const YekutieliConfig& cfg = {});

// Bound on every structural breakpoint of f (cutoffs, functional support,
// pulled back through the shifts applied before them).
std::int64_t structural_radius(const OperatorExpr& f);

std::pair<OperatorExpr, OperatorExpr> decompose(const OperatorExpr& f, int axis);

struct SuiteCheck {
    std::string name;
    int passed = 0;
    int total = 0;
    std::vector<std::string> violations;
    bool ok() const { return passed == total; }
};

struct IdempotentReport {
    int n = 0;
    std::vector<SuiteCheck> checks;
    bool ok() const;
    std::string to_string() const;
};

// Checks the four good-idempotent axioms for P_i^+ = Proj(i, 0): the two
// operator identities on random inputs, the two ideal inclusions through
// classify_tate on random operators.
IdempotentReport idempotent_suite(int n, std::uint64_t seed, int samples = 100);

}  // namespace tatekit
