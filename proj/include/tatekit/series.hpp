#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tatekit/basefield.hpp"

namespace tatekit {

// Exponent vectors store axis 1 (t1, innermost) first and axis n (tn,
// outermost) last. Lex order compares the last coordinate first, so tn is
// the most significant variable.
using Exponent = std::vector<std::int64_t>;

struct LexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

int lex_compare(const Exponent& a, const Exponent& b);
std::string exponent_to_string(const Exponent& e);

constexpr std::int64_t kNegInf = INT64_MIN / 4;
constexpr std::int64_t kPosInf = INT64_MAX / 4;

// Lower bound on one axis as a function of the next outer coordinate x.
// Exceptions take precedence; otherwise the affine tail base + slope*x
// applies for x >= tail_start; anything else is an empty slice.
struct SliceRule {
    std::map<std::int64_t, std::optional<std::int64_t>> exceptions;
    std::int64_t tail_start = kNegInf;
    std::optional<std::pair<std::int64_t, std::int64_t>> tail;  // (base, slope)

    static SliceRule constant(std::int64_t c);
    static SliceRule affine(std::int64_t base, std::int64_t slope, std::int64_t start = kNegInf);
    static SliceRule empty();

    std::optional<std::int64_t> at(std::int64_t x) const;
    bool is_constant() const;
    bool operator==(const SliceRule& o) const {
        return exceptions == o.exceptions && tail_start == o.tail_start && tail == o.tail;
    }
};

enum class PointStatus { Zero, Known, Unknown };

// Half-open interval [lo, hi); empty when lo >= hi.
struct AxisRange {
    std::int64_t lo;
    std::int64_t hi;
    bool empty() const { return lo >= hi; }
};

// Certifies where a truncated series can be nonzero and where its
// coefficients are actually known. A point is classified by walking the axes
// from n down to 1: below the lower bound of the current slice it is
// certified zero, at or above hi on that axis it is unknown.
class BoundCertificate {
public:
    BoundCertificate() = default;
    // rules.size() must be n-1; rules[k] bounds axis k+1 in terms of axis k+2.
    BoundCertificate(std::int64_t lo_top, std::vector<SliceRule> rules, std::vector<std::int64_t> hi);
    static BoundCertificate rectangular(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi);
    // Builds a canonical certificate, querying value(k, x) only on the
    // relevant domain of each inner axis.
    static BoundCertificate build(int n, std::int64_t lo_top, std::vector<std::int64_t> hi,
                                  const std::function<std::optional<std::int64_t>(int, std::int64_t)>& value);

    int n() const { return static_cast<int>(hi_.size()); }
    std::int64_t lo_top() const { return lo_top_; }
    const std::vector<SliceRule>& rules() const { return rules_; }
    const std::vector<std::int64_t>& hi() const { return hi_; }

    PointStatus status(const Exponent& e) const;
    // Lower bound for axis k (0-based) given the outer coordinate; empty
    // outside the relevant domain.
    std::optional<std::int64_t> bound(int k, std::int64_t outer) const;
    // ranges()[k] holds every axis-k coordinate that can reach axis k
    // without being certified zero or unknown further out, clipped to hi.
    const std::vector<AxisRange>& ranges() const { return ranges_; }
    bool is_rectangular() const;

    bool operator==(const BoundCertificate& o) const {
        return lo_top_ == o.lo_top_ && rules_ == o.rules_ && hi_ == o.hi_;
    }

private:
    void canonicalize();
    std::int64_t lo_top_ = 0;
    std::vector<SliceRule> rules_;
    std::vector<std::int64_t> hi_;
    std::vector<AxisRange> ranges_;
};

class TruncatedSeries {
public:
    using Terms = std::map<Exponent, FieldScalar, LexLess>;

    TruncatedSeries() = default;
    // Zero coefficients and terms at unknown points are dropped. A term at a
    // certified-zero point raises PreconditionViolated.
    TruncatedSeries(FieldRef spec, int n, Terms terms, BoundCertificate cert);

    // Tightest certificate for "these terms plus O(t^hi)".
    static TruncatedSeries from_terms(FieldRef spec, int n, Terms terms, const std::vector<std::int64_t>& hi);
    static TruncatedSeries monomial(FieldRef spec, const Exponent& e, const FieldScalar& c,
                                    const std::vector<std::int64_t>& hi);
    static TruncatedSeries constant(FieldRef spec, int n, const FieldScalar& c, const std::vector<std::int64_t>& hi);

    const FieldRef& spec() const { return spec_; }
    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    const BoundCertificate& cert() const { return cert_; }
    PointStatus status(const Exponent& e) const { return cert_.status(e); }
    FieldScalar coeff(const Exponent& e) const;
    bool is_zero() const { return terms_.empty(); }
    std::string to_string() const;
    // Throws PreconditionViolated when a stored term violates the certificate.
    void check_invariants() const;

    bool operator==(const TruncatedSeries& o) const;

private:
    FieldRef spec_;
    int n_ = 0;
    Terms terms_;
    BoundCertificate cert_;
};

TruncatedSeries s_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries s_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries s_neg(const TruncatedSeries& a);
TruncatedSeries s_scale(const FieldScalar& c, const TruncatedSeries& a);
TruncatedSeries s_mul(const TruncatedSeries& a, const TruncatedSeries& b);
// Exact multiplication by the monomial t^v.
TruncatedSeries s_shift(const TruncatedSeries& a, const Exponent& v);
// Lowers the precision to min(hi, prec) on every axis.
TruncatedSeries s_truncate(const TruncatedSeries& a, const std::vector<std::int64_t>& prec);
// Inverse known at least up to prec; EmptyPrecision when that is not
// certifiable from a.
TruncatedSeries s_inv(const TruncatedSeries& a, const std::vector<std::int64_t>& prec);
Exponent lex_valuation(const TruncatedSeries& a);
TruncatedSeries residue(const TruncatedSeries& a);
// Standard lift into the next outer variable, exact up to t_{n+1}^hi_top.
TruncatedSeries lift_std(const TruncatedSeries& a, std::int64_t hi_top);

// True when the two series agree on every point known to both certificates.
bool agree_on_common(const TruncatedSeries& a, const TruncatedSeries& b, std::string* why = nullptr);

}  // namespace tatekit
