#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tatekit/lattice.hpp"
#include "tatekit/polymod.hpp"
#include "tatekit/series.hpp"

namespace tatekit {

// ------------------------------------------------------------------ Hensel

// Completion of F_p[x] at the prime (f), with pi = f. Elements are kept as
// polynomials modulo f^N and shown through their f-adic digits.
struct CompletionModel {
    std::int64_t p = 0;
    polymod::Poly f;
    int precision = 0;
    FieldRef kappa;          // F_p[x]/(f)
    polymod::Poly root;      // a with f(a) = 0 mod f^N and a = x mod f
    TruncatedSeries digits;  // a = sum_j c_j pi^j, c_j of degree < deg f, over kappa
    // Image of the kappa-basis 1, x, ..., x^(d-1): the powers of a mod f^N.
    std::vector<polymod::Poly> embedding;
    // f-adic valuation of f(a_k) after each Newton step, starting at a_0 = x.
    std::vector<int> error_exponents;
};

// f given low degree first; NotIrreducible when f is reducible.
CompletionModel hensel_coefficient_field(std::int64_t p, const polymod::Poly& f, int N);

// The f-adic digits of g modulo f^N, as a series in pi over kappa.
TruncatedSeries fadic_digits(const FieldRef& kappa, const polymod::Poly& g, const polymod::Poly& f, int N);
// Largest j <= cap with f^j dividing g (cap for g = 0).
int fadic_valuation(const polymod::Poly& g, const polymod::Poly& f, std::int64_t p, int cap);

// ------------------------------------------------------------------- adeles

struct StaircaseStep {
    std::string ring;     // O_i
    std::string residue;  // k_i
    int arity_before = 0;
};

struct AdeleDescription {
    std::string flag;
    std::string field;
    FieldRef base;
    int n = 0;
    std::vector<StaircaseStep> steps;
    std::string to_string() const;
};

AdeleDescription adele_line(std::int64_t p, const polymod::Poly& f);
// Flag ((0) > (y) > (x, y)) on the plane: K = k((x))((y)) with t1 = x, t2 = y.
AdeleDescription adele_plane_smooth(const FieldRef& base);

// Residue map and standard lift at staircase step `step` (1-based) of an
// n-step staircase; step i acts on arity n - i + 1.
TruncatedSeries staircase_residue(const AdeleDescription& d, int step, const TruncatedSeries& a);
TruncatedSeries staircase_lift(const AdeleDescription& d, int step, const TruncatedSeries& a, std::int64_t hi_top);

// -------------------------------------------------------------------- cusp

std::vector<std::int64_t> semigroup_gaps(const std::vector<std::int64_t>& gens);
bool in_semigroup(const std::vector<std::int64_t>& gens, std::int64_t v);

struct CuspVerdict {
    bool realizable = false;
    std::int64_t v = 0;
    // Realizable: t^a s^b with 2a + 3b = v. Otherwise the missed valuation.
    std::optional<std::pair<std::int64_t, std::int64_t>> generator;
    std::optional<std::int64_t> gap;
    std::string explanation;
    std::string to_string() const;
};

// Decides whether u^v k[[u]] comes from a lattice generated by polynomials
// in s = u^3, t = u^2. NotStandardForm unless the target is standard.
CuspVerdict cusp_is_beilinson_realizable(const MonomialLattice& target);

struct StrictnessWitness {
    std::string claim;
    std::string witness;
    bool holds = false;
};
// Executable separations between the lattice notions.
std::vector<StrictnessWitness> lattice_strictness();

// ----------------------------------------------------------------- Parshin

// V = sum_i U_i t2^i with U_i = t1^{lower(i)} k[[t1]] for i < threshold and
// U_i = k((t1)) from threshold on. lower(i) = base + slope * i unless listed.
struct OpenProfile {
    std::int64_t threshold = 0;
    std::int64_t base = 0;
    std::int64_t slope = 1;
    std::map<std::int64_t, std::int64_t> exceptions;

    std::optional<std::int64_t> lower(std::int64_t i) const;  // nullopt: FULL
    bool contains(const Exponent& e) const;
    bool operator==(const OpenProfile& o) const {
        return threshold == o.threshold && base == o.base && slope == o.slope && exceptions == o.exceptions;
    }
};

struct CoverEntry {
    Exponent monomial, left, right;
    bool verified = false;
};

struct CoverReport {
    std::vector<CoverEntry> entries;
    bool all_verified() const;
    std::string to_string() const;
};

// Factors every monomial of the box [lo, hi) as a product of two monomials
// of V. The first factor takes t2-exponent at least `lead` above the target.
CoverReport parshin_cover(const OpenProfile& V, const Exponent& lo, const Exponent& hi, std::int64_t lead = 10);

}  // namespace tatekit
