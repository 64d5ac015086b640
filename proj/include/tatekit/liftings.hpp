#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tatekit/series.hpp"

namespace tatekit {

// A coefficient-field lifting k((t1)) -> k((t1))[[t2]]. TWISTED sends the
// generator b_i = t1^{d_i} to b_i + t1^{Q(i)} t2 when Q(i) is set.
struct LiftingGenerator {
    int index = 0;
    std::int64_t degree = 1;            // d_i >= 1
    std::optional<std::int64_t> q;      // absent: unperturbed
};

struct LiftingSpec {
    enum class Mode { Standard, Twisted };
    Mode mode = Mode::Standard;
    std::vector<LiftingGenerator> generators;

    static LiftingSpec standard();
    // b_0 = t1 unperturbed and b_i = t1^i for 2 <= i <= count, with Q(i)
    // given by the preset: "neg-identity" (-i), "pos-identity" (+i), "zero" (0).
    static LiftingSpec preset(const std::string& name, int count);

    // Throws InvalidSpec on repeated indices or degrees, or a degree below 1.
    void validate() const;
    const LiftingGenerator* find(int index) const;
    std::string to_string() const;
    bool operator==(const LiftingSpec& o) const;
};

bool operator==(const LiftingGenerator& a, const LiftingGenerator& b);

// Factorization of t1^d into generators, greedy by largest degree. Indices
// repeat for repeated factors. NotInGeneratedModel when d cannot be reached.
std::vector<int> exponent_word(const LiftingSpec& spec, std::int64_t d);

// STANDARD: lift_std to t2-precision 2. TWISTED: the multiplicative
// extension of the generator map modulo t2^2, reading a as the Laurent
// polynomial of its stored terms.
TruncatedSeries lift(const LiftingSpec& spec, const TruncatedSeries& a);

struct FalsifierWitness {
    std::int64_t m = 0;   // candidate lattice t1^-m k[[t1]][[t2]]
    int index = 0;        // generator whose image leaves it
    Exponent exponent;    // offending image exponent
};

struct FalsifierVerdict {
    bool plausible = true;                  // MORPHISM_PLAUSIBLE
    std::optional<std::int64_t> containing;  // smallest m whose lattice holds every image
    std::vector<FalsifierWitness> witnesses;
    std::string to_string() const;
};

// Candidate lattices are t1^-m k[[t1]][[t2]] for 0 <= m < radius; the images
// tested are those of generators with index <= radius.
FalsifierVerdict falsify_tate(const LiftingSpec& spec, int radius);

// Images of the generators with index <= radius, in index order.
std::vector<std::pair<int, TruncatedSeries>> generator_images(const LiftingSpec& spec, int radius);

// Compares the lifting restricted to the subring generated by b_0 = t1 with
// the standard lift on sampled polynomials, and checks t2 stays fixed on
// monomial products. PreconditionViolated unless b_0 = t1 is unperturbed.
bool fixes_rational_subfield(const LiftingSpec& spec, int samples, std::uint64_t seed = 1);

}  // namespace tatekit
