#pragma once

#include <cstdint>
#include <random>

#include "tatekit/lattice.hpp"
#include "tatekit/operator.hpp"
#include "tatekit/series.hpp"

// Seeded generators shared by the property suites and the tests. Everything
// is driven by a single std::mt19937_64 so runs are reproducible.
namespace tatekit::sampling {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);  // inclusive
bool coin(Rng& rng, double p = 0.5);

// One of Q, F_p for small p, or a small extension field.
FieldRef random_field(Rng& rng);
FieldScalar random_scalar(Rng& rng, const FieldRef& k, bool nonzero = false);

struct SeriesShape {
    int n = 2;
    std::int64_t window = 6;   // support box width per axis
    std::int64_t lo_min = -3;  // lower corner drawn from [lo_min, 0]
    double density = 0.3;
};

// Random polynomial support inside a box, certified by from_terms with the
// precision placed at the top of the box.
TruncatedSeries random_series(Rng& rng, const FieldRef& k, const SeriesShape& shape);
// Random series whose lex-leading term is a nonzero constant at exponent 0,
// certified so that the valuation is determined.
TruncatedSeries random_unit_series(Rng& rng, const FieldRef& k, const SeriesShape& shape, std::int64_t hi);

// Monomial subspaces with windows inside [-radius, radius). Sloped tails
// appear only at the top level and only when allowed.
SubspaceRef random_subspace(Rng& rng, int n, std::int64_t radius, bool sloped = false);
MonomialLattice random_lattice(Rng& rng, int n, std::int64_t radius);

// Laurent polynomial with a few terms, exponents in [-span, span].
TruncatedSeries random_polynomial(Rng& rng, const FieldRef& k, int n, std::int64_t span, int max_terms = 2);
// Expression trees over the primitives: shifts within 2, cutoffs within 3,
// at most `depth` levels of Sum/Compose.
OperatorExpr random_operator(Rng& rng, const FieldRef& k, int n, int depth = 2);

}  // namespace tatekit::sampling
