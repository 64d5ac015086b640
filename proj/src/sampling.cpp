#include "tatekit/sampling.hpp"

namespace tatekit::sampling {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

FieldRef random_field(Rng& rng) {
    switch (uniform(rng, 0, 3)) {
        case 0:
            return FieldSpec::rationals();
        case 1:
            return FieldSpec::prime(7);
        case 2:
            return FieldSpec::prime(2);
        default:
            return FieldSpec::extension(5, {2, 0, 1});  // x^2 + 2 over F_5
    }
}

FieldScalar random_scalar(Rng& rng, const FieldRef& k, bool nonzero) {
    for (;;) {
        FieldScalar s;
        if (k->kind() == FieldKind::Rationals) {
            mpq_class q(static_cast<long>(uniform(rng, -9, 9)), static_cast<unsigned long>(uniform(rng, 1, 5)));
            s = FieldScalar::rational(k, q);
        } else {
            polymod::Poly c;
            for (int i = 0; i < k->degree(); ++i) c.push_back(uniform(rng, 0, k->p() - 1));
            s = FieldScalar::residue(k, c);
        }
        if (!nonzero || !s.is_zero()) return s;
    }
}

TruncatedSeries random_series(Rng& rng, const FieldRef& k, const SeriesShape& shape) {
    std::vector<std::int64_t> lo(shape.n), hi(shape.n);
    for (int i = 0; i < shape.n; ++i) {
        lo[i] = uniform(rng, shape.lo_min, 0);
        hi[i] = lo[i] + shape.window;
    }
    TruncatedSeries::Terms t;
    Exponent e(lo);
    // Walk the box in lex order.
    for (;;) {
        if (coin(rng, shape.density)) t.emplace(e, random_scalar(rng, k, true));
        int i = 0;
        while (i < shape.n && ++e[i] == hi[i]) {
            e[i] = lo[i];
            ++i;
        }
        if (i == shape.n || shape.n == 0) break;
    }
    return TruncatedSeries::from_terms(k, shape.n, std::move(t), hi);
}

TruncatedSeries random_unit_series(Rng& rng, const FieldRef& k, const SeriesShape& shape, std::int64_t hi) {
    const int n = shape.n;
    TruncatedSeries::Terms t;
    t.emplace(Exponent(n, 0), random_scalar(rng, k, true));
    // Terms strictly lex-above 0: either the outer coordinate is positive or
    // it is zero and the remaining coordinates are lex-positive.
    int extra = static_cast<int>(uniform(rng, 0, shape.window));
    for (int j = 0; j < extra; ++j) {
        Exponent e(n);
        int lead = static_cast<int>(uniform(rng, 0, n - 1));
        for (int i = 0; i < n; ++i) {
            if (i > lead)
                e[i] = 0;
            else if (i == lead)
                e[i] = uniform(rng, 1, 3);
            else
                e[i] = uniform(rng, -2, 3);
        }
        t.emplace(e, random_scalar(rng, k, true));
    }
    return TruncatedSeries::from_terms(k, n, std::move(t), std::vector<std::int64_t>(n, hi));
}

namespace {

Slice random_slice(Rng& rng, int n, std::int64_t radius) {
    if (n == 1 || coin(rng, 0.4)) return coin(rng) ? Sym::Full : Sym::Zero;
    return random_subspace(rng, n - 1, radius);
}

std::pair<std::int64_t, std::int64_t> random_window(Rng& rng, std::int64_t radius) {
    std::int64_t m = uniform(rng, -radius, radius);
    std::int64_t M = uniform(rng, m, radius);
    return {m, M};
}

}  // namespace

SubspaceRef random_subspace(Rng& rng, int n, std::int64_t radius, bool sloped) {
    auto [m, M] = random_window(rng, radius);
    std::vector<Slice> slices;
    for (std::int64_t x = m; x < M; ++x) slices.push_back(random_slice(rng, n, radius));
    TailRule tail = coin(rng) ? TailRule::full() : TailRule::zero();
    if (sloped && n > 1 && coin(rng, 0.4)) tail = TailRule::shifted(uniform(rng, -2, 2), uniform(rng, -1, 1));
    return std::make_shared<MonomialSubspace>(n, m, M, std::move(slices), coin(rng) ? Sym::Full : Sym::Zero, tail);
}

MonomialLattice random_lattice(Rng& rng, int n, std::int64_t radius) {
    auto [m, M] = random_window(rng, radius);
    std::vector<Slice> slices;
    for (std::int64_t x = m; x < M; ++x) slices.push_back(random_slice(rng, n, radius));
    return MonomialLattice(std::make_shared<MonomialSubspace>(n, m, M, std::move(slices), Sym::Zero, TailRule::full()));
}

TruncatedSeries random_polynomial(Rng& rng, const FieldRef& k, int n, std::int64_t span, int max_terms) {
    TruncatedSeries::Terms t;
    int count = static_cast<int>(uniform(rng, 1, max_terms));
    for (int j = 0; j < count; ++j) {
        Exponent e(n);
        for (auto& v : e) v = uniform(rng, -span, span);
        t.emplace(e, random_scalar(rng, k, true));
    }
    return TruncatedSeries(k, n, std::move(t),
                           BoundCertificate::rectangular(std::vector<std::int64_t>(n, -span),
                                                         std::vector<std::int64_t>(n, span + 1)));
}

OperatorExpr random_operator(Rng& rng, const FieldRef& k, int n, int depth) {
    std::int64_t roll = uniform(rng, 0, depth > 0 ? 9 : 6);
    switch (roll) {
        case 0:
            return OperatorExpr::id(k, n);
        case 1:
            return OperatorExpr::scale(random_scalar(rng, k, true), n);
        case 2:
        case 3:
            return OperatorExpr::mul_by(random_polynomial(rng, k, n, 2));
        case 4:
            return OperatorExpr::proj(k, n, static_cast<int>(uniform(rng, 1, n)), uniform(rng, -3, 3));
        case 5:
            return OperatorExpr::coproj(k, n, static_cast<int>(uniform(rng, 1, n)), uniform(rng, -3, 3));
        case 6: {
            OperatorExpr::Functional phi;
            int count = static_cast<int>(uniform(rng, 1, 2));
            for (int j = 0; j < count; ++j) {
                Exponent e(n);
                for (auto& v : e) v = uniform(rng, -3, 3);
                phi.emplace_back(e, random_scalar(rng, k, true));
            }
            return OperatorExpr::finite_rank(std::move(phi), random_polynomial(rng, k, n, 3));
        }
        case 7:
            return OperatorExpr::sum({random_operator(rng, k, n, depth - 1), random_operator(rng, k, n, depth - 1)});
        default:
            return OperatorExpr::compose(
                {random_operator(rng, k, n, depth - 1), random_operator(rng, k, n, depth - 1)});
    }
}

}  // namespace tatekit::sampling
