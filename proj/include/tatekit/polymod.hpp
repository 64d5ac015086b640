#pragma once

#include <cstdint>
#include <vector>

// Dense univariate polynomials over F_p, coefficients c0..cd with no
// trailing zeros. The zero polynomial is the empty vector. p must fit in 31
// bits so that products of residues fit in int64.
namespace tatekit::polymod {

using Poly = std::vector<std::int64_t>;

std::int64_t reduce(std::int64_t a, std::int64_t p);
std::int64_t inv_mod(std::int64_t a, std::int64_t p);
bool is_prime(std::int64_t p);

Poly normalized(Poly a, std::int64_t p);
int degree(const Poly& a);  // -1 for zero
Poly add(const Poly& a, const Poly& b, std::int64_t p);
Poly sub(const Poly& a, const Poly& b, std::int64_t p);
Poly neg(const Poly& a, std::int64_t p);
Poly scale(const Poly& a, std::int64_t c, std::int64_t p);
Poly mul(const Poly& a, const Poly& b, std::int64_t p);
// Quotient and remainder; b must be nonzero.
void divmod(const Poly& a, const Poly& b, std::int64_t p, Poly& q, Poly& r);
Poly mod(const Poly& a, const Poly& m, std::int64_t p);
Poly monic(const Poly& a, std::int64_t p);
Poly gcd(Poly a, Poly b, std::int64_t p);
// Inverse of a modulo m; throws DivisionByZero when gcd(a, m) != 1.
Poly inv_mod_poly(const Poly& a, const Poly& m, std::int64_t p);
Poly pow_mod(Poly base, std::uint64_t e, const Poly& m, std::int64_t p);
Poly derivative(const Poly& a, std::int64_t p);
// f(a) reduced modulo m.
Poly compose_mod(const Poly& f, const Poly& a, const Poly& m, std::int64_t p);
Poly power(const Poly& a, int e, std::int64_t p);
// Rabin-style check: gcd(f, x^(p^i) - x) = 1 for 1 <= i <= deg f / 2.
bool is_irreducible(const Poly& f, std::int64_t p);

}  // namespace tatekit::polymod
