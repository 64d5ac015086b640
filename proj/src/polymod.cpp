#include "tatekit/polymod.hpp"

#include "tatekit/errors.hpp"

namespace tatekit::polymod {

std::int64_t reduce(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    a = reduce(a, p);
    if (a == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p));
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return reduce(t, p);
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Poly normalized(Poly a, std::int64_t p) {
    for (auto& c : a) c = reduce(c, p);
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b, std::int64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    return normalized(std::move(r), p);
}

Poly neg(const Poly& a, std::int64_t p) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] == 0 ? 0 : p - a[i];
    return r;
}

Poly sub(const Poly& a, const Poly& b, std::int64_t p) { return add(a, neg(b, p), p); }

Poly scale(const Poly& a, std::int64_t c, std::int64_t p) {
    c = reduce(c, p);
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] * c) % p;
    return normalized(std::move(r), p);
}

Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return normalized(std::move(r), p);
}

void divmod(const Poly& a, const Poly& b, std::int64_t p, Poly& q, Poly& r) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    r = a;
    int db = degree(b);
    std::int64_t lead_inv = inv_mod(b.back(), p);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    for (int i = degree(r); i >= db; --i) {
        std::int64_t c = (r[i] * lead_inv) % p;
        if (c == 0) continue;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] = reduce(r[i - db + j] - c * b[j], p);
    }
    q = normalized(std::move(q), p);
    r = normalized(std::move(r), p);
}

Poly mod(const Poly& a, const Poly& m, std::int64_t p) {
    Poly q, r;
    divmod(a, m, p, q, r);
    return r;
}

Poly monic(const Poly& a, std::int64_t p) {
    if (a.empty()) return a;
    return scale(a, inv_mod(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, std::int64_t p) {
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

Poly inv_mod_poly(const Poly& a, const Poly& m, std::int64_t p) {
    // Extended Euclid tracking only the coefficient of a.
    Poly r0 = m, r1 = mod(a, m, p);
    Poly s0 = {}, s1 = {1};
    while (!r1.empty()) {
        Poly q, r;
        divmod(r0, r1, p, q, r);
        Poly s = sub(s0, mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (degree(r0) != 0) throw DivisionByZero("polynomial is not invertible modulo m");
    return mod(scale(s0, inv_mod(r0[0], p), p), m, p);
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& m, std::int64_t p) {
    Poly result = mod(Poly{1}, m, p);
    base = mod(base, m, p);
    while (e > 0) {
        if (e & 1) result = mod(mul(result, base, p), m, p);
        e >>= 1;
        if (e) base = mod(mul(base, base, p), m, p);
    }
    return result;
}

Poly derivative(const Poly& a, std::int64_t p) {
    Poly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(reduce(a[i] * static_cast<std::int64_t>(i % p), p));
    return normalized(std::move(r), p);
}

Poly compose_mod(const Poly& f, const Poly& a, const Poly& m, std::int64_t p) {
    Poly acc;
    for (int i = degree(f); i >= 0; --i) {
        acc = mod(mul(acc, a, p), m, p);
        acc = add(acc, Poly{f[i]}, p);
    }
    return mod(acc, m, p);
}

Poly power(const Poly& a, int e, std::int64_t p) {
    Poly r = {1};
    for (int i = 0; i < e; ++i) r = mul(r, a, p);
    return r;
}

bool is_irreducible(const Poly& f0, std::int64_t p) {
    Poly f = normalized(f0, p);
    int d = degree(f);
    if (d < 1) return false;
    if (d == 1) return true;
    Poly x = {0, 1};
    Poly xp = x;
    for (int i = 1; i <= d / 2; ++i) {
        xp = pow_mod(xp, static_cast<std::uint64_t>(p), f, p);
        Poly g = gcd(f, sub(xp, x, p), p);
        if (degree(g) != 0) return false;
    }
    return true;
}

}  // namespace tatekit::polymod
