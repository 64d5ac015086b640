#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "tatekit/polymod.hpp"

namespace tatekit {

enum class FieldKind { Rationals, FinitePrime, FiniteExt };

// A perfect base field: Q, F_p, or F_p[x]/(f) with f monic irreducible.
class FieldSpec {
public:
    static std::shared_ptr<const FieldSpec> rationals();
    static std::shared_ptr<const FieldSpec> prime(std::int64_t p);
    // f is given low degree first; it is made monic and must be irreducible.
    static std::shared_ptr<const FieldSpec> extension(std::int64_t p, polymod::Poly f);

    FieldKind kind() const { return kind_; }
    std::int64_t p() const { return p_; }
    const polymod::Poly& modulus() const { return f_; }
    int degree() const { return kind_ == FieldKind::FiniteExt ? polymod::degree(f_) : 1; }
    bool is_finite() const { return kind_ != FieldKind::Rationals; }
    std::string to_string() const;

    bool operator==(const FieldSpec& o) const {
        return kind_ == o.kind_ && p_ == o.p_ && f_ == o.f_;
    }

private:
    FieldSpec(FieldKind k, std::int64_t p, polymod::Poly f) : kind_(k), p_(p), f_(std::move(f)) {}
    FieldKind kind_;
    std::int64_t p_ = 0;
    polymod::Poly f_;
};

using FieldRef = std::shared_ptr<const FieldSpec>;

bool same_field(const FieldRef& a, const FieldRef& b);

// An element of a FieldSpec. Finite-field elements are residues c0 + c1 x + ...
// of degree below deg f (for F_p a single residue).
class FieldScalar {
public:
    FieldScalar() = default;
    static FieldScalar zero(const FieldRef& spec);
    static FieldScalar one(const FieldRef& spec);
    static FieldScalar from_int(const FieldRef& spec, std::int64_t v);
    static FieldScalar rational(const FieldRef& spec, const mpq_class& q);
    static FieldScalar residue(const FieldRef& spec, polymod::Poly coeffs);
    // "a/b" or "a" for Q; "[c0,c1,...]" or a bare integer for finite fields.
    static FieldScalar parse(const FieldRef& spec, const std::string& text);

    const FieldRef& spec() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;
    std::string to_string() const;

    const mpq_class& as_rational() const { return std::get<mpq_class>(value_); }
    const polymod::Poly& as_residue() const { return std::get<polymod::Poly>(value_); }

    friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b);
    friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b);
    friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);
    friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b);
    FieldScalar operator-() const;
    FieldScalar& operator+=(const FieldScalar& b) { return *this = *this + b; }
    FieldScalar& operator*=(const FieldScalar& b) { return *this = *this * b; }
    bool operator==(const FieldScalar& o) const;
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

private:
    FieldRef spec_;
    std::variant<mpq_class, polymod::Poly> value_;
};

FieldScalar f_add(const FieldScalar& a, const FieldScalar& b);
FieldScalar f_mul(const FieldScalar& a, const FieldScalar& b);
FieldScalar f_neg(const FieldScalar& a);
FieldScalar f_inv(const FieldScalar& a);  // DivisionByZero on 0
FieldScalar f_pow(const FieldScalar& a, std::int64_t e);

}  // namespace tatekit
