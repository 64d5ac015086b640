#include "tatekit/basefield.hpp"

#include <sstream>

#include "tatekit/errors.hpp"

namespace tatekit {

namespace pm = polymod;

FieldRef FieldSpec::rationals() {
    static const FieldRef q(new FieldSpec(FieldKind::Rationals, 0, {}));
    return q;
}

static void require_prime(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31))
        throw InvalidSpec("characteristic must be a prime below 2^31, got " + std::to_string(p));
    if (!pm::is_prime(p)) throw InvalidSpec(std::to_string(p) + " is not prime");
}

FieldRef FieldSpec::prime(std::int64_t p) {
    require_prime(p);
    return FieldRef(new FieldSpec(FieldKind::FinitePrime, p, {}));
}

FieldRef FieldSpec::extension(std::int64_t p, pm::Poly f) {
    require_prime(p);
    f = pm::normalized(std::move(f), p);
    if (pm::degree(f) < 1) throw InvalidSpec("modulus must have positive degree");
    f = pm::monic(f, p);
    if (!pm::is_irreducible(f, p)) throw NotIrreducible("modulus is reducible over F_" + std::to_string(p));
    return FieldRef(new FieldSpec(FieldKind::FiniteExt, p, std::move(f)));
}

std::string FieldSpec::to_string() const {
    switch (kind_) {
        case FieldKind::Rationals:
            return "Q";
        case FieldKind::FinitePrime:
            return "F_" + std::to_string(p_);
        case FieldKind::FiniteExt: {
            std::ostringstream os;
            os << "F_" << p_ << "[x]/(";
            bool first = true;
            for (int i = pm::degree(f_); i >= 0; --i) {
                if (f_[i] == 0) continue;
                if (!first) os << " + ";
                first = false;
                if (i == 0 || f_[i] != 1) os << f_[i];
                if (i >= 1) os << "x";
                if (i > 1) os << "^" << i;
            }
            os << ")";
            return os.str();
        }
    }
    return "?";
}

bool same_field(const FieldRef& a, const FieldRef& b) {
    return a == b || (a && b && *a == *b);
}

static void check_same(const FieldScalar& a, const FieldScalar& b) {
    if (!same_field(a.spec(), b.spec()))
        throw SpecMismatch("scalars over " + a.spec()->to_string() + " and " + b.spec()->to_string());
}

FieldScalar FieldScalar::zero(const FieldRef& spec) { return from_int(spec, 0); }
FieldScalar FieldScalar::one(const FieldRef& spec) { return from_int(spec, 1); }

FieldScalar FieldScalar::from_int(const FieldRef& spec, std::int64_t v) {
    FieldScalar s;
    s.spec_ = spec;
    if (spec->kind() == FieldKind::Rationals)
        s.value_ = mpq_class(static_cast<long>(v));
    else
        s.value_ = pm::normalized(pm::Poly{v}, spec->p());
    return s;
}

FieldScalar FieldScalar::rational(const FieldRef& spec, const mpq_class& q) {
    if (spec->kind() != FieldKind::Rationals) {
        // Reduce a/b into F_p (or its prime subfield).
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class pp(static_cast<long>(spec->p()));
        mpz_class n = num % pp, d = den % pp;
        if (n < 0) n += pp;
        if (d == 0) throw DivisionByZero("denominator divisible by p");
        std::int64_t nv = n.get_si(), dv = d.get_si();
        return from_int(spec, (nv * pm::inv_mod(dv, spec->p())) % spec->p());
    }
    FieldScalar s;
    s.spec_ = spec;
    mpq_class c = q;
    c.canonicalize();
    s.value_ = c;
    return s;
}

FieldScalar FieldScalar::residue(const FieldRef& spec, pm::Poly coeffs) {
    if (spec->kind() == FieldKind::Rationals) {
        if (coeffs.size() > 1) throw SchemaError("coefficient list given for a rational scalar");
        return from_int(spec, coeffs.empty() ? 0 : coeffs[0]);
    }
    FieldScalar s;
    s.spec_ = spec;
    pm::Poly c = pm::normalized(std::move(coeffs), spec->p());
    if (spec->kind() == FieldKind::FiniteExt)
        c = pm::mod(c, spec->modulus(), spec->p());
    else if (c.size() > 1)
        throw SchemaError("F_p scalar must be a single residue");
    s.value_ = std::move(c);
    return s;
}

static std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\n");
    size_t e = s.find_last_not_of(" \t\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

static std::int64_t parse_int(const std::string& s) {
    try {
        size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw SchemaError("bad integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw SchemaError("bad integer '" + s + "'");
    }
}

FieldScalar FieldScalar::parse(const FieldRef& spec, const std::string& text0) {
    std::string text = trim(text0);
    if (text.empty()) throw SchemaError("empty scalar");
    if (text.front() == '[') {
        if (text.back() != ']') throw SchemaError("unterminated coefficient list '" + text + "'");
        pm::Poly coeffs;
        std::string body = text.substr(1, text.size() - 2);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (!item.empty()) coeffs.push_back(parse_int(item));
        }
        return residue(spec, coeffs);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw SchemaError("bad scalar '" + text + "'");
    if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + text + "'");
    q.canonicalize();
    return rational(spec, q);
}

bool FieldScalar::is_zero() const {
    if (auto q = std::get_if<mpq_class>(&value_)) return *q == 0;
    return std::get<pm::Poly>(value_).empty();
}

bool FieldScalar::is_one() const {
    if (auto q = std::get_if<mpq_class>(&value_)) return *q == 1;
    const auto& r = std::get<pm::Poly>(value_);
    return r.size() == 1 && r[0] == 1;
}

std::string FieldScalar::to_string() const {
    if (auto q = std::get_if<mpq_class>(&value_)) return q->get_str();
    const auto& r = std::get<pm::Poly>(value_);
    std::string s = "[";
    if (r.empty()) s += "0";
    for (size_t i = 0; i < r.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(r[i]);
    }
    return s + "]";
}

FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
    check_same(a, b);
    FieldScalar r;
    r.spec_ = a.spec_;
    if (a.spec_->kind() == FieldKind::Rationals)
        r.value_ = mpq_class(a.as_rational() + b.as_rational());
    else
        r.value_ = pm::add(a.as_residue(), b.as_residue(), a.spec_->p());
    return r;
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar r;
    r.spec_ = spec_;
    if (spec_->kind() == FieldKind::Rationals)
        r.value_ = mpq_class(-as_rational());
    else
        r.value_ = pm::neg(as_residue(), spec_->p());
    return r;
}

FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) { return a + (-b); }

FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
    check_same(a, b);
    FieldScalar r;
    r.spec_ = a.spec_;
    const FieldSpec& k = *a.spec_;
    if (k.kind() == FieldKind::Rationals) {
        r.value_ = mpq_class(a.as_rational() * b.as_rational());
    } else {
        pm::Poly prod = pm::mul(a.as_residue(), b.as_residue(), k.p());
        if (k.kind() == FieldKind::FiniteExt) prod = pm::mod(prod, k.modulus(), k.p());
        r.value_ = std::move(prod);
    }
    return r;
}

FieldScalar f_inv(const FieldScalar& a) {
    if (a.is_zero()) throw DivisionByZero("inverse of zero in " + a.spec()->to_string());
    const FieldSpec& k = *a.spec();
    if (k.kind() == FieldKind::Rationals) return FieldScalar::rational(a.spec(), 1 / a.as_rational());
    if (k.kind() == FieldKind::FinitePrime)
        return FieldScalar::from_int(a.spec(), pm::inv_mod(a.as_residue()[0], k.p()));
    return FieldScalar::residue(a.spec(), pm::inv_mod_poly(a.as_residue(), k.modulus(), k.p()));
}

FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) { return a * f_inv(b); }

bool FieldScalar::operator==(const FieldScalar& o) const {
    return same_field(spec_, o.spec_) && value_ == o.value_;
}

FieldScalar f_add(const FieldScalar& a, const FieldScalar& b) { return a + b; }
FieldScalar f_mul(const FieldScalar& a, const FieldScalar& b) { return a * b; }
FieldScalar f_neg(const FieldScalar& a) { return -a; }

FieldScalar f_pow(const FieldScalar& a, std::int64_t e) {
    FieldScalar base = e < 0 ? f_inv(a) : a;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    FieldScalar r = FieldScalar::one(a.spec());
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

}  // namespace tatekit
