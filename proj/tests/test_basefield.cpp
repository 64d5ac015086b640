#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tatekit/basefield.hpp"
#include "tatekit/errors.hpp"
#include "tatekit/sampling.hpp"

using namespace tatekit;

// ============================================================================
// Construction and parsing
// ============================================================================

TEST(FieldSpec, RejectsNonPrimeCharacteristic) {
    EXPECT_THROW(FieldSpec::prime(6), InvalidSpec);
    EXPECT_THROW(FieldSpec::prime(1), InvalidSpec);
    EXPECT_NO_THROW(FieldSpec::prime(2147483647));
}

TEST(FieldSpec, ExtensionNeedsIrreducibleModulus) {
    EXPECT_NO_THROW(FieldSpec::extension(5, {3, 0, 1}));        // x^2 + 3
    EXPECT_THROW(FieldSpec::extension(5, {-1, 0, 1}), NotIrreducible);  // (x-1)(x+1)
    EXPECT_THROW(FieldSpec::extension(5, {0}), InvalidSpec);
}

TEST(FieldSpec, IrreducibilityAgreesWithTrialDivision) {
    // Every monic polynomial of degree <= 4 over F_2 and <= 3 over F_3.
    for (auto [p, dmax] : {std::pair<std::int64_t, int>{2, 4}, {3, 3}}) {
        for (int d = 1; d <= dmax; ++d) {
            std::int64_t count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (std::int64_t code = 0; code < count; ++code) {
                polymod::Poly f(d + 1, 0);
                std::int64_t c = code;
                for (int i = 0; i < d; ++i) {
                    f[i] = c % p;
                    c /= p;
                }
                f[d] = 1;
                EXPECT_EQ(polymod::is_irreducible(f, p), oracle::irreducible_bruteforce(f, p))
                    << "p=" << p << " code=" << code;
            }
        }
    }
}

TEST(FieldScalar, ParsesCanonicalRationals) {
    auto q = FieldSpec::rationals();
    EXPECT_EQ(FieldScalar::parse(q, "3/6").to_string(), "1/2");
    EXPECT_EQ(FieldScalar::parse(q, "-4/2").to_string(), "-2");
    EXPECT_THROW(FieldScalar::parse(q, "1/0"), DivisionByZero);
    EXPECT_THROW(FieldScalar::parse(q, "abc"), SchemaError);
}

TEST(FieldScalar, ParsesFiniteFieldResidues) {
    auto f25 = FieldSpec::extension(5, {3, 0, 1});
    EXPECT_EQ(FieldScalar::parse(f25, "[1,7]").to_string(), "[1,2]");
    EXPECT_EQ(FieldScalar::parse(f25, "[0,0,1]").to_string(), "[2]");  // x^2 = -3 = 2
    auto f7 = FieldSpec::prime(7);
    EXPECT_EQ(FieldScalar::parse(f7, "10").to_string(), "[3]");
    EXPECT_EQ(FieldScalar::parse(f7, "1/2").to_string(), "[4]");
}

// ============================================================================
// Arithmetic
// ============================================================================

TEST(FieldScalar, KnownProducts) {
    auto f4 = FieldSpec::extension(2, {1, 1, 1});
    auto x = FieldScalar::residue(f4, {0, 1});
    EXPECT_EQ((x * x).to_string(), "[1,1]");
    EXPECT_TRUE((x * x * x).is_one());

    auto f25 = FieldSpec::extension(5, {3, 0, 1});
    auto a = FieldScalar::residue(f25, {1, 2});
    EXPECT_TRUE((a * f_inv(a)).is_one());
    EXPECT_THROW(f_inv(FieldScalar::zero(f25)), DivisionByZero);
}

TEST(FieldScalar, MixingFieldsIsRejected) {
    auto a = FieldScalar::one(FieldSpec::prime(5));
    auto b = FieldScalar::one(FieldSpec::prime(7));
    EXPECT_THROW(a + b, SpecMismatch);
    // Separately constructed but equal specs are the same field.
    auto c = FieldScalar::one(FieldSpec::prime(5));
    EXPECT_NO_THROW(a + c);
}

TEST(FieldScalar, FieldAxiomsOnRandomSamples) {
    sampling::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        auto k = sampling::random_field(rng);
        auto a = sampling::random_scalar(rng, k);
        auto b = sampling::random_scalar(rng, k);
        auto c = sampling::random_scalar(rng, k);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero()) EXPECT_TRUE((a * f_inv(a)).is_one());
    }
}

TEST(FieldScalar, FrobeniusFixesPrimeField) {
    auto k = FieldSpec::extension(3, {1, 2, 0, 1});  // x^3 + 2x + 1
    sampling::Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        auto a = sampling::random_scalar(rng, k);
        // a^(p^d) = a in F_{p^d}.
        EXPECT_EQ(f_pow(a, 27), a);
    }
}
