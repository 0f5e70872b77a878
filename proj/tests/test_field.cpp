#include <doctest.h>

#include "cicy/field.hpp"

using namespace cicy;

TEST_CASE("prime field construction rejects composites") {
    CHECK_THROWS(PrimeField(1));
    CHECK_THROWS(PrimeField(91));  // 7 * 13
    CHECK_THROWS(PrimeField(2));   // odd primes only
    CHECK_NOTHROW(PrimeField(101));
    CHECK_NOTHROW(PrimeField(32003));
    CHECK_NOTHROW(PrimeField(32009));
    CHECK_NOTHROW(PrimeField(32027));
}

TEST_CASE("prime field axioms on random samples") {
    PrimeField F(101);
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        uint32_t a = (uint32_t)rng.below(101), b = (uint32_t)rng.below(101), c = (uint32_t)rng.below(101);
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        CHECK(F.add(a, F.neg(a)) == 0);
        if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
    }
}

TEST_CASE("extension field requires an irreducible modulus") {
    PrimeField F(101);
    // x^2 - 1 = (x-1)(x+1) is reducible
    CHECK_THROWS(ExtensionField(F, {100, 0, 1}));
    // x^2 - g for a non-residue g is irreducible; 2 is a non-residue mod 101
    REQUIRE(powmod64(2, 50, 101) == 100);
    CHECK_NOTHROW(ExtensionField(F, {99, 0, 1}));
}

TEST_CASE("extension field axioms and Frobenius order") {
    PrimeField F(101);
    ExtensionField E(F, {99, 0, 1});  // F_101[t]/(t^2 - 2)
    Rng rng(11);
    auto random_elt = [&] {
        ExtensionField::Elt e{(uint32_t)rng.below(101), (uint32_t)rng.below(101)};
        return e;
    };
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_elt(), b = random_elt(), c = random_elt();
        CHECK(E.mul(a, b) == E.mul(b, a));
        CHECK(E.mul(a, E.add(b, c)) == E.add(E.mul(a, b), E.mul(a, c)));
        CHECK(E.mul(E.mul(a, b), c) == E.mul(a, E.mul(b, c)));
        if (!E.is_zero(a)) CHECK(E.mul(a, E.inv(a)) == E.one());
    }
    // the generator squares to 2
    auto t = E.generator();
    CHECK(E.mul(t, t) == E.from_base(2));
    // multiplicative order divides 101^2 - 1
    auto x = random_elt();
    if (!E.is_zero(x)) CHECK(E.pow(x, 101ull * 101 - 1) == E.one());
}

TEST_CASE("rationals normalize and obey field axioms") {
    Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    Rational b(1, 3), c(5, 7);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a / a == Rational(1));
    CHECK_THROWS(Rational(1, 0));
    CHECK(a - a == Rational(0));
}

TEST_CASE("rng determinism") {
    Rng r1(42), r2(42);
    for (int i = 0; i < 10; ++i) CHECK(r1.next() == r2.next());
}
