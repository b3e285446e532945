#include <doctest.h>

#include "tate/field.hpp"
#include "tate/random_lattice.hpp"

using namespace tate;

TEST_CASE("prime field arithmetic stays reduced") {
    const FieldInfo* f5 = FieldInfo::prime(5);
    Scalar a = f5->from_integer(3), b = f5->from_integer(4);
    CHECK((a + b).residue() == 2);
    CHECK((a * b).residue() == 2);
    CHECK((a - b).residue() == 4);
    CHECK((a / b).residue() == 2);  // 3 * 4^{-1} = 3 * 4 = 12 = 2
    CHECK((-a).residue() == 2);
    CHECK(a.inverse().residue() == 2);
    CHECK(f5->from_integer(-7).residue() == 3);
}

TEST_CASE("rationals are reduced fractions with positive denominator") {
    Scalar q = Scalar::rational(2, -4);
    CHECK(q.rational_num() == -1);
    CHECK(q.rational_den() == 2);
    CHECK((q + Scalar::rational(1, 2)).is_zero());
    CHECK(Scalar::rational(6, 4) == Scalar::rational(3, 2));
    CHECK_THROWS_AS(Scalar::rational(1, 0), domain_error);
    CHECK_THROWS_AS(Scalar::rational(1, 1).field()->order(), domain_error);
}

TEST_CASE("deterministic least moduli for extensions") {
    const FieldInfo* f4 = FieldInfo::extension(2, 2);
    REQUIRE(f4->degree() == 2);
    // x^2 + x + 1 is the only (hence least) irreducible quadratic over F_2.
    CHECK(f4->modulus()[0].residue() == 1);
    CHECK(f4->modulus()[1].residue() == 1);
    CHECK(f4->modulus()[2].residue() == 1);

    const FieldInfo* f8 = FieldInfo::extension(2, 3);
    // x^3 + x + 1 beats x^3 + x^2 + 1 in the low-to-high coefficient order.
    CHECK(f8->modulus()[0].residue() == 1);
    CHECK(f8->modulus()[1].residue() == 1);
    CHECK(f8->modulus()[2].residue() == 0);
    CHECK(f8->order() == 8);

    CHECK(FieldInfo::extension(3, 2)->order() == 9);
    CHECK(FieldInfo::extension(2, 2) == f4);  // interned
}

TEST_CASE("field axioms hold exactly on randomized triples") {
    Rng rng(20260810);
    for (const FieldInfo* f : {FieldInfo::prime(5), FieldInfo::extension(2, 2),
                               FieldInfo::extension(3, 2), FieldInfo::rationals()}) {
        for (int i = 0; i < 200; ++i) {
            Scalar a = rng.scalar(f), b = rng.scalar(f), c = rng.scalar(f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == f->zero());
            if (!a.is_zero()) CHECK(a * a.inverse() == f->one());
        }
    }
}

TEST_CASE("index encoding round trips") {
    for (const FieldInfo* f : {FieldInfo::prime(7), FieldInfo::extension(2, 3)}) {
        for (long long i = 0; i < f->order(); ++i) CHECK(f->from_index(i).index() == i);
    }
}

TEST_CASE("embedding and trace to the base field") {
    const FieldInfo* f2 = FieldInfo::prime(2);
    const FieldInfo* f4 = FieldInfo::extension(2, 2);
    Scalar one = f2->one().embed(f4);
    CHECK(one.is_one());
    // Tr(1) = 0 in F_4/F_2, Tr(y) = y + y^2 = 1 with y^2 = y + 1.
    CHECK(one.trace_to_base().is_zero());
    Scalar y = Scalar::from_coeffs(f4, {f2->zero(), f2->one()});
    CHECK(y.trace_to_base().is_one());
    CHECK(y * y == y + f4->one());
    CHECK_THROWS_AS(f2->one().embed(FieldInfo::prime(3)), field_mismatch);
}

TEST_CASE("scalar parsing and printing") {
    const FieldInfo* f5 = FieldInfo::prime(5);
    CHECK(Scalar::parse(f5, "13").residue() == 3);
    CHECK(Scalar::parse(FieldInfo::rationals(), "-3/6").str() == "-1/2");
    CHECK(Scalar::parse(FieldInfo::rationals(), "4").str() == "4");
    const FieldInfo* f4 = FieldInfo::extension(2, 2);
    CHECK(Scalar::parse(f4, "2").index() == 2);
    CHECK_THROWS(Scalar::parse(f5, ""));
}

TEST_CASE("scalar operations refuse mixed fields") {
    CHECK_THROWS_AS(FieldInfo::prime(2)->one() + FieldInfo::prime(3)->one(), field_mismatch);
}
