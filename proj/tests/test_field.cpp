#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fqsim/field.hpp"

using namespace fqsim;

namespace {

// Every field axiom, checked over every element (triples included).
void check_axioms(std::uint64_t q) {
    Field F = Field::make(q);
    auto elems = F.elements();
    REQUIRE(elems.size() == q);

    for (Fe a : elems) {
        CHECK(F.add(a, 0) == a);
        CHECK(F.mul(a, 1) == a);
        CHECK(F.mul(a, 0) == 0);
        CHECK(F.add(a, F.neg(a)) == 0);
        CHECK(F.sub(a, a) == 0);
        if (a != 0) {
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.pow(a, q - 1) == 1);  // Lagrange on the unit group
        }
        // additive order divides p
        Fe s = 0;
        for (std::uint64_t i = 0; i < F.p(); ++i) s = F.add(s, a);
        CHECK(s == 0);
    }

    for (Fe a : elems) {
        for (Fe b : elems) {
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
            // Frobenius is additive
            CHECK(F.pow(F.add(a, b), F.p()) == F.add(F.pow(a, F.p()), F.pow(b, F.p())));
            if (b != 0) CHECK(F.mul(F.mul(a, b), F.inv(b)) == a);
            for (Fe c : elems) {
                CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
    }

    // no zero divisors
    for (Fe a : elems)
        for (Fe b : elems)
            if (a != 0 && b != 0) CHECK(F.mul(a, b) != 0);
}

}  // namespace

TEST_CASE("field axioms hold exhaustively") {
    for (std::uint64_t q : {2, 3, 4, 5, 8, 9}) {
        CAPTURE(q);
        check_axioms(q);
    }
}

TEST_CASE("prime power decomposition") {
    Field f4 = Field::make(4);
    CHECK(f4.p() == 2);
    CHECK(f4.e() == 2);
    Field f8 = Field::make(8);
    CHECK(f8.p() == 2);
    CHECK(f8.e() == 3);
    Field f9 = Field::make(9);
    CHECK(f9.p() == 3);
    CHECK(f9.e() == 2);
    Field f5 = Field::make(5);
    CHECK(f5.p() == 5);
    CHECK(f5.e() == 1);
}

TEST_CASE("moduli are the canonical irreducibles") {
    // prime fields carry no modulus
    CHECK(Field::make(7).modulus().empty());
    // x^2 + x + 1
    CHECK(Field::make(4).modulus() == std::vector<Fe>{1, 1, 1});
    // x^3 + x^2 + 1 (x^3 + x + 1 loses on the degree-1 coefficient
    // because comparison starts at the constant term)
    CHECK(Field::make(8).modulus() == std::vector<Fe>{1, 0, 1, 1});
    // x^2 + 1
    CHECK(Field::make(9).modulus() == std::vector<Fe>{1, 0, 1});
}

TEST_CASE("arithmetic spot values") {
    Field f4 = Field::make(4);
    // x * x = x + 1 under x^2 + x + 1
    CHECK(f4.mul(2, 2) == 3);
    CHECK(f4.mul(2, 3) == 1);
    CHECK(f4.add(2, 3) == 1);
    CHECK(f4.inv(2) == 3);

    Field f5 = Field::make(5);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.mul(3, 4) == 2);
    CHECK(f5.inv(2) == 3);
    CHECK(f5.neg(2) == 3);

    Field f8 = Field::make(8);
    // x * x^2 = x^3 = x^2 + 1 under x^3 + x^2 + 1
    CHECK(f8.mul(2, 4) == 5);

    Field f9 = Field::make(9);
    // x * x = -1 = 2 under x^2 + 1
    CHECK(f9.mul(3, 3) == 2);
}

TEST_CASE("rejects non prime powers") {
    for (std::uint64_t q : {0, 1, 6, 10, 12, 15, 100}) {
        CAPTURE(q);
        CHECK_THROWS_AS(Field::make(q), NotAPrimePower);
    }
}

TEST_CASE("inverse of zero is an error") {
    CHECK_THROWS_AS(Field::make(3).inv(0), DivisionByZero);
}

TEST_CASE("fields compare by order") {
    CHECK(Field::make(4) == Field::make(4));
    CHECK(!(Field::make(4) == Field::make(5)));
}
