#include <stdexcept>
#include "doctest.h"
#include "hermitian/field.hpp"
#include "oracles.hpp"

using namespace hermitian;

TEST_CASE("prime power factorization") {
    CHECK(factor_prime_power(8).p == 2);
    CHECK(factor_prime_power(8).e == 3);
    CHECK(factor_prime_power(9).p == 3);
    CHECK(factor_prime_power(7).e == 1);
    CHECK(factor_prime_power(6).p == 0);
    CHECK(factor_prime_power(12).p == 0);
    CHECK(factor_prime_power(1).p == 0);
}

TEST_CASE("field construction rejects bad q") {
    CHECK_THROWS_AS(Field::make(6), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(32), std::invalid_argument);
}

TEST_CASE("irreducibility test") {
    const int x2x1[] = {1, 1, 1};  // x^2 + x + 1 over F_2
    const int x2_1[] = {1, 0, 1};  // x^2 + 1 = (x + 1)^2 over F_2
    const int x2_1_f3[] = {1, 0, 1};  // x^2 + 1 over F_3
    CHECK(is_irreducible(x2x1, 2));
    CHECK_FALSE(is_irreducible(x2_1, 2));
    CHECK(is_irreducible(x2_1_f3, 3));
}

TEST_CASE("field axioms, exhaustive for q <= 5") {
    for (int q : {2, 3, 4, 5}) {
        CAPTURE(q);
        const Field f = Field::make(q);
        const auto el = f.elements();
        REQUIRE(static_cast<int>(el.size()) == q * q);
        for (Element a : el) {
            CHECK(f.add(a, Field::zero()) == a);
            CHECK(f.mul(a, Field::one()) == a);
            CHECK(f.add(a, f.neg(a)) == Field::zero());
            if (!a.is_zero()) CHECK(f.mul(a, f.inv(a)) == Field::one());
            for (Element b : el) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.mul(a, b) == oracle::poly_mul(f, a, b));
                for (Element c : el) {
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                }
            }
        }
        CHECK_THROWS_AS(f.inv(Field::zero()), std::domain_error);
    }
}

TEST_CASE("multiplication table matches polynomial arithmetic for larger q") {
    for (int q : {7, 8, 9, 16}) {
        CAPTURE(q);
        const Field f = Field::make(q);
        for (Element a : f.elements())
            for (Element b : f.elements()) REQUIRE(f.mul(a, b) == oracle::poly_mul(f, a, b));
    }
}

TEST_CASE("generator, Frobenius, subfield, trace and norm") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        CAPTURE(q);
        const Field f = Field::make(q);
        const int Q = q * q;
        // The generator has order exactly Q - 1.
        Element acc = Field::one();
        int order = 0;
        do {
            acc = f.mul(acc, f.generator());
            ++order;
        } while (acc != Field::one());
        CHECK(order == Q - 1);

        CHECK(static_cast<int>(f.subfield_elements().size()) == q);
        for (Element a : f.elements()) {
            CHECK(f.frobenius_q(a) == f.pow(a, q));
            CHECK(f.frobenius_q(f.frobenius_q(a)) == a);
            CHECK(f.in_subfield(f.trace_to_Fq(a)));
            CHECK(f.in_subfield(f.norm_to_Fq(a)));
            if (!a.is_zero()) {
                CHECK(f.pow(a, Q - 1) == Field::one());
                CHECK(f.pow(a, -1) == f.inv(a));
            }
        }
        // Trace and norm are onto F_q, with fibers of size q and q + 1.
        for (Element c : f.subfield_elements()) {
            int tr = 0, nm = 0;
            for (Element a : f.elements()) {
                tr += f.trace_to_Fq(a) == c;
                nm += f.norm_to_Fq(a) == c;
            }
            CHECK(tr == q);
            CHECK(nm == (c.is_zero() ? 1 : q + 1));
        }
    }
}

TEST_CASE("coefficient round trip") {
    const Field f = Field::make(9);
    for (Element a : f.elements()) CHECK(f.from_coefficients(f.coefficients(a)) == a);
    CHECK(f.additive_basis().size() == 4u);
    CHECK(f.modulus().size() == 5u);
    CHECK(f.modulus().back() == 1);
    CHECK_THROWS(f.from_index(81));
}
