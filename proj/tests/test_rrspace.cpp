#include <stdexcept>
#include "doctest.h"
#include "hermitian/agcode.hpp"
#include "hermitian/rrspace.hpp"
#include "oracles.hpp"

using namespace hermitian;

TEST_CASE("Riemann-Roch dimension above the canonical degree") {
    for (int q : {2, 3, 4, 5, 8}) {
        CAPTURE(q);
        const int g = q * (q - 1) / 2;
        for (int A = -3 * q; A <= 3 * q * q; A += 1 + q / 4)
            for (int B = -2 * q; B <= 2 * q * q; B += 1 + q / 4) {
                const int deg = A + B;
                if (deg > 2 * g - 2) CHECK(rr_dim(q, A, B) == deg + 1 - g);
                if (deg < 0) CHECK(rr_dim(q, A, B) == 0);
                CHECK(rr_dim(q, A, B) <= std::max(0, deg + 1));
            }
    }
}

TEST_CASE("one-point dimensions jump exactly on the Weierstrass semigroup") {
    for (int q : {2, 3, 4, 5}) {
        CAPTURE(q);
        CHECK(rr_dim(q, 0, 0) == 1);
        int gaps = 0;
        for (int A = 1; A <= 3 * q * q; ++A) {
            const int jump = rr_dim(q, A, 0) - rr_dim(q, A - 1, 0);
            CHECK(jump == (oracle::in_semigroup(q, A) ? 1 : 0));
            gaps += jump == 0;
        }
        CHECK(gaps == q * (q - 1) / 2);
    }
}

TEST_CASE("basis monomials lie in the space and are sorted by pole order") {
    const int q = 3;
    for (int A = -4; A <= 20; ++A)
        for (int B = -6; B <= 12; ++B) {
            const auto basis = monomial_basis(q, A, B);
            CHECK(static_cast<int>(basis.size()) == rr_dim(q, A, B));
            for (std::size_t t = 0; t < basis.size(); ++t) {
                CHECK(pole_order_pinf(q, basis[t]) <= A);
                CHECK(valuation_p0(q, basis[t]) >= -B);
                if (t > 0) CHECK(pole_order_pinf(q, basis[t - 1]) < pole_order_pinf(q, basis[t]));
            }
        }
}

TEST_CASE("dimension equals the rank of the evaluation matrix below the length") {
    for (int q : {2, 3}) {
        const Curve c(q);
        for (int A = 0; A <= 14; ++A)
            for (int B = 0; B <= 14; ++B) {
                if (A + B >= c.length()) continue;
                CAPTURE(q);
                CAPTURE(A);
                CAPTURE(B);
                const CodeMatrix code = build_code(c, A, B);
                CHECK(oracle::naive_rank(c.field(), code.generator) == rr_dim(q, A, B));
            }
    }
}

TEST_CASE("shifting by the divisor of y keeps the dimension") {
    const int q = 4;
    for (int A = -5; A <= 30; ++A)
        for (int B = -5; B <= 30; ++B)
            for (int t = -2; t <= 2; ++t) CHECK(rr_dim(q, A + t * (q + 1), B - t * (q + 1)) == rr_dim(q, A, B));
}

TEST_CASE("monomial evaluation") {
    const Curve c(3);
    const Field& f = c.field();
    const Point p = c.evaluation_points()[5];
    CHECK(evaluate_monomial(f, {2, 1}, p) == f.mul(f.mul(p.x, p.x), p.y));
    CHECK(evaluate_monomial(f, {0, -1}, p) == f.inv(p.y));
    CHECK_THROWS_AS(evaluate_monomial(f, {0, 0}, Point::at_infinity()), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_monomial(f, {0, 1}, Point::origin()), std::invalid_argument);
}
