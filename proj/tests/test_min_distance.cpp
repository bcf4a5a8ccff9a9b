#include <stdexcept>
#include <random>

#include "doctest.h"
#include "hermitian/agcode.hpp"
#include "hermitian/min_distance.hpp"
#include "oracles.hpp"

using namespace hermitian;

namespace {

Matrix random_matrix(const Field& f, int rows, int cols, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, f.size() - 1);
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, f.from_index(pick(rng)));
    return m;
}

}  // namespace

TEST_CASE("both exact methods agree with direct enumeration on random codes") {
    std::mt19937 rng(12345);
    for (int q : {2, 3, 4}) {
        const Field f = Field::make(q);
        for (int trial = 0; trial < 40; ++trial) {
            const int k = 1 + trial % (q == 2 ? 5 : 3);
            const int n = k + 1 + static_cast<int>(rng() % 9);
            const Matrix m = random_matrix(f, k, n, rng);
            if (oracle::naive_rank(f, m) == 0) continue;
            const Matrix basis = rref(f, m).reduced;
            const int expected = oracle::naive_min_weight(f, basis);
            CAPTURE(q);
            CAPTURE(trial);
            for (DistanceMethod method : {DistanceMethod::Enumerate, DistanceMethod::DependentColumns}) {
                MinDistanceOptions o;
                o.method = method;
                CHECK(min_distance_exhaustive(f, m, o).distance == expected);
                o.workers = 3;
                CHECK(min_distance_exhaustive(f, m, o).distance == expected);
            }
        }
    }
}

TEST_CASE("long codes use the generic word representation") {
    // Length above 64 exercises the unpacked enumerator.
    std::mt19937 rng(7);
    const Field f = Field::make(3);
    const Matrix m = random_matrix(f, 3, 70, rng);
    MinDistanceOptions o;
    o.method = DistanceMethod::Enumerate;
    CHECK(min_distance_exhaustive(f, m, o).distance == oracle::naive_min_weight(f, rref(f, m).reduced));
}

TEST_CASE("dependent columns on a long low-distance code") {
    // Repeating a short code keeps the distance small enough for the column search.
    std::mt19937 rng(11);
    const Field f = Field::make(2);
    const Matrix base = random_matrix(f, 4, 6, rng);
    Matrix m(4, 66);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 66; ++c) m.set(r, c, c < 60 ? (c % 6 == 0 ? base.at(r, 0) : Field::zero()) : base.at(r, c - 60));
    MinDistanceOptions o;
    o.method = DistanceMethod::DependentColumns;
    const int expected = oracle::naive_min_weight(f, rref(f, m).reduced);
    CHECK(min_distance_exhaustive(f, m, o).distance == expected);
    o.method = DistanceMethod::Enumerate;
    CHECK(min_distance_exhaustive(f, m, o).distance == expected);
}

TEST_CASE("named examples") {
    const Curve c(2);
    const Field& f = c.field();
    const Matrix dual = dual_basis(f, build_code(c, 0, 2).generator);
    CHECK(min_distance_exhaustive(f, dual).distance == 2);
    CHECK(oracle::naive_min_weight(f, dual) == 2);

    Matrix ones(1, 7);
    for (int j = 0; j < 7; ++j) ones.set(0, j, Field::one());
    CHECK(min_distance_exhaustive(f, ones).distance == 7);
}

TEST_CASE("Hermitian code with eight rows") {
    const Curve c(3);
    const Matrix g = build_code(c, 10, 0).generator;
    const MinDistanceResult r = min_distance_exhaustive(c.field(), g);
    CHECK(r.dimension == 8);
    CHECK(r.distance == 16);
}

TEST_CASE("oracle guards") {
    const Field f = Field::make(3);
    CHECK(default_k_max(4) == 13);
    CHECK(default_k_max(9) == 8);
    CHECK(default_k_max(16) == 6);
    CHECK_THROWS_AS(min_distance_exhaustive(f, Matrix(2, 5)), std::invalid_argument);
    MinDistanceOptions o;
    o.k_max = 2;
    CHECK_THROWS_AS(min_distance_exhaustive(f, Matrix::identity(3), o), OracleInfeasible);
}
