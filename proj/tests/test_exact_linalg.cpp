#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cwbd/exact_linalg.hpp"
#include "cwbd/matrix.hpp"

using namespace cwbd;

namespace {

std::mt19937_64 rng(20240817);

RationalMatrix random_rational(std::size_t rows, std::size_t cols, int span = 5) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 3);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(num(rng), den(rng));
    return m;
}

// Row-reduction oracle for the rank, independent of the fraction-free path.
std::size_t rank_oracle(RationalMatrix a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pivot, j));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c) / a(r, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

} // namespace

TEST_CASE("fraction-free rank agrees with row reduction on random matrices", "[linalg]") {
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 8);
        std::size_t rows = dim(rng), cols = dim(rng);
        RationalMatrix a = random_rational(rows, cols);
        if (trial % 3 == 0 && rows > 1) { // force dependent rows
            for (std::size_t j = 0; j < cols; ++j) a(rows - 1, j) = a(0, j) * 2;
        }
        REQUIRE(rank(a) == rank_oracle(a));
    }
    REQUIRE(rank(RationalMatrix(3, 3)) == 0);
    REQUIRE(rank(RationalMatrix::identity(4)) == 4);
}

TEST_CASE("rank of integer matrices", "[linalg]") {
    IntMatrix j = IntMatrix::ones(5, 5);
    REQUIRE(rank(j) == 1);
    REQUIRE(rank(IntMatrix::identity(6)) == 6);
}

TEST_CASE("pivoted factorization certifies semidefiniteness", "[linalg]") {
    REQUIRE(is_positive_semidefinite(RationalMatrix::identity(4)));
    REQUIRE(is_positive_semidefinite(RationalMatrix(3, 3)));
    REQUIRE(is_positive_semidefinite(RationalMatrix::ones(4, 4)));

    RationalMatrix indef = RationalMatrix::identity(2);
    indef(1, 1) = -1;
    REQUIRE_FALSE(is_positive_semidefinite(indef));

    // Gram matrices are always PSD, differences with a too-large identity are not.
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix a = random_rational(4, 4);
        RationalMatrix g = a.transpose() * a;
        REQUIRE(is_positive_semidefinite(g));
    }
}

TEST_CASE("exact inverse multiplies back to the identity", "[linalg]") {
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix a = random_rational(5, 5);
        if (rank(a) < 5) continue;
        RationalMatrix inv = inverse(a);
        REQUIRE(a * inv == RationalMatrix::identity(5));
        REQUIRE(inv * a == RationalMatrix::identity(5));
    }
}

TEST_CASE("generalized inverse pinned values", "[linalg]") {
    REQUIRE(generalized_inverse(RationalMatrix::identity(3)) == RationalMatrix::identity(3));

    RationalMatrix d(2, 2);
    d(0, 0) = 2;
    RationalMatrix dg = generalized_inverse(d);
    REQUIRE(dg(0, 0) == Rational(1, 2));
    REQUIRE(dg(0, 1) == 0);
    REQUIRE(dg(1, 0) == 0);
    REQUIRE(dg(1, 1) == 0);

    RationalMatrix j3 = RationalMatrix::ones(3, 3);
    RationalMatrix jg = generalized_inverse(j3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) REQUIRE(jg(i, k) == Rational(1, 9));
}

TEST_CASE("generalized inverse satisfies M G M = M on random Gram matrices", "[linalg]") {
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        std::size_t n = dim(rng);
        RationalMatrix a = random_rational(dim(rng), n);
        RationalMatrix m = a.transpose() * a;
        RationalMatrix g = generalized_inverse(m);
        REQUIRE(m * g * m == m);
        REQUIRE(g.is_symmetric());
    }
}

TEST_CASE("orthogonal projector identities", "[linalg]") {
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        std::size_t rows = dim(rng) + 2, cols = dim(rng);
        RationalMatrix a = random_rational(rows, cols);
        RationalMatrix p = projector(a);
        REQUIRE(p.is_symmetric());
        REQUIRE(p * p == p);
        REQUIRE(p * a == a);
        RationalMatrix q = projector_complement(a);
        REQUIRE(p + q == RationalMatrix::identity(rows));
        REQUIRE((q * a).is_zero());
    }
}

TEST_CASE("projector of a partitioned matrix splits into orthogonal pieces", "[linalg]") {
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        std::size_t rows = dim(rng) + 4;
        RationalMatrix a = random_rational(rows, dim(rng));
        RationalMatrix b = random_rational(rows, dim(rng));
        RationalMatrix joint = projector(hcat(a, b));
        RationalMatrix split = projector(a) + projector(projector_complement(a) * b);
        REQUIRE(joint == split);
    }
}

TEST_CASE("quadratic form agrees with explicit g-inverse product", "[linalg]") {
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::size_t n = dim(rng) + 1;
        RationalMatrix a = random_rational(n + 1, n);
        RationalMatrix s = a.transpose() * a;
        if (rank(s) < n) continue; // the form is choice-free only on the span
        RationalMatrix w = random_rational(n, dim(rng));
        RationalMatrix direct = w.transpose() * generalized_inverse(s) * w;
        REQUIRE(psd_quadratic_form(s, w) == direct);
    }
}

TEST_CASE("dimension guard rejects oversized systems", "[linalg]") {
    REQUIRE_THROWS_AS(rank(RationalMatrix(513, 2)), cwbd::error);
}
