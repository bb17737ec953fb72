#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rgcm/errors.hpp"
#include "rgcm/generate.hpp"
#include "rgcm/lu.hpp"
#include "rgcm/matrix.hpp"

using rgcm::SquareMatrix;

namespace {

const SquareMatrix kPaper{{4, -1, -1}, {-1, 4, -1}, {-2, -1, 4}};
const SquareMatrix kHyper{{2, -2}, {-3, 2}};
const SquareMatrix kAffine{{2, -2}, {-2, 2}};

// Diagonally dominant random matrix: comfortably invertible.
SquareMatrix random_well_conditioned(std::size_t n, std::uint64_t seed) {
    rgcm::Xorshift64Star rng(seed);
    SquareMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            a(i, j) = rng.uniform(-1.0, 1.0);
            row += std::abs(a(i, j));
        }
        a(i, i) = row + rng.uniform(1.0, 2.0);
    }
    return a;
}

} // namespace

TEST_SUITE_BEGIN("matrix-core");

TEST_CASE("construction enforces shape and finiteness") {
    CHECK_THROWS_AS(SquareMatrix(0), std::invalid_argument);
    CHECK_THROWS_AS(SquareMatrix(2, {1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(SquareMatrix(1, {std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(SquareMatrix(1, {INFINITY}), std::invalid_argument);
    CHECK(SquareMatrix::identity(3)(1, 1) == 1.0);
    CHECK(SquareMatrix::identity(3)(0, 1) == 0.0);
}

TEST_CASE("determinant matches the closed forms") {
    CHECK(oracle::cofactor_det(kHyper) == -2.0);
    CHECK(rgcm::determinant(kHyper) == doctest::Approx(-2.0).epsilon(1e-12));

    CHECK(oracle::cofactor_det(kPaper) == 45.0);
    CHECK(rgcm::determinant(kPaper) == doctest::Approx(45.0).epsilon(1e-12));
}

TEST_CASE("determinant of a rank-deficient matrix is exactly zero") {
    CHECK(rgcm::determinant(kAffine) == 0.0);
    CHECK(lu_factor(kAffine).singular);
}

TEST_CASE("invert matches the adjugate oracle") {
    const SquareMatrix expected2 = oracle::adjugate_inverse(kHyper);
    const SquareMatrix inv2 = rgcm::invert(kHyper);
    CHECK(expected2(0, 0) == -1.0);
    CHECK(expected2(0, 1) == -1.0);
    CHECK(expected2(1, 0) == -1.5);
    CHECK(expected2(1, 1) == -1.0);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(inv2(i, j) == doctest::Approx(expected2(i, j)).epsilon(1e-12));

    const SquareMatrix expected3 = oracle::adjugate_inverse(kPaper);
    const SquareMatrix inv3 = rgcm::invert(kPaper);
    CHECK(expected3(0, 0) == doctest::Approx(15.0 / 45.0));
    CHECK(expected3(1, 1) == doctest::Approx(14.0 / 45.0));
    CHECK(expected3(2, 0) == doctest::Approx(9.0 / 45.0));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(inv3(i, j) == doctest::Approx(expected3(i, j)).epsilon(1e-12));
            CHECK(inv3(i, j) > 0.0);   // strictly positive inverse
        }

    CHECK_THROWS_AS(rgcm::invert(kAffine), rgcm::SingularError);
}

TEST_CASE("solve") {
    const std::vector<double> b{0.0, -2.0};
    const std::vector<double> x = rgcm::solve(kHyper, b);
    CHECK(x[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(x[1] == doctest::Approx(2.0).epsilon(1e-12));

    const std::vector<double> rhs{1.0, 2.0, 3.0};
    CHECK(rgcm::solve(SquareMatrix::identity(3), rhs) == rhs);

    CHECK_THROWS_AS(rgcm::solve(kAffine, b), rgcm::SingularError);
    CHECK_THROWS_AS(rgcm::solve(kHyper, rhs), std::invalid_argument);
}

TEST_CASE("inverse residual on random well-conditioned matrices") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const std::size_t n = 2 + static_cast<std::size_t>(seed * 7 % 49);
        const SquareMatrix a = random_well_conditioned(n, seed);
        const SquareMatrix inv = rgcm::invert(a);
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                double acc = (i == j) ? -1.0 : 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    acc += a(i, k) * inv(k, j);
                residual = std::max(residual, std::abs(acc));
            }
        }
        CHECK(residual <= 1e-9 * a.inf_norm() * static_cast<double>(n));
    }
}

TEST_CASE("determinant is transpose-invariant") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const std::size_t n = 2 + static_cast<std::size_t>(seed % 9);
        const SquareMatrix a = random_well_conditioned(n, 1000 + seed);
        const double d = rgcm::determinant(a);
        const double dt = rgcm::determinant(a.transposed());
        CHECK(std::abs(d - dt) <= 1e-10 * std::max(std::abs(d), std::abs(dt)));
    }
}

TEST_CASE("determinant agrees with the cofactor oracle for n <= 4") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const std::size_t n = 1 + static_cast<std::size_t>(seed % 4);
        rgcm::Xorshift64Star rng(2000 + seed);
        SquareMatrix a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = rng.uniform(-3.0, 3.0);
        const double expected = oracle::cofactor_det(a);
        const double got = rgcm::determinant(a);
        CHECK(std::abs(got - expected) <=
              1e-12 * std::max({1.0, std::abs(expected), std::abs(got)}));
    }
}

TEST_SUITE_END();
