#include <doctest.h>

#include <cmath>

#include "rgcm/generate.hpp"
#include "rgcm/spectral.hpp"
#include "rgcm/symmetrize.hpp"

using namespace rgcm;

namespace {

const SquareMatrix kPaper{{4, -1, -1}, {-1, 4, -1}, {-2, -1, 4}};

// Symmetrizable sample: a symmetric RGCM row-scaled by a positive diagonal.
// Row scaling preserves the Vinberg type (certificates carry over).
SquareMatrix scaled_symmetric(std::size_t n, GeneratorTarget target, std::uint64_t seed,
                              std::vector<double>* d_out = nullptr) {
    GeneratorSpec spec;
    spec.n = n;
    spec.target = target;
    spec.seed = seed;
    SquareMatrix a = generate(spec);
    // Symmetrize the generated pattern by averaging paired entries.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = v;
            a(j, i) = v;
        }
    if (target == GeneratorTarget::Affine) {
        // Restore exact affineness: set the diagonal so A u = 0 for the
        // Perron vector of the symmetrized off-diagonal part.
        SquareMatrix b(n);
        double shift = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                shift = std::max(shift, std::abs(a(i, j)));
        const double s = 1.0 + shift;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                b(i, j) = (i == j ? s : 0.0) - a(i, j);
        const PerronPair p = perron(b, 1e-13);
        for (std::size_t i = 0; i < n; ++i)
            a(i, i) += (p.rho - s);
    }
    Xorshift64Star rng(seed ^ 0xD1CEBEEFull);
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = rng.uniform(0.5, 2.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) *= d[i];
    if (d_out)
        *d_out = d;
    return a;
}

} // namespace

TEST_SUITE_BEGIN("symmetrize");

TEST_CASE("the 3x3 fixture is non-symmetrizable with cycle products -2 and -1") {
    const Symmetrization s = symmetrize(kPaper);
    CHECK_FALSE(s.symmetrizable);
    CHECK(s.cycle == std::vector<int>{0, 1, 2});
    CHECK(s.forward_product == -2.0);    // a12 * a23 * a31
    CHECK(s.backward_product == -1.0);   // a21 * a32 * a13
}

TEST_CASE("hand-propagated 2x2 factorization") {
    const Symmetrization s = symmetrize(SquareMatrix{{2, -2}, {-1, 2}});
    REQUIRE(s.symmetrizable);
    CHECK(s.d == std::vector<double>{1.0, 0.5});
    CHECK(*s.b == SquareMatrix{{2, -2}, {-2, 4}});
}

TEST_CASE("symmetric input needs no scaling") {
    const SquareMatrix a{{2, -2}, {-2, 2}};
    const Symmetrization s = symmetrize(a);
    REQUIRE(s.symmetrizable);
    CHECK(s.d == std::vector<double>{1.0, 1.0});
    CHECK(*s.b == a);
}

TEST_CASE("reconstruction: diag(d) * B recovers A") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const SquareMatrix a = scaled_symmetric(2 + seed % 7, GeneratorTarget::Finite, seed);
        const Symmetrization s = symmetrize(a);
        REQUIRE(s.symmetrizable);
        double err = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j)
                err = std::max(err, std::abs(s.d[i] * (*s.b)(i, j) - a(i, j)));
        CHECK(err <= 1e-9 * a.max_abs());
        for (double di : s.d)
            CHECK(di > 0.0);
        CHECK(*s.b == s.b->transposed());   // bit-exact symmetry
    }
}

TEST_CASE("row rescaling changes d but not the verdict") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const SquareMatrix a = scaled_symmetric(3 + seed % 5, GeneratorTarget::Finite, 40 + seed);
        REQUIRE(symmetrize(a).symmetrizable);

        Xorshift64Star rng(seed);
        SquareMatrix scaled = a;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double p = rng.uniform(0.25, 4.0);
            for (std::size_t j = 0; j < a.size(); ++j)
                scaled(i, j) *= p;
        }
        CHECK(symmetrize(scaled).symmetrizable);

        // And the paper fixture stays non-symmetrizable under row scaling.
        SquareMatrix bad = kPaper;
        for (std::size_t j = 0; j < 3; ++j)
            bad(1, j) *= 3.0;
        CHECK_FALSE(symmetrize(bad).symmetrizable);
    }
}

TEST_CASE("remark_definiteness on fixtures") {
    const RemarkReport fin = remark_definiteness(SquareMatrix{{2, -2}, {-1, 2}});
    CHECK(fin.applicable);
    CHECK(fin.definite == Definiteness::PositiveDefinite);

    const RemarkReport aff = remark_definiteness(SquareMatrix{{2, -2}, {-2, 2}});
    CHECK(aff.applicable);
    CHECK(aff.definite == Definiteness::PositiveSemiDefinite);
    CHECK(aff.min_eigenvalue == doctest::Approx(0.0).epsilon(1e-8));

    CHECK_FALSE(remark_definiteness(kPaper).applicable);
}

TEST_CASE("finite gives positive definite B, affine positive semidefinite") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const SquareMatrix fin = scaled_symmetric(2 + seed % 6, GeneratorTarget::Finite, 60 + seed);
        const RemarkReport rf = remark_definiteness(fin);
        REQUIRE(rf.applicable);
        CHECK(rf.definite == Definiteness::PositiveDefinite);

        const SquareMatrix aff = scaled_symmetric(2 + seed % 6, GeneratorTarget::Affine, 80 + seed);
        REQUIRE(classify(aff).verdict == Verdict::Affine);
        const RemarkReport ra = remark_definiteness(aff);
        REQUIRE(ra.applicable);
        CHECK(ra.definite == Definiteness::PositiveSemiDefinite);
    }
}

TEST_SUITE_END();
