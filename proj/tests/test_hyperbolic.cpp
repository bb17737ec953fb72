#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rgcm/criteria.hpp"
#include "rgcm/generate.hpp"
#include "rgcm/hyperbolic.hpp"
#include "rgcm/lu.hpp"
#include "rgcm/structure.hpp"

using namespace rgcm;

namespace {

const SquareMatrix kPaper{{4, -1, -1}, {-1, 4, -1}, {-2, -1, 4}};
const SquareMatrix kHyper{{2, -2}, {-3, 2}};
// Indefinite with an indefinite {0,1} submatrix (minor 4 - 9 = -5).
const SquareMatrix kNonHyper{{2, -3, -1}, {-3, 2, -1}, {-1, -1, 2}};

SquareMatrix gen(std::size_t n, GeneratorTarget target, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.n = n;
    spec.target = target;
    spec.seed = seed;
    return generate(spec);
}

} // namespace

TEST_SUITE_BEGIN("hyperbolic");

TEST_CASE("report on a strictly hyperbolic 2x2") {
    const HyperbolicReport r = hyperbolic_report(kHyper);
    CHECK(r.verdict == HyperbolicVerdict::StrictlyHyperbolic);
    REQUIRE(r.evidence.size() == 2);
    for (const auto& ev : r.evidence) {
        REQUIRE(ev.blocks.size() == 1);
        CHECK(ev.blocks[0].verdict == Verdict::Finite);
    }
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("report on an indefinite non-hyperbolic 3x3") {
    CHECK(determinant(principal_submatrix(kNonHyper, {0, 1})) == doctest::Approx(-5.0));
    const HyperbolicReport r = hyperbolic_report(kNonHyper);
    CHECK(r.verdict == HyperbolicVerdict::IndefiniteNonHyperbolic);
    REQUIRE(r.witness.has_value());

    // The {0,1} submatrix shows up indefinite in the evidence.
    bool found = false;
    for (const auto& ev : r.evidence)
        for (const auto& b : ev.blocks)
            if (b.members == std::vector<int>{0, 1} && b.verdict == Verdict::Indefinite)
                found = true;
    CHECK(found);
}

TEST_CASE("report on finite input") {
    const HyperbolicReport r = hyperbolic_report(kPaper);
    CHECK(r.verdict == HyperbolicVerdict::NotIndefinite);
    CHECK(r.evidence.empty());
}

TEST_CASE("indefinite 1x1 matrices are strictly hyperbolic") {
    CHECK(hyperbolic_report(SquareMatrix{{-5}}).verdict ==
          HyperbolicVerdict::StrictlyHyperbolic);
}

TEST_CASE("hy1 witness reproduces the block construction") {
    const Hy1Witness w = hy1_witness(kNonHyper);
    CHECK(w.w == std::vector<double>{2.0, 2.0, -1.0});
    CHECK(w.violation_index == 2);
    CHECK(kNonHyper.apply(w.w) == std::vector<double>{-1.0, -1.0, -6.0});

    CHECK_THROWS_AS(hy1_witness(kHyper), NotApplicableError);
    CHECK_THROWS_AS(hy1_witness(kPaper), NotApplicableError);
}

TEST_CASE("hy1 sample check") {
    CHECK(hy1_sample_check(kHyper, 100, 42));
    CHECK(hy1_sample_check(SquareMatrix{{-5}}, 16, 7));
    // The directed probe derived from the witness finds the violation.
    CHECK_FALSE(hy1_sample_check(kNonHyper, 100, 42));
    // Finite type also violates hy1: u = A^{-1} w <= 0 for w <= 0.
    CHECK_FALSE(hy1_sample_check(kPaper, 100, 42));
}

TEST_CASE("maximal and exhaustive modes agree") {
    const GeneratorTarget targets[] = {GeneratorTarget::Indefinite,
                                       GeneratorTarget::Hyperbolic,
                                       GeneratorTarget::StrictlyHyperbolic};
    for (std::uint64_t seed = 1; seed <= 18; ++seed) {
        const SquareMatrix a = gen(1 + seed % 7, targets[seed % 3], 1000 + seed);
        CHECK(hyperbolic_report(a, SubmatrixMode::Maximal).verdict ==
              hyperbolic_report(a, SubmatrixMode::Exhaustive).verdict);
    }
}

TEST_CASE("hyperbolic verdict matches the nonpositive-inverse criterion") {
    const GeneratorTarget targets[] = {GeneratorTarget::Indefinite,
                                       GeneratorTarget::StrictlyHyperbolic};
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const SquareMatrix a = gen(1 + seed % 6, targets[seed % 2], 1100 + seed);
        const HyperbolicVerdict v = hyperbolic_report(a).verdict;
        if (v == HyperbolicVerdict::NotIndefinite)
            continue;
        const bool hyp = v == HyperbolicVerdict::Hyperbolic ||
                         v == HyperbolicVerdict::StrictlyHyperbolic;
        CHECK(hyp == classify_by_inverse(a).hyperbolic);
    }
}

TEST_CASE("hyperbolic matrices have negative determinant") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const SquareMatrix a = gen(1 + seed % 5, GeneratorTarget::Hyperbolic, 1200 + seed);
        CHECK(determinant(a) < 0.0);
    }
}

TEST_CASE("witness soundness on generated non-hyperbolic samples") {
    int found = 0;
    for (std::uint64_t seed = 1; seed <= 40 && found < 10; ++seed) {
        const SquareMatrix a = gen(3 + seed % 5, GeneratorTarget::Indefinite, 1300 + seed);
        const HyperbolicReport r = hyperbolic_report(a);
        if (r.verdict != HyperbolicVerdict::IndefiniteNonHyperbolic)
            continue;
        ++found;
        REQUIRE(r.witness.has_value());
        const auto& w = r.witness->w;
        CHECK(*std::min_element(w.begin(), w.end()) < 0.0);
        const std::vector<double> aw = a.apply(w);
        const double bound = 1e-9 * a.max_abs() * inf_norm(w);
        for (double x : aw)
            CHECK(x <= bound);
    }
    CHECK(found >= 5);   // indefinite sampling must hit non-hyperbolic cases
}

TEST_SUITE_END();
