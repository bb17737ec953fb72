#include <doctest.h>

#include <algorithm>

#include "rgcm/generate.hpp"
#include "rgcm/structure.hpp"

using namespace rgcm;

namespace {

const SquareMatrix kPaper{{4, -1, -1}, {-1, 4, -1}, {-2, -1, 4}};

bool has_kind(const ValidationReport& r, ViolationKind kind) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const Violation& v) { return v.kind == kind; });
}

SquareMatrix permute(const SquareMatrix& a, const std::vector<int>& p) {
    SquareMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            out(i, j) = a(p[i], p[j]);
    return out;
}

} // namespace

TEST_SUITE_BEGIN("rgcm-structure");

TEST_CASE("validate accepts the 3x3 finite-type fixture") {
    const ValidationReport r = validate(kPaper);
    CHECK(r.is_rgcm);
    CHECK(r.violations.empty());
}

TEST_CASE("validate flags block-diagonal input as decomposable") {
    const ValidationReport r = validate(SquareMatrix{{2, 0}, {0, 2}});
    CHECK_FALSE(r.is_rgcm);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == ViolationKind::Decomposable);
    REQUIRE(r.violations[0].components.size() == 2);
    CHECK(r.violations[0].components[0] == std::vector<int>{0});
    CHECK(r.violations[0].components[1] == std::vector<int>{1});
}

TEST_CASE("validate flags an asymmetric zero pattern at the zero side") {
    const ValidationReport r = validate(SquareMatrix{{2, -1}, {0, 2}});
    CHECK_FALSE(r.is_rgcm);
    REQUIRE(has_kind(r, ViolationKind::ZeroPatternAsymmetry));
    CHECK(r.violations[0].positions ==
          std::vector<std::pair<int, int>>{{1, 0}});
    // Connectivity is not evaluated while the pattern is asymmetric.
    CHECK_FALSE(has_kind(r, ViolationKind::Decomposable));
}

TEST_CASE("validate flags positive off-diagonal entries") {
    const ValidationReport r = validate(SquareMatrix{{2, 1}, {1, 2}});
    CHECK_FALSE(r.is_rgcm);
    REQUIRE(has_kind(r, ViolationKind::PositiveOffDiagonal));
    CHECK(r.violations[0].positions ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
}

TEST_CASE("validate with zero_tol snaps small entries to zero") {
    const SquareMatrix a{{2, 1e-12}, {-1, 2}};
    CHECK(has_kind(validate(a), ViolationKind::PositiveOffDiagonal));
    // Snapped to zero, the violation becomes a pattern asymmetry instead.
    const ValidationReport r = validate(a, 1e-9);
    CHECK(has_kind(r, ViolationKind::ZeroPatternAsymmetry));
    CHECK_FALSE(has_kind(r, ViolationKind::PositiveOffDiagonal));
}

TEST_CASE("n=1 matrices are indecomposable by convention") {
    CHECK(validate(SquareMatrix{{-5}}).is_rgcm);
    CHECK(validate(SquareMatrix{{0}}).is_rgcm);
}

TEST_CASE("decompose") {
    CHECK(decompose(SquareMatrix{{2, -1}, {-1, 2}}).components ==
          std::vector<std::vector<int>>{{0, 1}});
    CHECK(decompose(SquareMatrix{{2, 0, 0}, {0, 2, -1}, {0, -1, 2}}).components ==
          std::vector<std::vector<int>>{{0}, {1, 2}});
    CHECK_THROWS_AS(decompose(SquareMatrix{{2, -1}, {0, 2}}), PatternAsymmetricError);
}

TEST_CASE("principal_submatrix") {
    const SquareMatrix sub = principal_submatrix(kPaper, {0, 2});
    CHECK(sub == SquareMatrix{{4, -1}, {-2, 4}});
    CHECK(principal_submatrix(kPaper, {0, 1, 2}) == kPaper);
    CHECK(principal_submatrix(kPaper, {1}) == SquareMatrix{{4}});

    CHECK_THROWS_AS(principal_submatrix(kPaper, {}), IndexError);
    CHECK_THROWS_AS(principal_submatrix(kPaper, {3}), IndexError);
    CHECK_THROWS_AS(principal_submatrix(kPaper, {-1}), IndexError);
}

TEST_CASE("a valid RGCM decomposes into exactly one component") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        GeneratorSpec spec;
        spec.n = 1 + seed % 8;
        spec.seed = seed;
        const SquareMatrix a = generate(spec);
        REQUIRE(validate(a).is_rgcm);
        CHECK(decompose(a).components.size() == 1);
    }
}

TEST_CASE("principal submatrices inherit sign and zero-pattern conditions") {
    GeneratorSpec spec;
    spec.n = 7;
    spec.seed = 99;
    const SquareMatrix a = generate(spec);
    Xorshift64Star rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> s;
        for (int i = 0; i < 7; ++i)
            if (rng.next_unit() < 0.5)
                s.push_back(i);
        if (s.empty())
            continue;
        const SquareMatrix sub = principal_submatrix(a, s);
        for (std::size_t i = 0; i < sub.size(); ++i)
            for (std::size_t j = 0; j < sub.size(); ++j) {
                if (i == j)
                    continue;
                CHECK(sub(i, j) <= 0.0);
                CHECK((sub(i, j) == 0.0) == (sub(j, i) == 0.0));
            }
    }
}

TEST_CASE("decompose is permutation-invariant up to relabeling") {
    const SquareMatrix a{{2, 0, -1, 0}, {0, 2, 0, 0}, {-1, 0, 2, 0}, {0, 0, 0, 2}};
    const std::vector<int> p{2, 3, 0, 1};
    const BlockDecomposition d0 = decompose(a);
    const BlockDecomposition d1 = decompose(permute(a, p));
    // Map the permuted components back and compare as sets.
    std::vector<std::vector<int>> mapped;
    for (const auto& c : d1.components) {
        std::vector<int> back;
        for (int v : c)
            back.push_back(p[v]);
        std::sort(back.begin(), back.end());
        mapped.push_back(std::move(back));
    }
    std::sort(mapped.begin(), mapped.end());
    std::vector<std::vector<int>> original = d0.components;
    std::sort(original.begin(), original.end());
    CHECK(mapped == original);
}

TEST_SUITE_END();
