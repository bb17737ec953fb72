#include "rgcm/generate.hpp"

#include <algorithm>
#include <cmath>

#include "rgcm/errors.hpp"
#include "rgcm/hyperbolic.hpp"
#include "rgcm/spectral.hpp"

namespace rgcm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
    if (state_ == 0)
        state_ = 0x9E3779B97F4A7C15ull;   // xorshift state must be nonzero
}

std::uint64_t Xorshift64Star::next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
}

double Xorshift64Star::next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Xorshift64Star::uniform(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
}

std::uint64_t Xorshift64Star::below(std::uint64_t bound) {
    return next() % bound;   // modulo bias is negligible for small bounds
}

std::string to_string(GeneratorTarget t) {
    switch (t) {
    case GeneratorTarget::Finite: return "finite";
    case GeneratorTarget::Affine: return "affine";
    case GeneratorTarget::Indefinite: return "indefinite";
    case GeneratorTarget::Hyperbolic: return "hyperbolic";
    case GeneratorTarget::StrictlyHyperbolic: return "strictly_hyperbolic";
    }
    return "?";
}

namespace {

constexpr double kEntryLo = 0.1;
constexpr double kEntryHi = 2.0;

// Nonnegative irreducible B with symmetric support: diagonal entries first,
// then a random spanning tree, then density-chosen extra pairs, all drawn
// in row-major order so output is reproducible from the seed alone.
SquareMatrix draw_comparison_matrix(std::size_t n, double density, Xorshift64Star& rng) {
    SquareMatrix b(n);
    for (std::size_t i = 0; i < n; ++i)
        b(i, i) = rng.uniform(kEntryLo, kEntryHi);

    std::vector<bool> edge(n * n, false);
    for (std::size_t v = 1; v < n; ++v) {
        const std::size_t p = rng.below(v);
        edge[p * n + v] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!edge[i * n + j] && rng.next_unit() < density)
                edge[i * n + j] = true;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge[i * n + j]) {
                b(i, j) = rng.uniform(kEntryLo, kEntryHi);
                b(j, i) = rng.uniform(kEntryLo, kEntryHi);
            }
    return b;
}

SquareMatrix shift_to_type(const SquareMatrix& b, double margin_offset) {
    const std::size_t n = b.size();
    const PerronPair p = perron(b, 1e-12, 400 * static_cast<int>(n) + 4000);
    const double s = p.rho + margin_offset;
    SquareMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = (i == j ? s : 0.0) - b(i, j);
    return a;
}

} // namespace

SquareMatrix generate(const GeneratorSpec& spec) {
    if (spec.n < 1)
        throw InfeasibleSpecError("generate: n must be >= 1");
    if (!(spec.density > 0.0) || spec.density > 1.0)
        throw InfeasibleSpecError("generate: density must be in (0, 1]");
    if (!(spec.margin > 0.0))
        throw InfeasibleSpecError("generate: margin must be positive");
    if (spec.max_attempts < 1)
        throw InfeasibleSpecError("generate: max_attempts must be >= 1");

    Xorshift64Star rng(spec.seed);

    switch (spec.target) {
    case GeneratorTarget::Finite:
        return shift_to_type(draw_comparison_matrix(spec.n, spec.density, rng), spec.margin);
    case GeneratorTarget::Affine:
        return shift_to_type(draw_comparison_matrix(spec.n, spec.density, rng), 0.0);
    case GeneratorTarget::Indefinite:
        return shift_to_type(draw_comparison_matrix(spec.n, spec.density, rng), -spec.margin);
    case GeneratorTarget::Hyperbolic:
    case GeneratorTarget::StrictlyHyperbolic:
        break;
    }

    // Rejection sampling over indefinite candidates.  Shrinking the margin
    // pushes candidates toward the affine boundary, where every proper
    // submatrix block keeps a positive spectral gap and the report accepts.
    for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
        // Clamp well above the affine band so candidates stay indefinite.
        const double margin =
            std::max(spec.margin * std::pow(0.5, attempt / 2), 1e-6);
        SquareMatrix a =
            shift_to_type(draw_comparison_matrix(spec.n, spec.density, rng), -margin);
        const HyperbolicVerdict v = hyperbolic_report(a, SubmatrixMode::Maximal).verdict;
        const bool ok = spec.target == GeneratorTarget::StrictlyHyperbolic
                            ? v == HyperbolicVerdict::StrictlyHyperbolic
                            : v == HyperbolicVerdict::Hyperbolic ||
                                  v == HyperbolicVerdict::StrictlyHyperbolic;
        if (ok)
            return a;
    }
    throw AttemptsExhaustedError("generate: no " + to_string(spec.target) +
                                 " candidate within " + std::to_string(spec.max_attempts) +
                                 " attempts (n=" + std::to_string(spec.n) + ")");
}

SquareMatrix perturb(const SquareMatrix& a, double magnitude, std::uint64_t seed) {
    if (magnitude < 0.0)
        throw InfeasibleSpecError("perturb: magnitude must be >= 0");
    Xorshift64Star rng(seed);
    SquareMatrix out(a);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (out(i, j) == 0.0)
                continue;
            double factor = 1.0 + rng.uniform(-magnitude, magnitude);
            factor = std::max(factor, 1e-3);   // keep signs intact
            out(i, j) *= factor;
        }
    return out;
}

} // namespace rgcm
