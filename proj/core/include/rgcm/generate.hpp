#ifndef RGCM_GENERATE_HPP
#define RGCM_GENERATE_HPP

#include <cstdint>
#include <string>

#include "rgcm/matrix.hpp"

namespace rgcm {

/// xorshift64* generator (shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D),
/// seeded through one round of splitmix64 so seed 0 is usable.  Embedded so
/// fixtures reproduce bit-identically across platforms and languages.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform in [0, 1) with 53 random bits.
    double next_unit();

    double uniform(double lo, double hi);

    /// Uniform in {0, ..., bound-1}; bound >= 1.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

enum class GeneratorTarget { Finite, Affine, Indefinite, Hyperbolic, StrictlyHyperbolic };

std::string to_string(GeneratorTarget t);

struct GeneratorSpec {
    std::size_t n = 2;
    GeneratorTarget target = GeneratorTarget::Finite;
    double density = 0.5;        // chance of each non-tree symmetric pair
    double margin = 0.5;         // |s - rho| for Finite/Indefinite targets
    std::uint64_t seed = 0;
    int max_attempts = 10000;    // rejection-sampled targets only
};

/// Seeded construction of a valid RGCM of the requested type.  A random
/// spanning tree forces connectivity, extra symmetric pairs follow
/// `density`, entries are uniform in [0.1, 2]; with rho = rho(B) the matrix
/// is A = s*I - B where s = rho + margin (Finite), s = rho (Affine) or
/// s = rho - margin (Indefinite).  Hyperbolic / StrictlyHyperbolic targets
/// rejection-sample indefinite candidates with a geometrically shrinking
/// margin until hyperbolic_report matches; a Hyperbolic target accepts a
/// StrictlyHyperbolic verdict.  Throws InfeasibleSpecError on bad
/// parameters and AttemptsExhaustedError when rejection gives up.
SquareMatrix generate(const GeneratorSpec& spec);

/// Multiply every nonzero entry by (1 + delta), delta uniform in
/// [-magnitude, magnitude] with the factor floored at 1e-3 so signs and the
/// zero pattern survive.  The output is again a valid RGCM.
SquareMatrix perturb(const SquareMatrix& a, double magnitude, std::uint64_t seed);

} // namespace rgcm

#endif
