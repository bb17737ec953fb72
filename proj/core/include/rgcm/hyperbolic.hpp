#ifndef RGCM_HYPERBOLIC_HPP
#define RGCM_HYPERBOLIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rgcm/matrix.hpp"
#include "rgcm/spectral.hpp"

namespace rgcm {

// An indefinite RGCM is hyperbolic when every proper principal submatrix is
// a direct sum of finite- or affine-type blocks, strictly hyperbolic when
// every block is finite.  For n = 1 the proper-submatrix condition is
// vacuous, so indefinite 1x1 matrices count as strictly hyperbolic,
// consistent with the inverse criterion (1/a < 0).

enum class HyperbolicVerdict {
    NotIndefinite,
    Hyperbolic,
    StrictlyHyperbolic,
    IndefiniteNonHyperbolic,
};

std::string to_string(HyperbolicVerdict v);

enum class SubmatrixMode { Maximal, Exhaustive };

struct BlockEvidence {
    std::vector<int> members;   // indices into the original matrix
    Verdict verdict;
    double margin;
};

struct SubmatrixEvidence {
    std::vector<int> indices;
    std::vector<BlockEvidence> blocks;
};

// Vector w with A w <= 0 and a strictly negative entry, exhibiting the
// failure of "Au <= 0 implies u >= 0" on non-hyperbolic indefinite input.
struct Hy1Witness {
    std::vector<double> w;
    int violation_index;   // position with w < 0
};

struct HyperbolicReport {
    HyperbolicVerdict verdict;
    std::vector<SubmatrixEvidence> evidence;
    std::optional<Hy1Witness> witness;   // set iff IndefiniteNonHyperbolic
};

/// Block-classify the proper principal submatrices: the n one-deletion sets
/// in Maximal mode, every proper nonempty subset in Exhaustive mode
/// (ascending bitmask order).  Throws NotRgcmError.
HyperbolicReport hyperbolic_report(const SquareMatrix& a,
                                   SubmatrixMode mode = SubmatrixMode::Maximal,
                                   double tol = 1e-9);

/// Witness construction: grow an indefinite proper principal submatrix to
/// size n-1 along support edges, take its negative certificate u', and set
/// w = (a*u', -1) with a the smallest power of two making A w < 0
/// componentwise.  Throws NotApplicableError when no witness exists
/// (A hyperbolic or not indefinite) and NumericalError past a = 2^60.
Hy1Witness hy1_witness(const SquareMatrix& a, double tol = 1e-9);

/// Draw `samples` seeded random vectors w <= 0 and test u = A^{-1} w >= 0.
/// When A is indefinite non-hyperbolic the witness is added as a directed
/// probe.  Returns true iff no violation was found; for hyperbolic A this
/// is guaranteed, otherwise it is informational.  Throws SingularError.
bool hy1_sample_check(const SquareMatrix& a, int samples, std::uint64_t seed,
                      double tol = 1e-9);

} // namespace rgcm

#endif
