#ifndef RGCM_SYMMETRIZE_HPP
#define RGCM_SYMMETRIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "rgcm/matrix.hpp"

namespace rgcm {

// A = diag(d) * B with d > 0 and B symmetric exists iff around every cycle
// of the support graph the product of entries taken forward equals the
// product taken backward.  d is normalized by d[0] = 1 and propagated along
// a breadth-first spanning tree; each non-tree edge either confirms the
// scaling or yields the non-symmetrizability cycle.

struct Symmetrization {
    bool symmetrizable = false;

    // Symmetrizable case: A = diag(d) * B, B bit-exactly symmetric.
    std::vector<double> d;
    std::optional<SquareMatrix> b;

    // Non-symmetrizable case: offending fundamental cycle (0-based vertex
    // sequence, smallest vertex first) and its two directed entry products.
    std::vector<int> cycle;
    double forward_product = 0.0;
    double backward_product = 0.0;
};

Symmetrization symmetrize(const SquareMatrix& a, double tol = 1e-9);

enum class Definiteness { PositiveDefinite, PositiveSemiDefinite, Other };

std::string to_string(Definiteness d);

struct RemarkReport {
    // Applicable iff A is symmetrizable and of finite or affine type.
    bool applicable = false;
    Definiteness definite = Definiteness::Other;
    double min_eigenvalue = 0.0;   // estimate, meaningful when applicable
};

/// Definiteness of the symmetric factor B: Sylvester leading minors decide
/// PositiveDefinite; otherwise the smallest eigenvalue (shifted power
/// iteration on c*I - B) decides PositiveSemiDefinite within
/// 1e-8 * ||B||_inf.  Throws NotRgcmError.
RemarkReport remark_definiteness(const SquareMatrix& a, double tol = 1e-9);

} // namespace rgcm

#endif
