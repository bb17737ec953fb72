#ifndef RGCM_STRUCTURE_HPP
#define RGCM_STRUCTURE_HPP

#include <string>
#include <utility>
#include <vector>

#include "rgcm/errors.hpp"
#include "rgcm/matrix.hpp"

namespace rgcm {

// A real generalized Cartan matrix (RGCM) is an indecomposable real square
// matrix with nonpositive off-diagonal entries whose zero pattern is
// symmetric: a_ij = 0 iff a_ji = 0.  Diagonal entries are unconstrained.
// All indices in this module are 0-based.

enum class ViolationKind {
    PositiveOffDiagonal,
    ZeroPatternAsymmetry,
    Decomposable,
    NonFiniteEntry,
};

std::string to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    // Offending (i, j) positions; for ZeroPatternAsymmetry the zero side.
    std::vector<std::pair<int, int>> positions;
    // Component partition, filled for Decomposable only.
    std::vector<std::vector<int>> components;
};

struct ValidationReport {
    bool is_rgcm = false;
    std::vector<Violation> violations;
};

// Connected components of the support graph, each sorted ascending,
// ordered by smallest member.
struct BlockDecomposition {
    std::vector<std::vector<int>> components;
};

class NotRgcmError : public Error {
public:
    explicit NotRgcmError(ValidationReport report);
    ValidationReport report;
};

/// Check the RGCM definition.  Entries with |a_ij| <= zero_tol are treated
/// as zero.  Indecomposability (support-graph connectivity) is evaluated
/// only when the zero pattern is symmetric.
ValidationReport validate(const SquareMatrix& a, double zero_tol = 0.0);

/// Support-graph components.  Requires a symmetric zero pattern; throws
/// PatternAsymmetricError otherwise.
BlockDecomposition decompose(const SquareMatrix& a, double zero_tol = 0.0);

/// Rows/columns of `indices` (0-based, ascending order of extraction).
/// Throws IndexError on an empty or out-of-range set.
SquareMatrix principal_submatrix(const SquareMatrix& a, const std::vector<int>& indices);

/// Convenience: throw NotRgcmError unless validate(a) passes.
void require_rgcm(const SquareMatrix& a);

} // namespace rgcm

#endif
