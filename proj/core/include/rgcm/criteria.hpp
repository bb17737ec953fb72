#ifndef RGCM_CRITERIA_HPP
#define RGCM_CRITERIA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rgcm/matrix.hpp"
#include "rgcm/types.hpp"

namespace rgcm {

// Determinant-based criteria: a RGCM is of finite type iff all principal
// minors are positive, of affine type iff det = 0 and all proper principal
// minors are positive; finite iff A^{-1} > 0, hyperbolic iff A^{-1} <= 0.
// These run independently of the spectral path and cross-check it.

inline constexpr int kDefaultExhaustiveCap = 14;

struct MinorReport {
    // leading[k] = determinant of the leading (k+1)x(k+1) block; back() = det.
    std::vector<double> leading;
    // All 2^n - 1 principal minors, keyed by ascending index subset.
    // Present only when n <= exhaustive_cap.
    std::optional<std::map<std::vector<int>, double>> exhaustive;
    // Judged against minor_tol = 1e-9 * max_abs(A); based on the exhaustive
    // map when present, on the leading minors otherwise (fast path).
    bool all_positive = false;
    bool all_proper_positive = false;
    double det = 0.0;
};

MinorReport minor_report(const SquareMatrix& a, int exhaustive_cap = kDefaultExhaustiveCap);

/// Classification by principal minors; requires n <= exhaustive_cap since
/// the criterion quantifies over every principal minor.  Throws
/// DimensionTooLargeError beyond the cap and NotRgcmError on invalid input.
Verdict classify_by_minors(const SquareMatrix& a, int exhaustive_cap = kDefaultExhaustiveCap);

enum class InverseSignStatus { Singular, StrictlyPositive, Nonpositive, Mixed };

std::string to_string(InverseSignStatus s);

struct InverseSignSummary {
    InverseSignStatus status = InverseSignStatus::Singular;
    // Entry range of A^{-1}; NaN when singular.
    double min_entry;
    double max_entry;
};

/// Entry signs of A^{-1} judged against sign_tol = 1e-9 * max_abs(A^{-1}).
InverseSignSummary inverse_sign(const SquareMatrix& a);

struct InverseClassification {
    bool finite;       // status == StrictlyPositive
    bool hyperbolic;   // status == Nonpositive
    InverseSignSummary status;
};

/// Inverse-positivity criteria.  Mixed means indefinite but not hyperbolic;
/// Singular means affine or degenerate.  Throws NotRgcmError.
InverseClassification classify_by_inverse(const SquareMatrix& a);

} // namespace rgcm

#endif
