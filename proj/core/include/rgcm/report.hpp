#ifndef RGCM_REPORT_HPP
#define RGCM_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rgcm/criteria.hpp"
#include "rgcm/hyperbolic.hpp"
#include "rgcm/matrix.hpp"
#include "rgcm/spectral.hpp"
#include "rgcm/structure.hpp"
#include "rgcm/symmetrize.hpp"

namespace rgcm {

struct ReportOptions {
    double tol = 1e-9;
    int exhaustive_cap = kDefaultExhaustiveCap;
    SubmatrixMode mode = SubmatrixMode::Maximal;
    std::uint64_t seed = 0;    // hy1 sampling seed
    int hy1_samples = 100;
};

// One theorem-level cross-check.  `applicable` is false when the check is
// numerically ill-posed for this input (e.g. the spectral margin sits
// inside the affine band); such entries pass vacuously.
struct ConsistencyEntry {
    std::string name;
    bool applicable;
    bool passed;
    std::string detail;
};

struct FullReport {
    std::size_t n;
    double det;
    ValidationReport validation;
    Classification classification;
    ShiftResult shift;
    MinorReport minors;
    InverseSignSummary inverse;
    HyperbolicReport hyperbolic;
    Symmetrization symmetrization;
    std::vector<ConsistencyEntry> consistency;
    bool all_consistent;
};

/// Run every analysis and the cross-criterion agreement suite.
/// Throws NotRgcmError when the input is not a valid RGCM.
FullReport build_full_report(const SquareMatrix& a, const ReportOptions& opt = {});

// JSON renderers (single document, machine-readable; 1-based indices).
std::string to_json_string(const FullReport& r, int indent = 2);
std::string to_json_string(const ValidationReport& r, int indent = 2);
std::string to_json_string(const Classification& c, int indent = 2);
std::string to_json_string(const ShiftResult& s, int indent = 2);
std::string to_json_string(const MinorReport& m, int indent = 2);
std::string to_json_string(const InverseSignSummary& s, int indent = 2);
std::string to_json_string(const HyperbolicReport& h, int indent = 2);
std::string to_json_string(const Symmetrization& s, int indent = 2);

// Human-readable renderers used by the CLI.
std::string to_text(const FullReport& r);
std::string to_text(const ValidationReport& r);
std::string to_text(const Classification& c);
std::string to_text(const ShiftResult& s);
std::string to_text(const MinorReport& m);
std::string to_text(const InverseSignSummary& s);
std::string to_text(const HyperbolicReport& h);
std::string to_text(const Symmetrization& s);

} // namespace rgcm

#endif
