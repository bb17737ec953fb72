#include "rgcm/criteria.hpp"

#include <cmath>
#include <limits>

#include "rgcm/errors.hpp"
#include "rgcm/lu.hpp"
#include "rgcm/structure.hpp"

namespace rgcm {

namespace {

double minor_tolerance(const SquareMatrix& a) {
    return 1e-9 * a.max_abs();
}

} // namespace

std::string to_string(InverseSignStatus s) {
    switch (s) {
    case InverseSignStatus::Singular: return "singular";
    case InverseSignStatus::StrictlyPositive: return "strictly_positive";
    case InverseSignStatus::Nonpositive: return "nonpositive";
    case InverseSignStatus::Mixed: return "mixed";
    }
    return "?";
}

MinorReport minor_report(const SquareMatrix& a, int exhaustive_cap) {
    const int n = static_cast<int>(a.size());
    const double tol = minor_tolerance(a);
    MinorReport r;

    r.leading.reserve(n);
    for (int k = 1; k <= n; ++k) {
        std::vector<int> s(k);
        for (int i = 0; i < k; ++i)
            s[i] = i;
        r.leading.push_back(determinant(principal_submatrix(a, s)));
    }
    r.det = r.leading.back();

    if (n <= exhaustive_cap && n < 63) {
        std::map<std::vector<int>, double> minors;
        const std::uint64_t full = (1ull << n) - 1;
        for (std::uint64_t mask = 1; mask <= full; ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask & (1ull << i))
                    s.push_back(i);
            const double minor = determinant(principal_submatrix(a, s));
            minors.emplace(std::move(s), minor);
        }
        bool all = true, proper = true;
        for (const auto& [subset, minor] : minors) {
            if (minor <= tol) {
                all = false;
                if (static_cast<int>(subset.size()) < n)
                    proper = false;
            }
        }
        r.all_positive = all;
        r.all_proper_positive = proper;
        r.exhaustive = std::move(minors);
    } else {
        // Fast path above the cap: judged on leading minors only.
        bool all = true, proper = true;
        for (std::size_t k = 0; k < r.leading.size(); ++k) {
            if (r.leading[k] <= tol) {
                all = false;
                if (k + 1 < r.leading.size())
                    proper = false;
            }
        }
        r.all_positive = all;
        r.all_proper_positive = proper;
    }
    return r;
}

Verdict classify_by_minors(const SquareMatrix& a, int exhaustive_cap) {
    require_rgcm(a);
    if (static_cast<int>(a.size()) > exhaustive_cap)
        throw DimensionTooLargeError(a.size(), exhaustive_cap);

    const MinorReport r = minor_report(a, exhaustive_cap);
    if (r.all_positive)
        return Verdict::Finite;
    if (r.all_proper_positive && std::abs(r.det) <= minor_tolerance(a))
        return Verdict::Affine;
    // The theorem characterizes finite and affine; trichotomy gives the rest.
    return Verdict::Indefinite;
}

InverseSignSummary inverse_sign(const SquareMatrix& a) {
    InverseSignSummary s;
    SquareMatrix inv(1);
    try {
        inv = invert(a);
    } catch (const SingularError&) {
        s.status = InverseSignStatus::Singular;
        s.min_entry = s.max_entry = std::numeric_limits<double>::quiet_NaN();
        return s;
    }
    double lo = inv.data().front(), hi = lo;
    for (double x : inv.data()) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    s.min_entry = lo;
    s.max_entry = hi;
    const double sign_tol = 1e-9 * inv.max_abs();
    s.status = lo > sign_tol    ? InverseSignStatus::StrictlyPositive
               : hi <= sign_tol ? InverseSignStatus::Nonpositive
                                : InverseSignStatus::Mixed;
    return s;
}

InverseClassification classify_by_inverse(const SquareMatrix& a) {
    require_rgcm(a);
    InverseSignSummary s = inverse_sign(a);
    return {s.status == InverseSignStatus::StrictlyPositive,
            s.status == InverseSignStatus::Nonpositive, s};
}

} // namespace rgcm
