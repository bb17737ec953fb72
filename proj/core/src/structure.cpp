#include "rgcm/structure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rgcm {

namespace {

std::string describe(const ValidationReport& report) {
    std::ostringstream os;
    os << "not a valid real generalized Cartan matrix:";
    for (const auto& v : report.violations) {
        os << ' ' << to_string(v.kind);
        if (!v.positions.empty()) {
            os << " at";
            for (auto [i, j] : v.positions)
                os << " (" << i + 1 << ',' << j + 1 << ')';
        }
        os << ';';
    }
    return os.str();
}

// Connected components over edges i~j <=> |a_ij| > zero_tol, i != j.
// Assumes (or tolerates) a symmetric pattern; traversal follows rows.
std::vector<std::vector<int>> support_components(const SquareMatrix& a, double zero_tol) {
    const int n = static_cast<int>(a.size());
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> components;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0)
            continue;
        const int id = static_cast<int>(components.size());
        std::vector<int> stack{start}, members;
        comp[start] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w = 0; w < n; ++w) {
                if (w == v || comp[w] >= 0)
                    continue;
                if (std::abs(a(v, w)) > zero_tol || std::abs(a(w, v)) > zero_tol) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        components.push_back(std::move(members));
    }
    return components;
}

} // namespace

std::string to_string(ViolationKind k) {
    switch (k) {
    case ViolationKind::PositiveOffDiagonal: return "positive_off_diagonal";
    case ViolationKind::ZeroPatternAsymmetry: return "zero_pattern_asymmetry";
    case ViolationKind::Decomposable: return "decomposable";
    case ViolationKind::NonFiniteEntry: return "non_finite_entry";
    }
    return "?";
}

NotRgcmError::NotRgcmError(ValidationReport r)
    : Error(describe(r)), report(std::move(r)) {}

ValidationReport validate(const SquareMatrix& a, double zero_tol) {
    const int n = static_cast<int>(a.size());
    ValidationReport report;
    const auto is_zero = [&](int i, int j) { return std::abs(a(i, j)) <= zero_tol; };

    Violation positive{ViolationKind::PositiveOffDiagonal, {}, {}};
    Violation asym{ViolationKind::ZeroPatternAsymmetry, {}, {}};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (a(i, j) > zero_tol)
                positive.positions.emplace_back(i, j);
            if (is_zero(i, j) && !is_zero(j, i))
                asym.positions.emplace_back(i, j);
        }
    }
    if (!positive.positions.empty())
        report.violations.push_back(std::move(positive));
    if (!asym.positions.empty()) {
        report.violations.push_back(std::move(asym));
    } else if (n > 1) {
        // Connectivity is only well-defined once the pattern is symmetric.
        auto components = support_components(a, zero_tol);
        if (components.size() > 1)
            report.violations.push_back(
                {ViolationKind::Decomposable, {}, std::move(components)});
    }
    report.is_rgcm = report.violations.empty();
    return report;
}

BlockDecomposition decompose(const SquareMatrix& a, double zero_tol) {
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool zij = std::abs(a(i, j)) <= zero_tol;
            bool zji = std::abs(a(j, i)) <= zero_tol;
            if (i != j && zij != zji)
                throw PatternAsymmetricError(
                    "zero pattern asymmetric at (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + "); block decomposition undefined");
        }
    return {support_components(a, zero_tol)};
}

SquareMatrix principal_submatrix(const SquareMatrix& a, const std::vector<int>& indices) {
    if (indices.empty())
        throw IndexError("principal_submatrix: empty index set");
    std::vector<int> s(indices);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.front() < 0 || s.back() >= static_cast<int>(a.size()))
        throw IndexError("principal_submatrix: index out of range");

    const std::size_t m = s.size();
    SquareMatrix sub(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            sub(i, j) = a(s[i], s[j]);
    return sub;
}

void require_rgcm(const SquareMatrix& a) {
    ValidationReport report = validate(a);
    if (!report.is_rgcm)
        throw NotRgcmError(std::move(report));
}

} // namespace rgcm
