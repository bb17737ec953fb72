#include "rgcm/hyperbolic.hpp"

#include <algorithm>
#include <cmath>

#include "rgcm/generate.hpp"
#include "rgcm/lu.hpp"
#include "rgcm/structure.hpp"

namespace rgcm {

std::string to_string(HyperbolicVerdict v) {
    switch (v) {
    case HyperbolicVerdict::NotIndefinite: return "not_indefinite";
    case HyperbolicVerdict::Hyperbolic: return "hyperbolic";
    case HyperbolicVerdict::StrictlyHyperbolic: return "strictly_hyperbolic";
    case HyperbolicVerdict::IndefiniteNonHyperbolic: return "indefinite_non_hyperbolic";
    }
    return "?";
}

namespace {

SubmatrixEvidence inspect_subset(const SquareMatrix& a, std::vector<int> subset, double tol) {
    SubmatrixEvidence ev;
    SquareMatrix sub = principal_submatrix(a, subset);
    BlockDecomposition blocks = decompose(sub);
    for (const auto& block : blocks.components) {
        Classification c = classify(principal_submatrix(sub, block), tol);
        std::vector<int> members;
        members.reserve(block.size());
        for (int local : block)
            members.push_back(subset[local]);
        ev.blocks.push_back({std::move(members), c.verdict, c.margin});
    }
    ev.indices = std::move(subset);
    return ev;
}

std::vector<std::vector<int>> proper_subsets(int n, SubmatrixMode mode) {
    std::vector<std::vector<int>> subsets;
    if (mode == SubmatrixMode::Maximal) {
        for (int drop = 0; drop < n && n > 1; ++drop) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (i != drop)
                    s.push_back(i);
            subsets.push_back(std::move(s));
        }
    } else {
        const std::uint64_t full = (1ull << n) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask & (1ull << i))
                    s.push_back(i);
            subsets.push_back(std::move(s));
        }
    }
    return subsets;
}

} // namespace

HyperbolicReport hyperbolic_report(const SquareMatrix& a, SubmatrixMode mode, double tol) {
    Classification cls = classify(a, tol);
    HyperbolicReport report;
    if (cls.verdict != Verdict::Indefinite) {
        report.verdict = HyperbolicVerdict::NotIndefinite;
        return report;
    }

    const int n = static_cast<int>(a.size());
    bool any_affine = false, any_indefinite = false;
    for (auto& subset : proper_subsets(n, mode)) {
        SubmatrixEvidence ev = inspect_subset(a, std::move(subset), tol);
        for (const auto& block : ev.blocks) {
            any_affine |= block.verdict == Verdict::Affine;
            any_indefinite |= block.verdict == Verdict::Indefinite;
        }
        report.evidence.push_back(std::move(ev));
    }

    if (any_indefinite) {
        report.verdict = HyperbolicVerdict::IndefiniteNonHyperbolic;
        report.witness = hy1_witness(a, tol);
    } else if (any_affine) {
        report.verdict = HyperbolicVerdict::Hyperbolic;
    } else {
        report.verdict = HyperbolicVerdict::StrictlyHyperbolic;
    }
    return report;
}

Hy1Witness hy1_witness(const SquareMatrix& a, double tol) {
    Classification cls = classify(a, tol);
    if (cls.verdict != Verdict::Indefinite)
        throw NotApplicableError("hy1 witness requires an indefinite matrix");

    const int n = static_cast<int>(a.size());

    // First indefinite block over the one-deletion submatrices.
    std::vector<int> t;
    for (auto& subset : proper_subsets(n, SubmatrixMode::Maximal)) {
        SubmatrixEvidence ev = inspect_subset(a, std::move(subset), tol);
        for (auto& block : ev.blocks)
            if (block.verdict == Verdict::Indefinite) {
                t = std::move(block.members);
                break;
            }
        if (!t.empty())
            break;
    }
    if (t.empty())
        throw NotApplicableError("matrix is hyperbolic; no hy1 witness exists");

    // Grow the indefinite set along support edges until one vertex is left.
    // Adjacency keeps each extension connected and indefinite (an extension
    // of an indefinite principal submatrix cannot be finite or affine).
    std::vector<bool> in_t(n, false);
    for (int i : t)
        in_t[i] = true;
    while (static_cast<int>(t.size()) < n - 1) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (in_t[v])
                continue;
            for (int w : t)
                if (a(v, w) != 0.0) {
                    pick = v;
                    break;
                }
        }
        if (pick < 0)
            throw NumericalError("hy1_witness: support graph not connected");
        in_t[pick] = true;
        t.push_back(pick);
    }
    std::sort(t.begin(), t.end());
    int excluded = 0;
    while (in_t[excluded])
        ++excluded;

    Classification sub = classify(principal_submatrix(a, t), tol);

    // w = (scale * u', -1); doubling terminates because A_T u' < 0 strictly
    // and the excluded vertex couples into T.
    for (double scale = 1.0; scale <= 0x1p60; scale *= 2.0) {
        std::vector<double> w(n, -1.0);
        for (std::size_t k = 0; k < t.size(); ++k)
            w[t[k]] = scale * sub.certificate[k];
        const std::vector<double> aw = a.apply(w);
        if (std::all_of(aw.begin(), aw.end(), [](double x) { return x < 0.0; }))
            return {std::move(w), excluded};
    }
    throw NumericalError("hy1_witness: scaling exceeded 2^60 without A w < 0");
}

bool hy1_sample_check(const SquareMatrix& a, int samples, std::uint64_t seed, double tol) {
    require_rgcm(a);
    const std::size_t n = a.size();
    LUFactors f = lu_factor(a);
    if (f.singular)
        throw SingularError("hy1_sample_check: matrix is singular");

    const auto violates = [&](std::span<const double> w) {
        const std::vector<double> u = lu_solve(f, w);
        const double floor = -tol * std::max(1.0, inf_norm(u));
        return std::any_of(u.begin(), u.end(), [&](double x) { return x < floor; });
    };

    bool violation = false;
    Xorshift64Star rng(seed);
    std::vector<double> w(n);
    for (int s = 0; s < samples && !violation; ++s) {
        for (double& x : w)
            x = -rng.next_unit();
        violation = violates(w);
    }

    if (!violation) {
        // Directed probe from the witness when one exists.
        Classification cls = classify(a, tol);
        if (cls.verdict == Verdict::Indefinite) {
            HyperbolicReport report = hyperbolic_report(a, SubmatrixMode::Maximal, tol);
            if (report.witness)
                violation = violates(a.apply(report.witness->w));
        }
    }
    return !violation;
}

} // namespace rgcm
