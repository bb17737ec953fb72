#include "rgcm/symmetrize.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "rgcm/lu.hpp"
#include "rgcm/spectral.hpp"
#include "rgcm/structure.hpp"

namespace rgcm {

std::string to_string(Definiteness d) {
    switch (d) {
    case Definiteness::PositiveDefinite: return "positive_definite";
    case Definiteness::PositiveSemiDefinite: return "positive_semi_definite";
    case Definiteness::Other: return "other";
    }
    return "?";
}

namespace {

// Fundamental cycle of non-tree edge (i, j): tree path i -> j closed by the
// edge, rotated to start at its smallest vertex and oriented toward the
// smaller neighbor.
std::vector<int> fundamental_cycle(const std::vector<int>& parent,
                                   const std::vector<int>& depth, int i, int j) {
    std::vector<int> up_i, up_j;
    int x = i, y = j;
    while (depth[x] > depth[y]) {
        up_i.push_back(x);
        x = parent[x];
    }
    while (depth[y] > depth[x]) {
        up_j.push_back(y);
        y = parent[y];
    }
    while (x != y) {
        up_i.push_back(x);
        up_j.push_back(y);
        x = parent[x];
        y = parent[y];
    }
    std::vector<int> cycle(up_i);
    cycle.push_back(x);
    cycle.insert(cycle.end(), up_j.rbegin(), up_j.rend());

    auto smallest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), smallest, cycle.end());
    if (cycle.size() > 2 && cycle[1] > cycle.back())
        std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

} // namespace

Symmetrization symmetrize(const SquareMatrix& a, double tol) {
    require_rgcm(a);
    const int n = static_cast<int>(a.size());

    // Breadth-first spanning tree from vertex 0; d[0] = 1 and
    // d[j] = d[i] * a_ji / a_ij along tree edges (ratios of same-sign pairs).
    std::vector<double> d(n, 0.0);
    std::vector<int> parent(n, -1), depth(n, 0), order;
    d[0] = 1.0;
    std::deque<int> queue{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (int w = 0; w < n; ++w) {
            if (seen[w] || a(v, w) == 0.0 || v == w)
                continue;
            seen[w] = true;
            parent[w] = v;
            depth[w] = depth[v] + 1;
            d[w] = d[v] * a(w, v) / a(v, w);
            queue.push_back(w);
        }
    }

    Symmetrization result;
    // Every non-tree edge must agree with the propagated scaling.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (a(i, j) == 0.0 || parent[j] == i || parent[i] == j)
                continue;
            const double bij = a(i, j) / d[i];
            const double bji = a(j, i) / d[j];
            const double scale = std::max({1.0, std::abs(bij), std::abs(bji)});
            if (std::abs(bij - bji) <= tol * scale)
                continue;

            result.symmetrizable = false;
            result.cycle = fundamental_cycle(parent, depth, i, j);
            double fwd = 1.0, bwd = 1.0;
            const auto& c = result.cycle;
            for (std::size_t k = 0; k < c.size(); ++k) {
                int from = c[k], to = c[(k + 1) % c.size()];
                fwd *= a(from, to);
                bwd *= a(to, from);
            }
            result.forward_product = fwd;
            result.backward_product = bwd;
            return result;
        }
    }

    result.symmetrizable = true;
    result.d = d;
    SquareMatrix b(n);
    for (int i = 0; i < n; ++i) {
        b(i, i) = a(i, i) / d[i];
        for (int j = i + 1; j < n; ++j) {
            // Average the two scaled entries; symmetry becomes bit-exact.
            const double v = 0.5 * (a(i, j) / d[i] + a(j, i) / d[j]);
            b(i, j) = v;
            b(j, i) = v;
        }
    }
    result.b = std::move(b);
    return result;
}

namespace {

// Largest eigenvalue of the symmetric matrix m by power iteration with
// Rayleigh-quotient estimates.  Start vector slightly detuned from all-ones
// so it is not orthogonal to the dominant eigenvector.
double dominant_symmetric_eigenvalue(const SquareMatrix& m, double residual_tol,
                                     int max_iter) {
    const std::size_t n = m.size();
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = 1.0 + 1e-3 * static_cast<double>(i % 7);

    double theta = 0.0;
    for (int iter = 0; iter < max_iter; ++iter) {
        double norm = 0.0;
        for (double x : v)
            norm += x * x;
        norm = std::sqrt(norm);
        if (!(norm > 0.0))
            return 0.0;
        for (double& x : v)
            x /= norm;

        std::vector<double> mv = m.apply(v);
        theta = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            theta += v[i] * mv[i];
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = mv[i] - theta * v[i];
            res += r * r;
        }
        if (std::sqrt(res) <= residual_tol)
            return theta;
        v = std::move(mv);
    }
    return theta;   // best estimate; callers use a coarse tolerance
}

} // namespace

RemarkReport remark_definiteness(const SquareMatrix& a, double tol) {
    Symmetrization sym = symmetrize(a, tol);
    Classification cls = classify(a, tol);

    RemarkReport report;
    report.applicable = sym.symmetrizable && cls.verdict != Verdict::Indefinite;
    if (!report.applicable)
        return report;

    const SquareMatrix& b = *sym.b;
    const std::size_t n = b.size();
    const double bnorm = b.inf_norm();
    const double eig_tol = 1e-8 * std::max(1.0, bnorm);

    // Shifted power iteration on c*I - B targets c - lambda_min(B).
    const double c = bnorm + 1.0;
    SquareMatrix shifted(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            shifted(i, j) = (i == j ? c : 0.0) - b(i, j);
    const int max_iter = 500 * static_cast<int>(n) + 5000;
    report.min_eigenvalue =
        c - dominant_symmetric_eigenvalue(shifted, 0.05 * eig_tol, max_iter);

    // Sylvester: all leading minors positive means positive definite.
    const double minor_tol = 1e-9 * b.max_abs();
    bool sylvester = true;
    for (std::size_t k = 1; k <= n && sylvester; ++k) {
        std::vector<int> s(k);
        for (std::size_t i = 0; i < k; ++i)
            s[i] = static_cast<int>(i);
        sylvester = determinant(principal_submatrix(b, s)) > minor_tol;
    }

    if (sylvester && report.min_eigenvalue > -eig_tol)
        report.definite = Definiteness::PositiveDefinite;
    else if (report.min_eigenvalue >= -eig_tol)
        report.definite = Definiteness::PositiveSemiDefinite;
    else
        report.definite = Definiteness::Other;
    return report;
}

} // namespace rgcm
