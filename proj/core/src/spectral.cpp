#include "rgcm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rgcm/structure.hpp"

namespace rgcm {

NoConvergenceError::NoConvergenceError(int max_iter, PerronPair p)
    : NumericalError("power iteration did not converge within " +
                     std::to_string(max_iter) + " iterations (bracket width " +
                     std::to_string(p.residual) + ")"),
      best(std::move(p)) {}

SplitResult comparison_split(const SquareMatrix& a) {
    require_rgcm(a);
    const std::size_t n = a.size();
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        max_diag = std::max(max_diag, a(i, i));
    const double s = 1.0 + max_diag;   // keeps diag(B) >= 1, so B is primitive

    SquareMatrix b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            b(i, j) = (i == j ? s : 0.0) - a(i, j);
    return {s, b};
}

PerronPair perron(const SquareMatrix& b, double tol, int max_iter) {
    const std::size_t n = b.size();
    for (double x : b.data())
        if (x < 0.0)
            throw std::invalid_argument("perron: matrix must be entrywise nonnegative");
    if (max_iter <= 0)
        max_iter = 100 * static_cast<int>(n) + 1000;

    std::vector<double> u(n, 1.0);
    PerronPair best;
    best.residual = std::numeric_limits<double>::infinity();

    for (int iter = 1; iter <= max_iter; ++iter) {
        std::vector<double> v = b.apply(u);
        // Collatz-Wielandt bracket: rho lies between the extreme quotients.
        double qmin = std::numeric_limits<double>::infinity();
        double qmax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double q = v[i] / u[i];
            qmin = std::min(qmin, q);
            qmax = std::max(qmax, q);
        }
        const double width = qmax - qmin;
        if (width < best.residual) {
            best.rho = 0.5 * (qmin + qmax);
            best.u = u;
            best.iterations = iter;
            best.residual = width;
        }
        if (width <= tol) {
            PerronPair out;
            out.rho = 0.5 * (qmin + qmax);
            out.iterations = iter;
            const double scale = inf_norm(u);
            out.u = std::move(u);
            for (double& x : out.u)
                x /= scale;
            std::vector<double> r = b.apply(out.u);
            double res = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                res = std::max(res, std::abs(r[i] - out.rho * out.u[i]));
            out.residual = res;
            return out;
        }
        const double scale = inf_norm(v);
        if (!(scale > 0.0))
            throw NumericalError("perron: iterate collapsed to zero");
        for (std::size_t i = 0; i < n; ++i)
            v[i] /= scale;
        u = std::move(v);
    }
    throw NoConvergenceError(max_iter, std::move(best));
}

namespace {

// Perron tolerance an order below the affine band so bracket error cannot
// flip a verdict.
double band_width(double tol, double s) {
    return tol * std::max(1.0, std::abs(s));
}

} // namespace

Classification classify(const SquareMatrix& a, double tol) {
    auto [s, b] = comparison_split(a);
    const double band = band_width(tol, s);
    PerronPair p = perron(b, 0.125 * band);

    Classification c;
    c.s = s;
    c.rho = p.rho;
    c.margin = s - p.rho;
    c.certificate = std::move(p.u);
    c.tolerance_used = band;
    c.verdict = c.margin > band    ? Verdict::Finite
                : c.margin < -band ? Verdict::Indefinite
                                   : Verdict::Affine;
    return c;
}

ShiftResult critical_shift(const SquareMatrix& a, double tol) {
    auto [s, b] = comparison_split(a);
    PerronPair p = perron(b, 0.125 * band_width(tol, s));

    ShiftResult r;
    r.d = p.rho - s;
    r.affine_certificate = std::move(p.u);
    // (A + dI) u = rho*u - B*u, so the residual is the Perron residual.
    std::vector<double> bu = b.apply(r.affine_certificate);
    double res = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        res = std::max(res, std::abs(p.rho * r.affine_certificate[i] - bu[i]));
    r.residual = res;
    return r;
}

bool verify_certificate(const SquareMatrix& a, std::span<const double> u,
                        Verdict verdict, double tol) {
    if (u.size() != a.size())
        throw std::invalid_argument("verify_certificate: vector length mismatch");
    for (double x : u)
        if (!(x > 0.0))
            return false;

    std::vector<double> un(u.begin(), u.end());
    const double scale = inf_norm(un);
    for (double& x : un)
        x /= scale;
    const std::vector<double> y = a.apply(un);
    const double threshold = tol * (1.0 + a.inf_norm());

    switch (verdict) {
    case Verdict::Finite: {
        // Quotient form keeps the test meaningful for tiny components.
        for (std::size_t i = 0; i < un.size(); ++i)
            if (y[i] / un[i] <= threshold)
                return false;
        return true;
    }
    case Verdict::Affine:
        return inf_norm(y) <= threshold;
    case Verdict::Indefinite: {
        for (std::size_t i = 0; i < un.size(); ++i)
            if (y[i] / un[i] >= -threshold)
                return false;
        return true;
    }
    }
    return false;
}

} // namespace rgcm
