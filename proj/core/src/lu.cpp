#include "rgcm/lu.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rgcm/errors.hpp"

namespace rgcm {

LUFactors lu_factor(const SquareMatrix& a) {
    const std::size_t n = a.size();
    LUFactors f{a, std::vector<int>(n), 1, false,
                static_cast<double>(n) * std::numeric_limits<double>::epsilon() * a.max_abs()};
    std::iota(f.perm.begin(), f.perm.end(), 0);

    for (std::size_t k = 0; k < n; ++k) {
        // Partial pivoting: largest magnitude in column k at or below row k.
        std::size_t piv = k;
        double best = std::abs(f.lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            double v = std::abs(f.lu(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best <= f.pivot_threshold) {
            f.singular = true;
            return f;
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(f.lu(k, j), f.lu(piv, j));
            std::swap(f.perm[k], f.perm[piv]);
            f.parity = -f.parity;
        }
        const double d = f.lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = f.lu(i, k) / d;
            f.lu(i, k) = m;
            for (std::size_t j = k + 1; j < n; ++j)
                f.lu(i, j) -= m * f.lu(k, j);
        }
    }
    return f;
}

double determinant(const LUFactors& f) {
    if (f.singular)
        return 0.0;
    double det = f.parity;
    for (std::size_t i = 0; i < f.lu.size(); ++i)
        det *= f.lu(i, i);
    return det;
}

double determinant(const SquareMatrix& a) {
    return determinant(lu_factor(a));
}

std::vector<double> lu_solve(const LUFactors& f, std::span<const double> b) {
    const std::size_t n = f.lu.size();
    if (b.size() != n)
        throw std::invalid_argument("lu_solve: vector length mismatch");
    if (f.singular)
        throw SingularError();

    // Permuted right-hand side, then forward and back substitution.
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[f.perm[i]];
    for (std::size_t i = 1; i < n; ++i) {
        double acc = x[i];
        for (std::size_t j = 0; j < i; ++j)
            acc -= f.lu(i, j) * x[j];
        x[i] = acc;
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double acc = x[ii];
        for (std::size_t j = ii + 1; j < n; ++j)
            acc -= f.lu(ii, j) * x[j];
        x[ii] = acc / f.lu(ii, ii);
    }
    return x;
}

std::vector<double> solve(const SquareMatrix& a, std::span<const double> b) {
    return lu_solve(lu_factor(a), b);
}

SquareMatrix invert(const SquareMatrix& a) {
    const std::size_t n = a.size();
    LUFactors f = lu_factor(a);
    if (f.singular)
        throw SingularError();
    SquareMatrix inv(n);
    std::vector<double> e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        std::vector<double> col = lu_solve(f, e);
        e[j] = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            inv(i, j) = col[i];
    }
    return inv;
}

} // namespace rgcm
