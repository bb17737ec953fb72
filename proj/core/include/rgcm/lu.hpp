#ifndef RGCM_LU_HPP
#define RGCM_LU_HPP

#include <span>
#include <vector>

#include "rgcm/matrix.hpp"

namespace rgcm {

/// Row-pivoted LU factorization, L and U packed into one matrix
/// (unit diagonal of L implied).  A pivot p counts as singular when
/// |p| <= n * eps * max_abs(A); the factorization stops there and
/// `singular` is set.
struct LUFactors {
    SquareMatrix lu;
    std::vector<int> perm;     // perm[k] = source row of pivot step k
    int parity;                // sign of the row permutation
    bool singular;
    double pivot_threshold;
};

LUFactors lu_factor(const SquareMatrix& a);

/// det(A) via pivoted elimination.  Returns exactly 0.0 when a pivot
/// falls below the singularity threshold; total otherwise.
double determinant(const SquareMatrix& a);
double determinant(const LUFactors& f);

/// Solve A x = b with a precomputed factorization.  Throws SingularError.
std::vector<double> lu_solve(const LUFactors& f, std::span<const double> b);

/// Solve A x = b.  Throws SingularError.
std::vector<double> solve(const SquareMatrix& a, std::span<const double> b);

/// A^{-1} by n solves against identity columns.  Throws SingularError.
SquareMatrix invert(const SquareMatrix& a);

} // namespace rgcm

#endif
