#ifndef RGCM_SPECTRAL_HPP
#define RGCM_SPECTRAL_HPP

#include <span>
#include <vector>

#include "rgcm/errors.hpp"
#include "rgcm/matrix.hpp"
#include "rgcm/types.hpp"

namespace rgcm {

// Classification works through the comparison split A = s*I - B with
// B >= 0 entrywise and irreducible.  The sign of s - rho(B) decides the
// trichotomy, and the Perron vector of B certifies it: A u = (s - rho) u.

/// Perron approximation of a nonnegative irreducible matrix with positive
/// diagonal.  u > 0 componentwise with ||u||_inf = 1.
struct PerronPair {
    double rho = 0.0;
    std::vector<double> u;
    int iterations = 0;
    double residual = 0.0;   // ||B u - rho u||_inf
};

class NoConvergenceError : public NumericalError {
public:
    NoConvergenceError(int max_iter, PerronPair best);
    PerronPair best;
};

struct SplitResult {
    double s;
    SquareMatrix b;
};

struct Classification {
    Verdict verdict;
    double margin;                    // s - rho; sign determines the verdict
    std::vector<double> certificate;  // Perron u, A u = margin * u
    double tolerance_used;            // absolute affine band
    double rho;
    double s;
};

struct ShiftResult {
    double d;                              // unique shift making A + dI affine
    std::vector<double> affine_certificate;
    double residual;                       // ||(A + dI) u||_inf
};

/// s = 1 + max(0, max diagonal entry), B = s*I - A.  Throws NotRgcmError.
SplitResult comparison_split(const SquareMatrix& a);

/// Power iteration from the all-ones vector with inf-norm normalization.
/// rho is bracketed by the Collatz-Wielandt quotients min_i (Bu)_i/u_i and
/// max_i (Bu)_i/u_i; converged when the bracket width is <= tol.
/// max_iter <= 0 selects the default 100*n + 1000.  On failure throws
/// NoConvergenceError carrying the best iterate.
PerronPair perron(const SquareMatrix& b, double tol = 1e-10, int max_iter = 0);

/// Vinberg trichotomy with certificate.  The verdict is banded:
/// |margin| <= tol * max(1, |s|) reads as Affine.
Classification classify(const SquareMatrix& a, double tol = 1e-9);

/// The unique d with A + dI of affine type: d = rho(B) - s.
ShiftResult critical_shift(const SquareMatrix& a, double tol = 1e-9);

/// True iff u > 0 and A u matches the verdict's sign componentwise.
/// u is normalized to unit inf-norm first; Finite/Indefinite are judged on
/// the quotients (Au)_i / u_i against +-tol*(1 + ||A||_inf), Affine on
/// |(Au)_i| against the same threshold.
bool verify_certificate(const SquareMatrix& a, std::span<const double> u,
                        Verdict verdict, double tol = 1e-9);

} // namespace rgcm

#endif
