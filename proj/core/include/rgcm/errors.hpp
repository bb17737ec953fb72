#ifndef RGCM_ERRORS_HPP
#define RGCM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rgcm {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A pivot fell below the singularity threshold.
class SingularError : public Error {
public:
    explicit SingularError(const std::string& msg = "matrix is numerically singular")
        : Error(msg) {}
};

// Iterative procedure could not reach the requested accuracy.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

// Bad index set (empty, out of range).
class IndexError : public Error {
public:
    explicit IndexError(const std::string& msg) : Error(msg) {}
};

// Requested operation has no defined result for this input.
class NotApplicableError : public Error {
public:
    explicit NotApplicableError(const std::string& msg) : Error(msg) {}
};

// Exhaustive enumeration refused: dimension exceeds the configured cap.
class DimensionTooLargeError : public Error {
public:
    DimensionTooLargeError(std::size_t n, int cap)
        : Error("dimension " + std::to_string(n) + " exceeds exhaustive cap "
                + std::to_string(cap)),
          n(n), cap(cap) {}
    std::size_t n;
    int cap;
};

// Rejection sampling gave up.
class AttemptsExhaustedError : public Error {
public:
    explicit AttemptsExhaustedError(const std::string& msg) : Error(msg) {}
};

// Generator parameters are invalid or unsatisfiable.
class InfeasibleSpecError : public Error {
public:
    explicit InfeasibleSpecError(const std::string& msg) : Error(msg) {}
};

// Entry count does not match the declared or inferred dimension.
class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& msg) : Error(msg) {}
};

// Zero-pattern symmetry fails, so the support graph is ill-defined.
class PatternAsymmetricError : public Error {
public:
    explicit PatternAsymmetricError(const std::string& msg) : Error(msg) {}
};

} // namespace rgcm

#endif
