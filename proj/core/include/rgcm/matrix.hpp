#ifndef RGCM_MATRIX_HPP
#define RGCM_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace rgcm {

/// Dense real n-by-n matrix, row-major storage.
///
/// Construction enforces n >= 1 and that every entry is finite; instances
/// are value types and safe to share across threads once built.
class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t n);
    SquareMatrix(std::size_t n, std::vector<double> entries);
    SquareMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static SquareMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    const std::vector<double>& data() const { return a_; }

    SquareMatrix transposed() const;

    /// A + d*I.
    SquareMatrix shifted(double d) const;

    /// Largest entry magnitude.
    double max_abs() const;

    /// Row-sum norm, max_i sum_j |a_ij|.
    double inf_norm() const;

    /// Matrix-vector product A*x; x.size() must equal size().
    std::vector<double> apply(std::span<const double> x) const;

    bool operator==(const SquareMatrix&) const = default;

private:
    std::size_t n_;
    std::vector<double> a_;
};

/// Max-magnitude norm of a vector.
double inf_norm(std::span<const double> v);

} // namespace rgcm

#endif
