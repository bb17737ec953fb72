#include "rgcm/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "rgcm/types.hpp"

namespace rgcm {

namespace {

void check_entries(std::size_t n, const std::vector<double>& a) {
    if (n == 0)
        throw std::invalid_argument("SquareMatrix: dimension must be >= 1");
    if (a.size() != n * n)
        throw std::invalid_argument("SquareMatrix: expected n*n entries");
    for (double x : a)
        if (!std::isfinite(x))
            throw std::invalid_argument("SquareMatrix: entries must be finite");
}

} // namespace

SquareMatrix::SquareMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {
    if (n == 0)
        throw std::invalid_argument("SquareMatrix: dimension must be >= 1");
}

SquareMatrix::SquareMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), a_(std::move(entries)) {
    check_entries(n_, a_);
}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : n_(rows.size()) {
    a_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_)
            throw std::invalid_argument("SquareMatrix: ragged initializer");
        a_.insert(a_.end(), row.begin(), row.end());
    }
    check_entries(n_, a_);
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

SquareMatrix SquareMatrix::transposed() const {
    SquareMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

SquareMatrix SquareMatrix::shifted(double d) const {
    SquareMatrix m(*this);
    for (std::size_t i = 0; i < n_; ++i)
        m(i, i) += d;
    return m;
}

double SquareMatrix::max_abs() const {
    double m = 0.0;
    for (double x : a_)
        m = std::max(m, std::abs(x));
    return m;
}

double SquareMatrix::inf_norm() const {
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n_; ++j)
            row += std::abs((*this)(i, j));
        m = std::max(m, row);
    }
    return m;
}

std::vector<double> SquareMatrix::apply(std::span<const double> x) const {
    if (x.size() != n_)
        throw std::invalid_argument("apply: vector length mismatch");
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n_; ++j)
            acc += (*this)(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

double inf_norm(std::span<const double> v) {
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Finite: return "finite";
    case Verdict::Affine: return "affine";
    case Verdict::Indefinite: return "indefinite";
    }
    return "?";
}

} // namespace rgcm
