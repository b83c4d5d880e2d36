#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylfact/rational.hpp"

namespace weylfact {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::size_t rank(const Matrix& m);

/// Determinant of a square matrix by exact elimination.
Rational determinant(const Matrix& m);

struct LinearSolution {
    std::vector<Rational> x;
    std::size_t rank = 0;
};

struct InconsistentSystem {
    std::size_t rank = 0;
    /// Reduced right-hand side entries left on rows with no pivot.
    std::vector<Rational> residual;
};

/// Solves m x = rhs by Gauss-Jordan elimination, taking pivots in increasing
/// column order and setting every free variable to zero. The pivot choice is
/// a pure function of the input, so the solution is reproducible.
///
/// Returns the solution, or fills `failure` and returns nullopt when the
/// system is inconsistent.
std::optional<LinearSolution> solve_smallest_pivot(const Matrix& m, const std::vector<Rational>& rhs,
                                                   InconsistentSystem* failure = nullptr);

}  // namespace weylfact
