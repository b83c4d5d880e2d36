#include "weylfact/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace weylfact {

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            os << (c ? " " : "") << (*this)(r, c);
        }
        os << "]\n";
    }
    return os.str();
}

namespace {

// In-place row reduction; returns pivot columns in order. Optionally tracks an
// extra right-hand column and the determinant sign/scale.
struct Reduction {
    std::vector<std::size_t> pivot_cols;
    Rational det_factor = 1;
};

Reduction reduce(Matrix& a, std::vector<Rational>* rhs) {
    Reduction red;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == a.rows()) {
            continue;
        }
        if (pivot != row) {
            for (std::size_t c = 0; c < a.cols(); ++c) {
                std::swap(a(pivot, c), a(row, c));
            }
            if (rhs) std::swap((*rhs)[pivot], (*rhs)[row]);
            red.det_factor = -red.det_factor;
        }
        const Rational inv = a(row, col).inverse();
        red.det_factor *= a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c) {
            a(row, c) *= inv;
        }
        if (rhs) (*rhs)[row] *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            const Rational f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) {
                if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
            }
            if (rhs) (*rhs)[r] -= f * (*rhs)[row];
        }
        red.pivot_cols.push_back(col);
        ++row;
    }
    return red;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    Matrix a = m;
    return reduce(a, nullptr).pivot_cols.size();
}

Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    Matrix a = m;
    auto red = reduce(a, nullptr);
    if (red.pivot_cols.size() < m.rows()) {
        return Rational(0);
    }
    return red.det_factor;
}

std::optional<LinearSolution> solve_smallest_pivot(const Matrix& m, const std::vector<Rational>& rhs,
                                                   InconsistentSystem* failure) {
    if (rhs.size() != m.rows()) {
        throw std::invalid_argument("right-hand side size mismatch");
    }
    Matrix a = m;
    std::vector<Rational> b = rhs;
    auto red = reduce(a, &b);
    const std::size_t r = red.pivot_cols.size();
    std::vector<Rational> leftover;
    bool consistent = true;
    for (std::size_t row = r; row < m.rows(); ++row) {
        leftover.push_back(b[row]);
        if (!b[row].is_zero()) consistent = false;
    }
    if (!consistent) {
        if (failure) {
            failure->rank = r;
            failure->residual = std::move(leftover);
        }
        return std::nullopt;
    }
    LinearSolution sol;
    sol.rank = r;
    sol.x.assign(m.cols(), Rational(0));
    for (std::size_t k = 0; k < r; ++k) {
        sol.x[red.pivot_cols[k]] = b[k];
    }
    return sol;
}

}  // namespace weylfact
