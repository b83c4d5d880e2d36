#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylfact/rational.hpp"

namespace weylfact {

/// Mathematical failure on valid input (resonance, obstruction, bad split).
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The homological equation at weight `gamma` has no solution.
class HomologicalObstruction : public MathError {
public:
    HomologicalObstruction(Rational gamma, std::size_t rank, std::size_t rows, std::vector<Rational> residual);

    const Rational& gamma() const { return gamma_; }
    std::size_t rank() const { return rank_; }
    std::size_t rows() const { return rows_; }
    const std::vector<Rational>& residual() const { return residual_; }

private:
    Rational gamma_;
    std::size_t rank_;
    std::size_t rows_;
    std::vector<Rational> residual_;
};

/// A requested characteristic split is refused (common roots or mismatch).
class SplitError : public MathError {
public:
    using MathError::MathError;
};

}  // namespace weylfact
