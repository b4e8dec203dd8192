#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cellres/rational.hpp"

namespace cellres {

// Dense matrix over the rationals, used for field-coefficient homology and
// for the linear systems behind the chain-map solver. Sizes here are tiny
// (complexes have tens of cells), so dense exact elimination is fine.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    // Rank over Q, or over Z/p after reduction.
    std::size_t rank(const FieldSpec& field) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Sparse linear system over the coefficient field: each row is a constraint
// sum(coef * x_var) = rhs. Returns the solution with free variables set to
// zero under left-to-right column pivoting, or nullopt when inconsistent.
// Over Z/p the returned values are the canonical integer representatives.
std::optional<std::vector<Rational>> solve_min_support(
    const std::vector<std::map<std::size_t, Rational>>& rows,
    const std::vector<Rational>& rhs, std::size_t nvars, const FieldSpec& field);

}  // namespace cellres
