#pragma once

#include "tautext/numeric.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace tautext {

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

using SparseRow = std::map<std::size_t, Rational>;

/// Rank over Q by Gaussian elimination on sparse rows.
std::size_t rank(std::vector<SparseRow> rows);
std::size_t rank(const RationalMatrix& m);

}  // namespace tautext
