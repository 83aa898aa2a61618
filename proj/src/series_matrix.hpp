#pragma once

#include <cstddef>
#include <vector>

#include "series.hpp"

namespace tmirror {

// Dense row-major matrix of series.
class SeriesMatrix {
public:
    SeriesMatrix() = default;
    // Every entry starts as the zero series known below `truncation`.
    SeriesMatrix(std::size_t rows, std::size_t cols, Exponent truncation);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    LaurentSeries& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const LaurentSeries& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    SeriesMatrix without_column(std::size_t col) const;
    void swap_rows(std::size_t a, std::size_t b);

    // Smallest entry truncation.
    Exponent truncation() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<LaurentSeries> entries_;
};

// Determinant of a square matrix over the series field, by Gaussian
// elimination choosing the pivot of least valuation in each column.
//
// If a column of the remaining Schur complement is zero to known precision
// the result is the zero series, known up to the valuation lower bound
// (sum of pivot valuations plus, per remaining column, the least entry
// valuation; zero entries count at their truncation).
LaurentSeries determinant(SeriesMatrix m);

// (-1)^col * det(m without column col), for an n x (n+1) matrix.
LaurentSeries signed_minor(const SeriesMatrix& m, std::size_t col);

// Product m * v with v a column of series.
std::vector<LaurentSeries> multiply(const SeriesMatrix& m, const std::vector<LaurentSeries>& v);

} // namespace tmirror
