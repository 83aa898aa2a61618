#include "series_matrix.hpp"

#include <algorithm>
#include <limits>

#include "errors.hpp"

namespace tmirror {

SeriesMatrix::SeriesMatrix(std::size_t rows, std::size_t cols, Exponent truncation)
    : rows_(rows), cols_(cols), entries_(rows * cols, LaurentSeries::zero(truncation))
{
}

SeriesMatrix SeriesMatrix::without_column(std::size_t col) const
{
    if (col >= cols_) {
        throw InvalidArgument("column index out of range");
    }
    SeriesMatrix out(rows_, cols_ - 1, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0, k = 0; c < cols_; ++c) {
            if (c != col) {
                out(r, k++) = (*this)(r, c);
            }
        }
    }
    return out;
}

void SeriesMatrix::swap_rows(std::size_t a, std::size_t b)
{
    for (std::size_t c = 0; c < cols_; ++c) {
        std::swap((*this)(a, c), (*this)(b, c));
    }
}

Exponent SeriesMatrix::truncation() const
{
    Exponent t = std::numeric_limits<Exponent>::max();
    for (const auto& e : entries_) {
        t = std::min(t, e.truncation());
    }
    return t;
}

LaurentSeries determinant(SeriesMatrix m)
{
    const std::size_t n = m.rows();
    if (n != m.cols()) {
        throw InvalidArgument("determinant of a non-square matrix");
    }
    if (n == 0) {
        return LaurentSeries::one(std::numeric_limits<Exponent>::max() / 4);
    }

    bool negate = false;
    std::vector<LaurentSeries> pivots;
    pivots.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = n;
        for (std::size_t r = c; r < n; ++r) {
            if (!m(r, c).is_zero() && (best == n || m(r, c).valuation() < m(best, c).valuation())) {
                best = r;
            }
        }
        if (best == n) {
            // Remaining minor vanishes to known precision; bound its valuation.
            Exponent bound = 0;
            for (const auto& p : pivots) {
                bound += p.valuation();
            }
            for (std::size_t cc = c; cc < n; ++cc) {
                Exponent least = std::numeric_limits<Exponent>::max();
                for (std::size_t r = c; r < n; ++r) {
                    least = std::min(least, m(r, cc).valuation());
                }
                bound += least;
            }
            return LaurentSeries::zero(bound);
        }
        if (best != c) {
            m.swap_rows(best, c);
            negate = !negate;
        }
        const LaurentSeries pivot_inv = inverse(m(c, c));
        for (std::size_t r = c + 1; r < n; ++r) {
            // Zero-to-precision entries still take part: their error term
            // bounds the precision of the update.
            const LaurentSeries factor = m(r, c) * pivot_inv;
            for (std::size_t cc = c + 1; cc < n; ++cc) {
                m(r, cc) -= factor * m(c, cc);
            }
        }
        pivots.push_back(m(c, c));
    }

    LaurentSeries det = pivots.front();
    for (std::size_t i = 1; i < pivots.size(); ++i) {
        det = det * pivots[i];
    }
    return negate ? -det : det;
}

LaurentSeries signed_minor(const SeriesMatrix& m, std::size_t col)
{
    if (m.cols() != m.rows() + 1) {
        throw InvalidArgument("signed minors need an n x (n+1) matrix");
    }
    LaurentSeries d = determinant(m.without_column(col));
    return (col % 2 == 0) ? d : -d;
}

std::vector<LaurentSeries> multiply(const SeriesMatrix& m, const std::vector<LaurentSeries>& v)
{
    if (v.size() != m.cols()) {
        throw InvalidArgument("dimension mismatch in matrix-vector product");
    }
    std::vector<LaurentSeries> out;
    out.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        LaurentSeries acc = m(r, 0) * v[0];
        for (std::size_t c = 1; c < m.cols(); ++c) {
            acc += m(r, c) * v[c];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

} // namespace tmirror
