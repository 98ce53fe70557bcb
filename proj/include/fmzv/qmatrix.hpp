#ifndef FMZV_QMATRIX_HPP
#define FMZV_QMATRIX_HPP

#include "fmzv/arith.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace fmzv {

using QVector = std::vector<Rational>;

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    QVector row(std::size_t i) const;
    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    std::string to_csv() const;
    // JSON array of arrays of rational strings.
    std::string to_json() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Fraction-free Bareiss on the column-scaled integer matrix.
Rational det_exact(const QMatrix& m);

struct RankKernel {
    std::size_t rank = 0;
    std::vector<QVector> kernel;  // first nonzero entry of each vector is 1
};

RankKernel rank_and_kernel(const QMatrix& m);

// True iff nu_2(a_ij) >= 1 below the diagonal and nu_2(a_jj) <= 0 is the minimum of column j.
bool two_adic_certificate(const QMatrix& m);

// Incrementally maintained reduced row echelon form over a fixed column count.
// Pivot rows are normalized to 1 and eliminated from all other rows.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    // Returns true when the vector enlarged the span.
    bool insert(QVector v);
    // Remainder of v modulo the span; supported on non-pivot columns.
    QVector reduce(QVector v) const;
    bool in_span(const QVector& v) const;

    const std::vector<std::size_t>& pivots() const { return pivots_; }
    // Rows sorted by pivot column.
    std::vector<QVector> sorted_rows() const;
    bool is_pivot(std::size_t col) const { return pivot_of_col_[col] >= 0; }

private:
    std::size_t cols_;
    std::vector<QVector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<long> pivot_of_col_ = std::vector<long>(cols_, -1);
};

bool is_zero(const QVector& v);

}  // namespace fmzv

#endif
