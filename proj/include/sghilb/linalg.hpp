#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sghilb {

// Dense exact-rational matrix with just the operations the tangent-space and
// span computations need: rank, determinant, inverse. Elimination normalizes
// every touched row to primitive integer form so coefficient growth stays the
// growth of the underlying minors, never compounded by fractions.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, mpq_class(0)) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpq_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpq_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_row(const std::vector<mpq_class>& row) {
        if (row.size() != cols_) throw std::invalid_argument("QMatrix: row length");
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    std::size_t rank() const;
    std::size_t kernel_dimension() const { return cols_ - rank(); }
    mpq_class determinant() const;
    QMatrix inverse() const;  // throws std::domain_error when singular

private:
    std::size_t rows_, cols_;
    std::vector<mpq_class> data_;
};

// Incremental row-space tracker: feed candidate rows, learn which ones enlarge
// the span. Rows are kept in echelon form with primitive integer entries.
class RowSpace {
public:
    explicit RowSpace(std::size_t cols) : cols_(cols) {}

    std::size_t dimension() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    // Returns true when the row was independent of the current span (and was added).
    bool add(std::vector<mpq_class> row);

    // Would add() accept this row? (No state change.)
    bool independent(std::vector<mpq_class> row) const;
    bool contains(std::vector<mpq_class> row) const { return !independent(std::move(row)); }

private:
    // Reduce row against the echelon rows; returns pivot column or npos when zero.
    std::size_t reduce(std::vector<mpq_class>& row) const;

    std::size_t cols_;
    std::vector<std::vector<mpq_class>> rows_;   // echelon rows, primitive integer
    std::vector<std::size_t> pivots_;            // pivot column of each row
};

}  // namespace sghilb
