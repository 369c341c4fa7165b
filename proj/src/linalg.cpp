#include "sghilb/linalg.hpp"

#include <algorithm>
#include <limits>

namespace sghilb {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Scale a rational row to coprime integers; sign of the first nonzero entry
// becomes positive. Returns false when the row is zero.
bool primitivize(std::vector<mpq_class>& row) {
    mpz_class num_gcd = 0, den_lcm = 1;
    std::size_t first = npos;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == 0) continue;
        if (first == npos) first = i;
        mpz_class n = row[i].get_num(), d = row[i].get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    if (first == npos) return false;
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    if (row[first] < 0) content = -content;
    for (auto& x : row) x /= content;
    return true;
}

}  // namespace

std::size_t RowSpace::reduce(std::vector<mpq_class>& row) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (row[p] == 0) continue;
        mpq_class f = row[p] / rows_[k][p];
        for (std::size_t c = p; c < cols_; ++c)
            if (rows_[k][c] != 0) row[c] -= f * rows_[k][c];
    }
    for (std::size_t c = 0; c < cols_; ++c)
        if (row[c] != 0) return c;
    return npos;
}

bool RowSpace::add(std::vector<mpq_class> row) {
    if (row.size() != cols_) throw std::invalid_argument("RowSpace: row length");
    std::size_t p = reduce(row);
    if (p == npos) return false;
    primitivize(row);
    // keep rows ordered by pivot column so reduce() sweeps left to right
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(row));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

bool RowSpace::independent(std::vector<mpq_class> row) const {
    if (row.size() != cols_) throw std::invalid_argument("RowSpace: row length");
    return reduce(row) != npos;
}

std::size_t QMatrix::rank() const {
    RowSpace space(cols_);
    std::vector<mpq_class> row(cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) row[c] = at(r, c);
        space.add(row);
    }
    return space.dimension();
}

mpq_class QMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("QMatrix: determinant of non-square");
    QMatrix a = *this;
    const std::size_t n = rows_;
    mpq_class det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = npos;
        for (std::size_t r = col; r < n; ++r)
            if (a.at(r, col) != 0) { piv = r; break; }
        if (piv == npos) return 0;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(piv, c), a.at(col, c));
            det = -det;
        }
        det *= a.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a.at(r, col) == 0) continue;
            mpq_class f = a.at(r, col) / a.at(col, col);
            for (std::size_t c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
        }
    }
    return det;
}

QMatrix QMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("QMatrix: inverse of non-square");
    const std::size_t n = rows_;
    QMatrix a = *this;
    QMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = npos;
        for (std::size_t r = col; r < n; ++r)
            if (a.at(r, col) != 0) { piv = r; break; }
        if (piv == npos) throw std::domain_error("QMatrix: singular matrix");
        if (piv != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a.at(piv, c), a.at(col, c));
                std::swap(inv.at(piv, c), inv.at(col, c));
            }
        mpq_class d = a.at(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            a.at(col, c) /= d;
            inv.at(col, c) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0) continue;
            mpq_class f = a.at(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                a.at(r, c) -= f * a.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

}  // namespace sghilb
