#include "sghilb/ideal.hpp"

#include "sghilb/linalg.hpp"

namespace sghilb {

CoordinateChange::CoordinateChange(int num_vars, std::vector<mpq_class> entries_row_major)
    : n_(num_vars), m_(std::move(entries_row_major)) {
    if (n_ < 1 || n_ > kMaxVars)
        throw std::invalid_argument("CoordinateChange: bad variable count");
    if (m_.size() != static_cast<std::size_t>(n_) * n_)
        throw std::invalid_argument("CoordinateChange: entry count mismatch");
}

CoordinateChange CoordinateChange::identity(int num_vars) {
    std::vector<mpq_class> e(static_cast<std::size_t>(num_vars) * num_vars, mpq_class(0));
    for (int i = 0; i < num_vars; ++i) e[i * num_vars + i] = 1;
    return CoordinateChange(num_vars, std::move(e));
}

mpq_class CoordinateChange::determinant() const {
    QMatrix m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = entry(i, j);
    return m.determinant();
}

CoordinateChange CoordinateChange::inverse() const {
    QMatrix m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = entry(i, j);
    QMatrix inv = m.inverse();
    std::vector<mpq_class> e;
    e.reserve(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) e.push_back(inv.at(i, j));
    return CoordinateChange(n_, std::move(e));
}

CoordinateChange CoordinateChange::compose(const CoordinateChange& inner) const {
    if (n_ != inner.n_)
        throw std::invalid_argument("CoordinateChange: mismatched sizes");
    std::vector<mpq_class> e(static_cast<std::size_t>(n_) * n_, mpq_class(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                e[i * n_ + j] += entry(i, k) * inner.entry(k, j);
    return CoordinateChange(n_, std::move(e));
}

}  // namespace sghilb
