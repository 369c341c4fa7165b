#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sghilb/linalg.hpp"

using namespace sghilb;

namespace {

QMatrix from_rows(const std::vector<std::vector<mpq_class>>& rows) {
    QMatrix m(0, rows.front().size());
    for (const auto& r : rows) m.append_row(r);
    return m;
}

}  // namespace

TEST_CASE("rank, determinant, inverse") {
    auto m = from_rows({{1, 2}, {3, 4}});
    CHECK(m.rank() == 2);
    CHECK(m.kernel_dimension() == 0);
    CHECK(m.determinant() == -2);

    auto inv = m.inverse();
    // m * inv == identity, entry by entry.
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            mpq_class s = 0;
            for (std::size_t k = 0; k < 2; ++k) s += m.at(i, k) * inv.at(k, j);
            CHECK(s == (i == j ? 1 : 0));
        }

    CHECK(QMatrix::identity(3).rank() == 3);
    CHECK(QMatrix::identity(3).determinant() == 1);
}

TEST_CASE("rational entries are exact") {
    auto m = from_rows({{mpq_class(1, 2), 0}, {0, mpq_class(2, 3)}});
    CHECK(m.determinant() == mpq_class(1, 3));
    CHECK(m.inverse().at(0, 0) == 2);
    CHECK(m.inverse().at(1, 1) == mpq_class(3, 2));
}

TEST_CASE("singular matrices") {
    auto m = from_rows({{1, 2}, {2, 4}});
    CHECK(m.rank() == 1);
    CHECK(m.kernel_dimension() == 1);
    CHECK(m.determinant() == 0);
    CHECK_THROWS_AS(m.inverse(), std::domain_error);

    // Rank of a wide matrix; rows 0+1 = row 2.
    auto w = from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}});
    CHECK(w.rank() == 2);
    CHECK(w.kernel_dimension() == 2);
}

TEST_CASE("append_row guards length") {
    QMatrix m(0, 3);
    CHECK_THROWS_AS(m.append_row({1, 2}), std::invalid_argument);
    m.append_row({1, 2, 3});
    CHECK(m.rows() == 1);
    CHECK(m.rank() == 1);
}

TEST_CASE("row space tracks independence incrementally") {
    RowSpace sp(3);
    CHECK(sp.dimension() == 0);
    CHECK(sp.add({1, 0, 0}));
    CHECK(sp.add({0, mpq_class(1, 2), 0}));
    CHECK_FALSE(sp.add({1, 1, 0}));  // dependent on the first two
    CHECK(sp.dimension() == 2);

    CHECK(sp.independent({0, 0, 7}));
    CHECK(sp.contains({mpq_class(2, 3), mpq_class(-5), 0}));
    CHECK_FALSE(sp.contains({0, 0, 1}));

    CHECK(sp.add({1, 1, 1}));
    CHECK(sp.dimension() == 3);
    CHECK_FALSE(sp.independent({mpq_class(1, 7), mpq_class(3), mpq_class(-2, 9)}));
}

TEST_CASE("zero rows never enlarge the span") {
    RowSpace sp(2);
    CHECK_FALSE(sp.add({0, 0}));
    CHECK(sp.dimension() == 0);
    CHECK(sp.contains({0, 0}));
}
