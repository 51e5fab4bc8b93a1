#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specseq/int_matrix.hpp"

using namespace specseq;

TEST_CASE("construction and element access") {
    IntMatrix m(2, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.is_zero());
    m(1, 2) = 5;
    CHECK(m(1, 2) == 5);
    CHECK_FALSE(m.is_zero());

    IntMatrix id = IntMatrix::identity(3);
    CHECK(id.is_diagonal());
    CHECK(id(0, 0) == 1);
    CHECK(id(0, 1) == 0);

    IntMatrix zero_dim(0, 4);
    CHECK(zero_dim.is_zero());
    CHECK(zero_dim.transpose().rows() == 4);
}

TEST_CASE("arithmetic") {
    IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
    IntMatrix b = IntMatrix::from_rows({{0, 1}, {1, 0}});
    CHECK(a * b == IntMatrix::from_rows({{2, 1}, {4, 3}}));
    CHECK(a + b == IntMatrix::from_rows({{1, 3}, {4, 4}}));
    CHECK(a - a == IntMatrix(2, 2));
    CHECK(a * IntMatrix::identity(2) == a);
    CHECK(IntMatrix::identity(2) * a == a);

    IntVec v{Int(1), Int(1)};
    IntVec av = a * v;
    CHECK(av == IntVec{Int(3), Int(7)});

    IntMatrix wide(2, 0);
    CHECK((wide * IntMatrix(0, 5)).rows() == 2);
    CHECK((wide * IntMatrix(0, 5)).cols() == 5);
}

TEST_CASE("stacking and slicing") {
    IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
    IntMatrix b = IntMatrix::from_rows({{5}, {6}});
    IntMatrix h = a.hstack(b);
    CHECK(h.cols() == 3);
    CHECK(h(0, 2) == 5);
    IntMatrix v = a.vstack(IntMatrix::from_rows({{7, 8}}));
    CHECK(v.rows() == 3);
    CHECK(v(2, 1) == 8);

    CHECK(a.columns({1}) == IntMatrix::from_rows({{2}, {4}}));
    CHECK(a.row_subset({0}) == IntMatrix::from_rows({{1, 2}}));
    CHECK(a.col(1) == IntVec{Int(2), Int(4)});
}

TEST_CASE("elementary operations") {
    IntMatrix m = IntMatrix::from_rows({{1, 2}, {3, 4}});
    m.swap_rows(0, 1);
    CHECK(m == IntMatrix::from_rows({{3, 4}, {1, 2}}));
    m.swap_cols(0, 1);
    CHECK(m == IntMatrix::from_rows({{4, 3}, {2, 1}}));
    m.negate_row(0);
    CHECK(m == IntMatrix::from_rows({{-4, -3}, {2, 1}}));
    m.add_row_multiple(0, 1, 2);
    CHECK(m == IntMatrix::from_rows({{0, -1}, {2, 1}}));
    m.add_col_multiple(1, 0, 3);
    CHECK(m == IntMatrix::from_rows({{0, -1}, {2, 7}}));
}

TEST_CASE("determinant by fraction-free elimination") {
    CHECK(IntMatrix::identity(4).determinant() == 1);
    CHECK(IntMatrix::from_rows({{2, 0}, {0, 3}}).determinant() == 6);
    CHECK(IntMatrix::from_rows({{1, 2}, {3, 4}}).determinant() == -2);
    CHECK(IntMatrix::from_rows({{1, 2}, {2, 4}}).determinant() == 0);
    CHECK(IntMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}).determinant() == 1);
    CHECK(IntMatrix::from_rows({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}}).determinant() == -90);
    CHECK(IntMatrix(0, 0).determinant() == 1);
}

TEST_CASE("large entries survive round trips") {
    Int big("123456789012345678901234567890");
    IntMatrix m(1, 1);
    m(0, 0) = big;
    CHECK((m * m)(0, 0) == big * big);
    CHECK(m.determinant() == big);
}

TEST_CASE("vector helpers") {
    IntVec a{Int(1), Int(-2)};
    IntVec b{Int(3), Int(5)};
    CHECK(a + b == IntVec{Int(4), Int(3)});
    CHECK(a - b == IntVec{Int(-2), Int(-7)});
    CHECK(Int(3) * a == IntVec{Int(3), Int(-6)});
    CHECK(is_zero(IntVec{Int(0), Int(0)}));
    CHECK_FALSE(is_zero(a));
}
