#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specseq/normal_form.hpp"

#include <random>
#include <vector>

using namespace specseq;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long span = 9) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = static_cast<long>(rng() % (2 * span + 1)) - span;
    return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    IntMatrix w = IntMatrix::identity(n);
    for (int k = 0; k < 12; ++k) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) {
            w.negate_col(i);
            continue;
        }
        long lambda = static_cast<long>(rng() % 5) - 2;
        w.add_col_multiple(j, i, lambda);
    }
    return w;
}

// gcd of all k-by-k minors; zero when every minor vanishes.
Int determinantal_divisor(const IntMatrix& m, std::size_t k) {
    std::vector<std::size_t> rows(k), cols(k);
    Int g = 0;
    // Strictly increasing index tuples over [0, n); slot i tops out at n - (k - i).
    auto next_combination = [](std::vector<std::size_t>& idx, std::size_t n) {
        std::size_t k_ = idx.size();
        for (std::size_t i = k_; i-- > 0;) {
            if (idx[i] + 1 < n - (k_ - 1 - i)) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k_; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    do {
        for (std::size_t i = 0; i < k; ++i) cols[i] = i;
        do {
            Int minor = m.row_subset(rows).columns(cols).determinant();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
        } while (next_combination(cols, m.cols()));
    } while (next_combination(rows, m.rows()));
    return g;
}

void check_smith_invariants(const IntMatrix& m) {
    SmithForm f = snf(m);
    CHECK(f.d == f.u * m * f.v);
    CHECK(f.u * f.u_inv == IntMatrix::identity(m.rows()));
    CHECK(f.u_inv * f.u == IntMatrix::identity(m.rows()));
    CHECK(f.v * f.v_inv == IntMatrix::identity(m.cols()));
    CHECK(f.v_inv * f.v == IntMatrix::identity(m.cols()));
    if (m.rows() > 0) {
        Int du = f.u.determinant();
        CHECK((du == 1 || du == -1));
    }
    if (m.cols() > 0) {
        Int dv = f.v.determinant();
        CHECK((dv == 1 || dv == -1));
    }
    CHECK(f.d.is_diagonal());
    std::size_t k = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < k; ++i) {
        CHECK(f.d(i, i) >= 0);
        if (i + 1 < k) {
            if (f.d(i, i) == 0) {
                CHECK(f.d(i + 1, i + 1) == 0);
            } else {
                CHECK(f.d(i + 1, i + 1) % f.d(i, i) == 0);
            }
        }
    }
}

void check_hnf_canonical(const IntMatrix& h) {
    std::size_t prev_row = 0;
    bool first = true;
    for (std::size_t j = 0; j < h.cols(); ++j) {
        std::size_t piv = h.rows();
        for (std::size_t i = 0; i < h.rows(); ++i)
            if (h(i, j) != 0) {
                piv = i;
                break;
            }
        REQUIRE(piv < h.rows());  // no zero columns
        CHECK(h(piv, j) > 0);
        if (!first) CHECK(piv > prev_row);
        first = false;
        prev_row = piv;
        for (std::size_t l = 0; l < j; ++l) {
            CHECK(h(piv, l) >= 0);
            CHECK(h(piv, l) < h(piv, j));
        }
    }
}

}  // namespace

TEST_CASE("smith form of known matrices") {
    SmithForm f = snf(IntMatrix::from_rows({{2, 4}, {6, 8}}));
    CHECK(f.d(0, 0) == 2);
    CHECK(f.d(1, 1) == 4);

    f = snf(IntMatrix::from_rows({{4, 0}, {0, 6}}));
    CHECK(f.d(0, 0) == 2);
    CHECK(f.d(1, 1) == 12);

    f = snf(IntMatrix::from_rows({{1, 0}, {0, 1}}));
    CHECK(f.d == IntMatrix::identity(2));

    f = snf(IntMatrix(2, 3));
    CHECK(f.d.is_zero());
    CHECK(f.u == IntMatrix::identity(2));

    f = snf(IntMatrix::from_rows({{6, 10, 15}}));
    CHECK(f.d(0, 0) == 1);
}

TEST_CASE("smith form of degenerate shapes") {
    check_smith_invariants(IntMatrix(0, 0));
    check_smith_invariants(IntMatrix(0, 3));
    check_smith_invariants(IntMatrix(3, 0));
    check_smith_invariants(IntMatrix::from_rows({{7}}));
    check_smith_invariants(IntMatrix::from_rows({{-7}}));
}

TEST_CASE("smith diagonal matches determinantal divisors") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        IntMatrix m = random_matrix(rng, rows, cols);
        SmithForm f = snf(m);
        Int prev = 1;
        for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
            Int g = determinantal_divisor(m, k);
            Int expected = 0;
            if (g != 0) expected = g / prev;
            CHECK(f.d(k - 1, k - 1) == expected);
            if (g == 0) break;
            prev = g;
        }
    }
}

TEST_CASE("smith transforms are consistent inverses") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t rows = rng() % 6, cols = rng() % 6;
        check_smith_invariants(random_matrix(rng, rows, cols));
    }
}

TEST_CASE("hermite form of known matrices") {
    CHECK(hnf(IntMatrix::from_rows({{1, 1}, {1, -1}})) == IntMatrix::from_rows({{1, 0}, {1, 2}}));
    CHECK(hnf(IntMatrix::identity(3)) == IntMatrix::identity(3));
    CHECK(hnf(IntMatrix(3, 2)) == IntMatrix(3, 0));
    CHECK(hnf(IntMatrix::from_rows({{0, 2}, {0, 0}})) == IntMatrix::from_rows({{2}, {0}}));
    CHECK(hnf(IntMatrix::from_rows({{-3}})) == IntMatrix::from_rows({{3}}));
    // dependent columns collapse
    CHECK(hnf(IntMatrix::from_rows({{1, 2}, {2, 4}})) == IntMatrix::from_rows({{1}, {2}}));
}

TEST_CASE("hermite form is canonical for the column span") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        IntMatrix m = random_matrix(rng, rows, cols);
        IntMatrix h = hnf(m);
        check_hnf_canonical(h);
        CHECK(hnf(h) == h);
        IntMatrix w = random_unimodular(rng, cols);
        CHECK(hnf(m * w) == h);
    }
}
