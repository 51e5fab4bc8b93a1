#include "specseq/normal_form.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>

namespace specseq {

namespace {

struct SmithWorker {
    IntMatrix a, u, v, u_inv, v_inv;

    explicit SmithWorker(const IntMatrix& m)
        : a(m),
          u(IntMatrix::identity(m.rows())),
          v(IntMatrix::identity(m.cols())),
          u_inv(IntMatrix::identity(m.rows())),
          v_inv(IntMatrix::identity(m.cols())) {}

    // a := E a with E = I + q*E_{dst,src}; u := E u; u_inv := u_inv E^{-1}.
    void row_add(std::size_t dst, std::size_t src, const Int& q) {
        a.add_row_multiple(dst, src, q);
        u.add_row_multiple(dst, src, q);
        u_inv.add_col_multiple(src, dst, Int(-q));
    }

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        a.swap_rows(i, j);
        u.swap_rows(i, j);
        u_inv.swap_cols(i, j);
    }

    void row_negate(std::size_t i) {
        a.negate_row(i);
        u.negate_row(i);
        u_inv.negate_col(i);
    }

    void col_add(std::size_t dst, std::size_t src, const Int& q) {
        a.add_col_multiple(dst, src, q);
        v.add_col_multiple(dst, src, q);
        v_inv.add_row_multiple(src, dst, Int(-q));
    }

    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        a.swap_cols(i, j);
        v.swap_cols(i, j);
        v_inv.swap_rows(i, j);
    }

    // Cycle row i into position k, shifting rows k..i-1 down one slot.
    void rotate_row_to(std::size_t k, std::size_t i) {
        for (std::size_t r = i; r > k; --r) row_swap(r, r - 1);
    }

    void rotate_col_to(std::size_t k, std::size_t j) {
        for (std::size_t c = j; c > k; --c) col_swap(c, c - 1);
    }
};

// Smallest nonzero |entry| in the submatrix with row, col >= k; ties go to
// the earliest position so pivot selection is deterministic.
std::optional<std::pair<std::size_t, std::size_t>> select_pivot(const IntMatrix& a, std::size_t k) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs;
    for (std::size_t i = k; i < a.rows(); ++i)
        for (std::size_t j = k; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int ab = abs(a(i, j));
            if (!best || ab < best_abs) {
                best = {i, j};
                best_abs = ab;
            }
        }
    return best;
}

Int tdiv_quotient(const Int& num, const Int& den) {
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Int fdiv_quotient(const Int& num, const Int& den) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

SmithForm snf(const IntMatrix& m) {
    SmithWorker w(m);
    std::size_t limit = std::min(m.rows(), m.cols());
    for (std::size_t k = 0; k < limit; ++k) {
        while (true) {
            auto piv = select_pivot(w.a, k);
            if (!piv) break;
            w.rotate_row_to(k, piv->first);
            w.rotate_col_to(k, piv->second);
            bool clean = true;
            for (std::size_t i = k + 1; i < w.a.rows(); ++i) {
                if (w.a(i, k) == 0) continue;
                w.row_add(i, k, Int(-tdiv_quotient(w.a(i, k), w.a(k, k))));
                if (w.a(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < w.a.cols(); ++j) {
                if (w.a(k, j) == 0) continue;
                w.col_add(j, k, Int(-tdiv_quotient(w.a(k, j), w.a(k, k))));
                if (w.a(k, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Pivot divides the rest of the submatrix, or we merge in a bad
            // row and keep reducing. |pivot| strictly drops each round.
            bool divides = true;
            for (std::size_t i = k + 1; i < w.a.rows() && divides; ++i)
                for (std::size_t j = k + 1; j < w.a.cols() && divides; ++j)
                    if (w.a(i, j) % w.a(k, k) != 0) {
                        w.row_add(k, i, Int(1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (w.a(k, k) < 0) w.row_negate(k);
        if (w.a(k, k) == 0) break;
    }
    return {std::move(w.u), std::move(w.a), std::move(w.v), std::move(w.u_inv), std::move(w.v_inv)};
}

IntMatrix hnf(const IntMatrix& m) {
    IntMatrix h = m;
    std::size_t c = 0;
    for (std::size_t row = 0; row < h.rows() && c < h.cols(); ++row) {
        while (true) {
            std::optional<std::size_t> best;
            Int best_abs;
            for (std::size_t j = c; j < h.cols(); ++j) {
                if (h(row, j) == 0) continue;
                Int ab = abs(h(row, j));
                if (!best || ab < best_abs) {
                    best = j;
                    best_abs = ab;
                }
            }
            if (!best) break;
            h.swap_cols(c, *best);
            bool clean = true;
            for (std::size_t j = c + 1; j < h.cols(); ++j) {
                if (h(row, j) == 0) continue;
                h.add_col_multiple(j, c, Int(-tdiv_quotient(h(row, j), h(row, c))));
                if (h(row, j) != 0) clean = false;
            }
            if (!clean) continue;
            if (h(row, c) < 0) h.negate_col(c);
            for (std::size_t j = 0; j < c; ++j) {
                Int q = fdiv_quotient(h(row, j), h(row, c));
                if (q != 0) h.add_col_multiple(j, c, Int(-q));
            }
            ++c;
            break;
        }
    }
    std::vector<std::size_t> keep(c);
    for (std::size_t j = 0; j < c; ++j) keep[j] = j;
    return h.columns(keep);
}

}  // namespace specseq
