#pragma once

#include "specseq/int_matrix.hpp"

namespace specseq {

// Smith normal form: d = u * m * v with u, v unimodular, d diagonal with
// nonnegative entries d(0,0) | d(1,1) | ... Row and column moves use
// rotations rather than swaps, so the relative order of untouched rows
// and columns survives into u and v.
struct SmithForm {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    IntMatrix u_inv;
    IntMatrix v_inv;
};

SmithForm snf(const IntMatrix& m);

// Column-style Hermite normal form of the column span of m. The result
// has independent columns, one pivot per column in strictly increasing
// row order, positive pivots, and entries left of a pivot reduced to
// [0, pivot). Two matrices span the same column lattice iff their forms
// are identical, so this is the canonical basis used everywhere below.
IntMatrix hnf(const IntMatrix& m);

}  // namespace specseq
