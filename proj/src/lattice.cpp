#include "specseq/lattice.hpp"

#include "specseq/normal_form.hpp"

#include <stdexcept>

namespace specseq {

namespace {

// Row index of the first nonzero entry of each basis column. Strictly
// increasing for a Hermite basis.
std::vector<std::size_t> pivot_rows(const IntMatrix& basis) {
    std::vector<std::size_t> piv(basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        std::size_t i = 0;
        while (i < basis.rows() && basis(i, j) == 0) ++i;
        piv[j] = i;
    }
    return piv;
}

}  // namespace

Lattice Lattice::from_columns(std::size_t ambient, const IntMatrix& generators) {
    if (generators.rows() != ambient) throw std::invalid_argument("generator ambient mismatch");
    return Lattice(ambient, hnf(generators));
}

Lattice Lattice::trivial(std::size_t ambient) {
    return Lattice(ambient, IntMatrix(ambient, 0));
}

Lattice Lattice::full(std::size_t ambient) {
    return Lattice(ambient, IntMatrix::identity(ambient));
}

Lattice Lattice::coordinate(std::size_t ambient, const std::vector<std::size_t>& positions) {
    IntMatrix basis(ambient, positions.size());
    for (std::size_t j = 0; j < positions.size(); ++j) {
        if (positions[j] >= ambient) throw std::out_of_range("coordinate position");
        basis(positions[j], j) = 1;
    }
    return Lattice(ambient, hnf(basis));
}

Lattice kernel_basis(const IntMatrix& m) {
    SmithForm f = snf(m);
    std::size_t diag = std::min(m.rows(), m.cols());
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (j >= diag || f.d(j, j) == 0) idx.push_back(j);
    return Lattice::from_columns(m.cols(), f.v.columns(idx));
}

Lattice image_basis(const IntMatrix& m) {
    return Lattice::from_columns(m.rows(), m);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("ambient rank mismatch");
    return Lattice::from_columns(a.ambient_rank(), a.basis().hstack(b.basis()));
}

std::optional<IntVec> coords(const Lattice& l, const IntVec& v) {
    if (v.size() != l.ambient_rank()) throw std::invalid_argument("vector ambient mismatch");
    const IntMatrix& b = l.basis();
    std::vector<std::size_t> piv = pivot_rows(b);
    IntVec rem = v;
    IntVec out(b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        const Int& lead = rem[piv[j]];
        if (lead == 0) continue;
        if (lead % b(piv[j], j) != 0) return std::nullopt;
        Int q = lead / b(piv[j], j);
        for (std::size_t i = piv[j]; i < rem.size(); ++i) rem[i] -= q * b(i, j);
        out[j] = q;
    }
    if (!is_zero(rem)) return std::nullopt;
    return out;
}

bool contains(const Lattice& l, const IntVec& v) {
    return coords(l, v).has_value();
}

bool Lattice::contains(const IntVec& v) const {
    return specseq::contains(*this, v);
}

std::optional<IntVec> Lattice::coords(const IntVec& v) const {
    return specseq::coords(*this, v);
}

bool is_sublattice(const Lattice& inner, const Lattice& outer) {
    if (inner.ambient_rank() != outer.ambient_rank()) throw std::invalid_argument("ambient rank mismatch");
    for (std::size_t j = 0; j < inner.rank(); ++j)
        if (!contains(outer, inner.basis().col(j))) return false;
    return true;
}

Lattice embed(const Lattice& l, const std::vector<std::size_t>& positions, std::size_t ambient) {
    if (positions.size() != l.ambient_rank()) throw std::invalid_argument("embedding position count");
    IntMatrix big(ambient, l.rank());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] >= ambient) throw std::out_of_range("embedding position");
        for (std::size_t j = 0; j < l.rank(); ++j) big(positions[i], j) = l.basis()(i, j);
    }
    return Lattice::from_columns(ambient, big);
}

}  // namespace specseq
