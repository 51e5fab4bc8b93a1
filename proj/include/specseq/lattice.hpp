#pragma once

#include "specseq/int_matrix.hpp"

#include <optional>
#include <vector>

namespace specseq {

// A subgroup of Z^n, stored as its Hermite basis. Equal lattices compare
// equal because the basis is canonical.
class Lattice {
public:
    static Lattice from_columns(std::size_t ambient, const IntMatrix& generators);
    static Lattice trivial(std::size_t ambient);
    static Lattice full(std::size_t ambient);
    // Sublattice spanned by the given standard basis vectors.
    static Lattice coordinate(std::size_t ambient, const std::vector<std::size_t>& positions);

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t rank() const { return basis_.cols(); }
    const IntMatrix& basis() const { return basis_; }

    bool contains(const IntVec& v) const;
    std::optional<IntVec> coords(const IntVec& v) const;

    bool operator==(const Lattice& other) const = default;

private:
    Lattice(std::size_t ambient, IntMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

    std::size_t ambient_ = 0;
    IntMatrix basis_;
};

// {x : m x = 0}, saturated by construction.
Lattice kernel_basis(const IntMatrix& m);
// Column span of m.
Lattice image_basis(const IntMatrix& m);

Lattice lattice_sum(const Lattice& a, const Lattice& b);

bool contains(const Lattice& l, const IntVec& v);
// Coordinates of v in the basis of l, if v lies in l.
std::optional<IntVec> coords(const Lattice& l, const IntVec& v);

bool is_sublattice(const Lattice& inner, const Lattice& outer);

// Push a lattice in Z^{positions.size()} into Z^{ambient} along the given
// coordinate slots.
Lattice embed(const Lattice& l, const std::vector<std::size_t>& positions, std::size_t ambient);

}  // namespace specseq
