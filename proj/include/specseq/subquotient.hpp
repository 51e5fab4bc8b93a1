#pragma once

#include "specseq/lattice.hpp"

#include <string>
#include <vector>

namespace specseq {

struct GroupStructure {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // invariant factors >= 2, each dividing the next

    bool operator==(const GroupStructure& other) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string to_string() const;
};

// A quotient num/den of nested lattices in the same ambient Z^n, decomposed
// as Z^free_rank + sum of Z/f_k. Every generator carries an explicit ambient
// representative: free generators first, then one per invariant factor, in
// chain order.
class Subquotient {
public:
    Subquotient() = default;

    const Lattice& numerator() const { return num_; }
    const Lattice& denominator() const { return den_; }
    std::size_t ambient_rank() const { return num_.ambient_rank(); }

    const GroupStructure& structure() const { return structure_; }
    std::size_t free_rank() const { return structure_.free_rank; }
    const std::vector<Int>& torsion() const { return structure_.torsion; }
    std::size_t generator_count() const { return structure_.free_rank + structure_.torsion.size(); }
    const std::vector<IntVec>& generators() const { return gens_; }
    bool is_trivial() const { return structure_.is_trivial(); }

    // Coordinates of the class of an ambient vector in the chosen
    // generators, torsion entries normalized to [0, f). Throws if the
    // vector is outside the numerator.
    IntVec class_coords(const IntVec& ambient_vector) const;
    // Normalize raw generator coordinates the same way.
    IntVec reduce(const IntVec& generator_coords) const;
    bool is_zero_class(const IntVec& ambient_vector) const;

    bool operator==(const Subquotient& other) const {
        return num_ == other.num_ && den_ == other.den_;
    }

    friend Subquotient subquotient(const Lattice& num, const Lattice& den);

private:
    Lattice num_ = Lattice::trivial(0);
    Lattice den_ = Lattice::trivial(0);
    GroupStructure structure_;
    std::vector<IntVec> gens_;
    IntMatrix proj_;  // Smith U of den-in-num coordinates
    std::vector<std::size_t> free_idx_;
    std::vector<std::size_t> tors_idx_;
};

Subquotient subquotient(const Lattice& num, const Lattice& den);

// Map between subquotients induced by an ambient matrix f. Well-defined
// iff f carries num into num and den into den; when it is not, the first
// offending image is reported instead of throwing.
struct InducedMap {
    Subquotient domain;
    Subquotient codomain;
    IntMatrix matrix;  // codomain generator coords of the domain generator images
    bool well_defined = false;
    IntVec offending_image;

    bool is_zero_map() const { return matrix.is_zero(); }
};

InducedMap induce(const IntMatrix& f, const Subquotient& dom, const Subquotient& cod);

// Presentation helpers, used to take homology of maps written in generator
// coordinates. relation_matrix columns span the coordinate vectors that
// represent zero.
IntMatrix relation_matrix(const Subquotient& q);
// {x : m x represents zero in the codomain}
Lattice hom_kernel(const IntMatrix& m, const Subquotient& codomain);
// Column span of m plus the codomain relations.
Lattice hom_image(const IntMatrix& m, const Subquotient& codomain);

}  // namespace specseq
