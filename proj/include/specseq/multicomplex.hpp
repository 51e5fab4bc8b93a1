#pragma once

#include "specseq/int_matrix.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace specseq {

struct Bidegree {
    int p = 0;
    int q = 0;
    auto operator<=>(const Bidegree&) const = default;
};

// First-quadrant multicomplex over Z: finitely many bigraded cells, each a
// free module with named basis, and for each i >= 0 structure maps
// d_i : X_{p,q} -> X_{p-i, q+i-1} subject to sum_{i+j=n} d_i d_j = 0.
//
// Blocks are stored per source cell, rows indexed by the target cell's
// generator list and columns by the source's. All-zero blocks are never
// stored, so structural equality is meaningful.
class Multicomplex {
public:
    const std::map<Bidegree, std::vector<std::string>>& cells() const { return cells_; }
    const std::map<int, std::map<Bidegree, IntMatrix>>& maps() const { return maps_; }

    std::size_t rank(Bidegree cell) const;
    bool has_cell(Bidegree cell) const { return cells_.contains(cell); }
    int max_map_index() const;  // -1 when no maps
    int max_total_degree() const;  // -1 when empty

    // Target rank x source rank, zero-filled when no block is stored.
    IntMatrix block_or_zero(int i, Bidegree source) const;

    void add_cell(Bidegree cell, std::vector<std::string> generator_names);
    void add_block(int i, Bidegree source, IntMatrix block);

    bool operator==(const Multicomplex& other) const = default;

private:
    std::map<Bidegree, std::vector<std::string>> cells_;
    std::map<int, std::map<Bidegree, IntMatrix>> maps_;
};

struct RelationViolation {
    int n = 0;            // sum_{i+j=n} d_i d_j fails...
    Bidegree source;      // ...out of this cell
    IntMatrix residual;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> structural_errors;
    std::vector<RelationViolation> violations;
};

ValidationReport validate(const Multicomplex& mc);

// Only d_0 and d_1 present.
bool is_double_complex(const Multicomplex& mc);

// Swap the two gradings of a double complex; throws if d_i != 0 for i >= 2.
Multicomplex transpose_double(const Multicomplex& mc);

// Deterministic random multicomplex: a direct sum of rank-one cells and
// two-term complexes Z --k--> Z placed in the first quadrant, conjugated
// degreewise by filtration-compatible unimodular matrices so that the
// blocks mix while every axiom still holds by construction.
Multicomplex random_instance(std::uint64_t seed, int max_total_degree, std::size_t max_rank);

}  // namespace specseq
