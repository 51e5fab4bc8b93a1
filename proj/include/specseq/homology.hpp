#pragma once

#include "specseq/assembly.hpp"
#include "specseq/subquotient.hpp"

#include <map>
#include <vector>

namespace specseq {

struct GradedGroup {
    std::vector<Subquotient> by_degree;  // index n = H_n
};

struct BigradedGroup {
    std::map<Bidegree, Subquotient> cells;  // nontrivial cells only

    GroupStructure structure_at(Bidegree key) const {
        auto it = cells.find(key);
        return it == cells.end() ? GroupStructure{} : it->second.structure();
    }
};

Lattice cycle_lattice(const FilteredComplex& fc, int n);
Lattice boundary_lattice(const FilteredComplex& fc, int n);
// ker(boundary_n) restricted to F_s, as a sublattice of C_n.
Lattice filtered_cycle_lattice(const FilteredComplex& fc, int n, int s);

// H_n = ker/im for n = 0..max_degree.
GradedGroup chain_homology(const FilteredComplex& fc);

// Image of H_n(F_s C) in H_n(C), presented as (ker cap F_s + im)/im.
GradedGroup filtered_homology(const FilteredComplex& fc, int s);

// gr_s H_{s+t} = F_s H / F_{s-1} H over the whole support.
BigradedGroup associated_graded(const FilteredComplex& fc);

}  // namespace specseq
