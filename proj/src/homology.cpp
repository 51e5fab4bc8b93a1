#include "specseq/homology.hpp"

namespace specseq {

Lattice cycle_lattice(const FilteredComplex& fc, int n) {
    return kernel_basis(fc.boundary(n));
}

Lattice boundary_lattice(const FilteredComplex& fc, int n) {
    return image_basis(fc.boundary(n + 1));
}

Lattice filtered_cycle_lattice(const FilteredComplex& fc, int n, int s) {
    std::vector<std::size_t> idx = fc.filtration_indices(n, s);
    Lattice inner = kernel_basis(fc.boundary(n).columns(idx));
    return embed(inner, idx, fc.rank(n));
}

GradedGroup chain_homology(const FilteredComplex& fc) {
    GradedGroup h;
    for (int n = 0; n <= fc.max_degree(); ++n)
        h.by_degree.push_back(subquotient(cycle_lattice(fc, n), boundary_lattice(fc, n)));
    return h;
}

GradedGroup filtered_homology(const FilteredComplex& fc, int s) {
    GradedGroup h;
    for (int n = 0; n <= fc.max_degree(); ++n) {
        Lattice b = boundary_lattice(fc, n);
        h.by_degree.push_back(subquotient(lattice_sum(filtered_cycle_lattice(fc, n, s), b), b));
    }
    return h;
}

BigradedGroup associated_graded(const FilteredComplex& fc) {
    BigradedGroup g;
    for (int n = 0; n <= fc.max_degree(); ++n) {
        Lattice b = boundary_lattice(fc, n);
        Lattice below = b;  // F_{-1} contributes nothing
        for (int s = 0; s <= n; ++s) {
            Lattice current = lattice_sum(filtered_cycle_lattice(fc, n, s), b);
            Subquotient cell = subquotient(current, below);
            if (!cell.is_trivial()) g.cells[{s, n - s}] = cell;
            below = current;
        }
    }
    return g;
}

}  // namespace specseq
