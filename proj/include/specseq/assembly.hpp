#pragma once

#include "specseq/lattice.hpp"
#include "specseq/multicomplex.hpp"

#include <string>
#include <vector>

namespace specseq {

struct TotalGenerator {
    std::string name;
    int p = 0;
    int q = 0;
    bool operator==(const TotalGenerator&) const = default;
};

// Chain complex of free Z-modules with a basis ordered by decreasing
// filtration degree p inside each total degree, and the column filtration
// F_s spanned by generators with p <= s. The boundary never raises p.
class FilteredComplex {
public:
    static FilteredComplex create(std::vector<std::vector<TotalGenerator>> degrees,
                                  std::vector<IntMatrix> boundaries);

    int max_degree() const { return static_cast<int>(degrees_.size()) - 1; }
    std::size_t rank(int n) const;
    const std::vector<TotalGenerator>& generators(int n) const;
    // C_n -> C_{n-1}; a zero-shaped matrix outside the populated range.
    IntMatrix boundary(int n) const;

    int max_filtration() const;
    std::vector<std::size_t> filtration_indices(int n, int s) const;

    bool operator==(const FilteredComplex& other) const = default;

private:
    std::vector<std::vector<TotalGenerator>> degrees_;
    std::vector<IntMatrix> boundaries_;
};

// Total complex of a validated multicomplex.
FilteredComplex assemble(const Multicomplex& mc);

// The matrix of the single structure map d_i in the assembled bases of
// degrees n and n-1. The full boundary is the sum over i.
IntMatrix assemble_component(const Multicomplex& mc, int i, int n);

// F_s C_n as a sublattice of C_n.
Lattice filtration_lattice(const FilteredComplex& fc, int s, int n);

// Inverse of assemble: split the boundary back into bigraded blocks.
Multicomplex extract_multicomplex(const FilteredComplex& fc);

// All (p,q) carrying generators.
std::vector<Bidegree> support_cells(const FilteredComplex& fc);

}  // namespace specseq
