#pragma once

#include "specseq/homology.hpp"
#include "specseq/multicomplex.hpp"

#include <map>
#include <string>
#include <vector>

namespace specseq {

// Z^r_{s,t} = {c in F_s C_{s+t} : dc in F_{s-r} C_{s+t-1}}. Total in r, s, t:
// r <= 0 relaxes the boundary condition until it is vacuous, s < 0 gives 0.
Lattice z_lattice(const FilteredComplex& fc, int r, int s, int t);

// Permanent cycles {c in F_s C_{s+t} : dc = 0}.
Lattice z_infinity(const FilteredComplex& fc, int s, int t);

// E^r_{s,t} = Z^r / (Z^{r-1}_{s-1,t+1} + d Z^{r-1}_{s+r-1,t-r+2}), with
// tracked ambient representatives.
Subquotient page_cell(const FilteredComplex& fc, int r, int s, int t);

struct Page {
    int r = 0;
    bool infinity = false;
    std::map<Bidegree, Subquotient> cells;  // nontrivial cells, keyed by (s,t)
    // d^r out of each nontrivial cell, keyed by source; absent on the
    // infinity page, where every differential is zero.
    std::map<Bidegree, InducedMap> differentials;

    GroupStructure structure_at(Bidegree key) const {
        auto it = cells.find(key);
        return it == cells.end() ? GroupStructure{} : it->second.structure();
    }
};

Page page(const FilteredComplex& fc, int r);

// Take homology of `current` at every cell using its stored differentials
// and check the result against the closed-form page r+1, which is returned.
// Throws on any disagreement.
Page turn_page(const FilteredComplex& fc, const Page& current);

// Pages r and above equal E-infinity at (s,t).
int stabilization_bound(const FilteredComplex& fc, int s, int t);
int global_stabilization_bound(const FilteredComplex& fc);

// E-infinity from permanent cycles, cross-checked cellwise against the
// stable page. Throws on disagreement between the two routes.
Page e_infinity(const FilteredComplex& fc);

struct ConvergenceReport {
    bool ok = true;
    std::vector<std::string> mismatches;
};

// E-infinity against the associated graded of H_*(total complex).
ConvergenceReport verify_convergence(const FilteredComplex& fc);

struct ColumnReport {
    bool ok = true;
    std::vector<std::string> mismatches;
};

// E^1 against the homology of each column (X_{s,*}, d_0).
ColumnReport verify_e1_columns(const Multicomplex& mc);

// Comparison of the page differential d^r with the map the structure map
// d_r induces. The induced map only exists on classes represented by some
// x with d_i x = 0 for all i < r whose image d_r x is again an r-cycle;
// `admissible_domain` collects those classes, `induced_image` their images.
struct ComparisonReport {
    int r = 1;
    int s = 0;
    int t = 0;
    Subquotient domain_cell;
    Subquotient codomain_cell;
    Subquotient dr_image;           // image of d^r inside the codomain cell
    Subquotient admissible_domain;  // classes of x with d_i x = 0, i < r
    Subquotient induced_image;      // classes of d_r x over the defined part
    bool domain_is_full = false;    // admissible classes exhaust E^r_{s,t}
    bool images_defined = false;    // every admissible class has a rep with r-cycle image
    bool generators_match = false;  // [d_r x] = d^r[x] on the defined part
    bool agrees = false;            // all three
};

ComparisonReport induced_map_on_page(const Multicomplex& mc, int r, int s, int t);

}  // namespace specseq
