#include "specseq/spectral.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace specseq {

namespace {

std::string at_cell(int s, int t) {
    std::ostringstream os;
    os << "(" << s << "," << t << ")";
    return os.str();
}

// d C_{n+1} cap F_s C_n.
Lattice boundaries_in_filtration(const FilteredComplex& fc, int s, int n) {
    std::vector<std::size_t> outside;
    const auto& gens = fc.generators(n);
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].p > s) outside.push_back(i);
    IntMatrix b = fc.boundary(n + 1);
    Lattice sources = kernel_basis(b.row_subset(outside));
    return image_basis(b * sources.basis());
}

}  // namespace

Lattice z_lattice(const FilteredComplex& fc, int r, int s, int t) {
    int n = s + t;
    if (s < 0) return Lattice::trivial(fc.rank(n));
    std::vector<std::size_t> inside = fc.filtration_indices(n, s);
    std::vector<std::size_t> deep;
    const auto& below = fc.generators(n - 1);
    for (std::size_t i = 0; i < below.size(); ++i)
        if (below[i].p > s - r) deep.push_back(i);
    IntMatrix m = fc.boundary(n).row_subset(deep).columns(inside);
    return embed(kernel_basis(m), inside, fc.rank(n));
}

Lattice z_infinity(const FilteredComplex& fc, int s, int t) {
    if (s < 0) return Lattice::trivial(fc.rank(s + t));
    return filtered_cycle_lattice(fc, s + t, s);
}

Subquotient page_cell(const FilteredComplex& fc, int r, int s, int t) {
    Lattice num = z_lattice(fc, r, s, t);
    Lattice den = lattice_sum(z_lattice(fc, r - 1, s - 1, t + 1),
                              image_basis(fc.boundary(s + t + 1) * z_lattice(fc, r - 1, s + r - 1, t - r + 2).basis()));
    return subquotient(num, den);
}

Page page(const FilteredComplex& fc, int r) {
    if (r < 0) throw std::invalid_argument("negative page index");
    Page pg;
    pg.r = r;
    for (Bidegree cell : support_cells(fc)) {
        Subquotient sq = page_cell(fc, r, cell.p, cell.q);
        if (!sq.is_trivial()) pg.cells.emplace(cell, std::move(sq));
    }
    for (const auto& [cell, sq] : pg.cells) {
        int s = cell.p, t = cell.q;
        Bidegree target{s - r, t + r - 1};
        auto it = pg.cells.find(target);
        Subquotient cod = it != pg.cells.end() ? it->second : page_cell(fc, r, target.p, target.q);
        InducedMap d = induce(fc.boundary(s + t), sq, cod);
        if (!d.well_defined)
            throw std::logic_error("internal error: boundary does not induce d^" + std::to_string(r) +
                                   " at " + at_cell(s, t));
        pg.differentials.emplace(cell, std::move(d));
    }
    return pg;
}

Page turn_page(const FilteredComplex& fc, const Page& current) {
    Page next = page(fc, current.r + 1);
    for (Bidegree cell : support_cells(fc)) {
        GroupStructure expected = next.structure_at(cell);
        auto it = current.cells.find(cell);
        if (it == current.cells.end()) {
            if (!expected.is_trivial())
                throw std::runtime_error("turning mismatch at " + at_cell(cell.p, cell.q));
            continue;
        }
        const Subquotient& here = it->second;

        Lattice k = Lattice::full(here.generator_count());
        auto out = current.differentials.find(cell);
        if (out != current.differentials.end()) k = hom_kernel(out->second.matrix, out->second.codomain);

        Lattice image = image_basis(relation_matrix(here));
        auto in = current.differentials.find({cell.p + current.r, cell.q - current.r + 1});
        if (in != current.differentials.end()) image = lattice_sum(hom_image(in->second.matrix, here), image);

        if (subquotient(k, image).structure() != expected)
            throw std::runtime_error("turning mismatch at " + at_cell(cell.p, cell.q));
    }
    return next;
}

int stabilization_bound(const FilteredComplex& fc, int s, int t) {
    (void)fc;
    return std::max(s + 1, t + 2);
}

int global_stabilization_bound(const FilteredComplex& fc) {
    int r = 0;
    for (Bidegree cell : support_cells(fc)) r = std::max(r, stabilization_bound(fc, cell.p, cell.q));
    return r;
}

Page e_infinity(const FilteredComplex& fc) {
    Page pg;
    pg.r = global_stabilization_bound(fc);
    pg.infinity = true;
    for (Bidegree cell : support_cells(fc)) {
        int s = cell.p, t = cell.q;
        Subquotient stable = page_cell(fc, stabilization_bound(fc, s, t), s, t);
        Lattice den = lattice_sum(z_infinity(fc, s - 1, t + 1), boundaries_in_filtration(fc, s, s + t));
        Subquotient direct = subquotient(z_infinity(fc, s, t), den);
        if (direct.structure() != stable.structure())
            throw std::runtime_error("E-infinity mismatch at " + at_cell(s, t));
        if (!direct.is_trivial()) pg.cells.emplace(cell, std::move(direct));
    }
    return pg;
}

ConvergenceReport verify_convergence(const FilteredComplex& fc) {
    ConvergenceReport rep;
    Page einf = e_infinity(fc);
    BigradedGroup graded = associated_graded(fc);
    std::set<Bidegree> keys;
    for (const auto& [cell, sq] : einf.cells) keys.insert(cell);
    for (const auto& [cell, sq] : graded.cells) keys.insert(cell);
    for (Bidegree cell : keys) {
        GroupStructure a = einf.structure_at(cell);
        GroupStructure b = graded.structure_at(cell);
        if (a != b) {
            rep.ok = false;
            rep.mismatches.push_back(at_cell(cell.p, cell.q) + ": E-infinity " + a.to_string() +
                                     " vs associated graded " + b.to_string());
        }
    }
    return rep;
}

ColumnReport verify_e1_columns(const Multicomplex& mc) {
    ColumnReport rep;
    FilteredComplex fc = assemble(mc);
    Page first = page(fc, 1);
    std::map<int, int> column_height;
    for (const auto& [cell, names] : mc.cells())
        column_height[cell.p] = std::max(column_height[cell.p], cell.q);
    for (const auto& [s, height] : column_height)
        for (int q = 0; q <= height; ++q) {
            Lattice cycles = kernel_basis(mc.block_or_zero(0, {s, q}));
            Lattice boundaries = image_basis(mc.block_or_zero(0, {s, q + 1}));
            GroupStructure column = subquotient(cycles, boundaries).structure();
            GroupStructure e1 = first.structure_at({s, q});
            if (column != e1) {
                rep.ok = false;
                rep.mismatches.push_back(at_cell(s, q) + ": column homology " + column.to_string() +
                                         " vs E^1 " + e1.to_string());
            }
        }
    return rep;
}

ComparisonReport induced_map_on_page(const Multicomplex& mc, int r, int s, int t) {
    if (r < 1) throw std::invalid_argument("comparison needs a page index >= 1");
    FilteredComplex fc = assemble(mc);
    int n = s + t;

    ComparisonReport rep;
    rep.r = r;
    rep.s = s;
    rep.t = t;
    rep.domain_cell = page_cell(fc, r, s, t);
    rep.codomain_cell = page_cell(fc, r, s - r, t + r - 1);
    const Lattice& den_dom = rep.domain_cell.denominator();
    const Lattice& den_cod = rep.codomain_cell.denominator();

    rep.dr_image = subquotient(
        lattice_sum(image_basis(fc.boundary(n) * rep.domain_cell.numerator().basis()), den_cod), den_cod);

    // Admissible representatives: x in Z^r with d_i x = 0 for all i < r.
    const IntMatrix& znum = rep.domain_cell.numerator().basis();
    IntMatrix stacked(0, fc.rank(n));
    for (int i = 0; i < r; ++i) stacked = stacked.vstack(assemble_component(mc, i, n));
    Lattice inner = kernel_basis(stacked * znum);
    Lattice admissible = image_basis(znum * inner.basis());
    rep.admissible_domain = subquotient(lattice_sum(admissible, den_dom), den_dom);
    rep.domain_is_full = lattice_sum(admissible, den_dom) == rep.domain_cell.numerator();

    // The part of the admissible lattice that d_r keeps inside the
    // r-cycles of the target; only there is [d_r x] a class on page r.
    IntMatrix dr = assemble_component(mc, r, n);
    IntMatrix image_of_admissible = dr * admissible.basis();
    IntMatrix cod_basis = rep.codomain_cell.numerator().basis();
    Lattice solved = kernel_basis(image_of_admissible.hstack(cod_basis));
    std::vector<std::size_t> head(admissible.rank());
    for (std::size_t i = 0; i < head.size(); ++i) head[i] = i;
    Lattice defined = image_basis(admissible.basis() *
                                  Lattice::from_columns(admissible.rank(), solved.basis().row_subset(head)).basis());
    // Class-level: every admissible class must have a representative whose
    // d_r image is again an r-cycle, so compare modulo the denominator.
    rep.images_defined = lattice_sum(defined, den_dom) == lattice_sum(admissible, den_dom);

    rep.induced_image = subquotient(lattice_sum(image_basis(dr * defined.basis()), den_cod), den_cod);

    rep.generators_match = true;
    for (std::size_t j = 0; j < defined.rank(); ++j) {
        IntVec x = defined.basis().col(j);
        if (rep.codomain_cell.class_coords(dr * x) != rep.codomain_cell.class_coords(fc.boundary(n) * x)) {
            rep.generators_match = false;
            break;
        }
    }
    rep.agrees = rep.domain_is_full && rep.images_defined && rep.generators_match;
    return rep;
}

}  // namespace specseq
