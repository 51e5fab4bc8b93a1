#include "specseq/assembly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace specseq {

namespace {

const std::vector<TotalGenerator> kNoGenerators;

}  // namespace

FilteredComplex FilteredComplex::create(std::vector<std::vector<TotalGenerator>> degrees,
                                        std::vector<IntMatrix> boundaries) {
    if (boundaries.size() != degrees.size()) throw std::invalid_argument("one boundary per degree expected");
    for (std::size_t n = 0; n < degrees.size(); ++n)
        for (const TotalGenerator& g : degrees[n])
            if (g.p < 0 || g.q < 0 || g.p + g.q != static_cast<int>(n))
                throw std::invalid_argument("generator bidegree inconsistent with its degree");
    for (std::size_t n = 0; n < degrees.size(); ++n) {
        std::size_t prev = n == 0 ? 0 : degrees[n - 1].size();
        if (boundaries[n].rows() != prev || boundaries[n].cols() != degrees[n].size())
            throw std::invalid_argument("boundary shape mismatch");
        for (std::size_t i = 0; i < boundaries[n].rows(); ++i)
            for (std::size_t j = 0; j < boundaries[n].cols(); ++j)
                if (boundaries[n](i, j) != 0 && degrees[n - 1][i].p > degrees[n][j].p)
                    throw std::invalid_argument("boundary raises filtration");
    }
    for (std::size_t n = 1; n + 1 < boundaries.size(); ++n)
        if (!(boundaries[n] * boundaries[n + 1]).is_zero())
            throw std::invalid_argument("boundary does not square to zero");

    FilteredComplex fc;
    fc.degrees_ = std::move(degrees);
    fc.boundaries_ = std::move(boundaries);
    return fc;
}

std::size_t FilteredComplex::rank(int n) const {
    if (n < 0 || n > max_degree()) return 0;
    return degrees_[static_cast<std::size_t>(n)].size();
}

const std::vector<TotalGenerator>& FilteredComplex::generators(int n) const {
    if (n < 0 || n > max_degree()) return kNoGenerators;
    return degrees_[static_cast<std::size_t>(n)];
}

IntMatrix FilteredComplex::boundary(int n) const {
    if (n < 0 || n > max_degree()) return IntMatrix(rank(n - 1), rank(n));
    return boundaries_[static_cast<std::size_t>(n)];
}

int FilteredComplex::max_filtration() const {
    int s = -1;
    for (const auto& degree : degrees_)
        for (const TotalGenerator& g : degree) s = std::max(s, g.p);
    return s;
}

std::vector<std::size_t> FilteredComplex::filtration_indices(int n, int s) const {
    std::vector<std::size_t> idx;
    const auto& gens = generators(n);
    for (std::size_t j = 0; j < gens.size(); ++j)
        if (gens[j].p <= s) idx.push_back(j);
    return idx;
}

namespace {

// Cells of total degree n in decreasing p, with their column offsets.
std::vector<std::pair<Bidegree, std::size_t>> degree_layout(const Multicomplex& mc, int n) {
    std::vector<std::pair<Bidegree, std::size_t>> layout;
    std::size_t offset = 0;
    for (int p = n; p >= 0; --p) {
        Bidegree cell{p, n - p};
        if (!mc.has_cell(cell)) continue;
        layout.push_back({cell, offset});
        offset += mc.rank(cell);
    }
    return layout;
}

}  // namespace

IntMatrix assemble_component(const Multicomplex& mc, int i, int n) {
    auto src_layout = degree_layout(mc, n);
    auto tgt_layout = degree_layout(mc, n - 1);
    std::map<Bidegree, std::size_t> tgt_offset(tgt_layout.begin(), tgt_layout.end());
    std::size_t rows = 0, cols = 0;
    for (const auto& [cell, off] : tgt_layout) rows += mc.rank(cell);
    for (const auto& [cell, off] : src_layout) cols += mc.rank(cell);

    IntMatrix out(rows, cols);
    for (const auto& [src, src_off] : src_layout) {
        Bidegree tgt{src.p - i, src.q + i - 1};
        auto it = tgt_offset.find(tgt);
        if (it == tgt_offset.end()) continue;
        IntMatrix block = mc.block_or_zero(i, src);
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c) out(it->second + r, src_off + c) = block(r, c);
    }
    return out;
}

FilteredComplex assemble(const Multicomplex& mc) {
    ValidationReport rep = validate(mc);
    if (!rep.ok) throw std::invalid_argument("relations violated");

    int top = mc.max_total_degree();
    std::vector<std::vector<TotalGenerator>> degrees(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n)
        for (const auto& [cell, offset] : degree_layout(mc, n)) {
            const auto& names = mc.cells().at(cell);
            for (const std::string& name : names)
                degrees[static_cast<std::size_t>(n)].push_back({name, cell.p, cell.q});
        }

    std::vector<IntMatrix> boundaries(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n) {
        IntMatrix b(n == 0 ? 0 : degrees[static_cast<std::size_t>(n - 1)].size(),
                    degrees[static_cast<std::size_t>(n)].size());
        for (int i = 0; i <= mc.max_map_index() && n > 0; ++i) b = b + assemble_component(mc, i, n);
        boundaries[static_cast<std::size_t>(n)] = std::move(b);
    }
    return FilteredComplex::create(std::move(degrees), std::move(boundaries));
}

Lattice filtration_lattice(const FilteredComplex& fc, int s, int n) {
    return Lattice::coordinate(fc.rank(n), fc.filtration_indices(n, s));
}

Multicomplex extract_multicomplex(const FilteredComplex& fc) {
    Multicomplex mc;
    for (int n = 0; n <= fc.max_degree(); ++n) {
        std::map<Bidegree, std::vector<std::string>> cells;
        for (const TotalGenerator& g : fc.generators(n)) cells[{g.p, g.q}].push_back(g.name);
        for (auto& [cell, names] : cells) mc.add_cell(cell, std::move(names));
    }
    for (int n = 1; n <= fc.max_degree(); ++n) {
        std::map<Bidegree, std::vector<std::size_t>> src_cells, tgt_cells;
        const auto& src_gens = fc.generators(n);
        const auto& tgt_gens = fc.generators(n - 1);
        for (std::size_t j = 0; j < src_gens.size(); ++j) src_cells[{src_gens[j].p, src_gens[j].q}].push_back(j);
        for (std::size_t i = 0; i < tgt_gens.size(); ++i) tgt_cells[{tgt_gens[i].p, tgt_gens[i].q}].push_back(i);
        IntMatrix b = fc.boundary(n);
        for (const auto& [src, sidx] : src_cells)
            for (const auto& [tgt, tidx] : tgt_cells) {
                IntMatrix block = b.row_subset(tidx).columns(sidx);
                if (block.is_zero()) continue;
                if (tgt.p > src.p) throw std::invalid_argument("boundary raises filtration");
                mc.add_block(src.p - tgt.p, src, std::move(block));
            }
    }
    assert(validate(mc).ok);
    return mc;
}

std::vector<Bidegree> support_cells(const FilteredComplex& fc) {
    std::set<Bidegree> seen;
    for (int n = 0; n <= fc.max_degree(); ++n)
        for (const TotalGenerator& g : fc.generators(n)) seen.insert({g.p, g.q});
    return {seen.begin(), seen.end()};
}

}  // namespace specseq
