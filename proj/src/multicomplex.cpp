#include "specseq/multicomplex.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace specseq {

std::size_t Multicomplex::rank(Bidegree cell) const {
    auto it = cells_.find(cell);
    return it == cells_.end() ? 0 : it->second.size();
}

int Multicomplex::max_map_index() const {
    return maps_.empty() ? -1 : maps_.rbegin()->first;
}

int Multicomplex::max_total_degree() const {
    int d = -1;
    for (const auto& [cell, names] : cells_) d = std::max(d, cell.p + cell.q);
    return d;
}

IntMatrix Multicomplex::block_or_zero(int i, Bidegree source) const {
    Bidegree target{source.p - i, source.q + i - 1};
    IntMatrix zero(rank(target), rank(source));
    auto mi = maps_.find(i);
    if (mi == maps_.end()) return zero;
    auto bi = mi->second.find(source);
    return bi == mi->second.end() ? zero : bi->second;
}

void Multicomplex::add_cell(Bidegree cell, std::vector<std::string> generator_names) {
    if (cell.p < 0 || cell.q < 0) throw std::invalid_argument("cell outside the first quadrant");
    if (generator_names.empty()) return;
    auto [it, fresh] = cells_.emplace(cell, std::move(generator_names));
    if (!fresh) throw std::invalid_argument("cell declared twice");
}

void Multicomplex::add_block(int i, Bidegree source, IntMatrix block) {
    if (i < 0) throw std::invalid_argument("negative map index");
    if (block.is_zero()) return;
    auto [it, fresh] = maps_[i].emplace(source, std::move(block));
    if (!fresh) throw std::invalid_argument("block declared twice");
}

ValidationReport validate(const Multicomplex& mc) {
    ValidationReport rep;
    auto err = [&](const std::string& msg) {
        rep.ok = false;
        rep.structural_errors.push_back(msg);
    };
    for (const auto& [i, blocks] : mc.maps()) {
        for (const auto& [src, block] : blocks) {
            std::ostringstream where;
            where << "d_" << i << " at (" << src.p << "," << src.q << ")";
            if (!mc.has_cell(src)) {
                err(where.str() + ": source cell is absent");
                continue;
            }
            Bidegree tgt{src.p - i, src.q + i - 1};
            if (tgt.p < 0 || tgt.q < 0) {
                err(where.str() + ": target leaves the first quadrant");
                continue;
            }
            if (!mc.has_cell(tgt)) {
                err(where.str() + ": target cell is absent");
                continue;
            }
            if (block.rows() != mc.rank(tgt) || block.cols() != mc.rank(src))
                err(where.str() + ": block shape does not match cell ranks");
        }
    }
    if (!rep.ok) return rep;

    int mi = mc.max_map_index();
    for (int n = 0; n <= 2 * mi; ++n) {
        for (const auto& [src, names] : mc.cells()) {
            Bidegree tgt{src.p - n, src.q + n - 2};
            if (mc.rank(tgt) == 0) continue;
            IntMatrix residual(mc.rank(tgt), names.size());
            for (int j = 0; j <= n; ++j) {
                int i = n - j;
                Bidegree mid{src.p - j, src.q + j - 1};
                if (mc.rank(mid) == 0) continue;
                residual = residual + mc.block_or_zero(i, mid) * mc.block_or_zero(j, src);
            }
            if (!residual.is_zero()) {
                rep.ok = false;
                rep.violations.push_back({n, src, residual});
            }
        }
    }
    return rep;
}

bool is_double_complex(const Multicomplex& mc) {
    return mc.max_map_index() <= 1;
}

Multicomplex transpose_double(const Multicomplex& mc) {
    if (!is_double_complex(mc)) throw std::invalid_argument("not a double complex");
    Multicomplex out;
    for (const auto& [cell, names] : mc.cells()) out.add_cell({cell.q, cell.p}, names);
    for (const auto& [i, blocks] : mc.maps())
        for (const auto& [src, block] : blocks) out.add_block(1 - i, {src.q, src.p}, block);
    return out;
}

namespace {

struct Slot {
    int p = 0;
    int q = 0;
};

// Columns may mix into columns of generators with p at least as large;
// such matrices are closed under products and inverses, and conjugating
// by them keeps every boundary entry weakly filtration-decreasing.
struct PatternPair {
    IntMatrix w;
    IntMatrix w_inv;
};

}  // namespace

Multicomplex random_instance(std::uint64_t seed, int max_total_degree, std::size_t max_rank) {
    if (max_total_degree < 0) throw std::invalid_argument("negative degree bound");
    if (max_rank < 1) throw std::invalid_argument("rank bound must be positive");

    std::mt19937_64 rng(seed);
    auto pick = [&](std::uint64_t n) { return static_cast<std::size_t>(rng() % n); };

    std::vector<std::vector<Slot>> slots(static_cast<std::size_t>(max_total_degree) + 1);
    struct Edge {
        int n;
        std::size_t src, tgt;
        long coef;
    };
    std::vector<Edge> edges;
    static constexpr long kCoefs[] = {1, -1, 2, -2, 3, -3};

    std::size_t total = 0;
    while (total < max_rank) {
        bool two_term = max_rank - total >= 2 && max_total_degree >= 1 && pick(10) < 7;
        if (two_term) {
            int n = 1 + static_cast<int>(pick(static_cast<std::uint64_t>(max_total_degree)));
            int p1 = static_cast<int>(pick(static_cast<std::uint64_t>(n) + 1));
            int p2 = static_cast<int>(pick(static_cast<std::uint64_t>(std::min(p1, n - 1)) + 1));
            slots[n].push_back({p1, n - p1});
            slots[n - 1].push_back({p2, n - 1 - p2});
            edges.push_back({n, slots[n].size() - 1, slots[n - 1].size() - 1, kCoefs[pick(6)]});
            total += 2;
        } else {
            int n = static_cast<int>(pick(static_cast<std::uint64_t>(max_total_degree) + 1));
            int p = static_cast<int>(pick(static_cast<std::uint64_t>(n) + 1));
            slots[n].push_back({p, n - p});
            total += 1;
        }
    }

    // Sort each degree by decreasing p so cells occupy contiguous slots.
    std::vector<std::vector<std::size_t>> remap(slots.size());
    for (std::size_t n = 0; n < slots.size(); ++n) {
        std::vector<std::size_t> order(slots[n].size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return slots[n][a].p > slots[n][b].p; });
        remap[n].resize(order.size());
        for (std::size_t pos = 0; pos < order.size(); ++pos) remap[n][order[pos]] = pos;
        std::vector<Slot> sorted(order.size());
        for (std::size_t pos = 0; pos < order.size(); ++pos) sorted[pos] = slots[n][order[pos]];
        slots[n] = std::move(sorted);
    }

    std::vector<IntMatrix> boundary(slots.size());
    for (std::size_t n = 1; n < slots.size(); ++n) boundary[n] = IntMatrix(slots[n - 1].size(), slots[n].size());
    for (const Edge& e : edges) {
        std::size_t sn = static_cast<std::size_t>(e.n);
        boundary[sn](remap[sn - 1][e.tgt], remap[sn][e.src]) = e.coef;
    }

    std::vector<PatternPair> w(slots.size());
    for (std::size_t n = 0; n < slots.size(); ++n) {
        std::size_t m = slots[n].size();
        w[n] = {IntMatrix::identity(m), IntMatrix::identity(m)};
        if (m < 2) continue;
        static constexpr long kShears[] = {-2, -1, 1, 2};
        for (std::size_t t = 0; t < 2 * m; ++t) {
            std::size_t i = pick(m);
            std::size_t j = pick(m);
            if (i == j) continue;
            if (slots[n][i].p > slots[n][j].p) std::swap(i, j);
            Int lambda(kShears[pick(4)]);
            w[n].w.add_col_multiple(j, i, lambda);
            w[n].w_inv.add_row_multiple(i, j, Int(-lambda));
        }
        for (std::size_t i = 0; i < m; ++i)
            if (pick(2) == 1) {
                w[n].w.negate_col(i);
                w[n].w_inv.negate_row(i);
            }
    }

    for (std::size_t n = 1; n < slots.size(); ++n)
        boundary[n] = w[n - 1].w_inv * boundary[n] * w[n].w;

    Multicomplex mc;
    std::size_t counter = 0;
    std::vector<std::vector<std::string>> names(slots.size());
    for (std::size_t n = 0; n < slots.size(); ++n)
        for (std::size_t k = 0; k < slots[n].size(); ++k) names[n].push_back("g" + std::to_string(counter++));

    auto cell_ranges = [&](std::size_t n) {
        std::vector<std::pair<Bidegree, std::pair<std::size_t, std::size_t>>> out;
        std::size_t k = 0;
        while (k < slots[n].size()) {
            std::size_t e = k;
            while (e < slots[n].size() && slots[n][e].p == slots[n][k].p) ++e;
            out.push_back({{slots[n][k].p, slots[n][k].q}, {k, e}});
            k = e;
        }
        return out;
    };

    for (std::size_t n = 0; n < slots.size(); ++n)
        for (const auto& [cell, range] : cell_ranges(n))
            mc.add_cell(cell, std::vector<std::string>(names[n].begin() + static_cast<std::ptrdiff_t>(range.first),
                                                       names[n].begin() + static_cast<std::ptrdiff_t>(range.second)));

    for (std::size_t n = 1; n < slots.size(); ++n) {
        auto sources = cell_ranges(n);
        auto targets = cell_ranges(n - 1);
        for (const auto& [scell, srange] : sources)
            for (const auto& [tcell, trange] : targets) {
                assert(tcell.p <= scell.p || [&] {
                    for (std::size_t r = trange.first; r < trange.second; ++r)
                        for (std::size_t c = srange.first; c < srange.second; ++c)
                            if (boundary[n](r, c) != 0) return false;
                    return true;
                }());
                if (tcell.p > scell.p) continue;
                IntMatrix block(trange.second - trange.first, srange.second - srange.first);
                for (std::size_t r = trange.first; r < trange.second; ++r)
                    for (std::size_t c = srange.first; c < srange.second; ++c)
                        block(r - trange.first, c - srange.first) = boundary[n](r, c);
                mc.add_block(scell.p - tcell.p, scell, std::move(block));
            }
    }
    return mc;
}

}  // namespace specseq
