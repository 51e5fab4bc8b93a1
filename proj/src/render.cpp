#include "specseq/render.hpp"

#include <algorithm>
#include <sstream>

namespace specseq {

namespace {

using nlohmann::json;

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

std::string term(const Int& c, const std::string& name, bool leading) {
    Int a = abs(c);
    std::string sign = c < 0 ? (leading ? "-" : " - ") : (leading ? "" : " + ");
    std::string mag = a == 1 ? "" : a.get_str() + "*";
    return sign + mag + name;
}

IntVec class_representative(const Subquotient& cell, const IntMatrix& matrix, std::size_t col) {
    IntVec v(cell.ambient_rank());
    for (std::size_t i = 0; i < cell.generator_count(); ++i)
        if (matrix(i, col) != 0) v = v + matrix(i, col) * cell.generators()[i];
    return v;
}

}  // namespace

std::string format_expression(const IntVec& v, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        out += term(v[i], names[i], out.empty());
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> generator_names(const FilteredComplex& fc, int n) {
    std::vector<std::string> names;
    for (const TotalGenerator& g : fc.generators(n)) names.push_back(g.name);
    return names;
}

std::string page_label(const Page& pg) {
    return pg.infinity ? "E^inf" : "E^" + std::to_string(pg.r);
}

std::string render_page_text(const FilteredComplex& fc, const Page& pg) {
    std::ostringstream os;
    os << page_label(pg) << ":\n";
    if (pg.cells.empty()) {
        os << "  (zero page)\n";
        return os.str();
    }

    int smax = 0, tmax = 0;
    for (const auto& [cell, sq] : pg.cells) {
        smax = std::max(smax, cell.p);
        tmax = std::max(tmax, cell.q);
    }
    std::vector<std::vector<std::string>> grid(static_cast<std::size_t>(tmax) + 1,
                                               std::vector<std::string>(static_cast<std::size_t>(smax) + 1, "."));
    for (const auto& [cell, sq] : pg.cells)
        grid[static_cast<std::size_t>(cell.q)][static_cast<std::size_t>(cell.p)] = sq.structure().to_string();

    std::vector<std::size_t> width(static_cast<std::size_t>(smax) + 1);
    for (int s = 0; s <= smax; ++s) {
        width[static_cast<std::size_t>(s)] = std::to_string(s).size();
        for (int t = 0; t <= tmax; ++t)
            width[static_cast<std::size_t>(s)] =
                std::max(width[static_cast<std::size_t>(s)], grid[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)].size());
    }
    std::size_t t_width = std::to_string(tmax).size();
    auto pad = [](const std::string& text, std::size_t w) {
        return std::string(w > text.size() ? w - text.size() : 0, ' ') + text;
    };

    os << "  " << pad("t\\s", t_width + 3);
    for (int s = 0; s <= smax; ++s) os << "  " << pad(std::to_string(s), width[static_cast<std::size_t>(s)]);
    os << "\n";
    for (int t = tmax; t >= 0; --t) {
        os << "  " << pad(std::to_string(t), t_width + 3);
        for (int s = 0; s <= smax; ++s)
            os << "  " << pad(grid[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)], width[static_cast<std::size_t>(s)]);
        os << "\n";
    }

    for (const auto& [cell, sq] : pg.cells) {
        os << "  " << page_label(pg) << "_{" << cell.p << "," << cell.q << "} = " << sq.structure().to_string()
           << "\n";
        std::vector<std::string> names = generator_names(fc, cell.p + cell.q);
        for (std::size_t i = 0; i < sq.generator_count(); ++i) {
            os << "    " << format_expression(sq.generators()[i], names);
            if (i >= sq.free_rank()) os << "  (order " << sq.torsion()[i - sq.free_rank()].get_str() << ")";
            os << "\n";
        }
    }

    for (const auto& [cell, d] : pg.differentials) {
        if (d.is_zero_map()) continue;
        Bidegree tgt{cell.p - pg.r, cell.q + pg.r - 1};
        os << "  d^" << pg.r << ": (" << cell.p << "," << cell.q << ") -> (" << tgt.p << "," << tgt.q << ")\n";
        std::vector<std::string> src_names = generator_names(fc, cell.p + cell.q);
        std::vector<std::string> tgt_names = generator_names(fc, cell.p + cell.q - 1);
        for (std::size_t j = 0; j < d.domain.generator_count(); ++j) {
            IntVec image = class_representative(d.codomain, d.matrix, j);
            os << "    " << format_expression(d.domain.generators()[j], src_names) << " |-> "
               << format_expression(image, tgt_names) << "\n";
        }
    }
    return os.str();
}

nlohmann::json structure_to_json(const GroupStructure& g) {
    json torsion = json::array();
    for (const Int& f : g.torsion) torsion.push_back(int_to_json(f));
    return json{{"free_rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

nlohmann::json page_to_json(const FilteredComplex& fc, const Page& pg) {
    json cells = json::array();
    for (const auto& [cell, sq] : pg.cells) {
        json c = structure_to_json(sq.structure());
        c["s"] = cell.p;
        c["t"] = cell.q;
        json gens = json::array();
        std::vector<std::string> names = generator_names(fc, cell.p + cell.q);
        for (const IntVec& g : sq.generators()) gens.push_back(format_expression(g, names));
        c["generators"] = std::move(gens);
        cells.push_back(std::move(c));
    }
    json diffs = json::array();
    for (const auto& [cell, d] : pg.differentials) {
        if (d.is_zero_map()) continue;
        json m = json::array();
        for (std::size_t i = 0; i < d.matrix.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < d.matrix.cols(); ++j) row.push_back(int_to_json(d.matrix(i, j)));
            m.push_back(std::move(row));
        }
        diffs.push_back(json{{"from", {{"s", cell.p}, {"t", cell.q}}},
                             {"to", {{"s", cell.p - pg.r}, {"t", cell.q + pg.r - 1}}},
                             {"matrix", std::move(m)}});
    }
    json out;
    out["label"] = page_label(pg);
    out["r"] = pg.r;
    out["infinity"] = pg.infinity;
    out["cells"] = std::move(cells);
    out["differentials"] = std::move(diffs);
    return out;
}

std::string render_pages_dot(const FilteredComplex& fc, const std::vector<Page>& pages) {
    (void)fc;
    std::ostringstream os;
    os << "digraph pages {\n  rankdir=BT;\n  node [shape=box];\n";
    for (const Page& pg : pages) {
        std::string rid = pg.infinity ? "inf" : std::to_string(pg.r);
        os << "  subgraph cluster_r" << rid << " {\n    label=\"" << page_label(pg) << "\";\n";
        for (const auto& [cell, sq] : pg.cells)
            os << "    r" << rid << "_s" << cell.p << "_t" << cell.q << " [label=\"(" << cell.p << "," << cell.q
               << "): " << sq.structure().to_string() << "\"];\n";
        for (const auto& [cell, d] : pg.differentials) {
            if (d.is_zero_map()) continue;
            os << "    r" << rid << "_s" << cell.p << "_t" << cell.q << " -> r" << rid << "_s" << cell.p - pg.r
               << "_t" << cell.q + pg.r - 1 << " [label=\"d^" << rid << "\"];\n";
        }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace specseq
