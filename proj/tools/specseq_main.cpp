#include "specseq/document.hpp"
#include "specseq/fixtures.hpp"
#include "specseq/render.hpp"
#include "specseq/spectral.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace specseq;

constexpr std::uint64_t kDefaultSeed = 20260822;

struct InputSpec {
    std::string file;
    std::string fixture;
    int param = kNoParam;
};

void add_input_options(CLI::App* cmd, InputSpec& in) {
    cmd->add_option("file", in.file, "multicomplex document (JSON)");
    cmd->add_option("--fixture", in.fixture, "built-in fixture name (see 'fixtures')");
    cmd->add_option("--param-r", in.param, "depth parameter for parametrized fixtures");
}

Multicomplex load_input(const InputSpec& in) {
    if (in.file.empty() == in.fixture.empty())
        throw std::invalid_argument("give either a document file or --fixture");
    if (!in.fixture.empty()) return make_fixture(in.fixture, in.param);
    if (in.param != kNoParam) throw std::invalid_argument("--param-r only applies to fixtures");
    return parse_document_file(in.file);
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int run_validate(const InputSpec& in) {
    Multicomplex mc = load_input(in);
    ValidationReport rep = validate(mc);
    if (rep.ok) {
        std::size_t gens = 0;
        for (const auto& [cell, names] : mc.cells()) gens += names.size();
        std::cout << "ok: " << mc.cells().size() << " cells, " << gens << " generators, relations hold up to n = "
                  << 2 * std::max(mc.max_map_index(), 0) << "\n";
        return 0;
    }
    for (const std::string& e : rep.structural_errors) std::cout << "structural: " << e << "\n";
    for (const RelationViolation& v : rep.violations)
        std::cout << "relation n=" << v.n << " fails at (" << v.source.p << "," << v.source.q
                  << "): residual " << v.residual.to_string() << "\n";
    return 1;
}

int run_homology(const InputSpec& in) {
    Multicomplex mc = load_input(in);
    FilteredComplex fc = assemble(mc);
    GradedGroup h = chain_homology(fc);
    std::cout << "total complex homology:\n";
    for (int n = 0; n <= fc.max_degree(); ++n) {
        const Subquotient& sq = h.by_degree[static_cast<std::size_t>(n)];
        std::cout << "  H_" << n << " = " << sq.structure().to_string() << "\n";
        std::vector<std::string> names = generator_names(fc, n);
        for (std::size_t i = 0; i < sq.generator_count(); ++i) {
            std::cout << "    " << format_expression(sq.generators()[i], names);
            if (i >= sq.free_rank()) std::cout << "  (order " << sq.torsion()[i - sq.free_rank()].get_str() << ")";
            std::cout << "\n";
        }
    }
    std::cout << "associated graded of the filtration:\n";
    BigradedGroup graded = associated_graded(fc);
    if (graded.cells.empty()) std::cout << "  0\n";
    for (const auto& [cell, sq] : graded.cells)
        std::cout << "  gr_{" << cell.p << "," << cell.q << "} = " << sq.structure().to_string() << "\n";
    return 0;
}

int run_pages(const InputSpec& in, int max_r, const std::string& format, const std::string& dot_path) {
    Multicomplex mc = load_input(in);
    FilteredComplex fc = assemble(mc);
    if (max_r < 1) max_r = std::max(global_stabilization_bound(fc), 1);
    std::vector<Page> pages;
    for (int r = 1; r <= max_r; ++r) pages.push_back(page(fc, r));
    pages.push_back(e_infinity(fc));

    if (!dot_path.empty()) {
        std::ofstream out(dot_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write '" + dot_path + "'");
        out << render_pages_dot(fc, pages);
    }
    if (format == "json") {
        nlohmann::json j;
        j["pages"] = nlohmann::json::array();
        for (const Page& pg : pages) j["pages"].push_back(page_to_json(fc, pg));
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Page& pg : pages) std::cout << render_page_text(fc, pg);
    }
    return 0;
}

int run_diff(const InputSpec& in, int r, int s, int t) {
    Multicomplex mc = load_input(in);
    FilteredComplex fc = assemble(mc);
    Subquotient dom = page_cell(fc, r, s, t);
    Subquotient cod = page_cell(fc, r, s - r, t + r - 1);
    std::cout << "E^" << r << "_{" << s << "," << t << "} = " << dom.structure().to_string() << "\n";
    std::cout << "E^" << r << "_{" << s - r << "," << t + r - 1 << "} = " << cod.structure().to_string() << "\n";
    InducedMap d = induce(fc.boundary(s + t), dom, cod);
    if (!d.well_defined) throw std::logic_error("boundary does not induce a page differential");
    std::cout << "d^" << r << " matrix: " << d.matrix.to_string() << "\n";
    std::vector<std::string> src_names = generator_names(fc, s + t);
    std::vector<std::string> tgt_names = generator_names(fc, s + t - 1);
    for (std::size_t j = 0; j < dom.generator_count(); ++j) {
        IntVec image(cod.ambient_rank());
        for (std::size_t i = 0; i < cod.generator_count(); ++i)
            if (d.matrix(i, j) != 0) image = image + d.matrix(i, j) * cod.generators()[i];
        std::cout << "  " << format_expression(dom.generators()[j], src_names) << " |-> "
                  << format_expression(image, tgt_names) << "\n";
    }
    return 0;
}

int run_compare(const InputSpec& in, int r, int s, int t, bool cell_given, bool expect_agree) {
    Multicomplex mc = load_input(in);
    FilteredComplex fc = assemble(mc);
    std::vector<Bidegree> targets;
    if (cell_given) {
        targets.push_back({s, t});
    } else {
        targets = support_cells(fc);
    }
    bool all_agree = true;
    for (Bidegree cell : targets) {
        ComparisonReport rep = induced_map_on_page(mc, r, cell.p, cell.q);
        if (rep.domain_cell.is_trivial() && !cell_given) continue;
        std::cout << "(" << cell.p << "," << cell.q << ") -> (" << cell.p - r << "," << cell.q + r - 1
                  << "): E^" << r << " = " << rep.domain_cell.structure().to_string()
                  << ", d^" << r << " image = " << rep.dr_image.structure().to_string()
                  << ", admissible domain = " << rep.admissible_domain.structure().to_string()
                  << ", induced image = " << rep.induced_image.structure().to_string()
                  << ", agrees = " << yesno(rep.agrees) << "\n";
        if (!rep.agrees) {
            all_agree = false;
            if (!rep.domain_is_full)
                std::cout << "    admissible classes do not exhaust the cell\n";
            if (!rep.images_defined)
                std::cout << "    d_" << r << " pushes some admissible class outside the r-cycles\n";
            if (!rep.generators_match)
                std::cout << "    values differ on an admissible class\n";
        }
    }
    return expect_agree && !all_agree ? 1 : 0;
}

int run_converge(const InputSpec& in) {
    Multicomplex mc = load_input(in);
    FilteredComplex fc = assemble(mc);
    Page einf = e_infinity(fc);
    BigradedGroup graded = associated_graded(fc);
    std::cout << "E^inf vs associated graded homology:\n";
    std::set<Bidegree> keys;
    for (const auto& [cell, sq] : einf.cells) keys.insert(cell);
    for (const auto& [cell, sq] : graded.cells) keys.insert(cell);
    if (keys.empty()) std::cout << "  (both vanish)\n";
    for (Bidegree cell : keys)
        std::cout << "  (" << cell.p << "," << cell.q << "): " << einf.structure_at(cell).to_string() << " vs "
                  << graded.structure_at(cell).to_string() << "\n";
    ConvergenceReport rep = verify_convergence(fc);
    if (!rep.ok) {
        for (const std::string& m : rep.mismatches) std::cout << "mismatch " << m << "\n";
        std::cout << "FAIL\n";
        return 1;
    }
    std::cout << "PASS\n";
    return 0;
}

int run_fixtures(const std::string& dump, int param) {
    if (dump.empty()) {
        for (const FixtureInfo& f : fixture_list()) {
            std::cout << f.name;
            if (f.parametrized) std::cout << " (parametrized, --param-r 2..12)";
            std::cout << "\n    " << f.description << "\n";
        }
        return 0;
    }
    std::cout << serialize_document(make_fixture(dump, param));
    return 0;
}

std::uint64_t selftest_seed() {
    const char* env = std::getenv("SPECSEQ_SEED");
    if (!env || !*env) return kDefaultSeed;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw std::invalid_argument("SPECSEQ_SEED must be a decimal integer");
    return v;
}

int run_selftest(int instances, int max_degree, std::size_t max_rank) {
    std::uint64_t base = selftest_seed();
    std::cout << "selftest: " << instances << " instances, base seed " << base << ", max degree " << max_degree
              << ", max rank " << max_rank << "\n";
    for (int k = 0; k < instances; ++k) {
        std::uint64_t seed = base + static_cast<std::uint64_t>(k);
        Multicomplex mc = random_instance(seed, max_degree, max_rank);
        std::string where = "instance " + std::to_string(k) + " (seed " + std::to_string(seed) + ")";
        if (!validate(mc).ok) {
            std::cout << where << ": FAIL relations\n";
            return 1;
        }
        FilteredComplex fc = assemble(mc);
        if (extract_multicomplex(fc) != mc) {
            std::cout << where << ": FAIL assemble/extract round trip\n";
            return 1;
        }
        if (parse_document(serialize_document(mc)) != mc) {
            std::cout << where << ": FAIL document round trip\n";
            return 1;
        }
        ColumnReport columns = verify_e1_columns(mc);
        if (!columns.ok) {
            std::cout << where << ": FAIL column homology vs E^1\n";
            for (const std::string& m : columns.mismatches) std::cout << "  " << m << "\n";
            return 1;
        }
        int bound = global_stabilization_bound(fc);
        for (int r = 0; r <= bound; ++r) turn_page(fc, page(fc, r));  // throws on mismatch
        ConvergenceReport conv = verify_convergence(fc);
        if (!conv.ok) {
            std::cout << where << ": FAIL convergence\n";
            for (const std::string& m : conv.mismatches) std::cout << "  " << m << "\n";
            return 1;
        }
        for (Bidegree cell : support_cells(fc)) {
            ComparisonReport rep = induced_map_on_page(mc, 1, cell.p, cell.q);
            if (!rep.agrees) {
                std::cout << where << ": FAIL d^1 comparison at (" << cell.p << "," << cell.q << ")\n";
                return 1;
            }
        }
        std::cout << where << ": ok\n";
    }
    std::cout << "selftest passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral sequences of first-quadrant multicomplexes over Z"};
    app.require_subcommand(1);

    InputSpec in;

    auto* c_validate = app.add_subcommand("validate", "check the multicomplex axioms");
    add_input_options(c_validate, in);

    auto* c_homology = app.add_subcommand("homology", "homology of the total complex and its associated graded");
    add_input_options(c_homology, in);

    auto* c_pages = app.add_subcommand("pages", "all pages with differentials, up to stabilization");
    add_input_options(c_pages, in);
    int max_r = 0;
    std::string format = "table";
    std::string dot_path;
    c_pages->add_option("--max-r", max_r, "last page to print (default: global stabilization bound)");
    c_pages->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
    c_pages->add_option("--emit-dot", dot_path, "also write a Graphviz rendering to this file");

    auto* c_diff = app.add_subcommand("diff", "one differential d^r at (s,t)");
    add_input_options(c_diff, in);
    int r = 1, s = 0, t = 0;
    c_diff->add_option("--r", r, "page index")->required();
    auto* diff_s = c_diff->add_option("--s", s, "filtration degree")->required();
    auto* diff_t = c_diff->add_option("--t", t, "complementary degree")->required();
    (void)diff_s;
    (void)diff_t;

    auto* c_compare = app.add_subcommand("compare", "d^r against the map induced by the structure map d_r");
    add_input_options(c_compare, in);
    int cr = 2, cs = 0, ct = 0;
    bool expect_agree = false;
    c_compare->add_option("--r", cr, "page index (>= 1)")->required();
    auto* opt_cs = c_compare->add_option("--s", cs, "filtration degree");
    auto* opt_ct = c_compare->add_option("--t", ct, "complementary degree");
    opt_cs->needs(opt_ct);
    opt_ct->needs(opt_cs);
    c_compare->add_flag("--expect-agree", expect_agree, "exit 1 when any cell disagrees");

    auto* c_converge = app.add_subcommand("converge", "E-infinity against the associated graded homology");
    add_input_options(c_converge, in);

    auto* c_fixtures = app.add_subcommand("fixtures", "list built-in fixtures or dump one as a document");
    std::string dump;
    int fixture_param = kNoParam;
    c_fixtures->add_option("--dump", dump, "fixture to serialize to stdout");
    c_fixtures->add_option("--param-r", fixture_param, "depth parameter for parametrized fixtures");

    auto* c_selftest = app.add_subcommand("selftest", "verify random instances end to end (env SPECSEQ_SEED)");
    int instances = 25;
    int st_degree = 4;
    std::size_t st_rank = 10;
    c_selftest->add_option("--instances", instances, "number of random instances")->check(CLI::PositiveNumber);
    c_selftest->add_option("--max-degree", st_degree, "largest total degree")->check(CLI::NonNegativeNumber);
    c_selftest->add_option("--max-rank", st_rank, "total rank budget")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_validate->parsed()) return run_validate(in);
        if (c_homology->parsed()) return run_homology(in);
        if (c_pages->parsed()) return run_pages(in, max_r, format, dot_path);
        if (c_diff->parsed()) return run_diff(in, r, s, t);
        if (c_compare->parsed()) return run_compare(in, cr, cs, ct, opt_cs->count() > 0, expect_agree);
        if (c_converge->parsed()) return run_converge(in);
        if (c_fixtures->parsed()) return run_fixtures(dump, fixture_param);
        if (c_selftest->parsed()) return run_selftest(instances, st_degree, st_rank);
    } catch (const specseq::document_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
