#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specseq/fixtures.hpp"
#include "specseq/homology.hpp"
#include "specseq/normal_form.hpp"

using namespace specseq;

namespace {

// Independent structure of H_n from ranks and elementary divisors alone:
// free rank = rank C_n - rank d_n - rank d_{n+1}, torsion = nontrivial
// invariant factors of d_{n+1}.
GroupStructure classical_structure(const FilteredComplex& fc, int n) {
    auto matrix_rank = [](const IntMatrix& m) {
        SmithForm f = snf(m);
        std::size_t r = 0;
        while (r < std::min(m.rows(), m.cols()) && f.d(r, r) != 0) ++r;
        return r;
    };
    GroupStructure st;
    IntMatrix out = fc.boundary(n);
    IntMatrix in = fc.boundary(n + 1);
    st.free_rank = fc.rank(n) - matrix_rank(out) - matrix_rank(in);
    SmithForm f = snf(in);
    for (std::size_t i = 0; i < std::min(in.rows(), in.cols()); ++i)
        if (f.d(i, i) >= 2) st.torsion.push_back(f.d(i, i));
    return st;
}

}  // namespace

TEST_CASE("cycles and boundaries") {
    FilteredComplex fc = assemble(make_fixture("example1"));
    // degree 2: kernel of [[1,1],[0,1]] is trivial
    CHECK(cycle_lattice(fc, 2).rank() == 0);
    CHECK(cycle_lattice(fc, 1).rank() == 2);
    CHECK(boundary_lattice(fc, 1).rank() == 2);
    CHECK(boundary_lattice(fc, 2).rank() == 0);

    // restricting to a filtration step cuts the kernel down
    CHECK(filtered_cycle_lattice(fc, 1, 1).rank() == 2);
    CHECK(filtered_cycle_lattice(fc, 1, 0).rank() == 1);
    CHECK(filtered_cycle_lattice(fc, 1, -1).rank() == 0);
}

TEST_CASE("homology of the fixtures") {
    // example1 assembles to an acyclic complex
    GradedGroup h = chain_homology(assemble(make_fixture("example1")));
    for (const Subquotient& sq : h.by_degree) CHECK(sq.is_trivial());

    // example3 keeps one class in degree 1 and one in degree 2
    h = chain_homology(assemble(make_fixture("example3")));
    CHECK(h.by_degree[0].is_trivial());
    CHECK(h.by_degree[1].structure() == GroupStructure{1, {}});
    CHECK(h.by_degree[2].structure() == GroupStructure{1, {}});

    for (int r = 2; r <= 5; ++r) {
        GradedGroup flat = chain_homology(assemble(make_fixture("example2", r)));
        for (const Subquotient& sq : flat.by_degree) CHECK(sq.is_trivial());
    }
}

TEST_CASE("homology matches the rank and divisor formulas") {
    for (std::uint64_t seed = 500; seed < 520; ++seed) {
        FilteredComplex fc = assemble(random_instance(seed, 4, 10));
        GradedGroup h = chain_homology(fc);
        for (int n = 0; n <= fc.max_degree(); ++n)
            CHECK(h.by_degree[static_cast<std::size_t>(n)].structure() == classical_structure(fc, n));
    }
}

TEST_CASE("filtered homology grows with s") {
    FilteredComplex fc = assemble(make_fixture("example3"));
    // H_2 is generated in filtration 2, invisible below
    CHECK(filtered_homology(fc, 1).by_degree[2].is_trivial());
    CHECK(filtered_homology(fc, 2).by_degree[2].structure() == GroupStructure{1, {}});
    // H_1 is generated in filtration 0 already
    CHECK(filtered_homology(fc, 0).by_degree[1].structure() == GroupStructure{1, {}});
}

TEST_CASE("associated graded ranks add up to homology") {
    for (std::uint64_t seed = 900; seed < 915; ++seed) {
        FilteredComplex fc = assemble(random_instance(seed, 4, 10));
        GradedGroup h = chain_homology(fc);
        BigradedGroup graded = associated_graded(fc);
        for (int n = 0; n <= fc.max_degree(); ++n) {
            std::size_t free_total = 0;
            for (const auto& [cell, sq] : graded.cells)
                if (cell.p + cell.q == n) free_total += sq.free_rank();
            CHECK(free_total == h.by_degree[static_cast<std::size_t>(n)].free_rank());
        }
    }
    // on the fixtures the graded pieces are exactly the homology
    BigradedGroup g = associated_graded(assemble(make_fixture("example3")));
    CHECK(g.structure_at({0, 1}) == GroupStructure{1, {}});
    CHECK(g.structure_at({2, 0}) == GroupStructure{1, {}});
    CHECK(g.structure_at({1, 0}) == GroupStructure{});
    CHECK(g.cells.size() == 2);
}
