#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specseq/assembly.hpp"
#include "specseq/fixtures.hpp"

using namespace specseq;

TEST_CASE("assembled bases sort by decreasing filtration inside a degree") {
    FilteredComplex fc = assemble(make_fixture("example1"));
    CHECK(fc.max_degree() == 2);
    CHECK(fc.rank(1) == 2);
    CHECK(fc.rank(2) == 2);
    CHECK(fc.rank(0) == 0);
    CHECK(fc.rank(7) == 0);

    const auto& deg1 = fc.generators(1);
    REQUIRE(deg1.size() == 2);
    CHECK(deg1[0].p == 1);  // x_{1,0} before x_{0,1}
    CHECK(deg1[1].p == 0);
    const auto& deg2 = fc.generators(2);
    CHECK(deg2[0].name == "x_{2,0}");
    CHECK(deg2[1].name == "x_{1,1}");

    // boundary of x_{2,0} is x_{1,0}; of x_{1,1} is x_{1,0} + x_{0,1}
    CHECK(fc.boundary(2) == IntMatrix::from_rows({{1, 1}, {0, 1}}));
    CHECK(fc.boundary(1).rows() == 0);
    CHECK(fc.boundary(5).cols() == 0);
}

TEST_CASE("filtration bookkeeping") {
    FilteredComplex fc = assemble(make_fixture("example1"));
    CHECK(fc.max_filtration() == 2);
    CHECK(fc.filtration_indices(1, 0) == std::vector<std::size_t>{1});
    CHECK(fc.filtration_indices(1, 1) == std::vector<std::size_t>{0, 1});
    CHECK(fc.filtration_indices(2, 1) == std::vector<std::size_t>{1});
    CHECK(fc.filtration_indices(2, -1).empty());

    Lattice f0 = filtration_lattice(fc, 0, 1);
    CHECK(f0.rank() == 1);
    CHECK(f0.contains(IntVec{Int(0), Int(5)}));
    CHECK_FALSE(f0.contains(IntVec{Int(1), Int(0)}));
    CHECK(filtration_lattice(fc, 2, 1).rank() == 2);
    CHECK(filtration_lattice(fc, -1, 1).rank() == 0);
}

TEST_CASE("component matrices sum to the boundary") {
    Multicomplex mc = make_fixture("example3");
    FilteredComplex fc = assemble(mc);
    for (int n = 0; n <= fc.max_degree(); ++n) {
        IntMatrix sum(fc.rank(n - 1), fc.rank(n));
        for (int i = 0; i <= mc.max_map_index(); ++i) sum = sum + assemble_component(mc, i, n);
        CHECK(sum == fc.boundary(n));
    }
}

TEST_CASE("assemble and extract are mutually inverse") {
    for (const FixtureInfo& f : fixture_list()) {
        Multicomplex mc = make_fixture(f.name, f.parametrized ? 4 : kNoParam);
        CHECK(extract_multicomplex(assemble(mc)) == mc);
    }
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        Multicomplex mc = random_instance(seed, 4, 9);
        CHECK(extract_multicomplex(assemble(mc)) == mc);
    }
}

TEST_CASE("create validates its input") {
    using Gens = std::vector<std::vector<TotalGenerator>>;
    using Maps = std::vector<IntMatrix>;

    // fine: single generator, zero boundary
    Gens ok{{TotalGenerator{"a", 0, 0}}};
    CHECK(FilteredComplex::create(ok, Maps{IntMatrix(0, 1)}).rank(0) == 1);

    // bidegree inconsistent with its total degree
    Gens bad_degree{{TotalGenerator{"a", 1, 1}}};
    CHECK_THROWS_WITH_AS(FilteredComplex::create(bad_degree, Maps{IntMatrix(0, 1)}),
                         doctest::Contains("bidegree"), std::invalid_argument);

    // boundary shape mismatch
    Gens two{{TotalGenerator{"a", 0, 0}}, {TotalGenerator{"b", 1, 0}}};
    CHECK_THROWS_WITH_AS(FilteredComplex::create(two, Maps{IntMatrix(0, 1), IntMatrix(2, 1)}),
                         doctest::Contains("shape"), std::invalid_argument);

    // boundary raising filtration: c at p = 0 maps onto a at p = 1
    Gens raise{{},
               {TotalGenerator{"a", 1, 0}, TotalGenerator{"b", 0, 1}},
               {TotalGenerator{"c", 0, 2}}};
    CHECK_THROWS_WITH_AS(
        FilteredComplex::create(raise, Maps{IntMatrix(0, 0), IntMatrix(0, 2),
                                            IntMatrix::from_rows({{1}, {0}})}),
        doctest::Contains("filtration"), std::invalid_argument);

    // boundary squaring to something nonzero
    Gens square{{TotalGenerator{"a", 0, 0}},
                {TotalGenerator{"b", 0, 1}},
                {TotalGenerator{"c", 0, 2}}};
    CHECK_THROWS_WITH_AS(
        FilteredComplex::create(square, Maps{IntMatrix(0, 1), IntMatrix::from_rows({{1}}),
                                             IntMatrix::from_rows({{1}})}),
        doctest::Contains("square"), std::invalid_argument);
}

TEST_CASE("assemble rejects invalid multicomplexes") {
    Multicomplex bad;
    bad.add_cell({0, 0}, {"a"});
    bad.add_cell({1, 0}, {"b"});
    bad.add_cell({0, 1}, {"c"});
    bad.add_cell({1, 1}, {"d"});
    bad.add_block(0, {1, 1}, IntMatrix::from_rows({{1}}));
    bad.add_block(1, {1, 1}, IntMatrix::from_rows({{1}}));
    bad.add_block(1, {1, 0}, IntMatrix::from_rows({{1}}));
    bad.add_block(0, {0, 1}, IntMatrix::from_rows({{1}}));
    CHECK_THROWS_WITH_AS(assemble(bad), doctest::Contains("relations"), std::invalid_argument);
}

TEST_CASE("support cells") {
    FilteredComplex fc = assemble(make_fixture("example1"));
    std::vector<Bidegree> cells = support_cells(fc);
    REQUIRE(cells.size() == 4);
    CHECK(cells[0] == Bidegree{0, 1});
    CHECK(cells[3] == Bidegree{2, 0});
}
