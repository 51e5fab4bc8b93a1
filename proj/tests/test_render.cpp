#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specseq/fixtures.hpp"
#include "specseq/render.hpp"

using namespace specseq;

namespace {

IntVec vec(std::initializer_list<long> entries) {
    IntVec v;
    for (long e : entries) v.emplace_back(e);
    return v;
}

const std::vector<std::string> kNames{"a", "b", "c"};

}  // namespace

TEST_CASE("expressions in a named basis") {
    CHECK(format_expression(vec({0, 0, 0}), kNames) == "0");
    CHECK(format_expression(vec({1, 0, 0}), kNames) == "a");
    CHECK(format_expression(vec({-1, 0, 0}), kNames) == "-a");
    CHECK(format_expression(vec({1, -1, 0}), kNames) == "a - b");
    CHECK(format_expression(vec({2, 0, -3}), kNames) == "2*a - 3*c");
    CHECK(format_expression(vec({0, 1, 1}), kNames) == "b + c");
}

TEST_CASE("page tables carry cells, generators and differentials") {
    FilteredComplex fc = assemble(make_fixture("example1"));
    std::string table = render_page_text(fc, page(fc, 2));
    CHECK(table.find("E^2") != std::string::npos);
    CHECK(table.find("x_{2,0} - x_{1,1}") != std::string::npos);
    CHECK(table.find("|->") != std::string::npos);
    CHECK(table.find("t\\s") != std::string::npos);

    std::string empty = render_page_text(fc, page(fc, 3));
    CHECK(empty.find("zero page") != std::string::npos);

    std::string inf = render_page_text(fc, e_infinity(fc));
    CHECK(inf.find("E^inf") != std::string::npos);
}

TEST_CASE("json rendering") {
    FilteredComplex fc = assemble(make_fixture("example4"));
    nlohmann::json j = page_to_json(fc, page(fc, 2));
    CHECK(j["r"] == 2);
    CHECK(j["infinity"] == false);
    CHECK(j["label"] == "E^2");
    REQUIRE(j["cells"].size() == 2);
    CHECK(j["cells"][0]["free_rank"] == 2);
    REQUIRE(j["differentials"].size() == 1);
    CHECK(j["differentials"][0]["from"]["s"] == 2);
    CHECK(j["differentials"][0]["matrix"].size() == 2);

    nlohmann::json inf = page_to_json(fc, e_infinity(fc));
    CHECK(inf["infinity"] == true);
    CHECK(inf["label"] == "E^inf");
}

TEST_CASE("graphviz rendering") {
    FilteredComplex fc = assemble(make_fixture("example1"));
    std::vector<Page> pages{page(fc, 1), page(fc, 2), e_infinity(fc)};
    std::string dot = render_pages_dot(fc, pages);
    CHECK(dot.find("digraph pages") != std::string::npos);
    CHECK(dot.find("cluster_r1") != std::string::npos);
    CHECK(dot.find("cluster_rinf") != std::string::npos);
    CHECK(dot.find("r2_s2_t0 -> r2_s0_t1") != std::string::npos);
    CHECK(dot.find("d^2") != std::string::npos);
}

TEST_CASE("torsion shows up in cell listings") {
    // one generator on each side of a multiplication by 2
    Multicomplex mc;
    mc.add_cell({0, 0}, {"bottom"});
    mc.add_cell({1, 0}, {"top"});
    mc.add_block(1, {1, 0}, IntMatrix::from_rows({{2}}));
    FilteredComplex fc = assemble(mc);
    Page einf = e_infinity(fc);
    CHECK(einf.structure_at({0, 0}) == GroupStructure{0, {Int(2)}});
    std::string table = render_page_text(fc, einf);
    CHECK(table.find("Z/2") != std::string::npos);
    CHECK(table.find("(order 2)") != std::string::npos);
}
