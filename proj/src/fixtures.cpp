#include "specseq/fixtures.hpp"

#include <stdexcept>

namespace specseq {

namespace {

std::string gen_name(const std::string& stem, int p, int q) {
    return stem + "_{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

IntMatrix one_by_one(long v) {
    IntMatrix m(1, 1);
    m(0, 0) = v;
    return m;
}

Multicomplex example1() {
    Multicomplex mc;
    mc.add_cell({0, 1}, {"x_{0,1}"});
    mc.add_cell({1, 0}, {"x_{1,0}"});
    mc.add_cell({1, 1}, {"x_{1,1}"});
    mc.add_cell({2, 0}, {"x_{2,0}"});
    mc.add_block(0, {1, 1}, one_by_one(1));
    mc.add_block(1, {1, 1}, one_by_one(1));
    mc.add_block(1, {2, 0}, one_by_one(1));
    return mc;
}

// Two adjacent diagonals: generators x_{p,r-p} for p = 1..r above
// x_{p,r-1-p} for p = 0..r-1, with d_0 dropping q and d_1 dropping p.
Multicomplex example2(int r) {
    Multicomplex mc;
    for (int p = 1; p <= r; ++p) mc.add_cell({p, r - p}, {gen_name("x", p, r - p)});
    for (int p = 0; p <= r - 1; ++p) mc.add_cell({p, r - 1 - p}, {gen_name("x", p, r - 1 - p)});
    for (int p = 1; p <= r; ++p) {
        if (p <= r - 1) mc.add_block(0, {p, r - p}, one_by_one(1));
        mc.add_block(1, {p, r - p}, one_by_one(1));
    }
    return mc;
}

Multicomplex example3() {
    Multicomplex mc = example1();
    mc.add_block(2, {2, 0}, one_by_one(1));
    return mc;
}

Multicomplex example3gen(int r) {
    Multicomplex mc = example2(r);
    mc.add_block(r, {r, 0}, one_by_one(r % 2 == 0 ? 1 : -1));
    return mc;
}

Multicomplex example4() {
    Multicomplex mc;
    mc.add_cell({0, 1}, {"x_{0,1}", "x~_{0,1}"});
    mc.add_cell({1, 0}, {"x_{1,0}"});
    mc.add_cell({1, 1}, {"x_{1,1}"});
    mc.add_cell({2, 0}, {"x_{2,0}", "x~_{2,0}"});
    mc.add_block(0, {1, 1}, one_by_one(1));
    IntMatrix d1_11(2, 1);
    d1_11(0, 0) = 1;  // x_{1,1} -> x_{0,1}
    mc.add_block(1, {1, 1}, d1_11);
    IntMatrix d1_20(1, 2);
    d1_20(0, 0) = 1;  // x_{2,0} -> x_{1,0}, x~_{2,0} -> 0
    mc.add_block(1, {2, 0}, d1_20);
    IntMatrix d2_20(2, 2);
    d2_20(1, 1) = 1;  // x~_{2,0} -> x~_{0,1}, x_{2,0} -> 0
    mc.add_block(2, {2, 0}, d2_20);
    return mc;
}

// example1 next to a depth-3 example2 on disjoint generators; the page
// differential and the induced map then part ways once at r = 2 and once
// at r = 3.
Multicomplex combined() {
    Multicomplex mc;
    mc.add_cell({0, 1}, {"x_{0,1}"});
    mc.add_cell({1, 0}, {"x_{1,0}"});
    mc.add_cell({1, 1}, {"x_{1,1}", "y_{1,1}"});
    mc.add_cell({2, 0}, {"x_{2,0}", "y_{2,0}"});
    mc.add_cell({0, 2}, {"y_{0,2}"});
    mc.add_cell({1, 2}, {"y_{1,2}"});
    mc.add_cell({2, 1}, {"y_{2,1}"});
    mc.add_cell({3, 0}, {"y_{3,0}"});

    IntMatrix xd0_11(1, 2);
    xd0_11(0, 0) = 1;  // x_{1,1} -> x_{1,0}
    mc.add_block(0, {1, 1}, xd0_11);
    IntMatrix xd1_11(1, 2);
    xd1_11(0, 0) = 1;  // x_{1,1} -> x_{0,1}
    mc.add_block(1, {1, 1}, xd1_11);
    IntMatrix xd1_20(1, 2);
    xd1_20(0, 0) = 1;  // x_{2,0} -> x_{1,0}
    mc.add_block(1, {2, 0}, xd1_20);

    IntMatrix into_pair(2, 1);
    into_pair(1, 0) = 1;  // lands on the y generator of a shared cell
    mc.add_block(0, {1, 2}, into_pair);
    mc.add_block(0, {2, 1}, into_pair);
    mc.add_block(1, {2, 1}, into_pair);
    mc.add_block(1, {3, 0}, into_pair);
    mc.add_block(1, {1, 2}, one_by_one(1));  // y_{1,2} -> y_{0,2}
    return mc;
}

}  // namespace

const std::vector<FixtureInfo>& fixture_list() {
    static const std::vector<FixtureInfo> list = {
        {"example1", false,
         "double complex on four generators whose d^2 is an isomorphism even though no structure map could "
         "induce it"},
        {"example2", true,
         "two adjacent diagonals of length r; the sequence is flat until d^r maps the corner onto the axis"},
        {"example3", false, "example1 plus a d_2 block; every page differential from r = 2 on is zero"},
        {"example3gen", true, "example2 plus a d_r block canceling the corner; degenerates at E^2"},
        {"example4", false,
         "d^2 and the map induced by d_2 are both nonzero yet have different images on the same cell"},
        {"combined", false,
         "example1 next to a depth-3 example2; the page and induced differentials part ways at r = 2 and r = 3"},
    };
    return list;
}

Multicomplex make_fixture(const std::string& name, int r) {
    const FixtureInfo* info = nullptr;
    for (const FixtureInfo& f : fixture_list())
        if (f.name == name) info = &f;
    if (!info) throw std::invalid_argument("unknown fixture '" + name + "'");
    if (info->parametrized) {
        if (r < 2 || r > 12) throw std::invalid_argument("fixture '" + name + "' needs a parameter in [2, 12]");
    } else if (r != kNoParam) {
        throw std::invalid_argument("fixture '" + name + "' takes no parameter");
    }
    if (name == "example1") return example1();
    if (name == "example2") return example2(r);
    if (name == "example3") return example3();
    if (name == "example3gen") return example3gen(r);
    if (name == "example4") return example4();
    return combined();
}

}  // namespace specseq
