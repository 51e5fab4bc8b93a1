#pragma once

#include "specseq/multicomplex.hpp"

#include <string>
#include <vector>

namespace specseq {

struct FixtureInfo {
    std::string name;
    bool parametrized = false;  // takes a depth parameter r in [2, 12]
    std::string description;
};

const std::vector<FixtureInfo>& fixture_list();

// r is the depth parameter for parametrized fixtures and must stay at
// kNoParam for the rest.
inline constexpr int kNoParam = -1;
Multicomplex make_fixture(const std::string& name, int r = kNoParam);

}  // namespace specseq
