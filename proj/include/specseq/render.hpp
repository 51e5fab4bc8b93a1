#pragma once

#include "specseq/spectral.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace specseq {

// "x_{1,1} - 2*x_{2,0}", or "0" for the zero vector.
std::string format_expression(const IntVec& v, const std::vector<std::string>& names);

std::vector<std::string> generator_names(const FilteredComplex& fc, int n);

std::string page_label(const Page& pg);

// Grid of cell structures plus generator representatives and the nonzero
// differentials with generator images.
std::string render_page_text(const FilteredComplex& fc, const Page& pg);

nlohmann::json page_to_json(const FilteredComplex& fc, const Page& pg);

// One cluster per page, one node per nonzero cell, one edge per nonzero
// differential.
std::string render_pages_dot(const FilteredComplex& fc, const std::vector<Page>& pages);

nlohmann::json structure_to_json(const GroupStructure& g);

}  // namespace specseq
