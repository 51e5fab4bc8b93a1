#pragma once

#include "specseq/multicomplex.hpp"

#include <stdexcept>
#include <string>

namespace specseq {

struct document_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Document format, version "1":
//
// {
//   "format_version": "1",
//   "modules": { "p,q": ["name", ...], ... },
//   "maps":    { "i": [{"from": "name", "to": "name", "coef": c}, ...], ... }
// }
//
// Generator names are global: each may appear in one cell only, and map
// entries refer to them by name. A map entry under key i must shift
// bidegrees by exactly (-i, i-1). Coefficients are nonzero integers; values
// beyond the JSON integer range may be written as decimal strings.
Multicomplex parse_document(const std::string& text);
Multicomplex parse_document_file(const std::string& path);

std::string serialize_document(const Multicomplex& mc);

}  // namespace specseq
