#ifndef HELIXKIT_QUADRATIC_IO_HPP
#define HELIXKIT_QUADRATIC_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "helixkit/quadratic/presentation.hpp"

namespace helixkit {

// {"period": p, "gen_dims": [g_0, ...], "relations": [{"index": i, "rows": [["p/q", ...], ...]}]}
// A file may also hold {"presentations": [<presentation>, ...]}.
// Indices without a relations entry have no relations.

/// Throws InvalidPresentation for malformed JSON or schema violations.
std::vector<QuadraticPresentation> parse_presentations(std::string_view json_text);
QuadraticPresentation parse_presentation(std::string_view json_text);

std::string presentation_json(const QuadraticPresentation& p);
std::string presentations_json(const std::vector<QuadraticPresentation>& ps);

/// Columns index,degree,dim.
std::string dim_table_csv(const DimTable& t);

}  // namespace helixkit

#endif  // HELIXKIT_QUADRATIC_IO_HPP
