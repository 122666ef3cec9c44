#ifndef HELIXKIT_HELIX_FORMAT_HPP
#define HELIXKIT_HELIX_FORMAT_HPP

#include <string>

#include "helixkit/helix/helix.hpp"

namespace helixkit {

// Integers are written as exact JSON number literals of arbitrary length;
// fractions always as "p/q" strings.

std::string helix_table_json(const HelixTable& table, const PositivityReport* positivity = nullptr);
/// Columns n,d,r,dp,rp,slope; dp/rp empty at n = 0.
std::string helix_table_csv(const HelixTable& table);
/// Aligned human-readable table with an approximate slope column.
std::string helix_table_text(const HelixTable& table);

std::string two_sided_json(const TwoSidedTable& table);
/// Columns n,rank,degree,slope.
std::string two_sided_csv(const TwoSidedTable& table);
std::string two_sided_text(const TwoSidedTable& table);

std::string rational_decimal(const Rational& r, unsigned digits);

}  // namespace helixkit

#endif  // HELIXKIT_HELIX_FORMAT_HPP
