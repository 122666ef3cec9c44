#include "helixkit/quadratic/io.hpp"

#include <sstream>

#include <json.hpp>

#include "helixkit/error.hpp"

namespace helixkit {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(Errc::InvalidPresentation, "presentation schema: " + what);
}

Rational entry_value(const ordered_json& e) {
  try {
    if (e.is_string()) return Rational::parse(e.get<std::string>());
    if (e.is_number_integer()) return Rational(e.get<long>());
  } catch (const Error& err) {
    schema_error(err.what());
  }
  schema_error("relation entries must be \"p/q\" strings");
}

std::size_t positive_size(const ordered_json& e, const char* what) {
  if (!e.is_number_integer() || e.get<long long>() < 0) schema_error(std::string(what) + " must be a nonnegative integer");
  return e.get<std::size_t>();
}

QuadraticPresentation from_json(const ordered_json& j) {
  if (!j.is_object()) schema_error("presentation must be an object");
  if (!j.contains("gen_dims") || !j["gen_dims"].is_array()) schema_error("missing gen_dims array");
  std::vector<std::size_t> gens;
  for (const auto& g : j["gen_dims"]) gens.push_back(positive_size(g, "gen_dims entry"));
  if (gens.empty()) schema_error("gen_dims must be non-empty");
  if (j.contains("period") && positive_size(j["period"], "period") != gens.size())
    schema_error("period does not match the number of gen_dims");
  const std::size_t p = gens.size();

  std::vector<RationalMatrix> rels(p);
  for (std::size_t i = 0; i < p; ++i) rels[i] = RationalMatrix(0, gens[i] * gens[(i + 1) % p]);
  std::vector<bool> seen(p, false);
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) schema_error("relations must be an array");
    for (const auto& block : j["relations"]) {
      if (!block.is_object() || !block.contains("index") || !block.contains("rows"))
        schema_error("each relations entry needs index and rows");
      std::size_t i = positive_size(block["index"], "relations index");
      if (i >= p) schema_error("relations index " + std::to_string(i) + " out of range");
      if (seen[i]) schema_error("duplicate relations index " + std::to_string(i));
      seen[i] = true;
      if (!block["rows"].is_array()) schema_error("rows must be an array");
      const std::size_t width = rels[i].cols();
      std::vector<Rational> row(width);
      for (const auto& r : block["rows"]) {
        if (!r.is_array() || r.size() != width)
          schema_error("relation row at index " + std::to_string(i) + " must have " + std::to_string(width) + " entries");
        for (std::size_t c = 0; c < width; ++c) row[c] = entry_value(r[c]);
        rels[i].append_row(row);
      }
    }
  }
  return QuadraticPresentation(std::move(gens), std::move(rels));
}

ordered_json to_json(const QuadraticPresentation& p) {
  ordered_json j;
  j["period"] = p.period();
  j["gen_dims"] = p.gen_dims();
  ordered_json rels = ordered_json::array();
  for (std::size_t i = 0; i < p.period(); ++i) {
    const RationalMatrix& m = p.relations(i);
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (const Rational& x : m.row(r)) row.push_back(x.to_fraction());
      rows.push_back(std::move(row));
    }
    rels.push_back({{"index", i}, {"rows", std::move(rows)}});
  }
  j["relations"] = std::move(rels);
  return j;
}

ordered_json parse_text(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::InvalidPresentation, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::vector<QuadraticPresentation> parse_presentations(std::string_view json_text) {
  ordered_json j = parse_text(json_text);
  std::vector<QuadraticPresentation> out;
  if (j.is_object() && j.contains("presentations")) {
    if (!j["presentations"].is_array()) schema_error("presentations must be an array");
    for (const auto& p : j["presentations"]) out.push_back(from_json(p));
  } else {
    out.push_back(from_json(j));
  }
  return out;
}

QuadraticPresentation parse_presentation(std::string_view json_text) {
  auto ps = parse_presentations(json_text);
  if (ps.size() != 1) schema_error("expected exactly one presentation");
  return std::move(ps.front());
}

std::string presentation_json(const QuadraticPresentation& p) { return to_json(p).dump(2) + "\n"; }

std::string presentations_json(const std::vector<QuadraticPresentation>& ps) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : ps) arr.push_back(to_json(p));
  ordered_json j;
  j["presentations"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string dim_table_csv(const DimTable& t) {
  std::ostringstream os;
  os << "index,degree,dim\n";
  for (std::size_t i = 0; i < t.period; ++i)
    for (std::size_t n = 0; n <= t.max_degree; ++n) os << i << ',' << n << ',' << to_string(t.dims[i][n]) << '\n';
  return os.str();
}

}  // namespace helixkit
