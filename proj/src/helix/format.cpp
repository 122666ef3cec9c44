#include "helixkit/helix/format.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <vector>

namespace helixkit {

std::string rational_decimal(const Rational& r, unsigned digits) {
  return surd_to_decimal(Surd::rational(r, BigInt(0)), digits);
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string seed_json(const Seed& s) {
  return "{\"mu0\": " + quoted(s.mu0().to_fraction()) + ", \"mu1p\": " + quoted(s.mu1p().to_fraction()) +
         ", \"mu1\": " + quoted(s.mu1().to_fraction()) + "}";
}

std::string slope_or_empty(const HelixRow& row) {
  auto s = row.slope();
  return s ? s->to_fraction() : "";
}

std::string render_columns(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      // count code points so the "≈" header aligns
      std::size_t len = 0;
      for (unsigned char ch : row[c]) len += (ch & 0xC0) != 0x80;
      width[c] = std::max(width[c], len);
    }
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::size_t len = 0;
      for (unsigned char ch : row[c]) len += (ch & 0xC0) != 0x80;
      if (c) line += "  ";
      line += std::string(width[c] - len, ' ') + row[c];
    }
    os << line << '\n';
  }
  return os.str();
}

}  // namespace

std::string helix_table_json(const HelixTable& table, const PositivityReport* positivity) {
  std::ostringstream os;
  os << "{\"seed\": " << seed_json(table.seed) << ", \"d\": ";
  if (table.d_param) os << *table.d_param;
  else os << "null";
  os << ", \"rows\": [";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const HelixRow& row = table.rows[i];
    if (i) os << ", ";
    os << "{\"n\": " << row.n << ", \"d\": " << to_string(row.d) << ", \"r\": " << to_string(row.r);
    if (row.dp) os << ", \"dp\": " << to_string(*row.dp) << ", \"rp\": " << to_string(*row.rp);
    os << "}";
  }
  os << "], \"degenerate_at\": ";
  if (table.degenerate_at) os << *table.degenerate_at;
  else os << "null";
  if (positivity) {
    os << ", \"positivity\": {\"verdict\": ";
    switch (positivity->verdict) {
      case PositivityReport::Verdict::Certified: os << "\"Certified\""; break;
      case PositivityReport::Verdict::VerifiedToHorizon: os << "\"VerifiedToHorizon\""; break;
      case PositivityReport::Verdict::FailsAt: os << "\"FailsAt\""; break;
    }
    os << ", \"horizon\": " << positivity->horizon;
    if (positivity->verdict == PositivityReport::Verdict::FailsAt)
      os << ", \"fail_n\": " << positivity->fail_n << ", \"component\": "
         << (positivity->fail_component == RankComponent::R ? "\"r\"" : "\"rp\"");
    os << "}";
  }
  os << "}\n";
  return os.str();
}

std::string helix_table_csv(const HelixTable& table) {
  std::ostringstream os;
  os << "n,d,r,dp,rp,slope\n";
  for (const HelixRow& row : table.rows) {
    os << row.n << ',' << to_string(row.d) << ',' << to_string(row.r) << ',';
    if (row.dp) os << to_string(*row.dp) << ',' << to_string(*row.rp);
    else os << ',';
    os << ',' << slope_or_empty(row) << '\n';
  }
  return os.str();
}

std::string helix_table_text(const HelixTable& table) {
  std::vector<std::vector<std::string>> cells{{"n", "d", "r", "d'", "r'", "slope", "≈slope"}};
  for (const HelixRow& row : table.rows) {
    auto s = row.slope();
    cells.push_back({std::to_string(row.n), to_string(row.d), to_string(row.r),
                     row.dp ? to_string(*row.dp) : "-", row.rp ? to_string(*row.rp) : "-",
                     s ? s->to_fraction() : "-", s ? rational_decimal(*s, 7) : "-"});
  }
  return render_columns(cells);
}

std::string two_sided_json(const TwoSidedTable& table) {
  std::ostringstream os;
  os << "{\"d\": " << table.d << ", \"window\": [" << -table.window << ", " << table.window << "], \"entries\": [";
  for (long n = -table.window; n <= table.window; ++n) {
    const ChernVector& c = table.at(n);
    if (n != -table.window) os << ", ";
    os << "{\"n\": " << n << ", \"chern\": [" << to_string(c.rank()) << ", " << to_string(c.degree())
       << "], \"slope\": " << quoted(c.slope().to_fraction()) << "}";
  }
  os << "]}\n";
  return os.str();
}

std::string two_sided_csv(const TwoSidedTable& table) {
  std::ostringstream os;
  os << "n,rank,degree,slope\n";
  for (long n = -table.window; n <= table.window; ++n) {
    const ChernVector& c = table.at(n);
    os << n << ',' << to_string(c.rank()) << ',' << to_string(c.degree()) << ',' << c.slope().to_fraction() << '\n';
  }
  return os.str();
}

std::string two_sided_text(const TwoSidedTable& table) {
  std::vector<std::vector<std::string>> cells{{"n", "rank", "degree", "slope", "≈slope"}};
  for (long n = -table.window; n <= table.window; ++n) {
    const ChernVector& c = table.at(n);
    cells.push_back({std::to_string(n), to_string(c.rank()), to_string(c.degree()), c.slope().to_fraction(),
                     rational_decimal(c.slope(), 7)});
  }
  return render_columns(cells);
}

}  // namespace helixkit
