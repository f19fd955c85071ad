#include "gt/io.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <vector>

namespace gt {

Seed parse_seed_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("seed document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows")) {
    throw ParseError("seed document must be an object with \"n\" and \"rows\"");
  }
  if (!doc["n"].is_number_integer()) throw ParseError("seed field \"n\" must be an integer");
  const int n = doc["n"].get<int>();
  if (n < 2) throw ParseError("seed field \"n\" must be at least 2");
  if (!doc["rows"].is_array() || doc["rows"].size() != static_cast<std::size_t>(n)) {
    throw ParseError("seed field \"rows\" must list " + std::to_string(n) + " rows, top row first");
  }

  std::vector<std::vector<Rational>> rows;
  for (int k = n; k >= 1; --k) {
    const auto& row_doc = doc["rows"][static_cast<std::size_t>(n - k)];
    if (!row_doc.is_array() || row_doc.size() != static_cast<std::size_t>(k)) {
      throw ParseError("seed row " + std::to_string(k) + " must have " + std::to_string(k) + " entries");
    }
    std::vector<Rational> row;
    for (int i = 1; i <= k; ++i) {
      const auto& cell = row_doc[static_cast<std::size_t>(i - 1)];
      if (!cell.is_string()) {
        throw ParseError("seed row " + std::to_string(k) + ", entry " + std::to_string(i) +
                         " must be a rational string");
      }
      try {
        row.push_back(parse_rational(cell.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw ParseError("seed row " + std::to_string(k) + ", entry " + std::to_string(i) + ": " + e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  return Seed::from_rows_top_down(std::move(rows));
}

std::string serialize_seed_document(const Seed& seed) {
  Json doc;
  doc["n"] = seed.height();
  Json rows = Json::array();
  for (int k = seed.height(); k >= 1; --k) {
    Json row = Json::array();
    for (int i = 1; i <= k; ++i) row.push_back(to_string(seed.entry(k, i)));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

Shift parse_shift_arg(const std::string& text, int n) {
  std::vector<std::int64_t> coords;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ParseError("invalid shift coordinate \"" + part + "\"");
    }
  }
  if (coords.size() != shift_coord_count(n)) {
    throw ParseError("shift needs " + std::to_string(shift_coord_count(n)) + " coordinates for height " +
                     std::to_string(n) + ", got " + std::to_string(coords.size()));
  }
  return Shift::from_coords(n, std::move(coords));
}

std::string input_digest(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buffer);
}

Json shift_to_json(const Shift& z) {
  Json out = Json::array();
  for (std::int64_t c : z.coords()) out.push_back(c);
  return out;
}

Json triple_to_json(const OmegaTriple& t) {
  return Json::array({t.p, t.s, t.u});
}

Json omega_set_to_json(const OmegaSet& s) {
  Json out = Json::array();
  for (const auto& triple : s) out.push_back(triple_to_json(triple));
  return out;
}

}  // namespace gt
