#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gt/lattice.hpp"
#include "gt/omega.hpp"

namespace gt {

using Json = nlohmann::ordered_json;

/// Malformed input document or argument. CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Seed document:
///   {"n": 3, "rows": [["0","1/3","2/3"], ["0","4/3"], ["0"]]}
/// rows ordered top (length n) down to bottom (length 1), entries as
/// exact rational strings.
Seed parse_seed_document(const std::string& text);
std::string serialize_seed_document(const Seed& seed);

/// Comma-separated shift coordinates in canonical order, e.g. "-1,0,-1".
Shift parse_shift_arg(const std::string& text, int n);

/// FNV-1a 64-bit digest, hex.
std::string input_digest(std::string_view bytes);

Json shift_to_json(const Shift& z);
Json triple_to_json(const OmegaTriple& t);
Json omega_set_to_json(const OmegaSet& s);

}  // namespace gt
