#pragma once

// JSON file formats. Rationals are always strings "p/q" in lowest terms
// ("p" when the denominator is 1); keys are written in a fixed order and
// every document ends with a newline.
//
// Configuration file:
//   {"n": 4, "d": 2, "subspaces": [[["1","0"],["0","1"],...], ...]}
// each subspace an n-row array of d-entry rows.
//
// Invariant file:
//   {"n", "d", "s", "case": {"kind", "r", "e"?, "k"}, "max_word_len",
//    "letters": [ids], "letter_matrices": [[rows]...],
//    "invariants": [{"word": [ids], "value": "p/q"}], "note"?}

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "grinv/divisible.hpp"
#include "grinv/grassmann.hpp"
#include "grinv/invariants.hpp"

namespace grinv::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& x);
Rat rat_from_json(const Json& j);

Json to_json(const MatQ& m);
MatQ mat_from_json(const Json& j, std::size_t rows, std::size_t cols);

Json config_to_json(const Config& c);
/// Throws Parse on malformed input and RankDeficient on dependent columns.
Config config_from_json(const Json& j);

Json invariants_to_json(const Config& c, const InvariantVector& v, const LetterSet<Rat>& letters);

/// Reads the divisible-case letter grid back from an invariant file.
ReducedDivisible<Rat> letter_grid_from_json(const Json& j);

Json read_json(const std::filesystem::path& path);
std::string dump(const Json& j);
/// Writes through a temporary file and renames, so a failed run never
/// leaves a partial file behind.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace grinv::io
