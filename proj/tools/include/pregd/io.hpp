#pragma once

// JSON file formats.
//
// Algebra file:
//   {"name": "rank-one", "dim": 1, "basis": ["L"],
//    "ops": {"ld": {"L,L": {"L": "1"}}, "circ": {"L,L": {"L": "-3/2"}}},
//    "truncation": {"degree": {"L": 0}, "min_degree": 0, "max_degree": 0}}
// Ops are keyed by "ld", "rd", "circ", "dot"; each maps "a,b" (basis labels)
// to the sparse value of a op b. Coefficients are rational strings.
// "truncation" is optional.
//
// Linear map file: {"images": {"x1": {"x1": "1"}, ...}}; missing labels map to 0.
//
// Cocycle file: {"degree_cap": 3, "forms": {"2": {"L,L": "1"}}}; forms are
// keyed by degree and "a,b", missing entries are 0.
//
// Loaders throw ParseError with a JSON-path-like location.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pregd/algebra.hpp"
#include "pregd/cocycle.hpp"

namespace pregd::io {

using Json = nlohmann::json;

AlgebraSpec algebra_from_json(Json const &j);
Json algebra_to_json(AlgebraSpec const &alg);

LinearMapSpec linear_map_from_json(Json const &j, AlgebraSpec const &alg);
Json linear_map_to_json(LinearMapSpec const &map, AlgebraSpec const &alg);

CocycleFamily cocycle_from_json(Json const &j, AlgebraSpec const &alg);
Json cocycle_to_json(CocycleFamily const &f, AlgebraSpec const &alg);

/// Reads a whole file; throws ParseError(path, ...) if it cannot be read.
std::string read_file(std::filesystem::path const &path);
/// Parses JSON text; syntax errors become ParseError(where, ...).
Json parse_json(std::string const &text, std::string const &where);

AlgebraSpec load_algebra(std::filesystem::path const &path);
void save_json(std::filesystem::path const &path, Json const &j);

/// Stable text form used for files and reports.
std::string dump(Json const &j);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

} // namespace pregd::io
