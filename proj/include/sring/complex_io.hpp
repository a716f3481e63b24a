#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "sring/complex.hpp"

namespace sring {

/// {"m": <int>, "facets": [[...], ...], "meta": {...}}.
///
/// A "ground" array is written only when the ground set is not {1..m}
/// (after deletions); readers accept it in place of "m".
nlohmann::json complex_to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const nlohmann::json& j);

SimplicialComplex read_complex(const std::filesystem::path& path);
void write_complex(const SimplicialComplex& K, const std::filesystem::path& path);

}  // namespace sring
