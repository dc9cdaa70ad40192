#pragma once

#include <string>

#include "json.hpp"
#include "specalc/motives.hpp"

namespace specalc {

// nlohmann::json::parse with errors mapped onto ParseError.
nlohmann::json parse_json_text(const std::string& text);

// Input sniffing for commands that accept either shape.
inline bool json_is_presentation(const nlohmann::json& j) {
  return j.is_object() && (j.contains("quiver") || j.contains("vertices"));
}
inline bool json_is_species(const nlohmann::json& j) {
  return j.is_object() && j.contains("ext1");
}

nlohmann::json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

nlohmann::json species_to_json(const SpeciesData& s);
SpeciesData species_from_json(const nlohmann::json& j);

// {"quiver": {...}, "relations": ["b*a - d*c", ...]}; a bare quiver object is
// accepted as a relation-free presentation.
nlohmann::json presentation_to_json(const AlgebraPresentation& p);
AlgebraPresentation presentation_from_json(const nlohmann::json& j,
                                           std::size_t max_paths = kDefaultMaxPaths);

nlohmann::json one_motive_to_json(const OneMotiveInput& inp);
OneMotiveInput one_motive_from_json(const nlohmann::json& j);

}  // namespace specalc
