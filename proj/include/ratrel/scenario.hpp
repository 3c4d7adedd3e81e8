#pragma once

#include <string>

#include "ratrel/json_io.hpp"
#include "ratrel/model.hpp"

namespace ratrel {

/// Ships with the binary so `model check` needs no files: the identity
/// observer, three Pythagorean boosts (3/5, 5/13, 8/17) spread over the
/// available spatial axes, one rotated observer (a spatial flip when d == 2
/// leaves no room to rotate), and six photons through assorted anchors and
/// cone directions.
Model builtin_scenario(int dim);

/// Scenario schema: {"dimension": d,
///                   "observers": [{"name", "matrix", "translation"}...],
///                   "photons": [{"name", "anchor", "spatial_direction"}...]}
/// with fractions as canonical "p/q" strings. Validation errors name the
/// offending body and the violated invariant.
Model scenario_from_json(const ojson& j);
ojson scenario_to_json(const Model& model);

/// Reads and validates a scenario file; errors mention the path.
Model load_scenario(const std::string& path);

}  // namespace ratrel
