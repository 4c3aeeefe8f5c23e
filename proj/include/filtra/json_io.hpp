#pragma once

#include <json.hpp>

#include "filtra/filtration.hpp"
#include "filtra/point_set.hpp"
#include "filtra/set_family.hpp"
#include "filtra/topology.hpp"

namespace filtra {

/// Sorted list of point indices.
nlohmann::json to_json(PointSet a);
/// Members as point-index lists, sorted lexicographically.
nlohmann::json to_json(const SetFamily& fam);
/// {"n": <int>, "opens": [[...], ...]} with opens sorted lexicographically.
nlohmann::json to_json(const Topology& t);

PointSet point_set_from_json(const nlohmann::json& j, GroundSet ground);
/// Accepts opens in any order; throws InputError unless they form a topology.
Topology topology_from_json(const nlohmann::json& j);

} // namespace filtra
