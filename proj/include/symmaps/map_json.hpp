#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symmaps/plane_map.hpp"

namespace symmaps {

// Serialized form of a map with its optional decorations.
//
//   {"n_darts", "sigma", "root", "pointed", "marked_edge", "marked_face",
//    "rho", "k", "orient"}
//
// Absent decorations are written as null. "orient" holds one bit per edge:
// 1 when dart 2e+1 is the outgoing dart of edge e, 0 otherwise (outer edges
// are always 0).
struct MapRecord {
  PlaneMap map;
  std::optional<int> pointed;
  std::optional<int> marked_edge;
  std::optional<int> marked_face;
  std::optional<std::vector<Dart>> rho;
  std::optional<int> k;
  std::optional<std::vector<int>> orient;
};

nlohmann::ordered_json record_to_json(const MapRecord &r);
// Throws Error(BadInput) on malformed records and the usual map errors on
// invalid permutations.
MapRecord record_from_json(const nlohmann::json &j);

MapRecord record_of(const PlaneMap &m);
MapRecord record_of(const PointedMap &p);
MapRecord record_of(const SymmetricMap &s);

PointedMap pointed_of(const MapRecord &r);
SymmetricMap symmetric_of(const MapRecord &r);

} // namespace symmaps
