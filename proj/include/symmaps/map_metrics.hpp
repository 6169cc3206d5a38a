#pragma once

#include <functional>
#include <vector>

#include "symmaps/plane_map.hpp"

namespace symmaps {

struct FaceDegrees {
  int outer = 0;
  std::vector<int> inner; // sorted ascending
};

FaceDegrees face_degrees(const PlaneMap &m);

// BFS distances in the underlying graph; -1 never occurs since maps are connected.
std::vector<int> distances_from(const PlaneMap &m, int v);

// Distance from the pointed vertex to the nearest outer vertex.
int radial_distance(const PointedMap &p);

// Calls fn on every simple cycle with at most max_len edges, each cycle
// reported once as a closed dart walk starting with the even dart of its
// smallest edge. Stops early when fn returns false.
void for_each_simple_cycle(const PlaneMap &m, int max_len,
                           const std::function<bool(const std::vector<Dart> &)> &fn);

// Faces unreachable from the outer face in the dual once the given edges
// are deleted. The result is indexed by face id.
std::vector<char> interior_faces(const PlaneMap &m, const std::vector<Dart> &cycle);

// True iff v is not on the cycle and lies in its interior.
bool strictly_encloses(const PlaneMap &m, const std::vector<Dart> &cycle, int v);

// Length of a shortest cycle strictly enclosing the pointed vertex.
int enclosing_girth(const PointedMap &p);

bool has_loop(const PlaneMap &m);
bool is_simple(const PlaneMap &m);
// The pointed vertex is strictly inside every cycle of length 1 or 2, and
// no vertex carries two loops.
bool is_quasi_simple(const PointedMap &p);
// Every cycle of length <= d bounds a single face on one of its two sides.
bool is_irreducible(const PlaneMap &m, int d);
// The outer face contour visits pairwise distinct vertices and edges.
bool outer_face_is_simple(const PlaneMap &m);

// All faces (outer included) have degree d.
bool all_faces_have_degree(const PlaneMap &m, int d);

} // namespace symmaps
