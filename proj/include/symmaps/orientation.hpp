#pragma once

#include <optional>
#include <vector>

#include "symmaps/plane_map.hpp"

namespace symmaps {

// Orientation of the inner edges of a map: out[e] is the dart of edge e
// leaving its tail, or -1 for edges on the outer face.
struct Orientation {
  int d = 0;
  std::vector<Dart> out;

  bool outgoing(Dart x) const { return out[edge_of(x)] == x; }
  bool operator==(const Orientation &o) const { return d == o.d && out == o.out; }
};

enum class EdgeScan { Forward, Backward };

// A d-orientation: inner vertices have outdegree d, outer vertices 0.
// Requires all faces of degree 4 (d = 2) or 3 (d = 3), else WrongFamily.
// Returns nullopt when no d-orientation exists.
std::optional<Orientation> find_d_orientation(const PlaneMap &m, int d, EdgeScan scan = EdgeScan::Forward);

bool is_valid_orientation(const PlaneMap &m, const Orientation &o);

// Directed simple cycles, each starting at its smallest dart.
std::vector<std::vector<Dart>> directed_cycles(const PlaneMap &m, const Orientation &o);

// A directed cycle is counterclockwise iff its interior lies on its left.
bool is_ccw(const PlaneMap &m, const std::vector<Dart> &cycle);

bool is_minimal(const PlaneMap &m, const Orientation &o);

// Reverses the lexicographically smallest ccw cycle until none is left.
Orientation minimize(const PlaneMap &m, Orientation o);
// Mirror image of minimize: reverses clockwise cycles until none is left.
Orientation maximize(const PlaneMap &m, Orientation o);

// Minimal d-orientation, or nullopt when none exists.
std::optional<Orientation> minimal_orientation(const PlaneMap &m, int d);

// Starting from an outgoing dart, repeatedly takes the first outgoing dart
// clockwise after the arrival dart until an outer vertex is reached.
// Throws PathSelfIntersects on a repeated vertex.
std::vector<Dart> leftmost_path(const PlaneMap &m, const Orientation &o, Dart start);

// True iff rho carries outgoing darts to outgoing darts.
bool check_symmetric_minimal(const SymmetricMap &s, const Orientation &o);

// Bit per edge: 1 when dart 2e+1 is outgoing.
std::vector<int> orientation_bits(const Orientation &o);
Orientation orientation_from_bits(const PlaneMap &m, int d, const std::vector<int> &bits);

} // namespace symmaps
