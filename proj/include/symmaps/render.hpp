#pragma once

#include <string>
#include <vector>

#include "symmaps/map_json.hpp"

namespace symmaps {

struct Point {
  double x = 0, y = 0;
};

// Tutte barycentric layout: distinct outer vertices on a regular polygon in
// contour order, every other vertex at the average of its neighbours.
// Gauss-Seidel sweeps in vertex order make the result deterministic.
// Throws RenderDegenerate for maps with at most 2 vertices.
std::vector<Point> barycentric_layout(const PlaneMap &m, int max_sweeps = 20000, double tol = 1e-12);

// SVG 1.1 drawing. Multiple edges are drawn as arcs and loops as small
// circles; the pointed vertex, marked edge and orientation of the record are
// shown when present. Maps with at most 2 vertices get a labelled schematic.
std::string render_svg(const MapRecord &r);

} // namespace symmaps
