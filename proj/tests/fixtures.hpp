#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "symmaps/canonical.hpp"
#include "symmaps/plane_map.hpp"

namespace fixtures {

struct Xy {
  double x, y;
};

// Straight-line drawing to rotation system: neighbours sorted by angle.
// The root runs from a to b and must traverse the outer contour clockwise.
inline symmaps::PlaneMap drawn(const std::vector<Xy> &pts, const std::vector<std::pair<int, int>> &edges, int a,
                               int b) {
  std::vector<std::vector<int>> nb(pts.size());
  for (auto [u, v] : edges) {
    nb[u].push_back(v);
    nb[v].push_back(u);
  }
  for (std::size_t u = 0; u < pts.size(); ++u) {
    auto angle = [&](int v) { return std::atan2(pts[v].y - pts[u].y, pts[v].x - pts[u].x); };
    std::sort(nb[u].begin(), nb[u].end(), [&](int p, int q) { return angle(p) < angle(q); });
  }
  return symmaps::PlaneMap::from_rotation_system(nb, a, b);
}

// A single square: one inner face, no inner vertex.
inline symmaps::PlaneMap square() {
  return drawn({{-1, 1}, {1, 1}, {1, -1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 0, 1);
}

// Triangle 0,1,2 with a center 3 joined to all corners.
inline symmaps::PlaneMap tetrahedron() {
  return drawn({{0, 2}, {2, -1}, {-2, -1}, {0, 0}}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}}, 0, 1);
}

// Outer square 0..3 around inner square 4..7, corners joined.
inline symmaps::PlaneMap cube() {
  return drawn({{-2, 2}, {2, 2}, {2, -2}, {-2, -2}, {-1, 1}, {1, 1}, {1, -1}, {-1, -1}},
               {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}}, 0,
               1);
}

// The cube with a third square nested in its inner face: the middle square
// is a separating 4-cycle, so the map is simple but not irreducible.
inline symmaps::PlaneMap nested_cubes() {
  std::vector<Xy> pts;
  std::vector<std::pair<int, int>> edges;
  for (int ring = 0; ring < 3; ++ring) {
    const double r = 3.0 - ring;
    for (Xy c : {Xy{-r, r}, Xy{r, r}, Xy{r, -r}, Xy{-r, -r}}) pts.push_back(c);
    for (int j = 0; j < 4; ++j) {
      edges.emplace_back(4 * ring + j, 4 * ring + (j + 1) % 4);
      if (ring > 0) edges.emplace_back(4 * (ring - 1) + j, 4 * ring + j);
    }
  }
  return drawn(pts, edges, 0, 1);
}

// The square split by a center vertex 4 joined to two opposite corners:
// the smallest 2-symmetric simple quadrangulation.
inline symmaps::PlaneMap split_square() {
  return drawn({{-1, 1}, {1, 1}, {1, -1}, {-1, -1}, {0, 0}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {2, 4}}, 0,
               1);
}

// A 2-symmetric simple quadrangulation with 4 inner faces: center 4
// joined to corners 1 and 3 and to pendant-like vertices 5 and 6, which
// hang from the opposite corners 0 and 2.
inline symmaps::PlaneMap spiked_square() {
  return drawn({{-3, 3}, {3, 3}, {3, -3}, {-3, -3}, {0, 0}, {-1.5, 1.5}, {1.5, -1.5}},
               {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 1}, {4, 3}, {4, 5}, {4, 6}, {5, 0}, {6, 2}}, 0, 1);
}

inline symmaps::SymmetricMap symmetric(const symmaps::PlaneMap &m, int k) {
  symmaps::SymmetricMap s;
  if (!symmaps::find_symmetry(m, k, &s)) throw symmaps::Error(symmaps::Errc::BadSymmetry, "fixture not symmetric");
  return s;
}

} // namespace fixtures
