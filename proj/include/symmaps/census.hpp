#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "symmaps/plane_map.hpp"

namespace symmaps {

// Rooted maps whose root face has degree outer_degree and whose other
// inner_faces faces all have degree face_degree.
struct CensusQuery {
  int face_degree = 4;
  int outer_degree = 4;
  int inner_faces = 1;
  bool outer_simple = true; // root face contour is a simple cycle
  bool simple = false;      // no loops, no multiple edges
  int face_cap = 0;         // bound on total faces; 0 selects default_face_cap

  static CensusQuery simple_quadrangulations(int total_faces);
  static CensusQuery simple_triangulations(int total_faces);
  // Root face of degree d need not be simple; loops and multiple edges allowed.
  static CensusQuery sphere_maps(int d, int total_faces);
  // Outer face a simple outer_degree-cycle, general inner faces.
  static CensusQuery dissections(int d, int outer_degree, int inner_faces);
};

// Total-face caps: 7 for quadrangular families, 10 for triangular ones.
int default_face_cap(int d);
// Cap on the inner faces of a symmetric map.
constexpr int kDefaultSymmetricCap = 9;

// Streams every rooted map of the query exactly once. Generation peels the
// first free side of the innermost open hole and either glues a fresh
// polygon to it or closes it against another side of the same hole; each
// rooted map has exactly one peeling history so no deduplication is needed.
// Throws SizeCapExceeded.
void generate(const CensusQuery &q, const std::function<void(const PlaneMap &)> &emit);
std::vector<PlaneMap> enumerate(const CensusQuery &q);
mpz_class count(const CensusQuery &q);

// Sum over rooted sphere quadrangulations with n faces of the number of
// vertices at distance i from the root's tail and i+1 from its head. This is
// the number of quadrangulations with a marked edge and a marked vertex whose
// nearest extremity of the edge is at distance i. Entry i of the result.
std::vector<mpz_class> two_point_quad_by_distance(int n, int face_cap = 0);
mpz_class count_two_point_quad(int n, int i, int face_cap = 0);

// Unrooted pointed dissections: quadrangular with outer degree 2, or
// triangular with outer degree 1, with inner_faces inner faces, bucketed by
// radial distance. Optionally only the quasi-simple ones.
std::vector<mpz_class> pointed_dissections_by_distance(int d, int inner_faces, bool quasi_simple_only,
                                                       int face_cap = 0);
mpz_class count_pointed_dissections(int d, int inner_faces, int i, int face_cap = 0);
// Rooted count (root on the outer face) of quasi-simple pointed dissections.
mpz_class count_rooted_quasi_simple_pointed(int d, int inner_faces, int face_cap = 0);

// Unrooted k-symmetric simple d-angulations (outer degree 4 for d = 4,
// 3 for d = 3) with the given number of inner faces, found by exhaustive
// rooted generation followed by automorphism detection. One representative
// per class, ordered by canonical code.
std::vector<SymmetricMap> symmetric_simple_classes(int d, int k, int inner_faces,
                                                   int symmetric_cap = kDefaultSymmetricCap);
mpz_class count_symmetric(int d, int k, int inner_faces, std::optional<int> radial = std::nullopt,
                          int symmetric_cap = kDefaultSymmetricCap);

struct EdgeMarkedMap {
  PlaneMap map;
  int edge = -1;
};

// Unrooted simple d-angulations with the given number of inner faces and a
// marked edge, one representative per class ordered by canonical code.
std::vector<EdgeMarkedMap> edge_marked_simple_classes(int d, int inner_faces, int face_cap = 0);

// Size conventions of the symmetric families: k*n inner faces for
// quadrangulations, (2n+1)*k for triangulations.
int symmetric_inner_faces(int d, int k, int n);

} // namespace symmaps
