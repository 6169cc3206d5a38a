#pragma once

#include <string>
#include <vector>

#include "symmaps/orientation.hpp"
#include "symmaps/plane_map.hpp"

namespace symmaps {

// Identifies the darts of each rho-orbit. The image of the center is pointed.
PointedMap classical_quotient(const SymmetricMap &s);

// k-fold cover of p branched at the pointed vertex and at the outer face.
// Sheets are joined across a shortest path from the pointed vertex to the
// outer face; rho shifts sheets.
SymmetricMap unroll(const PointedMap &p, int k);

struct QuotientLemmaReport {
  bool vertices = false; // v(D) - 1 = k (v(E) - 1)
  bool edges = false;    // e(D) = k e(E)
  bool faces = false;    // f(D) - 1 = k (f(E) - 1)
  bool outer = false;    // o(D) = k o(E)
  bool radial = false;   // r(D) = r(E)
  bool girth = false;    // l(D) = k l(E)
  std::string details;

  bool all() const { return vertices && edges && faces && outer && radial && girth; }
};

QuotientLemmaReport verify_quotient_lemmas(const SymmetricMap &s);

// Record of one cut-and-glue surgery, in the dart ids of the symmetric map.
struct SurgeryLog {
  int p = 0;               // common length of the cut paths
  bool identified = false; // false on the branch where the sector is kept as is (p = 1)
  std::vector<Dart> path1, path2;
  std::vector<Dart> p1_side, p2_side, arc; // sector darts along the cut and the outer arc
};

// A map with a marked edge; the marked dart fixes an orientation of it.
struct NewQuotient {
  PlaneMap map;
  Dart marked = -1;
  Orientation orientation; // minimal orientation of map
  SurgeryLog log;

  int marked_edge() const { return edge_of(marked); }
};

// Cuts a 2-symmetric simple quadrangulation along the leftmost paths of the
// two outgoing edges at its center (minimal 2-orientation), keeps one
// sector and zips its two sides with an index shift of 2. Output is a simple
// quadrangulation with half the inner faces and a marked edge.
// Throws NotSymmetricSimpleQuad, ReconstructionFailed.
NewQuotient phi(const SymmetricMap &s);
// Triangular analogue on 3-symmetric simple triangulations.
// Throws NotSymmetricSimpleTri, ReconstructionFailed.
NewQuotient phi_tri(const SymmetricMap &s);

// Inverses: glue 2 (resp. 3) copies of the map cut along the leftmost path
// of the marked edge. Throw ReconstructionFailed when the input lies outside
// the image or the surgery does not close up.
SymmetricMap phi_inverse(const PlaneMap &m, int marked_edge, SurgeryLog *log = nullptr);
SymmetricMap phi_tri_inverse(const PlaneMap &m, int marked_edge, SurgeryLog *log = nullptr);

// Glues polygons given as dart cycles in face order. partner[x] is the dart
// glued to x, or -1; unglued darts are closed off by a single new outer
// face. Keys are arbitrary ints in [0, partner.size()).
struct GluedMap {
  PlaneMap map;
  std::vector<Dart> dart_of;  // key -> dart of the result, -1 if unused
  std::vector<Dart> outer_of; // unglued key -> its partner on the outer face
};
GluedMap glue_polygons(const std::vector<std::vector<int>> &faces, const std::vector<int> &partner);

} // namespace symmaps
