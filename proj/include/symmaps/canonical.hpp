#pragma once

#include <string>
#include <vector>

#include "symmaps/plane_map.hpp"

namespace symmaps {

// Optional decorations folded into a canonical code. -1 means absent.
struct Marks {
  int pointed = -1;      // vertex id
  int marked_edge = -1;  // edge id
  int marked_face = -1;  // face id
  Dart marked_dart = -1; // oriented edge
};

// Breadth-first relabelling from `root`: root -> 0, alpha(root) -> 1, then
// each unseen sigma-successor receives the next even label.
std::vector<int> canonical_labels(const PlaneMap &m, Dart root);

// Equal codes iff there is a root-preserving isomorphism carrying marks to
// marks. Uses m.root() when root < 0.
std::string canonical_code(const PlaneMap &m, const Marks &marks = {}, Dart root = -1);

// Minimum of canonical_code over all darts having the outer face on their
// left: an invariant of the map with its outer face, forgetting the root.
std::string unrooted_code(const PlaneMap &m, const Marks &marks = {});

struct Automorphism {
  int k = 1;
  std::vector<Dart> rho;
};

// Nontrivial automorphisms preserving the outer face, with their orders.
std::vector<Automorphism> outer_automorphisms(const PlaneMap &m);

// Those among outer_automorphisms fixing vertex `center`, sorted by order
// then lexicographically by rho.
std::vector<Automorphism> find_rotation_automorphisms(const PlaneMap &m, int center);

// An automorphism of exact order k fixing an inner vertex, if any.
bool find_symmetry(const PlaneMap &m, int k, SymmetricMap *out);

} // namespace symmaps
