#pragma once

#include <cstdint>
#include <vector>

#include "symmaps/errors.hpp"

namespace symmaps {

using Dart = int;

// Darts 2e and 2e+1 are the two sides of edge e.
constexpr Dart alpha(Dart d) noexcept { return d ^ 1; }
constexpr int edge_of(Dart d) noexcept { return d >> 1; }

// A rooted plane map stored as a rotation system.
//
// sigma(d) is the next dart counterclockwise around the tail of d.
// phi(d) = sigma^-1(alpha(d)) walks the face lying on the left of d, so
// face_of(d) is that face. The outer face is face_of(root()).
class PlaneMap {
public:
  PlaneMap() = default;

  // Validates and precomputes orbits. Throws Error.
  static PlaneMap build(std::vector<Dart> sigma, Dart root);

  // Builds a map from ccw-ordered neighbour lists of a simple graph.
  // The root is the dart from root_tail to root_head.
  static PlaneMap from_rotation_system(const std::vector<std::vector<int>> &ccw_neighbours,
                                       int root_tail, int root_head);

  int n_darts() const noexcept { return static_cast<int>(sigma_.size()); }
  int n_edges() const noexcept { return n_darts() / 2; }
  int n_vertices() const noexcept { return static_cast<int>(vertices_.size()); }
  int n_faces() const noexcept { return static_cast<int>(faces_.size()); }
  Dart root() const noexcept { return root_; }

  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart phi(Dart d) const { return sigma_inv_[alpha(d)]; }
  Dart phi_inv(Dart d) const { return alpha(sigma_[d]); }
  const std::vector<Dart> &sigma_perm() const noexcept { return sigma_; }

  int vertex_of(Dart d) const { return vertex_of_[d]; }
  int tail(Dart d) const { return vertex_of_[d]; }
  int head(Dart d) const { return vertex_of_[alpha(d)]; }
  int face_of(Dart d) const { return face_of_[d]; }

  // Darts leaving v, in ccw order starting from the smallest.
  const std::vector<Dart> &vertex_darts(int v) const { return vertices_[v]; }
  // Darts of face f in phi order starting from the smallest.
  const std::vector<Dart> &face_darts(int f) const { return faces_[f]; }
  int degree(int v) const { return static_cast<int>(vertices_[v].size()); }
  int face_degree(int f) const { return static_cast<int>(faces_[f].size()); }

  int outer_face() const { return face_of_[root_]; }
  bool is_outer_vertex(int v) const { return outer_vertex_[v] != 0; }
  bool is_outer_edge(int e) const {
    return face_of_[2 * e] == outer_face() || face_of_[2 * e + 1] == outer_face();
  }
  // The outer face contour, as the darts having the outer face on their left.
  const std::vector<Dart> &outer_darts() const { return faces_[outer_face()]; }
  int outer_degree() const { return face_degree(outer_face()); }

  // Same map, different root. The new root must lie on the outer face so
  // that the outer face is preserved.
  PlaneMap rerooted(Dart new_root) const;
  // Conjugates by a dart relabelling that respects the pairing d <-> d^1.
  PlaneMap relabeled(const std::vector<Dart> &perm) const;

  bool operator==(const PlaneMap &o) const { return sigma_ == o.sigma_ && root_ == o.root_; }

private:
  std::vector<Dart> sigma_, sigma_inv_;
  Dart root_ = 0;
  std::vector<int> vertex_of_, face_of_;
  std::vector<std::vector<Dart>> vertices_, faces_;
  std::vector<std::uint8_t> outer_vertex_;
};

// A plane map with a marked inner vertex.
struct PointedMap {
  PlaneMap map;
  int pointed = -1;

  static PointedMap make(PlaneMap m, int pointed);
};

// A pointed map invariant under a rotation of order k around the pointed
// vertex (the center). rho commutes with sigma and alpha and fixes the outer
// face.
struct SymmetricMap {
  PointedMap base;
  int k = 0;
  std::vector<Dart> rho;

  const PlaneMap &map() const { return base.map; }
  int center() const { return base.pointed; }

  static SymmetricMap make(PointedMap base, int k, std::vector<Dart> rho);
};

enum DissectionFlag : unsigned {
  kSimple = 1u << 0,
  kQuasiSimple = 1u << 1,
  kIrreducible = 1u << 2,
  kPointed = 1u << 3,
  kSymmetric = 1u << 4,
};

struct DissectionSpec {
  int inner_face_degree = 4;
  int outer_degree = 4;
  unsigned flags = 0;
  int symmetry_order = 0;

  // Throws BadInput for d outside {3,4} or an odd quadrangular outer degree.
  void validate() const;
};

int count_cycles(const std::vector<int> &perm);
bool is_permutation(const std::vector<int> &perm);

} // namespace symmaps
