#include "symmaps/plane_map.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace symmaps {

const char *errc_name(Errc c) noexcept {
  switch (c) {
  case Errc::NotAPermutation: return "NotAPermutation";
  case Errc::Disconnected: return "Disconnected";
  case Errc::NonPlanar: return "NonPlanar";
  case Errc::EmptyMap: return "EmptyMap";
  case Errc::BadRoot: return "BadRoot";
  case Errc::BadMark: return "BadMark";
  case Errc::BadSymmetry: return "BadSymmetry";
  case Errc::WrongFamily: return "WrongFamily";
  case Errc::PathSelfIntersects: return "PathSelfIntersects";
  case Errc::SizeCapExceeded: return "SizeCapExceeded";
  case Errc::NotSymmetricSimpleQuad: return "NotSymmetricSimpleQuad";
  case Errc::NotSymmetricSimpleTri: return "NotSymmetricSimpleTri";
  case Errc::ReconstructionFailed: return "ReconstructionFailed";
  case Errc::DivisorNotUnit: return "DivisorNotUnit";
  case Errc::OrderMismatch: return "OrderMismatch";
  case Errc::InnerNotNilpotent: return "InnerNotNilpotent";
  case Errc::BadConstantTerm: return "BadConstantTerm";
  case Errc::NonContractive: return "NonContractive";
  case Errc::BadDistance: return "BadDistance";
  case Errc::UnknownName: return "UnknownName";
  case Errc::RenderDegenerate: return "RenderDegenerate";
  case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

bool is_permutation(const std::vector<int> &perm) {
  std::vector<char> seen(perm.size(), 0);
  for (int x : perm) {
    if (x < 0 || static_cast<std::size_t>(x) >= perm.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

int count_cycles(const std::vector<int> &perm) {
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = static_cast<int>(i); !seen[j]; j = perm[j]) seen[j] = 1;
  }
  return cycles;
}

namespace {

// Labels the cycles of step(d) in order of their smallest dart.
template <class Step>
int label_orbits(int n, Step step, std::vector<int> &label, std::vector<std::vector<Dart>> &orbits) {
  label.assign(n, -1);
  orbits.clear();
  for (Dart d = 0; d < n; ++d) {
    if (label[d] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    orbits.emplace_back();
    for (Dart x = d; label[x] < 0; x = step(x)) {
      label[x] = id;
      orbits.back().push_back(x);
    }
  }
  return static_cast<int>(orbits.size());
}

} // namespace

PlaneMap PlaneMap::build(std::vector<Dart> sigma, Dart root) {
  const int n = static_cast<int>(sigma.size());
  if (n == 0) throw Error(Errc::EmptyMap, "map has no edges");
  if (n % 2 != 0) throw Error(Errc::NotAPermutation, "odd number of darts");
  if (!is_permutation(sigma)) throw Error(Errc::NotAPermutation, "sigma is not a permutation");
  if (root < 0 || root >= n) throw Error(Errc::BadRoot, "root dart out of range");

  PlaneMap m;
  m.sigma_ = std::move(sigma);
  m.sigma_inv_.assign(n, 0);
  for (Dart d = 0; d < n; ++d) m.sigma_inv_[m.sigma_[d]] = d;
  m.root_ = root;

  // Connectivity under <sigma, alpha>.
  std::vector<char> seen(n, 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Dart d = stack.back();
    stack.pop_back();
    for (Dart x : {m.sigma_[d], alpha(d)}) {
      if (!seen[x]) {
        seen[x] = 1;
        ++reached;
        stack.push_back(x);
      }
    }
  }
  if (reached != n) throw Error(Errc::Disconnected, "darts form more than one component");

  label_orbits(n, [&](Dart d) { return m.sigma_[d]; }, m.vertex_of_, m.vertices_);
  label_orbits(n, [&](Dart d) { return m.sigma_inv_[alpha(d)]; }, m.face_of_, m.faces_);
  const int v = m.n_vertices(), e = n / 2, f = m.n_faces();
  if (v - e + f != 2) {
    throw Error(Errc::NonPlanar, "Euler characteristic " + std::to_string(v - e + f) + " != 2");
  }
  m.outer_vertex_.assign(v, 0);
  for (Dart d : m.faces_[m.face_of_[root]]) m.outer_vertex_[m.vertex_of_[d]] = 1;
  return m;
}

PlaneMap PlaneMap::from_rotation_system(const std::vector<std::vector<int>> &ccw, int root_tail,
                                        int root_head) {
  // Dart for (u -> w) is numbered by the edge index in order of first appearance.
  const int nv = static_cast<int>(ccw.size());
  std::vector<std::vector<Dart>> dart_at(nv);
  std::vector<std::pair<int, int>> edge_ends;
  auto find_edge = [&](int a, int b) {
    for (std::size_t e = 0; e < edge_ends.size(); ++e) {
      if (edge_ends[e] == std::pair{a, b}) return 2 * static_cast<int>(e);
      if (edge_ends[e] == std::pair{b, a}) return 2 * static_cast<int>(e) + 1;
    }
    edge_ends.emplace_back(a, b);
    return 2 * static_cast<int>(edge_ends.size() - 1);
  };
  for (int u = 0; u < nv; ++u) {
    for (int w : ccw[u]) {
      if (w < 0 || w >= nv || w == u) throw Error(Errc::BadInput, "bad neighbour in rotation system");
      dart_at[u].push_back(find_edge(u, w));
    }
  }
  const int n = 2 * static_cast<int>(edge_ends.size());
  std::vector<Dart> sigma(n, -1);
  for (int u = 0; u < nv; ++u) {
    const auto &ds = dart_at[u];
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (sigma[ds[i]] != -1) throw Error(Errc::BadInput, "duplicate edge in rotation system");
      sigma[ds[i]] = ds[(i + 1) % ds.size()];
    }
  }
  for (Dart s : sigma) {
    if (s < 0) throw Error(Errc::BadInput, "asymmetric adjacency in rotation system");
  }
  Dart root = -1;
  for (std::size_t e = 0; e < edge_ends.size(); ++e) {
    if (edge_ends[e] == std::pair{root_tail, root_head}) root = 2 * static_cast<int>(e);
    if (edge_ends[e] == std::pair{root_head, root_tail}) root = 2 * static_cast<int>(e) + 1;
  }
  if (root < 0) throw Error(Errc::BadRoot, "root edge not present");
  return build(std::move(sigma), root);
}

PlaneMap PlaneMap::rerooted(Dart new_root) const {
  if (new_root < 0 || new_root >= n_darts()) throw Error(Errc::BadRoot, "root dart out of range");
  PlaneMap m = *this;
  m.root_ = new_root;
  m.outer_vertex_.assign(n_vertices(), 0);
  for (Dart d : m.faces_[m.face_of_[new_root]]) m.outer_vertex_[m.vertex_of_[d]] = 1;
  return m;
}

PlaneMap PlaneMap::relabeled(const std::vector<Dart> &perm) const {
  const int n = n_darts();
  if (static_cast<int>(perm.size()) != n || !is_permutation(perm)) {
    throw Error(Errc::NotAPermutation, "relabelling is not a permutation");
  }
  for (Dart d = 0; d < n; ++d) {
    if (perm[alpha(d)] != alpha(perm[d])) throw Error(Errc::BadInput, "relabelling breaks edge pairing");
  }
  std::vector<Dart> s(n);
  for (Dart d = 0; d < n; ++d) s[perm[d]] = perm[sigma_[d]];
  return build(std::move(s), perm[root_]);
}

PointedMap PointedMap::make(PlaneMap m, int pointed) {
  if (pointed < 0 || pointed >= m.n_vertices()) throw Error(Errc::BadMark, "pointed vertex out of range");
  if (m.is_outer_vertex(pointed)) throw Error(Errc::BadMark, "pointed vertex lies on the outer face");
  return PointedMap{std::move(m), pointed};
}

SymmetricMap SymmetricMap::make(PointedMap base, int k, std::vector<Dart> rho) {
  const PlaneMap &m = base.map;
  const int n = m.n_darts();
  if (k < 2) throw Error(Errc::BadSymmetry, "order must be at least 2");
  if (static_cast<int>(rho.size()) != n || !is_permutation(rho)) {
    throw Error(Errc::BadSymmetry, "rho is not a permutation");
  }
  for (Dart d = 0; d < n; ++d) {
    if (rho[m.sigma(d)] != m.sigma(rho[d]) || rho[alpha(d)] != alpha(rho[d])) {
      throw Error(Errc::BadSymmetry, "rho does not commute with sigma and alpha");
    }
  }
  std::vector<Dart> power(n);
  std::iota(power.begin(), power.end(), 0);
  for (int j = 1; j <= k; ++j) {
    for (Dart &x : power) x = rho[x];
    bool identity = true;
    for (Dart d = 0; d < n && identity; ++d) identity = power[d] == d;
    if (identity != (j == k)) throw Error(Errc::BadSymmetry, "rho does not have order k");
  }
  if (m.face_of(rho[m.root()]) != m.outer_face()) throw Error(Errc::BadSymmetry, "rho moves the outer face");
  if (m.vertex_of(rho[m.vertex_darts(base.pointed)[0]]) != base.pointed) {
    throw Error(Errc::BadSymmetry, "rho moves the center");
  }
  return SymmetricMap{std::move(base), k, std::move(rho)};
}

void DissectionSpec::validate() const {
  if (inner_face_degree != 3 && inner_face_degree != 4) {
    throw Error(Errc::BadInput, "inner face degree must be 3 or 4");
  }
  if (outer_degree < 1) throw Error(Errc::BadInput, "outer degree must be positive");
  if (inner_face_degree == 4 && outer_degree % 2 != 0) {
    throw Error(Errc::BadInput, "quadrangular dissections need an even outer degree");
  }
  if ((flags & kSymmetric) && symmetry_order < 2) throw Error(Errc::BadInput, "symmetry order must be >= 2");
}

} // namespace symmaps
