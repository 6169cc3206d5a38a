#include "symmaps/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace symmaps {

namespace {

void put(std::string &s, int x) {
  const unsigned v = static_cast<unsigned>(x + 1); // -1 encodes as 0
  s.push_back(static_cast<char>((v >> 8) & 0xff));
  s.push_back(static_cast<char>(v & 0xff));
}

int order_of(const std::vector<Dart> &rho) {
  const int n = static_cast<int>(rho.size());
  std::vector<Dart> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int k = 1;; ++k) {
    for (Dart &x : p) x = rho[x];
    bool id = true;
    for (Dart d = 0; d < n && id; ++d) id = p[d] == d;
    if (id) return k;
  }
}

} // namespace

std::vector<int> canonical_labels(const PlaneMap &m, Dart root) {
  const int n = m.n_darts();
  std::vector<int> lab(n, -1);
  std::vector<Dart> order;
  order.reserve(n);
  lab[root] = 0;
  lab[alpha(root)] = 1;
  order.push_back(root);
  order.push_back(alpha(root));
  int next = 2;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Dart s = m.sigma(order[i]);
    if (lab[s] < 0) {
      lab[s] = next;
      lab[alpha(s)] = next + 1;
      next += 2;
      order.push_back(s);
      order.push_back(alpha(s));
    }
  }
  return lab;
}

std::string canonical_code(const PlaneMap &m, const Marks &marks, Dart root) {
  if (root < 0) root = m.root();
  const int n = m.n_darts();
  const auto lab = canonical_labels(m, root);
  std::vector<int> relabeled(n);
  for (Dart d = 0; d < n; ++d) relabeled[lab[d]] = lab[m.sigma(d)];

  std::string code;
  code.reserve(2 * (n + 6));
  put(code, n);
  for (int x : relabeled) put(code, x);
  auto min_label = [&](const std::vector<Dart> &ds) {
    int best = n;
    for (Dart d : ds) best = std::min(best, lab[d]);
    return best;
  };
  put(code, marks.pointed >= 0 ? min_label(m.vertex_darts(marks.pointed)) : -1);
  put(code, marks.marked_edge >= 0 ? std::min(lab[2 * marks.marked_edge], lab[2 * marks.marked_edge + 1]) >> 1
                                   : -1);
  put(code, marks.marked_face >= 0 ? min_label(m.face_darts(marks.marked_face)) : -1);
  put(code, marks.marked_dart >= 0 ? lab[marks.marked_dart] : -1);
  return code;
}

std::string unrooted_code(const PlaneMap &m, const Marks &marks) {
  std::string best;
  for (Dart r : m.outer_darts()) {
    std::string c = canonical_code(m, marks, r);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

std::vector<Automorphism> outer_automorphisms(const PlaneMap &m) {
  std::vector<Automorphism> out;
  const std::string ref = canonical_code(m);
  const auto lab_root = canonical_labels(m, m.root());
  const int n = m.n_darts();
  std::vector<Dart> by_label(n);
  for (Dart r : m.outer_darts()) {
    if (r == m.root() || canonical_code(m, {}, r) != ref) continue;
    const auto lab_r = canonical_labels(m, r);
    for (Dart d = 0; d < n; ++d) by_label[lab_r[d]] = d;
    std::vector<Dart> rho(n);
    for (Dart d = 0; d < n; ++d) rho[d] = by_label[lab_root[d]];
    out.push_back({order_of(rho), std::move(rho)});
  }
  return out;
}

std::vector<Automorphism> find_rotation_automorphisms(const PlaneMap &m, int center) {
  std::vector<Automorphism> out;
  const Dart probe = m.vertex_darts(center)[0];
  for (auto &a : outer_automorphisms(m)) {
    if (m.vertex_of(a.rho[probe]) == center) out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(), [](const Automorphism &a, const Automorphism &b) {
    return a.k != b.k ? a.k < b.k : a.rho < b.rho;
  });
  return out;
}

bool find_symmetry(const PlaneMap &m, int k, SymmetricMap *out) {
  auto autos = outer_automorphisms(m);
  std::sort(autos.begin(), autos.end(),
            [](const Automorphism &a, const Automorphism &b) { return a.rho < b.rho; });
  for (auto &a : autos) {
    if (a.k != k) continue;
    for (int v = 0; v < m.n_vertices(); ++v) {
      if (m.is_outer_vertex(v) || m.vertex_of(a.rho[m.vertex_darts(v)[0]]) != v) continue;
      if (out) *out = SymmetricMap::make(PointedMap::make(m, v), k, std::move(a.rho));
      return true;
    }
  }
  return false;
}

} // namespace symmaps
