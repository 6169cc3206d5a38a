#include "symmaps/census.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "symmaps/canonical.hpp"
#include "symmaps/map_metrics.hpp"

namespace symmaps {

CensusQuery CensusQuery::simple_quadrangulations(int total_faces) {
  return CensusQuery{4, 4, total_faces - 1, true, true, 0};
}

CensusQuery CensusQuery::simple_triangulations(int total_faces) {
  return CensusQuery{3, 3, total_faces - 1, true, true, 0};
}

CensusQuery CensusQuery::sphere_maps(int d, int total_faces) {
  return CensusQuery{d, d, total_faces - 1, false, false, 0};
}

CensusQuery CensusQuery::dissections(int d, int outer_degree, int inner_faces) {
  return CensusQuery{d, outer_degree, inner_faces, true, false, 0};
}

int default_face_cap(int d) { return d == 4 ? 7 : 10; }

namespace {

// Union-find over polygon corners with undo; corner s is the tail of side s.
class RollbackDsu {
public:
  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    size_.push_back(1);
    return parent_.back();
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      log_.push_back(-1);
      return;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    log_.push_back(b);
  }
  void undo() {
    const int b = log_.back();
    log_.pop_back();
    if (b < 0) return;
    const int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }
  void pop_element() {
    parent_.pop_back();
    size_.pop_back();
  }

private:
  std::vector<int> parent_, size_, log_;
};

class Peeler {
public:
  Peeler(const CensusQuery &q, const std::function<void(const PlaneMap &)> &emit) : q_(q), emit_(emit) {}

  void run() {
    std::vector<int> root_hole;
    for (int i = 0; i < q_.outer_degree; ++i) root_hole.push_back(i);
    add_polygon(q_.outer_degree);
    outer_sides_ = q_.outer_degree;
    std::vector<std::vector<int>> holes{root_hole};
    recurse(holes, 0);
  }

private:
  const CensusQuery &q_;
  const std::function<void(const PlaneMap &)> &emit_;
  std::vector<int> next_side_, partner_;
  std::vector<std::pair<int, int>> glued_;
  RollbackDsu dsu_;
  int outer_sides_ = 0;

  void add_polygon(int deg) {
    const int base = static_cast<int>(next_side_.size());
    for (int i = 0; i < deg; ++i) {
      next_side_.push_back(base + (i + 1) % deg);
      partner_.push_back(-1);
      dsu_.add();
    }
  }
  void remove_polygon(int deg) {
    for (int i = 0; i < deg; ++i) {
      next_side_.pop_back();
      partner_.pop_back();
      dsu_.pop_element();
    }
  }

  void glue(int a, int b) {
    partner_[a] = b;
    partner_[b] = a;
    glued_.emplace_back(a, b);
    dsu_.unite(a, next_side_[b]);
    dsu_.unite(next_side_[a], b);
  }
  void unglue() {
    const auto [a, b] = glued_.back();
    glued_.pop_back();
    partner_[a] = partner_[b] = -1;
    dsu_.undo();
    dsu_.undo();
  }

  bool admissible() const {
    const auto [a, b] = glued_.back();
    if (q_.outer_simple) {
      if (a < outer_sides_ && b < outer_sides_) return false;
      for (int i = 0; i < outer_sides_; ++i) {
        for (int j = i + 1; j < outer_sides_; ++j) {
          if (dsu_.find(i) == dsu_.find(j)) return false;
        }
      }
    }
    if (q_.simple) {
      std::vector<std::pair<int, int>> ends;
      ends.reserve(glued_.size());
      for (const auto &[x, y] : glued_) {
        int u = dsu_.find(x), v = dsu_.find(y);
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        ends.emplace_back(u, v);
      }
      std::sort(ends.begin(), ends.end());
      if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) return false;
    }
    return true;
  }

  // Each hole of odd length needs an odd number of additional triangles.
  bool parity_feasible(const std::vector<std::vector<int>> &holes, int remaining) const {
    if (q_.face_degree == 4) return true; // quadrangular holes stay even
    int odd = 0;
    for (const auto &h : holes) odd += static_cast<int>(h.size() % 2);
    return odd <= remaining && (remaining - odd) % 2 == 0;
  }

  void recurse(std::vector<std::vector<int>> &holes, int placed) {
    if (holes.empty()) {
      if (placed == q_.inner_faces) finish();
      return;
    }
    const std::vector<int> hole = holes.back();
    const int len = static_cast<int>(hole.size());
    const int h = hole[0];
    const int remaining = q_.inner_faces - placed;

    if (remaining > 0) {
      const int g0 = static_cast<int>(next_side_.size());
      add_polygon(q_.face_degree);
      glue(h, g0);
      if (admissible()) {
        std::vector<int> grown;
        for (int i = 1; i < q_.face_degree; ++i) grown.push_back(g0 + i);
        grown.insert(grown.end(), hole.begin() + 1, hole.end());
        holes.back() = std::move(grown);
        if (parity_feasible(holes, remaining - 1)) recurse(holes, placed + 1);
        holes.back() = hole;
      }
      unglue();
      remove_polygon(q_.face_degree);
    }

    for (int k = 1; k < len; ++k) {
      if (q_.face_degree == 4 && k % 2 == 0) continue;
      glue(h, hole[k]);
      if (admissible()) {
        holes.pop_back();
        std::vector<int> after(hole.begin() + k + 1, hole.end());
        std::vector<int> between(hole.begin() + 1, hole.begin() + k);
        const bool push_after = !after.empty(), push_between = !between.empty();
        if (push_after) holes.push_back(std::move(after));
        if (push_between) holes.push_back(std::move(between));
        if (parity_feasible(holes, remaining)) recurse(holes, placed);
        if (push_between) holes.pop_back();
        if (push_after) holes.pop_back();
        holes.push_back(hole);
      }
      unglue();
    }
  }

  void finish() {
    const int n = static_cast<int>(next_side_.size());
    std::vector<int> dart_of(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
      if (dart_of[s] >= 0) continue;
      dart_of[s] = next;
      dart_of[partner_[s]] = next + 1;
      next += 2;
    }
    // phi on darts is the polygon successor; sigma = alpha o phi^-1.
    std::vector<Dart> phi_inv(n);
    for (int s = 0; s < n; ++s) phi_inv[dart_of[next_side_[s]]] = dart_of[s];
    std::vector<Dart> sigma(n);
    for (Dart d = 0; d < n; ++d) sigma[d] = alpha(phi_inv[d]);
    emit_(PlaneMap::build(std::move(sigma), 0));
  }
};

void check_cap(const CensusQuery &q) {
  const int cap = q.face_cap > 0 ? q.face_cap : default_face_cap(q.face_degree);
  if (q.inner_faces + 1 > cap) {
    throw Error(Errc::SizeCapExceeded,
                std::to_string(q.inner_faces + 1) + " faces exceeds the cap of " + std::to_string(cap));
  }
}

} // namespace

void generate(const CensusQuery &q, const std::function<void(const PlaneMap &)> &emit) {
  DissectionSpec{q.face_degree, q.outer_degree, 0, 0}.validate();
  if (q.inner_faces < 0) throw Error(Errc::BadInput, "negative face count");
  check_cap(q);
  Peeler(q, emit).run();
}

std::vector<PlaneMap> enumerate(const CensusQuery &q) {
  std::vector<PlaneMap> out;
  generate(q, [&](const PlaneMap &m) { out.push_back(m); });
  return out;
}

mpz_class count(const CensusQuery &q) {
  mpz_class c = 0;
  generate(q, [&](const PlaneMap &) { ++c; });
  return c;
}

std::vector<mpz_class> two_point_quad_by_distance(int n, int face_cap) {
  auto q = CensusQuery::sphere_maps(4, n);
  q.face_cap = face_cap;
  std::vector<mpz_class> buckets(2 * n + 2, 0);
  generate(q, [&](const PlaneMap &m) {
    const auto from_tail = distances_from(m, m.tail(m.root()));
    const auto from_head = distances_from(m, m.head(m.root()));
    for (int v = 0; v < m.n_vertices(); ++v) {
      if (from_head[v] == from_tail[v] + 1) ++buckets[from_tail[v]];
    }
  });
  return buckets;
}

mpz_class count_two_point_quad(int n, int i, int face_cap) {
  if (i < 0) return 0;
  const auto b = two_point_quad_by_distance(n, face_cap);
  return i < static_cast<int>(b.size()) ? b[i] : mpz_class(0);
}

namespace {

int pointed_outer_degree(int d) {
  if (d == 4) return 2;
  if (d == 3) return 1;
  throw Error(Errc::BadInput, "inner face degree must be 3 or 4");
}

} // namespace

std::vector<mpz_class> pointed_dissections_by_distance(int d, int inner_faces, bool quasi_simple_only,
                                                       int face_cap) {
  auto q = CensusQuery::dissections(d, pointed_outer_degree(d), inner_faces);
  q.face_cap = face_cap;
  std::map<std::string, int> classes;
  generate(q, [&](const PlaneMap &m) {
    for (int v = 0; v < m.n_vertices(); ++v) {
      if (m.is_outer_vertex(v)) continue;
      const auto p = PointedMap::make(m, v);
      if (quasi_simple_only && !is_quasi_simple(p)) continue;
      Marks marks;
      marks.pointed = v;
      classes.emplace(unrooted_code(m, marks), radial_distance(p));
    }
  });
  std::vector<mpz_class> buckets(inner_faces + 2, 0);
  for (const auto &[code, r] : classes) {
    if (r >= static_cast<int>(buckets.size())) buckets.resize(r + 1, 0);
    ++buckets[r];
  }
  return buckets;
}

mpz_class count_pointed_dissections(int d, int inner_faces, int i, int face_cap) {
  if (i <= 0) return 0;
  const auto b = pointed_dissections_by_distance(d, inner_faces, false, face_cap);
  return i < static_cast<int>(b.size()) ? b[i] : mpz_class(0);
}

mpz_class count_rooted_quasi_simple_pointed(int d, int inner_faces, int face_cap) {
  auto q = CensusQuery::dissections(d, pointed_outer_degree(d), inner_faces);
  q.face_cap = face_cap;
  mpz_class c = 0;
  generate(q, [&](const PlaneMap &m) {
    for (int v = 0; v < m.n_vertices(); ++v) {
      if (!m.is_outer_vertex(v) && is_quasi_simple(PointedMap::make(m, v))) ++c;
    }
  });
  return c;
}

std::vector<SymmetricMap> symmetric_simple_classes(int d, int k, int inner_faces, int symmetric_cap) {
  if (inner_faces > symmetric_cap) {
    throw Error(Errc::SizeCapExceeded, std::to_string(inner_faces) + " inner faces exceeds the symmetric cap of " +
                                           std::to_string(symmetric_cap));
  }
  auto q = d == 4 ? CensusQuery::simple_quadrangulations(inner_faces + 1)
                  : CensusQuery::simple_triangulations(inner_faces + 1);
  q.face_cap = inner_faces + 1;
  std::map<std::string, SymmetricMap> classes;
  generate(q, [&](const PlaneMap &m) {
    SymmetricMap s;
    if (!find_symmetry(m, k, &s)) return;
    std::string code = unrooted_code(m);
    if (!classes.count(code)) classes.emplace(std::move(code), std::move(s));
  });
  std::vector<SymmetricMap> out;
  for (auto &[code, s] : classes) out.push_back(std::move(s));
  return out;
}

mpz_class count_symmetric(int d, int k, int inner_faces, std::optional<int> radial, int symmetric_cap) {
  mpz_class c = 0;
  for (const auto &s : symmetric_simple_classes(d, k, inner_faces, symmetric_cap)) {
    if (!radial || radial_distance(s.base) == *radial) ++c;
  }
  return c;
}

std::vector<EdgeMarkedMap> edge_marked_simple_classes(int d, int inner_faces, int face_cap) {
  auto q = d == 4 ? CensusQuery::simple_quadrangulations(inner_faces + 1)
                  : CensusQuery::simple_triangulations(inner_faces + 1);
  q.face_cap = face_cap;
  std::map<std::string, EdgeMarkedMap> classes;
  generate(q, [&](const PlaneMap &m) {
    for (int e = 0; e < m.n_edges(); ++e) {
      Marks marks;
      marks.marked_edge = e;
      std::string code = unrooted_code(m, marks);
      if (!classes.count(code)) classes.emplace(std::move(code), EdgeMarkedMap{m, e});
    }
  });
  std::vector<EdgeMarkedMap> out;
  for (auto &[code, x] : classes) out.push_back(std::move(x));
  return out;
}

int symmetric_inner_faces(int d, int k, int n) { return d == 4 ? k * n : (2 * n + 1) * k; }

} // namespace symmaps
