#include "symmaps/map_metrics.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace symmaps {

FaceDegrees face_degrees(const PlaneMap &m) {
  FaceDegrees out;
  for (int f = 0; f < m.n_faces(); ++f) {
    if (f == m.outer_face()) out.outer = m.face_degree(f);
    else out.inner.push_back(m.face_degree(f));
  }
  std::sort(out.inner.begin(), out.inner.end());
  return out;
}

std::vector<int> distances_from(const PlaneMap &m, int v) {
  std::vector<int> dist(m.n_vertices(), -1);
  std::deque<int> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (Dart d : m.vertex_darts(x)) {
      const int y = m.head(d);
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

int radial_distance(const PointedMap &p) {
  const auto dist = distances_from(p.map, p.pointed);
  int best = -1;
  for (Dart d : p.map.outer_darts()) {
    const int x = dist[p.map.tail(d)];
    if (best < 0 || x < best) best = x;
  }
  return best;
}

void for_each_simple_cycle(const PlaneMap &m, int max_len,
                           const std::function<bool(const std::vector<Dart> &)> &fn) {
  std::vector<char> on_path(m.n_vertices(), 0);
  std::vector<Dart> path;
  bool stop = false;
  int start = 0, min_edge = 0;

  std::function<void(int)> extend = [&](int v) {
    for (Dart d : m.vertex_darts(v)) {
      if (stop) return;
      if (edge_of(d) <= min_edge) continue;
      const int w = m.head(d);
      if (w == start) {
        path.push_back(d);
        if (!fn(path)) stop = true;
        path.pop_back();
      } else if (!on_path[w] && static_cast<int>(path.size()) + 1 < max_len) {
        on_path[w] = 1;
        path.push_back(d);
        extend(w);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };

  for (int e = 0; e < m.n_edges() && !stop; ++e) {
    const Dart d = 2 * e;
    start = m.tail(d);
    min_edge = e;
    path.assign(1, d);
    if (m.head(d) == start) {
      if (!fn(path)) stop = true;
      continue;
    }
    if (max_len < 2) continue;
    on_path[start] = on_path[m.head(d)] = 1;
    extend(m.head(d));
    on_path[start] = on_path[m.head(d)] = 0;
  }
}

std::vector<char> interior_faces(const PlaneMap &m, const std::vector<Dart> &cycle) {
  std::vector<char> cut(m.n_edges(), 0);
  for (Dart d : cycle) cut[edge_of(d)] = 1;
  std::vector<char> reached(m.n_faces(), 0);
  std::vector<int> stack{m.outer_face()};
  reached[m.outer_face()] = 1;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (Dart d : m.face_darts(f)) {
      if (cut[edge_of(d)]) continue;
      const int g = m.face_of(alpha(d));
      if (!reached[g]) {
        reached[g] = 1;
        stack.push_back(g);
      }
    }
  }
  std::vector<char> interior(m.n_faces());
  for (int f = 0; f < m.n_faces(); ++f) interior[f] = !reached[f];
  return interior;
}

bool strictly_encloses(const PlaneMap &m, const std::vector<Dart> &cycle, int v) {
  for (Dart d : cycle) {
    if (m.tail(d) == v) return false;
  }
  return interior_faces(m, cycle)[m.face_of(m.vertex_darts(v)[0])] != 0;
}

int enclosing_girth(const PointedMap &p) {
  for (int len = 1; len <= p.map.n_edges(); ++len) {
    bool found = false;
    for_each_simple_cycle(p.map, len, [&](const std::vector<Dart> &c) {
      if (static_cast<int>(c.size()) == len && strictly_encloses(p.map, c, p.pointed)) found = true;
      return !found;
    });
    if (found) return len;
  }
  throw Error(Errc::BadInput, "no cycle encloses the pointed vertex");
}

bool has_loop(const PlaneMap &m) {
  for (int e = 0; e < m.n_edges(); ++e) {
    if (m.tail(2 * e) == m.head(2 * e)) return true;
  }
  return false;
}

bool is_simple(const PlaneMap &m) {
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < m.n_edges(); ++e) {
    int a = m.tail(2 * e), b = m.head(2 * e);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    if (!seen.emplace(a, b).second) return false;
  }
  return true;
}

bool is_quasi_simple(const PointedMap &p) {
  // Two loops at one vertex form a 2-cycle not enclosing the pointed vertex.
  std::vector<int> loops(p.map.n_vertices(), 0);
  for (int e = 0; e < p.map.n_edges(); ++e) {
    if (p.map.tail(2 * e) == p.map.head(2 * e) && ++loops[p.map.tail(2 * e)] > 1) return false;
  }
  bool ok = true;
  for_each_simple_cycle(p.map, 2, [&](const std::vector<Dart> &c) {
    ok = strictly_encloses(p.map, c, p.pointed);
    return ok;
  });
  return ok;
}

bool is_irreducible(const PlaneMap &m, int d) {
  bool ok = true;
  for_each_simple_cycle(m, d, [&](const std::vector<Dart> &c) {
    const auto inside = interior_faces(m, c);
    const int n_in = static_cast<int>(std::count(inside.begin(), inside.end(), 1));
    ok = n_in == 1 || m.n_faces() - n_in == 1;
    return ok;
  });
  return ok;
}

bool outer_face_is_simple(const PlaneMap &m) {
  const auto &darts = m.outer_darts();
  std::set<int> vertices, edges;
  for (Dart d : darts) {
    if (!vertices.insert(m.tail(d)).second) return false;
    if (!edges.insert(edge_of(d)).second) return false;
  }
  return true;
}

bool all_faces_have_degree(const PlaneMap &m, int d) {
  for (int f = 0; f < m.n_faces(); ++f) {
    if (m.face_degree(f) != d) return false;
  }
  return true;
}

} // namespace symmaps
