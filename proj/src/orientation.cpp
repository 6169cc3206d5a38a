#include "symmaps/orientation.hpp"

#include <algorithm>
#include <deque>

#include "symmaps/map_metrics.hpp"

namespace symmaps {

namespace {

void require_family(const PlaneMap &m, int d) {
  if (d != 2 && d != 3) throw Error(Errc::WrongFamily, "orientations exist for d = 2 or 3 only");
  if (!all_faces_have_degree(m, d == 2 ? 4 : 3)) {
    throw Error(Errc::WrongFamily, d == 2 ? "not a quadrangulation" : "not a triangulation");
  }
}

// Augmenting-path assignment of each inner edge to one endpoint, with
// capacity d at inner vertices and 0 at outer ones.
class TailAssignment {
public:
  TailAssignment(const PlaneMap &m, int d, EdgeScan scan)
      : m_(m), scan_(scan), owner_(m.n_edges(), -1), load_(m.n_vertices(), 0), cap_(m.n_vertices(), 0) {
    for (int v = 0; v < m.n_vertices(); ++v) cap_[v] = m.is_outer_vertex(v) ? 0 : d;
  }

  bool assign(int e) {
    const int a = m_.tail(2 * e), b = m_.head(2 * e);
    std::vector<int> prev(m_.n_vertices(), -2), via(m_.n_vertices(), -1);
    std::deque<int> queue;
    for (int x : {a, b}) {
      if (prev[x] == -2) {
        prev[x] = -1;
        via[x] = e;
        queue.push_back(x);
      }
    }
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (load_[x] < cap_[x]) {
        ++load_[x];
        for (int z = x; z >= 0; z = prev[z]) owner_[via[z]] = z;
        return true;
      }
      const auto &darts = m_.vertex_darts(x);
      const int deg = static_cast<int>(darts.size());
      for (int i = 0; i < deg; ++i) {
        const Dart t = scan_ == EdgeScan::Forward ? darts[i] : darts[deg - 1 - i];
        const int f = edge_of(t);
        if (owner_[f] != x) continue;
        const int y = m_.head(t);
        if (prev[y] != -2) continue;
        prev[y] = x;
        via[y] = f;
        queue.push_back(y);
      }
    }
    return false;
  }

  int owner(int e) const { return owner_[e]; }

private:
  const PlaneMap &m_;
  EdgeScan scan_;
  std::vector<int> owner_, load_, cap_;
};

} // namespace

std::optional<Orientation> find_d_orientation(const PlaneMap &m, int d, EdgeScan scan) {
  require_family(m, d);
  std::vector<int> inner_edges;
  for (int e = 0; e < m.n_edges(); ++e) {
    if (!m.is_outer_edge(e)) inner_edges.push_back(e);
  }
  int inner_vertices = 0;
  for (int v = 0; v < m.n_vertices(); ++v) inner_vertices += !m.is_outer_vertex(v);
  if (static_cast<int>(inner_edges.size()) != d * inner_vertices) return std::nullopt;
  if (scan == EdgeScan::Backward) std::reverse(inner_edges.begin(), inner_edges.end());

  TailAssignment ta(m, d, scan);
  for (int e : inner_edges) {
    if (!ta.assign(e)) return std::nullopt;
  }
  Orientation o;
  o.d = d;
  o.out.assign(m.n_edges(), -1);
  for (int e : inner_edges) o.out[e] = m.tail(2 * e) == ta.owner(e) ? 2 * e : 2 * e + 1;
  return o;
}

bool is_valid_orientation(const PlaneMap &m, const Orientation &o) {
  if (static_cast<int>(o.out.size()) != m.n_edges()) return false;
  std::vector<int> outdeg(m.n_vertices(), 0);
  for (int e = 0; e < m.n_edges(); ++e) {
    const bool outer = m.is_outer_edge(e);
    if (outer != (o.out[e] < 0)) return false;
    if (!outer) {
      if (edge_of(o.out[e]) != e) return false;
      ++outdeg[m.tail(o.out[e])];
    }
  }
  for (int v = 0; v < m.n_vertices(); ++v) {
    if (outdeg[v] != (m.is_outer_vertex(v) ? 0 : o.d)) return false;
  }
  return true;
}

std::vector<std::vector<Dart>> directed_cycles(const PlaneMap &m, const Orientation &o) {
  std::vector<std::vector<Dart>> cycles;
  std::vector<char> on_path(m.n_vertices(), 0);
  std::vector<Dart> path;
  int start = 0;
  auto record = [&]() {
    auto c = path;
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    cycles.push_back(std::move(c));
  };
  auto extend = [&](auto &&self, int v) -> void {
    for (Dart x : m.vertex_darts(v)) {
      if (!o.outgoing(x)) continue;
      const int w = m.head(x);
      if (w == start) {
        path.push_back(x);
        record();
        path.pop_back();
      } else if (w > start && !on_path[w]) {
        on_path[w] = 1;
        path.push_back(x);
        self(self, w);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (int s = 0; s < m.n_vertices(); ++s) {
    if (m.is_outer_vertex(s)) continue;
    start = s;
    on_path[s] = 1;
    extend(extend, s);
    on_path[s] = 0;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

bool is_ccw(const PlaneMap &m, const std::vector<Dart> &cycle) {
  return interior_faces(m, cycle)[m.face_of(cycle[0])] != 0;
}

bool is_minimal(const PlaneMap &m, const Orientation &o) {
  for (const auto &c : directed_cycles(m, o)) {
    if (is_ccw(m, c)) return false;
  }
  return true;
}

namespace {

Orientation reverse_until_none(const PlaneMap &m, Orientation o, bool ccw_wanted) {
  for (;;) {
    const std::vector<Dart> *pick = nullptr;
    const auto cycles = directed_cycles(m, o); // sorted: first match is smallest
    for (const auto &c : cycles) {
      if (is_ccw(m, c) == ccw_wanted) {
        pick = &c;
        break;
      }
    }
    if (!pick) return o;
    for (Dart x : *pick) o.out[edge_of(x)] = alpha(x);
  }
}

} // namespace

Orientation minimize(const PlaneMap &m, Orientation o) { return reverse_until_none(m, std::move(o), true); }

Orientation maximize(const PlaneMap &m, Orientation o) { return reverse_until_none(m, std::move(o), false); }

std::optional<Orientation> minimal_orientation(const PlaneMap &m, int d) {
  auto o = find_d_orientation(m, d);
  if (!o) return std::nullopt;
  return minimize(m, std::move(*o));
}

std::vector<Dart> leftmost_path(const PlaneMap &m, const Orientation &o, Dart start) {
  if (o.out[edge_of(start)] != start) throw Error(Errc::BadInput, "start dart is not outgoing");
  std::vector<Dart> path{start};
  std::vector<char> seen(m.n_vertices(), 0);
  seen[m.tail(start)] = 1;
  Dart cur = start;
  for (;;) {
    const int v = m.head(cur);
    if (seen[v]) throw Error(Errc::PathSelfIntersects, "leftmost path revisits a vertex");
    seen[v] = 1;
    if (m.is_outer_vertex(v)) return path;
    const Dart arrival = alpha(cur);
    Dart x = m.sigma_inv(arrival);
    while (!o.outgoing(x)) {
      if (x == arrival) throw Error(Errc::BadInput, "inner vertex without outgoing dart");
      x = m.sigma_inv(x);
    }
    path.push_back(x);
    cur = x;
  }
}

bool check_symmetric_minimal(const SymmetricMap &s, const Orientation &o) {
  for (Dart x : o.out) {
    if (x >= 0 && !o.outgoing(s.rho[x])) return false;
  }
  return true;
}

std::vector<int> orientation_bits(const Orientation &o) {
  std::vector<int> bits(o.out.size(), 0);
  for (std::size_t e = 0; e < o.out.size(); ++e) bits[e] = o.out[e] >= 0 && (o.out[e] & 1);
  return bits;
}

Orientation orientation_from_bits(const PlaneMap &m, int d, const std::vector<int> &bits) {
  if (static_cast<int>(bits.size()) != m.n_edges()) throw Error(Errc::BadInput, "orientation size mismatch");
  Orientation o;
  o.d = d;
  o.out.assign(m.n_edges(), -1);
  for (int e = 0; e < m.n_edges(); ++e) {
    if (!m.is_outer_edge(e)) o.out[e] = 2 * e + (bits[e] ? 1 : 0);
  }
  return o;
}

} // namespace symmaps
