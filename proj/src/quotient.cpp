#include "symmaps/quotient.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "symmaps/map_metrics.hpp"

namespace symmaps {

PointedMap classical_quotient(const SymmetricMap &s) {
  const PlaneMap &m = s.map();
  const int n = m.n_darts();
  std::vector<Dart> orbit_dart(n, -1);
  int next = 0;
  for (Dart d = 0; d < n; ++d) {
    if (orbit_dart[d] >= 0) continue;
    for (Dart x = d; orbit_dart[x] < 0; x = s.rho[x]) {
      orbit_dart[x] = next;
      orbit_dart[alpha(x)] = next + 1;
    }
    next += 2;
  }
  std::vector<Dart> sigma(next, -1);
  for (Dart d = 0; d < n; ++d) {
    const Dart img = orbit_dart[m.sigma(d)];
    Dart &slot = sigma[orbit_dart[d]];
    if (slot >= 0 && slot != img) throw Error(Errc::BadSymmetry, "rho does not commute with sigma");
    slot = img;
  }
  PlaneMap q = PlaneMap::build(std::move(sigma), orbit_dart[m.root()]);
  return PointedMap::make(std::move(q), q.vertex_of(orbit_dart[m.vertex_darts(s.center())[0]]));
}

SymmetricMap unroll(const PointedMap &p, int k) {
  if (k < 2) throw Error(Errc::BadInput, "unroll needs k >= 2");
  const PlaneMap &m = p.map;
  const int n = m.n_darts();

  // Shortest path u = x0 .. xr to the outer face; ties broken by dart order.
  std::vector<Dart> via(m.n_vertices(), -1);
  std::vector<char> seen(m.n_vertices(), 0);
  std::deque<int> queue{p.pointed};
  seen[p.pointed] = 1;
  int target = -1;
  while (!queue.empty() && target < 0) {
    const int x = queue.front();
    queue.pop_front();
    if (m.is_outer_vertex(x)) {
      target = x;
      break;
    }
    for (Dart d : m.vertex_darts(x)) {
      const int y = m.head(d);
      if (!seen[y]) {
        seen[y] = 1;
        via[y] = d;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> voltage(n, 0);
  for (int x = target; x != p.pointed; x = m.tail(via[x])) {
    voltage[via[x]] = 1;
    voltage[alpha(via[x])] = -1;
  }
  Dart cut = -1; // outer dart ending at the path's end
  for (Dart d : m.outer_darts()) {
    if (m.head(d) == target) {
      cut = d;
      break;
    }
  }

  auto mod = [k](int a) { return ((a % k) + k) % k; };
  // Dart (d, s): edge (e, s) of the even dart, paired with the odd dart of
  // sheet s - voltage(odd).
  auto id = [&](Dart d, int s) {
    s = mod(s);
    if ((d & 1) == 0) return 2 * (edge_of(d) * k + s);
    return 2 * (edge_of(d) * k + mod(s + voltage[d])) + 1;
  };
  const int nn = n * k;
  std::vector<Dart> phi_inv(nn);
  for (Dart d = 0; d < n; ++d) {
    for (int s = 0; s < k; ++s) {
      const Dart next = m.phi(d);
      phi_inv[id(next, s + (d == cut ? 1 : 0))] = id(d, s);
    }
  }
  std::vector<Dart> sigma(nn), rho(nn);
  for (Dart x = 0; x < nn; ++x) sigma[x] = alpha(phi_inv[x]);
  for (Dart d = 0; d < n; ++d) {
    for (int s = 0; s < k; ++s) rho[id(d, s)] = id(d, s + 1);
  }
  PlaneMap big = PlaneMap::build(std::move(sigma), id(m.root(), 0));
  const int center = big.vertex_of(id(m.vertex_darts(p.pointed)[0], 0));
  return SymmetricMap::make(PointedMap::make(std::move(big), center), k, std::move(rho));
}

QuotientLemmaReport verify_quotient_lemmas(const SymmetricMap &s) {
  const PointedMap e = classical_quotient(s);
  const PlaneMap &D = s.map();
  const PlaneMap &E = e.map;
  const int k = s.k;
  QuotientLemmaReport r;
  r.vertices = D.n_vertices() - 1 == k * (E.n_vertices() - 1);
  r.edges = D.n_edges() == k * E.n_edges();
  r.faces = D.n_faces() - 1 == k * (E.n_faces() - 1);
  r.outer = D.outer_degree() == k * E.outer_degree();
  const int rd = radial_distance(s.base), re = radial_distance(e);
  r.radial = rd == re;
  const int ld = enclosing_girth(s.base), le = enclosing_girth(e);
  r.girth = ld == k * le;
  std::ostringstream os;
  os << "v " << D.n_vertices() << "/" << E.n_vertices() << " e " << D.n_edges() << "/" << E.n_edges() << " f "
     << D.n_faces() << "/" << E.n_faces() << " o " << D.outer_degree() << "/" << E.outer_degree() << " r " << rd
     << "/" << re << " l " << ld << "/" << le;
  r.details = os.str();
  return r;
}

GluedMap glue_polygons(const std::vector<std::vector<int>> &faces, const std::vector<int> &partner) {
  const int nk = static_cast<int>(partner.size());
  std::vector<int> next_key(nk, -1);
  for (const auto &f : faces) {
    for (std::size_t i = 0; i < f.size(); ++i) next_key[f[i]] = f[(i + 1) % f.size()];
  }
  GluedMap g;
  g.dart_of.assign(nk, -1);
  g.outer_of.assign(nk, -1);
  int next = 0;
  std::vector<int> unglued;
  for (int x = 0; x < nk; ++x) {
    if (next_key[x] < 0 || g.dart_of[x] >= 0) continue;
    const int y = partner[x];
    if (y >= 0) {
      if (partner[y] != x || next_key[y] < 0) throw Error(Errc::ReconstructionFailed, "inconsistent gluing");
      g.dart_of[x] = next;
      g.dart_of[y] = next + 1;
    } else {
      g.dart_of[x] = next;
      g.outer_of[x] = next + 1;
      unglued.push_back(x);
    }
    next += 2;
  }
  if (unglued.empty()) throw Error(Errc::ReconstructionFailed, "no outer boundary left");

  std::vector<Dart> phi(next, -1);
  for (int x = 0; x < nk; ++x) {
    if (next_key[x] >= 0) phi[g.dart_of[x]] = g.dart_of[next_key[x]];
  }
  // Around the head of an unglued key b, the next unglued key leaving that
  // vertex is found by crossing glued sides; its outer partner precedes o_b.
  for (int b : unglued) {
    int x = next_key[b];
    int guard = 0;
    while (partner[x] >= 0) {
      x = next_key[partner[x]];
      if (++guard > nk) throw Error(Errc::ReconstructionFailed, "gluing does not close around a vertex");
    }
    phi[g.outer_of[x]] = g.outer_of[b];
  }
  std::vector<Dart> phi_inv(next, -1);
  for (Dart d = 0; d < next; ++d) {
    if (phi[d] < 0 || phi_inv[phi[d]] >= 0) throw Error(Errc::ReconstructionFailed, "face walk is not a permutation");
    phi_inv[phi[d]] = d;
  }
  std::vector<Dart> sigma(next);
  for (Dart d = 0; d < next; ++d) sigma[d] = alpha(phi_inv[d]);
  Dart root = g.outer_of[unglued[0]];
  for (int b : unglued) root = std::min(root, g.outer_of[b]);
  g.map = PlaneMap::build(std::move(sigma), root);
  if (g.map.outer_degree() != static_cast<int>(unglued.size())) {
    throw Error(Errc::ReconstructionFailed, "unglued sides do not form a single outer face");
  }
  return g;
}

namespace {

struct Family {
  int face_degree; // 4 or 3
  int k;           // 2 or 3
  int d;           // orientation outdegree
  int arc;         // outer edges per sector
  Errc wrong;
};

constexpr Family kQuad{4, 2, 2, 2, Errc::NotSymmetricSimpleQuad};
constexpr Family kTri{3, 3, 3, 1, Errc::NotSymmetricSimpleTri};

[[noreturn]] void fail(const std::string &what) { throw Error(Errc::ReconstructionFailed, what); }

void require_simple_family(const PlaneMap &m, const Family &fam, Errc err) {
  if (!all_faces_have_degree(m, fam.face_degree) || !is_simple(m)) {
    throw Error(err, fam.face_degree == 4 ? "not a simple quadrangulation" : "not a simple triangulation");
  }
}

NewQuotient new_quotient(const SymmetricMap &s, const Family &fam) {
  const PlaneMap &m = s.map();
  require_simple_family(m, fam, fam.wrong);
  if (s.k != fam.k) throw Error(fam.wrong, "wrong symmetry order");

  const auto orient = minimal_orientation(m, fam.d);
  if (!orient) fail("no orientation on a simple map");
  const Orientation &o = *orient;
  if (!check_symmetric_minimal(s, o)) fail("minimal orientation is not rotation invariant");

  const int u = s.center();
  Dart e1 = -1;
  for (Dart x : m.vertex_darts(u)) {
    if (o.outgoing(x) && (e1 < 0 || x < e1)) e1 = x;
  }
  Dart e2 = m.sigma_inv(e1);
  while (!o.outgoing(e2)) e2 = m.sigma_inv(e2);

  SurgeryLog log;
  log.path1 = leftmost_path(m, o, e1);
  log.path2 = leftmost_path(m, o, e2);
  const int p = static_cast<int>(log.path1.size());
  if (static_cast<int>(log.path2.size()) != p) fail("cut paths have different lengths");
  log.p = p;
  log.identified = p >= 2;

  std::vector<char> on_path(m.n_edges(), 0);
  for (Dart x : log.path1) on_path[edge_of(x)] = 1;
  for (Dart x : log.path2) on_path[edge_of(x)] = 1;
  for (int j = 0; j < p; ++j) {
    log.p1_side.push_back(alpha(log.path1[j]));
    log.p2_side.push_back(log.path2[j]);
  }

  // The sector on the right of the first path.
  std::vector<char> in_sector(m.n_faces(), 0);
  std::vector<int> stack{m.face_of(log.p1_side[0])};
  in_sector[stack[0]] = 1;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (Dart x : m.face_darts(f)) {
      if (on_path[edge_of(x)]) continue;
      const int g = m.face_of(alpha(x));
      if (g != m.outer_face() && !in_sector[g]) {
        in_sector[g] = 1;
        stack.push_back(g);
      }
    }
  }
  std::vector<std::vector<int>> faces;
  std::vector<int> partner(m.n_darts(), -1);
  for (int f = 0; f < m.n_faces(); ++f) {
    if (!in_sector[f]) continue;
    faces.push_back(m.face_darts(f));
    for (Dart x : m.face_darts(f)) {
      const int g = m.face_of(alpha(x));
      if (on_path[edge_of(x)]) continue;
      if (g == m.outer_face()) {
        log.arc.push_back(x);
      } else if (in_sector[g]) {
        partner[x] = alpha(x);
      } else {
        fail("sector leaks across a non-cut edge");
      }
    }
  }
  if (static_cast<int>(log.arc.size()) != fam.arc) fail("sector meets the outer face in an unexpected arc");
  for (int j = 0; j < p; ++j) {
    if (!in_sector[m.face_of(log.p1_side[j])] || !in_sector[m.face_of(log.p2_side[j])]) {
      fail("cut path does not bound the sector");
    }
  }
  if (p >= 2) {
    partner[log.p1_side[0]] = log.p1_side[1];
    partner[log.p1_side[1]] = log.p1_side[0];
    for (int j = 2; j < p; ++j) {
      partner[log.p1_side[j]] = log.p2_side[j - 2];
      partner[log.p2_side[j - 2]] = log.p1_side[j];
    }
  }
  GluedMap g = glue_polygons(faces, partner);
  if (g.map.outer_degree() != fam.face_degree) fail("outer face has the wrong degree");

  NewQuotient out;
  out.map = g.map;
  out.marked = p == 1 ? g.outer_of[log.p1_side[0]] : g.dart_of[log.p1_side[0]];

  // Orientation inherited from the sector.
  Orientation derived;
  derived.d = fam.d;
  derived.out.assign(out.map.n_edges(), -1);
  for (int f = 0; f < m.n_faces(); ++f) {
    if (!in_sector[f]) continue;
    for (Dart x : m.face_darts(f)) {
      if (partner[x] < 0 || on_path[edge_of(x)]) continue;
      if (o.outgoing(x)) derived.out[edge_of(g.dart_of[x])] = g.dart_of[x];
    }
  }
  if (p >= 2) {
    derived.out[edge_of(g.dart_of[log.p1_side[0]])] = g.dart_of[log.p1_side[0]];
    for (int j = 2; j < p; ++j) {
      const Dart x = g.dart_of[log.p2_side[j - 2]];
      derived.out[edge_of(x)] = x;
    }
  }
  if (!is_valid_orientation(out.map, derived)) fail("inherited orientation is not a valid orientation");
  if (!is_minimal(out.map, derived)) fail("inherited orientation has a counterclockwise cycle");
  const auto fresh = minimal_orientation(out.map, fam.d);
  if (!fresh || !(*fresh == derived)) fail("inherited orientation differs from the minimal one");
  out.orientation = derived;

  if (p >= 2) {
    std::vector<Dart> expected{g.dart_of[log.p1_side[0]]};
    for (int j = 0; j + 3 <= p; ++j) expected.push_back(g.dart_of[log.p2_side[j]]);
    if (leftmost_path(out.map, derived, out.marked) != expected) {
      fail("leftmost path of the marked edge is not the image of the cut path");
    }
  }
  out.log = std::move(log);
  return out;
}

SymmetricMap new_quotient_inverse(const PlaneMap &m, int edge, const Family &fam, SurgeryLog *log_out) {
  if (edge < 0 || edge >= m.n_edges()) throw Error(Errc::BadMark, "marked edge out of range");
  require_simple_family(m, fam, Errc::BadInput);
  const auto orient = minimal_orientation(m, fam.d);
  if (!orient) fail("no orientation on a simple map");
  const Orientation &o = *orient;

  SurgeryLog log;
  std::vector<char> cut(m.n_edges(), 0);
  auto outer_walk = [&](Dart s0, int count) {
    std::vector<Dart> s{s0};
    while (static_cast<int>(s.size()) < count) s.push_back(m.phi(s.back()));
    return s;
  };
  if (m.is_outer_edge(edge)) {
    const Dart s0 = m.face_of(2 * edge) == m.outer_face() ? 2 * edge : 2 * edge + 1;
    const auto s = outer_walk(s0, fam.arc + 2);
    log.p = 1;
    log.p1_side = {alpha(s[0])};
    for (int j = 1; j <= fam.arc; ++j) log.arc.push_back(alpha(s[j]));
    log.p2_side = {alpha(s[fam.arc + 1])};
  } else {
    const auto path = leftmost_path(m, o, o.out[edge]);
    const int p = static_cast<int>(path.size()) + 1;
    const int end = m.head(path.back());
    Dart s1 = -1;
    for (Dart x : m.outer_darts()) {
      if (m.tail(x) == end) s1 = x;
    }
    const auto s = outer_walk(s1, fam.arc + 2); // s[j] is s_{j+1}
    log.p = p;
    log.identified = true;
    log.path1 = path;
    log.p1_side.assign(p, -1);
    log.p2_side.assign(p, -1);
    log.p1_side[0] = path[0];
    for (int j = 1; j < p; ++j) log.p1_side[j] = alpha(path[j - 1]);
    for (int j = 0; j + 3 <= p; ++j) log.p2_side[j] = path[j + 1];
    log.p2_side[p - 2] = alpha(s[fam.arc + 1]);
    log.p2_side[p - 1] = alpha(s[fam.arc]);
    for (int j = 0; j < fam.arc; ++j) log.arc.push_back(alpha(s[j]));
    for (Dart x : path) cut[edge_of(x)] = 1;
  }
  {
    std::vector<Dart> all = log.p1_side;
    all.insert(all.end(), log.p2_side.begin(), log.p2_side.end());
    all.insert(all.end(), log.arc.begin(), log.arc.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) fail("boundary darts of the sector overlap");
    for (Dart x : all) {
      if (m.face_of(x) == m.outer_face()) fail("boundary dart lies on the outer face");
    }
  }

  const int n = m.n_darts(), k = fam.k;
  auto key = [n, k](Dart d, int t) { return ((t % k) + k) % k * n + d; };
  std::vector<std::vector<int>> faces;
  std::vector<int> partner(n * k, -1);
  for (int t = 0; t < k; ++t) {
    for (int f = 0; f < m.n_faces(); ++f) {
      if (f == m.outer_face()) continue;
      std::vector<int> face;
      for (Dart x : m.face_darts(f)) {
        face.push_back(key(x, t));
        if (!cut[edge_of(x)] && m.face_of(alpha(x)) != m.outer_face()) partner[key(x, t)] = key(alpha(x), t);
      }
      faces.push_back(std::move(face));
    }
    for (int j = 0; j < log.p; ++j) {
      const int a = key(log.p2_side[j], t), b = key(log.p1_side[j], t + 1);
      partner[a] = b;
      partner[b] = a;
    }
  }
  GluedMap g = glue_polygons(faces, partner);
  if (g.map.outer_degree() != fam.face_degree) fail("rebuilt outer face has the wrong degree");

  std::vector<Dart> rho(g.map.n_darts(), -1);
  for (int t = 0; t < k; ++t) {
    for (Dart x = 0; x < n; ++x) {
      const int a = key(x, t), b = key(x, t + 1);
      if (g.dart_of[a] >= 0) rho[g.dart_of[a]] = g.dart_of[b];
      if (g.outer_of[a] >= 0) rho[g.outer_of[a]] = g.outer_of[b];
    }
  }
  const int center = g.map.tail(g.dart_of[key(log.p2_side[0], 0)]);
  if (log_out) *log_out = log;
  try {
    return SymmetricMap::make(PointedMap::make(g.map, center), k, std::move(rho));
  } catch (const Error &e) {
    fail(std::string("rebuilt map is not symmetric: ") + e.what());
  }
}

} // namespace

NewQuotient phi(const SymmetricMap &s) { return new_quotient(s, kQuad); }
NewQuotient phi_tri(const SymmetricMap &s) { return new_quotient(s, kTri); }

SymmetricMap phi_inverse(const PlaneMap &m, int marked_edge, SurgeryLog *log) {
  return new_quotient_inverse(m, marked_edge, kQuad, log);
}
SymmetricMap phi_tri_inverse(const PlaneMap &m, int marked_edge, SurgeryLog *log) {
  return new_quotient_inverse(m, marked_edge, kTri, log);
}

} // namespace symmaps
