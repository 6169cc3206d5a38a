#include "symmaps/render.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

namespace symmaps {

namespace {

constexpr double kSize = 400, kMargin = 40;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

Point to_canvas(Point p) { return {kMargin + (p.x + 1) / 2 * kSize, kMargin + (1 - p.y) / 2 * kSize}; }

void header(std::ostringstream &os) {
  const double w = kSize + 2 * kMargin;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w) << "\" height=\"" << fmt(w)
     << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(w) << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string schematic(const MapRecord &r) {
  const PlaneMap &m = r.map;
  std::ostringstream os;
  header(os);
  const double cy = kMargin + kSize / 2;
  std::vector<Point> pos(m.n_vertices());
  for (int v = 0; v < m.n_vertices(); ++v) {
    const double x = m.n_vertices() == 1 ? kMargin + kSize / 2 : kMargin + kSize * (0.25 + 0.5 * v);
    pos[v] = {x, cy};
  }
  os << "<text x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin / 2) << "\" font-size=\"14\">schematic: "
     << m.n_vertices() << " vertices, " << m.n_edges() << " edges, " << m.n_faces() << " faces</text>\n";
  std::map<std::pair<int, int>, int> seen;
  for (int e = 0; e < m.n_edges(); ++e) {
    const int a = m.tail(2 * e), b = m.head(2 * e);
    const int idx = seen[{std::min(a, b), std::max(a, b)}]++;
    if (a == b) {
      os << "<circle cx=\"" << fmt(pos[a].x) << "\" cy=\"" << fmt(pos[a].y - 20 - 10 * idx) << "\" r=\""
         << fmt(20 + 10 * idx) << "\" fill=\"none\" stroke=\"black\"/>\n";
    } else {
      const double bend = (idx % 2 ? -1 : 1) * 30.0 * ((idx + 1) / 2);
      os << "<path d=\"M " << fmt(pos[a].x) << " " << fmt(pos[a].y) << " Q " << fmt((pos[a].x + pos[b].x) / 2) << " "
         << fmt(cy + bend) << " " << fmt(pos[b].x) << " " << fmt(pos[b].y) << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
  }
  for (int v = 0; v < m.n_vertices(); ++v) {
    os << "<circle cx=\"" << fmt(pos[v].x) << "\" cy=\"" << fmt(pos[v].y) << "\" r=\"5\" fill=\"black\"/>\n"
       << "<text x=\"" << fmt(pos[v].x + 8) << "\" y=\"" << fmt(pos[v].y + 18) << "\" font-size=\"12\">v" << v
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace

std::vector<Point> barycentric_layout(const PlaneMap &m, int max_sweeps, double tol) {
  if (m.n_vertices() <= 2) throw Error(Errc::RenderDegenerate, "map has at most 2 vertices");
  std::vector<Point> pos(m.n_vertices());
  std::vector<char> fixed(m.n_vertices(), 0);
  std::vector<int> ring;
  for (Dart d : m.outer_darts()) {
    if (!fixed[m.tail(d)]) {
      fixed[m.tail(d)] = 1;
      ring.push_back(m.tail(d));
    }
  }
  if (ring.size() < 3) {
    // Too few distinct outer vertices for a convex polygon: fix the vertices
    // of a largest face instead.
    int best = 0;
    for (int f = 0; f < m.n_faces(); ++f) {
      if (m.face_degree(f) > m.face_degree(best)) best = f;
    }
    std::fill(fixed.begin(), fixed.end(), 0);
    ring.clear();
    for (Dart d : m.face_darts(best)) {
      if (!fixed[m.tail(d)]) {
        fixed[m.tail(d)] = 1;
        ring.push_back(m.tail(d));
      }
    }
    if (ring.size() < 3) throw Error(Errc::RenderDegenerate, "no face with three distinct vertices");
  }
  // Outer darts traverse the contour clockwise; place them clockwise from the top.
  const int r = static_cast<int>(ring.size());
  for (int j = 0; j < r; ++j) {
    const double a = std::numbers::pi / 2 - 2 * std::numbers::pi * j / r;
    pos[ring[j]] = {std::cos(a), std::sin(a)};
  }
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double moved = 0;
    for (int v = 0; v < m.n_vertices(); ++v) {
      if (fixed[v]) continue;
      Point s;
      int n = 0;
      for (Dart d : m.vertex_darts(v)) {
        const int w = m.head(d);
        if (w == v) continue;
        s.x += pos[w].x;
        s.y += pos[w].y;
        ++n;
      }
      if (n == 0) continue;
      const Point np{s.x / n, s.y / n};
      moved = std::max(moved, std::hypot(np.x - pos[v].x, np.y - pos[v].y));
      pos[v] = np;
    }
    if (moved < tol) break;
  }
  return pos;
}

std::string render_svg(const MapRecord &r) {
  const PlaneMap &m = r.map;
  if (m.n_vertices() <= 2) return schematic(r);
  const std::vector<Point> layout = barycentric_layout(m);
  std::vector<Point> pos;
  for (const Point &p : layout) pos.push_back(to_canvas(p));

  std::ostringstream os;
  header(os);
  os << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"black\"/></marker></defs>\n";
  std::map<std::pair<int, int>, int> seen;
  for (int e = 0; e < m.n_edges(); ++e) {
    Dart d = 2 * e;
    bool directed = false;
    if (r.orient && e < static_cast<int>(r.orient->size()) && !m.is_outer_edge(e)) {
      directed = true;
      if ((*r.orient)[e]) d = 2 * e + 1;
    }
    const int a = m.tail(d), b = m.head(d);
    const int idx = seen[{std::min(a, b), std::max(a, b)}]++;
    const bool marked = r.marked_edge && *r.marked_edge == e;
    const std::string stroke = marked ? "red" : "black";
    const std::string width = marked ? "3" : "1.5";
    const std::string arrow = directed ? " marker-end=\"url(#arrow)\"" : "";
    if (a == b) {
      const double rad = 12 + 6 * idx;
      os << "<circle cx=\"" << fmt(pos[a].x) << "\" cy=\"" << fmt(pos[a].y - rad) << "\" r=\"" << fmt(rad)
         << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"/>\n";
      continue;
    }
    if (idx == 0) {
      os << "<line x1=\"" << fmt(pos[a].x) << "\" y1=\"" << fmt(pos[a].y) << "\" x2=\"" << fmt(pos[b].x)
         << "\" y2=\"" << fmt(pos[b].y) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"" << arrow
         << "/>\n";
      continue;
    }
    // Parallel edges bend alternately to either side of the segment.
    const double dx = pos[b].x - pos[a].x, dy = pos[b].y - pos[a].y, len = std::hypot(dx, dy);
    const double sign = (a < b) ? 1 : -1;
    const double off = sign * (idx % 2 ? 1 : -1) * 25.0 * ((idx + 1) / 2);
    const double cx = (pos[a].x + pos[b].x) / 2 - dy / len * off, cy = (pos[a].y + pos[b].y) / 2 + dx / len * off;
    os << "<path d=\"M " << fmt(pos[a].x) << " " << fmt(pos[a].y) << " Q " << fmt(cx) << " " << fmt(cy) << " "
       << fmt(pos[b].x) << " " << fmt(pos[b].y) << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
       << width << "\"" << arrow << "/>\n";
  }
  for (int v = 0; v < m.n_vertices(); ++v) {
    const bool pointed = r.pointed && *r.pointed == v;
    os << "<circle cx=\"" << fmt(pos[v].x) << "\" cy=\"" << fmt(pos[v].y) << "\" r=\"" << (pointed ? "7" : "4")
       << "\" fill=\"" << (pointed ? "red" : (m.is_outer_vertex(v) ? "black" : "white"))
       << "\" stroke=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace symmaps
