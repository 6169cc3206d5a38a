#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "symmaps/census.hpp"
#include "symmaps/render.hpp"

using namespace symmaps;

namespace {

double cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool segments_cross(Point a, Point b, Point c, Point d) {
  const double d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
  return ((d1 > 1e-9 && d2 < -1e-9) || (d1 < -1e-9 && d2 > 1e-9)) &&
         ((d3 > 1e-9 && d4 < -1e-9) || (d3 < -1e-9 && d4 > 1e-9));
}

} // namespace

TEST_CASE("the square is drawn as a convex quadrilateral") {
  const auto m = fixtures::square();
  const auto pos = barycentric_layout(m);
  const auto &outer = m.outer_darts();
  double sign = 0;
  for (size_t j = 0; j < outer.size(); ++j) {
    const Point a = pos[m.tail(outer[j])], b = pos[m.head(outer[j])],
                c = pos[m.head(outer[(j + 1) % outer.size()])];
    const double z = cross(a, b, c);
    CHECK(std::abs(z) > 1e-6);
    if (sign == 0) sign = z;
    CHECK(z * sign > 0);
  }
}

TEST_CASE("the cube is drawn as nested squares") {
  const auto m = fixtures::cube();
  const auto pos = barycentric_layout(m);
  for (int v = 0; v < m.n_vertices(); ++v) {
    const double r = std::hypot(pos[v].x, pos[v].y);
    // Outer corners lie on the unit circle, inner ones at a third of it.
    CHECK(r == doctest::Approx(m.is_outer_vertex(v) ? 1.0 : 1.0 / 3).epsilon(1e-9));
  }
}

TEST_CASE("census witnesses draw without crossings") {
  for (const auto &m : enumerate(CensusQuery::simple_triangulations(8))) {
    const auto pos = barycentric_layout(m);
    for (int e = 0; e < m.n_edges(); ++e) {
      for (int f = e + 1; f < m.n_edges(); ++f) {
        const int a = m.tail(2 * e), b = m.head(2 * e), c = m.tail(2 * f), d = m.head(2 * f);
        if (a == c || a == d || b == c || b == d) continue;
        CHECK_FALSE(segments_cross(pos[a], pos[b], pos[c], pos[d]));
      }
    }
  }
}

TEST_CASE("rendering is deterministic and marks decorations") {
  MapRecord r = record_of(fixtures::symmetric(fixtures::spiked_square(), 2));
  r.marked_edge = 4;
  const std::string a = render_svg(r), b = render_svg(r);
  CHECK(a == b);
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(a.find("stroke=\"red\"") != std::string::npos);
  CHECK(a.find("fill=\"red\"") != std::string::npos);
}

TEST_CASE("tiny maps get a schematic") {
  const auto edge = PlaneMap::build({0, 1}, 0);
  CHECK_THROWS_AS(barycentric_layout(edge), Error);
  const std::string svg = render_svg(record_of(edge));
  CHECK(svg.find("schematic") != std::string::npos);
}
