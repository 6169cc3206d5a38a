#include <doctest.h>

#include "fixtures.hpp"
#include "symmaps/census.hpp"
#include "symmaps/map_metrics.hpp"
#include "symmaps/orientation.hpp"

using namespace symmaps;

namespace {

int outdegree(const PlaneMap &m, const Orientation &o, int v) {
  int n = 0;
  for (Dart d : m.vertex_darts(v)) n += o.outgoing(d);
  return n;
}

} // namespace

TEST_CASE("the square has an empty orientation") {
  const auto m = fixtures::square();
  const auto o = find_d_orientation(m, 2);
  REQUIRE(o);
  for (Dart d : o->out) CHECK(d == -1);
  CHECK(is_valid_orientation(m, *o));
  CHECK(is_minimal(m, *o));
}

TEST_CASE("the tetrahedron orientation is forced") {
  const auto m = fixtures::tetrahedron();
  const auto o = find_d_orientation(m, 3);
  REQUIRE(o);
  for (int v = 0; v < m.n_vertices(); ++v) {
    CHECK(outdegree(m, *o, v) == (m.is_outer_vertex(v) ? 0 : 3));
  }
}

TEST_CASE("non-simple quadrangulations admit no 2-orientation") {
  int seen = 0;
  generate(CensusQuery::dissections(4, 4, 3), [&](const PlaneMap &m) {
    if (is_simple(m)) return;
    ++seen;
    CHECK_FALSE(find_d_orientation(m, 2));
  });
  CHECK(seen > 0);
}

TEST_CASE("wrong face degrees are rejected") {
  CHECK_THROWS_AS(find_d_orientation(fixtures::tetrahedron(), 2), Error);
  CHECK_THROWS_AS(find_d_orientation(fixtures::cube(), 3), Error);
}

TEST_CASE("cube: minimal orientation") {
  const auto m = fixtures::cube();
  const auto o = minimal_orientation(m, 2);
  REQUIRE(o);
  CHECK(is_valid_orientation(m, *o));
  CHECK(is_minimal(m, *o));
  for (const auto &c : directed_cycles(m, *o)) CHECK_FALSE(is_ccw(m, c));
  // A maximal orientation has no clockwise cycle.
  const auto hi = maximize(m, *o);
  for (const auto &c : directed_cycles(m, hi)) CHECK(is_ccw(m, c));
  CHECK(minimize(m, hi) == *o);
}

TEST_CASE("minimal orientations are independent of initialization") {
  for (int f = 2; f <= 7; ++f) {
    generate(CensusQuery::simple_quadrangulations(f), [&](const PlaneMap &m) {
      const auto a = find_d_orientation(m, 2, EdgeScan::Forward);
      const auto b = find_d_orientation(m, 2, EdgeScan::Backward);
      REQUIRE(a);
      REQUIRE(b);
      const Orientation lo = minimize(m, *a);
      CHECK(lo == minimize(m, *b));
      CHECK(lo == minimize(m, maximize(m, *b)));
      CHECK(is_minimal(m, lo));
    });
  }
  for (int f = 2; f <= 8; f += 2) {
    generate(CensusQuery::simple_triangulations(f), [&](const PlaneMap &m) {
      const auto a = find_d_orientation(m, 3, EdgeScan::Forward);
      const auto b = find_d_orientation(m, 3, EdgeScan::Backward);
      REQUIRE(a);
      REQUIRE(b);
      CHECK(minimize(m, *a) == minimize(m, *b));
    });
  }
}

TEST_CASE("leftmost paths are simple and end on the outer face") {
  for (const auto &m : {fixtures::cube(), fixtures::nested_cubes(), fixtures::spiked_square()}) {
    const auto o = minimal_orientation(m, 2);
    REQUIRE(o);
    for (Dart d = 0; d < m.n_darts(); ++d) {
      if (!o->outgoing(d)) continue;
      const auto path = leftmost_path(m, *o, d);
      REQUIRE(!path.empty());
      CHECK(path.front() == d);
      CHECK(m.is_outer_vertex(m.head(path.back())));
      for (size_t j = 0; j + 1 < path.size(); ++j) {
        CHECK(m.head(path[j]) == m.tail(path[j + 1]));
        CHECK_FALSE(m.is_outer_vertex(m.head(path[j])));
      }
    }
  }
}

TEST_CASE("minimal orientations of symmetric maps are rho-invariant") {
  for (const auto &m : {fixtures::split_square(), fixtures::spiked_square()}) {
    const auto s = fixtures::symmetric(m, 2);
    const auto o = minimal_orientation(m, 2);
    REQUIRE(o);
    CHECK(check_symmetric_minimal(s, *o));
  }
}

TEST_CASE("orientation bits round trip") {
  const auto m = fixtures::nested_cubes();
  const auto o = minimal_orientation(m, 2);
  REQUIRE(o);
  const auto bits = orientation_bits(*o);
  CHECK(bits.size() == static_cast<size_t>(m.n_edges()));
  CHECK(orientation_from_bits(m, 2, bits) == *o);
}
