#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "symmaps/canonical.hpp"
#include "symmaps/census.hpp"
#include "symmaps/map_metrics.hpp"
#include "symmaps/quotient.hpp"

using namespace symmaps;

namespace {

std::string pointed_code(const PlaneMap &m, int v) {
  Marks mk;
  mk.pointed = v;
  return unrooted_code(m, mk);
}

std::string edge_code(const PlaneMap &m, int e) {
  Marks mk;
  mk.marked_edge = e;
  return unrooted_code(m, mk);
}

} // namespace

TEST_CASE("classical quotient of the split square") {
  const auto s = fixtures::symmetric(fixtures::split_square(), 2);
  const PointedMap e = classical_quotient(s);
  CHECK(e.map.outer_degree() == 2);
  CHECK(e.map.n_faces() == 2);
  CHECK(e.map.n_edges() == 3);
  const auto rep = verify_quotient_lemmas(s);
  CHECK(rep.all());
}

TEST_CASE("unroll inverts the classical quotient") {
  for (int k : {2, 3, 4}) {
    for (int n = 1; n <= 3; ++n) {
      generate(CensusQuery::dissections(4, 2, n), [&](const PlaneMap &m) {
        for (int v = 0; v < m.n_vertices(); ++v) {
          if (m.is_outer_vertex(v)) continue;
          const auto s = unroll(PointedMap::make(m, v), k);
          CHECK(s.k == k);
          CHECK(s.map().outer_degree() == 2 * k);
          CHECK(verify_quotient_lemmas(s).all());
          const auto back = classical_quotient(s);
          CHECK(pointed_code(back.map, back.pointed) == pointed_code(m, v));
        }
      });
    }
  }
}

TEST_CASE("quotients of symmetric simple maps are quasi-simple") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto &s : symmetric_simple_classes(4, 2, 2 * n)) {
      CHECK(is_quasi_simple(classical_quotient(s)));
      CHECK(verify_quotient_lemmas(s).all());
    }
  }
  for (const auto &s : symmetric_simple_classes(3, 3, 9)) CHECK(is_quasi_simple(classical_quotient(s)));
}

TEST_CASE("phi on the split square") {
  const auto s = fixtures::symmetric(fixtures::split_square(), 2);
  const NewQuotient q = phi(s);
  CHECK(q.map.n_faces() == 2); // the square with one inner face
  CHECK(is_simple(q.map));
  CHECK(q.marked_edge() >= 0);
  const auto back = phi_inverse(q.map, q.marked_edge());
  CHECK(pointed_code(back.map(), back.center()) == pointed_code(s.map(), s.center()));
}

TEST_CASE("phi and its inverse are mutually inverse on the census") {
  for (int n = 1; n <= 4; ++n) {
    const auto sym = symmetric_simple_classes(4, 2, 2 * n);
    std::set<std::string> images;
    for (const auto &s : sym) {
      const auto q = phi(s);
      CHECK(q.map.n_faces() == n + 1);
      images.insert(edge_code(q.map, q.marked_edge()));
      const auto back = phi_inverse(q.map, q.marked_edge());
      CHECK(pointed_code(back.map(), back.center()) == pointed_code(s.map(), s.center()));
    }
    CHECK(images.size() == sym.size());
    for (const auto &x : edge_marked_simple_classes(4, n)) {
      const auto q = phi(phi_inverse(x.map, x.edge));
      CHECK(edge_code(q.map, q.marked_edge()) == edge_code(x.map, x.edge));
    }
  }
}

TEST_CASE("triangular phi on the census") {
  for (int n : {1, 3}) {
    const auto sym = symmetric_simple_classes(3, 3, 3 * n);
    std::set<std::string> images;
    for (const auto &s : sym) {
      const auto q = phi_tri(s);
      CHECK(q.map.n_faces() == n + 1);
      images.insert(edge_code(q.map, q.marked_edge()));
      const auto back = phi_tri_inverse(q.map, q.marked_edge());
      CHECK(pointed_code(back.map(), back.center()) == pointed_code(s.map(), s.center()));
    }
    CHECK(images.size() == sym.size());
  }
}

TEST_CASE("phi rejects inputs outside its domain") {
  const auto s = fixtures::symmetric(fixtures::split_square(), 2);
  CHECK_THROWS_AS(phi_tri(s), Error);
  SymmetricMap t;
  REQUIRE(find_symmetry(fixtures::tetrahedron(), 3, &t));
  CHECK_THROWS_AS(phi(t), Error);
}

TEST_CASE("gluing two triangles along one side") {
  // Keys 0..2 and 3..5 are the sides of two triangles; side 0 meets side 3.
  const auto g = glue_polygons({{0, 1, 2}, {3, 4, 5}}, {3, -1, -1, 0, -1, -1});
  CHECK(g.map.n_faces() == 3);
  CHECK(g.map.outer_degree() == 4);
  CHECK(g.map.n_vertices() == 4);
  CHECK(g.dart_of[3] == alpha(g.dart_of[0]));
}
