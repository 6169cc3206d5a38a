#include <doctest.h>

#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "symmaps/canonical.hpp"
#include "symmaps/census.hpp"
#include "symmaps/map_json.hpp"
#include "symmaps/map_metrics.hpp"

using namespace symmaps;

namespace {

Errc code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::BadInput;
}

// Relabels edges in reverse order and swaps the two darts of every odd edge.
std::vector<Dart> scramble(int n_darts) {
  std::vector<Dart> perm(n_darts);
  const int n_edges = n_darts / 2;
  for (Dart d = 0; d < n_darts; ++d) {
    const int e = n_edges - 1 - edge_of(d);
    perm[d] = 2 * e + ((d & 1) ^ (e & 1));
  }
  return perm;
}

} // namespace

TEST_CASE("fixture sizes obey Euler's relation") {
  for (const auto &m : {fixtures::square(), fixtures::tetrahedron(), fixtures::cube(), fixtures::nested_cubes(),
                        fixtures::split_square(), fixtures::spiked_square()}) {
    CHECK(m.n_vertices() - m.n_edges() + m.n_faces() == 2);
  }
  const auto sq = fixtures::square();
  CHECK(sq.n_vertices() == 4);
  CHECK(sq.n_faces() == 2);
  CHECK(sq.outer_degree() == 4);
  const auto cube = fixtures::cube();
  CHECK(cube.n_faces() == 6);
  CHECK(all_faces_have_degree(cube, 4));
  CHECK(fixtures::tetrahedron().outer_degree() == 3);
  CHECK(all_faces_have_degree(fixtures::spiked_square(), 4));
}

TEST_CASE("the root has the outer face on its left") {
  const auto m = fixtures::cube();
  CHECK(m.face_of(m.root()) == m.outer_face());
  CHECK(m.face_of(alpha(m.root())) != m.outer_face());
  int outer_vertices = 0;
  for (int v = 0; v < m.n_vertices(); ++v) outer_vertices += m.is_outer_vertex(v);
  CHECK(outer_vertices == 4);
}

TEST_CASE("phi and sigma relations") {
  const auto m = fixtures::nested_cubes();
  for (Dart d = 0; d < m.n_darts(); ++d) {
    CHECK(m.phi_inv(m.phi(d)) == d);
    CHECK(m.sigma_inv(m.sigma(d)) == d);
    CHECK(m.face_of(m.phi(d)) == m.face_of(d));
    CHECK(m.tail(m.sigma(d)) == m.tail(d));
  }
}

TEST_CASE("build rejects malformed rotation systems") {
  CHECK(code_of([] { PlaneMap::build({0, 0}, 0); }) == Errc::NotAPermutation);
  CHECK(code_of([] { PlaneMap::build({}, 0); }) == Errc::EmptyMap);
  CHECK(code_of([] { PlaneMap::build({1, 0}, 2); }) == Errc::BadRoot);
  // Two separate single edges.
  CHECK(code_of([] { PlaneMap::build({0, 1, 2, 3}, 0); }) == Errc::Disconnected);
  // One vertex with two interleaved loops is a torus map.
  CHECK(code_of([] { PlaneMap::build({2, 3, 1, 0}, 0); }) == Errc::NonPlanar);
}

TEST_CASE("symmetric maps validate their rotation") {
  const auto s = fixtures::symmetric(fixtures::split_square(), 2);
  CHECK(s.k == 2);
  CHECK(!s.map().is_outer_vertex(s.center()));
  std::vector<Dart> identity(s.map().n_darts());
  std::iota(identity.begin(), identity.end(), 0);
  CHECK(code_of([&] { SymmetricMap::make(s.base, 2, identity); }) == Errc::BadSymmetry);
  CHECK(code_of([&] { SymmetricMap::make(s.base, 3, s.rho); }) == Errc::BadSymmetry);
  CHECK(code_of([&] { PointedMap::make(s.map(), 0); }) == Errc::BadMark);
}

TEST_CASE("canonical codes are invariant under relabelling and outer rerooting") {
  for (int faces = 2; faces <= 5; ++faces) {
    for (const auto &m : enumerate(CensusQuery::sphere_maps(4, faces))) {
      const PlaneMap r = m.relabeled(scramble(m.n_darts()));
      CHECK(canonical_code(r) == canonical_code(m));
      for (Dart d : m.outer_darts()) CHECK(unrooted_code(m.rerooted(d)) == unrooted_code(m));
    }
  }
}

TEST_CASE("marks change the canonical code") {
  const auto m = fixtures::spiked_square();
  std::set<std::string> codes;
  for (int v = 0; v < m.n_vertices(); ++v) {
    Marks mk;
    mk.pointed = v;
    codes.insert(canonical_code(m, mk));
  }
  CHECK(codes.size() == static_cast<size_t>(m.n_vertices()));
}

TEST_CASE("rotation automorphisms of fixtures") {
  const auto split = fixtures::split_square();
  const auto s = fixtures::symmetric(split, 2);
  CHECK(find_rotation_automorphisms(split, s.center()).size() == 1);
  const auto tet = fixtures::tetrahedron();
  SymmetricMap t;
  CHECK(find_symmetry(tet, 3, &t));
  CHECK(t.k == 3);
  SymmetricMap none;
  CHECK_FALSE(find_symmetry(fixtures::cube(), 2, &none)); // its center is a face
}

TEST_CASE("JSON records round trip") {
  const auto s = fixtures::symmetric(fixtures::spiked_square(), 2);
  const MapRecord r = record_of(s);
  const auto j = record_to_json(r);
  CHECK(j["k"] == 2);
  CHECK(j["marked_edge"].is_null());
  const MapRecord back = record_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.map == s.map());
  CHECK(*back.pointed == s.center());
  CHECK(*back.rho == s.rho);
  CHECK(code_of([] { record_from_json(nlohmann::json::parse(R"({"n_darts": 2})")); }) == Errc::BadInput);
  CHECK(code_of([] {
          record_from_json(nlohmann::json::parse(R"({"n_darts": 2, "sigma": [0, 0], "root": 0})"));
        }) == Errc::NotAPermutation);
}

TEST_CASE("metrics on fixtures") {
  CHECK(is_simple(fixtures::cube()));
  CHECK(is_irreducible(fixtures::cube(), 4));
  CHECK(is_simple(fixtures::nested_cubes()));
  CHECK_FALSE(is_irreducible(fixtures::nested_cubes(), 4));
  CHECK(is_irreducible(fixtures::tetrahedron(), 3));
  CHECK(outer_face_is_simple(fixtures::square()));

  const auto p = PointedMap::make(fixtures::spiked_square(), 4);
  CHECK(radial_distance(p) == 1);
  CHECK(enclosing_girth(p) == 4);
  CHECK(is_quasi_simple(p));
}
