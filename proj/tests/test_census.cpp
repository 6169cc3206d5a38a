#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "symmaps/canonical.hpp"
#include "symmaps/census.hpp"
#include "symmaps/map_metrics.hpp"

using namespace symmaps;

namespace {

// Bucket values with trailing zeros dropped.
std::vector<long> counts(const std::vector<mpz_class> &v) {
  std::vector<long> out;
  for (const auto &c : v) out.push_back(c.get_si());
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

} // namespace

TEST_CASE("one inner face: the square") {
  const auto maps = enumerate(CensusQuery::dissections(4, 4, 1));
  REQUIRE(maps.size() == 1);
  CHECK(canonical_code(maps[0]) == canonical_code(fixtures::square()));
}

TEST_CASE("rooted simple triangulations with 2, 4, 6, 8 faces") {
  std::vector<long> got;
  for (int f = 2; f <= 8; f += 2) got.push_back(count(CensusQuery::simple_triangulations(f)).get_si());
  CHECK(got == std::vector<long>{1, 1, 3, 13});
}

TEST_CASE("rooted simple quadrangulations with 2, 3, 4 faces") {
  std::vector<long> got;
  for (int f = 2; f <= 4; ++f) got.push_back(count(CensusQuery::simple_quadrangulations(f)).get_si());
  CHECK(got == std::vector<long>{1, 2, 6});
}

TEST_CASE("rooted sphere maps match independent enumeration") {
  // Frozen from an independent brute-force enumeration.
  std::vector<long> quads, tris;
  for (int f = 1; f <= 5; ++f) quads.push_back(count(CensusQuery::sphere_maps(4, f)).get_si());
  for (int f = 2; f <= 6; f += 2) tris.push_back(count(CensusQuery::sphere_maps(3, f)).get_si());
  CHECK(quads == std::vector<long>{2, 9, 54, 378, 2916});
  CHECK(tris == std::vector<long>{4, 32, 336});
}

TEST_CASE("generated maps are pairwise distinct and well formed") {
  for (int f = 1; f <= 5; ++f) {
    std::set<std::string> codes;
    size_t n = 0;
    generate(CensusQuery::sphere_maps(4, f), [&](const PlaneMap &m) {
      ++n;
      codes.insert(canonical_code(m));
      CHECK(all_faces_have_degree(m, 4));
      CHECK(m.n_faces() == f);
    });
    CHECK(codes.size() == n);
  }
}

TEST_CASE("filters partition the census") {
  for (int f = 2; f <= 6; ++f) {
    long simple = 0, other = 0;
    generate(CensusQuery::sphere_maps(4, f), [&](const PlaneMap &m) {
      (is_simple(m) && outer_face_is_simple(m) ? simple : other) += 1;
    });
    CHECK(simple == count(CensusQuery::simple_quadrangulations(f)).get_si());
    CHECK(simple + other == count(CensusQuery::sphere_maps(4, f)).get_si());
  }
}

TEST_CASE("two-point quadrangulation buckets") {
  // Frozen from an independent brute-force enumeration; entry i is distance i.
  CHECK(counts(two_point_quad_by_distance(1)) == std::vector<long>{2, 1});
  CHECK(counts(two_point_quad_by_distance(2)) == std::vector<long>{9, 8, 1});
  CHECK(counts(two_point_quad_by_distance(3)) == std::vector<long>{54, 65, 15, 1});
  CHECK(counts(two_point_quad_by_distance(4)) == std::vector<long>{378, 554, 179, 22, 1});
  CHECK(count_two_point_quad(3, 7) == 0);
}

TEST_CASE("pointed 2-dissections agree with the two-point census") {
  for (int n = 1; n <= 4; ++n) {
    const auto two = two_point_quad_by_distance(n);
    const auto pointed = pointed_dissections_by_distance(4, n, false);
    const auto a = counts(two), b = counts(pointed);
    REQUIRE(a.size() == b.size());
    for (size_t i = 1; i < a.size(); ++i) CHECK(a[i] == b[i]);
    CHECK(b[0] == 0);
  }
  CHECK(count_pointed_dissections(4, 3, 0) == 0);
}

TEST_CASE("pointed triangular 1-dissections by distance") {
  // Frozen from an independent brute-force enumeration.
  CHECK(counts(pointed_dissections_by_distance(3, 1, false)) == std::vector<long>{0, 1});
  CHECK(counts(pointed_dissections_by_distance(3, 3, false)) == std::vector<long>{0, 7, 1});
  const auto b5 = counts(pointed_dissections_by_distance(3, 5, false));
  CHECK(b5[1] == 75);
  CHECK(b5[2] == 20);
  CHECK(b5[3] == 1);
  const auto b7 = counts(pointed_dissections_by_distance(3, 7, false));
  CHECK(b7[1] == 951);
  CHECK(b7[2] == 358);
  CHECK(b7[3] == 34);
}

TEST_CASE("symmetric census") {
  // 2-symmetric simple quadrangulations equal edge-marked ones of half size.
  for (int n = 1; n <= 3; ++n) {
    CHECK(count_symmetric(4, 2, 2 * n) == static_cast<unsigned long>(edge_marked_simple_classes(4, n).size()));
  }
  CHECK(count_symmetric(3, 3, 6) == 0); // even sizes are empty
  CHECK(count_symmetric(3, 3, 3) == 1);
  CHECK(count_symmetric(3, 3, 9) == 2);
  CHECK(symmetric_inner_faces(4, 2, 3) == 6);
  CHECK(symmetric_inner_faces(3, 3, 1) == 9);
  for (const auto &s : symmetric_simple_classes(4, 2, 6)) {
    CHECK(is_simple(s.map()));
    CHECK(s.k == 2);
  }
}

TEST_CASE("size caps are enforced") {
  CHECK_THROWS_AS(count(CensusQuery::simple_quadrangulations(8)), Error);
  CHECK_THROWS_AS(symmetric_simple_classes(4, 2, 10), Error);
  auto q = CensusQuery::simple_quadrangulations(8);
  q.face_cap = 8;
  CHECK(count(q) == 1938);
}
