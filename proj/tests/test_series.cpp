#include <doctest.h>

#include "symmaps/series_catalog.hpp"

using namespace symmaps;

namespace {

std::vector<long> ints(const TruncSeries &s) {
  std::vector<long> out;
  for (int n = 0; n <= s.order(); ++n) {
    REQUIRE(s[n].get_den() == 1);
    out.push_back(s[n].get_num().get_si());
  }
  return out;
}

} // namespace

TEST_CASE("truncated series arithmetic") {
  const TruncSeries x = TruncSeries::variable(6);
  const TruncSeries geom = (1 - x).inverse();
  CHECK(ints(geom) == std::vector<long>{1, 1, 1, 1, 1, 1, 1});
  CHECK(ints((1 - 2 * x).pow(-1)) == std::vector<long>{1, 2, 4, 8, 16, 32, 64});
  CHECK(((1 + x) * (1 + x)).sqrt() == 1 + x);
  CHECK(ints(geom.compose(x * x)) == std::vector<long>{1, 0, 1, 0, 1, 0, 1});
  CHECK(ints((x * x * 3).divide_shifted(x)) == std::vector<long>{0, 3, 0, 0, 0, 0});
  CHECK(geom.derivative().integral() + 1 == geom);
  CHECK((x + TruncSeries::variable(3)).order() == 3);
  CHECK(x.valuation() == 1);
  CHECK(TruncSeries(4).is_zero());
  CHECK(geom.to_string() == "1 + 1*x + 1*x^2 + 1*x^3 + 1*x^4 + 1*x^5 + 1*x^6 + O(x^7)");
}

TEST_CASE("series errors") {
  const TruncSeries x = TruncSeries::variable(4);
  CHECK_THROWS_AS(x.inverse(), Error);
  CHECK_THROWS_AS((2 + x).sqrt(), Error);
  CHECK_THROWS_AS(x.compose(1 + x), Error);
  CHECK_THROWS_AS(x.divide_shifted(x * x), Error);
  CHECK_THROWS_AS(fixpoint_solve(4, [](const TruncSeries &s) { return s + 1; }), Error);
  CHECK_THROWS_AS(named_series("no_such_series", 5), Error);
  CHECK_THROWS_AS(two_point(TwoPointFamily::Quad, 0, 5), Error);
  CHECK_THROWS_AS(parse_two_point_family("pentagon"), Error);
}

TEST_CASE("laurent reciprocal") {
  const TruncSeries x = TruncSeries::variable(6);
  const LaurentSeries w = LaurentSeries(x * (1 - x)).reciprocal();
  CHECK(w.valuation() == -1);
  CHECK(w.coeff(-1) == 1);
  CHECK(w.coeff(0) == 1);
  const LaurentSeries one = w * LaurentSeries(x * (1 - x));
  CHECK(one.coeff(0) == 1);
  CHECK((one - LaurentSeries(TruncSeries::constant(6, 1))).is_zero_through(one.precision()));
}

TEST_CASE("q and t developments") {
  CHECK(ints(solve_q(8)) == std::vector<long>{0, 0, 1, 2, 6, 22, 91, 408, 1938});
  CHECK(ints(solve_t(8)) == std::vector<long>{0, 1, 1, 3, 13, 68, 399, 2530, 16965});
}

TEST_CASE("every catalog residual vanishes") {
  for (const auto &a : algebraic_catalog(20)) {
    INFO(a.name);
    CHECK(a.residual_vanishes());
  }
}

TEST_CASE("identities and substitutions") {
  for (const auto &c : check_series_identities(14)) {
    INFO(c.name << ": " << c.details);
    CHECK(c.passed);
  }
  for (const char *lemma : {"xy_quad", "yz_quad", "xy_triang", "yz_triang"}) {
    const auto c = check_change_of_variables(lemma, 12);
    INFO(c.details);
    CHECK(c.passed);
  }
  for (const auto &c : check_two_point_substitutions(3, 10)) {
    INFO(c.name << ": " << c.details);
    CHECK(c.passed);
  }
  for (const auto &c : check_reciprocal_symmetry(10)) CHECK(c.passed);
  CHECK_THROWS_AS(check_change_of_variables("zz", 5), Error);
}

TEST_CASE("two-point series match independent values") {
  // Frozen from an independent Python implementation.
  CHECK(ints(two_point(TwoPointFamily::Quad, 1, 7)) == std::vector<long>{0, 1, 8, 65, 554, 4922, 45218, 426785});
  CHECK(ints(two_point(TwoPointFamily::Quad, 2, 6)) == std::vector<long>{0, 0, 1, 15, 179, 1995, 21684});
  CHECK(ints(two_point(TwoPointFamily::Quad, 3, 6)) == std::vector<long>{0, 0, 0, 1, 22, 343, 4676});
  CHECK(ints(two_point(TwoPointFamily::Tri, 1, 5)) == std::vector<long>{1, 7, 75, 951, 13267, 197055});
  CHECK(ints(two_point(TwoPointFamily::Tri, 2, 5)) == std::vector<long>{0, 1, 20, 358, 6306, 111410});
  CHECK(ints(two_point(TwoPointFamily::Tri, 3, 5)) == std::vector<long>{0, 0, 1, 34, 858, 19389});
  CHECK(ints(two_point(TwoPointFamily::TriSimple, 2, 5)) == std::vector<long>{0, 1, 5, 28, 172, 1129});
  CHECK(ints(two_point(TwoPointFamily::QuadIrred, 1, 5)) == std::vector<long>{0, 1, 0, 0, 0, 0});
  CHECK(ints(two_point(TwoPointFamily::TriIrred, 1, 4)) == std::vector<long>{1, 0, 0, 0, 0});
  CHECK(ints(two_point(TwoPointFamily::TriIrred, 2, 4)) == std::vector<long>{0, 1, 2, 6, 22});
}

TEST_CASE("two-point sums over distances") {
  // Summed over i, quad G_i counts symmetric simple quadrangulations, which
  // are equinumerous with edge-marked simple quadrangulations of half size:
  // (n+1) q_{n+1} / 2 at n inner faces.
  const TruncSeries q = solve_q(9);
  for (int n = 1; n <= 6; ++n) {
    mpq_class sum = 0;
    for (int i = 1; i <= n; ++i) sum += two_point(TwoPointFamily::QuadSimple, i, 6)[n];
    CHECK(sum == mpq_class(n + 1) * q[n + 1] / 2);
  }
  // Triangular: (2n+1) inner faces, 3n+3 edges, t_{n+1} rooted maps with 3 roots.
  const TruncSeries t = solve_t(8);
  for (int n = 0; n <= 5; ++n) {
    mpq_class sum = 0;
    for (int i = 1; i <= n + 1; ++i) sum += two_point(TwoPointFamily::TriSimple, i, 5)[n];
    CHECK(sum == mpq_class(n + 1) * t[n + 1]);
  }
}

TEST_CASE("named series metadata") {
  const auto q = named_series("q", 8);
  CHECK(q.variable == "x");
  CHECK(q.counting);
  CHECK(q.series.order() == 8);
  const auto g = named_two_point(TwoPointFamily::TriSimple, 2, 6);
  CHECK(g.variable == "y");
  CHECK(g.series == two_point(TwoPointFamily::TriSimple, 2, 6));
  for (const auto &name : series_names()) {
    if (name == "two_point") continue;
    const auto s = named_series(name, 10);
    if (s.counting) CHECK(s.series.is_nonnegative_integral());
  }
}
