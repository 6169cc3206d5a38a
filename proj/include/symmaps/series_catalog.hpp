#pragma once

#include <string>
#include <vector>

#include "symmaps/series.hpp"

namespace symmaps {

// A series defined by an algebraic or differential equation, together with
// the equation cleared of denominators evaluated at the solution.
struct AlgebraicSeries {
  std::string name;
  std::string equation;
  TruncSeries value;
  TruncSeries residual;

  bool residual_vanishes() const { return residual.is_zero(); }
};

// Rooted simple quadrangulations by total faces:
// q' = x (2 + 2 q'^2 + 3 q') / (1 + q), q(0) = 0.
TruncSeries solve_q(int order);
// Rooted simple triangulations by half the number of faces:
// t' = (3 x t'^2 + 1) / (t + 1), t(0) = 0.
TruncSeries solve_t(int order);

// Named algebraic series; each carries its residual.
std::vector<AlgebraicSeries> algebraic_catalog(int order);
AlgebraicSeries algebraic_series(const std::string &name, int order);

enum class TwoPointFamily { Quad, QuadSimple, QuadIrred, Tri, TriSimple, TriIrred };
TwoPointFamily parse_two_point_family(const std::string &s); // throws UnknownName
std::string family_name(TwoPointFamily f);

// Distance-i two-point series. Quadrangular families: X_{i+1} - X_i with
// X_i = X_inf (1-X^i)(1-X^{i+3}) / ((1-X^{i+1})(1-X^{i+2})). Triangular
// families: X_{i+1} - X_{i-1} + A_i^2 - A_{i-1}^2, where only squares of the
// A_i are ever formed. Throws BadDistance for i < 1.
TruncSeries two_point(TwoPointFamily f, int i, int order);
// The distance-i partial sums X_i (and A_i^2 for triangular families).
TruncSeries two_point_partial(TwoPointFamily f, int i, int order);
TruncSeries two_point_partial_square(TwoPointFamily f, int i, int order);

// Series exposed by name, with the variable and size convention recorded.
struct NamedSeries {
  std::string name;
  std::string variable;
  std::string size_convention;
  bool counting = false;
  TruncSeries series;
};
std::vector<std::string> series_names();
NamedSeries named_series(const std::string &name, int order); // throws UnknownName
NamedSeries named_two_point(TwoPointFamily f, int i, int order);

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string details;
};

// Substitution lemmas: "xy_quad", "yz_quad", "xy_triang", "yz_triang".
IdentityCheck check_change_of_variables(const std::string &lemma, int order);
// X -> 1/X also solves the cleared X, Y, Z relations of all six families.
std::vector<IdentityCheck> check_reciprocal_symmetry(int order);
// Cross identities among the series of the catalog.
std::vector<IdentityCheck> check_series_identities(int order);
// Two-point substitutions, for distances 1..max_i.
std::vector<IdentityCheck> check_two_point_substitutions(int max_i, int order);

} // namespace symmaps
