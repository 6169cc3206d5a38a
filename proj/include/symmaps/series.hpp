#pragma once

#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "symmaps/errors.hpp"

namespace symmaps {

// Power series with exact rational coefficients known up to x^order.
// Binary operations truncate to the smaller order.
class TruncSeries {
public:
  TruncSeries() = default;
  explicit TruncSeries(int order);
  TruncSeries(int order, std::vector<mpq_class> coeffs); // pads or truncates to order
  static TruncSeries constant(int order, const mpq_class &c);
  static TruncSeries variable(int order); // x
  static TruncSeries monomial(int order, int exponent, const mpq_class &c = 1);

  int order() const { return order_; }
  const mpq_class &operator[](int i) const { return c_[i]; }
  mpq_class &operator[](int i) { return c_[i]; }
  // Coefficient or zero beyond the stored range.
  mpq_class coeff(int i) const;
  const std::vector<mpq_class> &coeffs() const { return c_; }

  // Lowest index with a nonzero coefficient, or order() + 1 if none.
  int valuation() const;
  bool is_zero() const { return valuation() > order_; }
  TruncSeries truncated(int order) const;

  TruncSeries operator-() const;
  TruncSeries &operator+=(const TruncSeries &b);
  TruncSeries &operator-=(const TruncSeries &b);
  TruncSeries &operator*=(const TruncSeries &b);
  TruncSeries &operator*=(const mpq_class &c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries &b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries &b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b);
  friend TruncSeries operator*(TruncSeries a, const mpq_class &c) { return a *= c; }
  friend TruncSeries operator*(const mpq_class &c, TruncSeries a) { return a *= c; }
  friend TruncSeries operator+(TruncSeries a, const mpq_class &c) {
    a.c_[0] += c;
    return a;
  }
  friend TruncSeries operator+(const mpq_class &c, TruncSeries a) { return a + c; }
  friend TruncSeries operator-(TruncSeries a, const mpq_class &c) {
    a.c_[0] -= c;
    return a;
  }
  friend TruncSeries operator-(const mpq_class &c, const TruncSeries &a) { return -a + c; }
  bool operator==(const TruncSeries &b) const { return order_ == b.order_ && c_ == b.c_; }

  // Requires a nonzero constant term; throws DivisorNotUnit.
  TruncSeries inverse() const;
  friend TruncSeries operator/(const TruncSeries &a, const TruncSeries &b) { return a * b.inverse(); }

  // Exact division when b = x^v * unit and a has valuation >= v. The result
  // keeps order a.order() - v. Throws DivisorNotUnit otherwise.
  TruncSeries divide_shifted(const TruncSeries &b) const;

  TruncSeries derivative() const;      // order drops by one
  TruncSeries integral() const;        // zero constant term, order grows by one
  TruncSeries shifted(int k) const;    // times x^k for k >= 0, divide by x^-k for k < 0 (exact)
  TruncSeries pow(int e) const;        // e >= 0, or e < 0 for units
  TruncSeries sqrt() const;            // constant term 1; throws BadConstantTerm
  // this(inner(x)); inner must have zero constant term (InnerNotNilpotent).
  TruncSeries compose(const TruncSeries &inner) const;

  bool is_nonnegative_integral() const;
  std::string to_string(const std::string &var = "x") const;

private:
  int order_ = 0;
  std::vector<mpq_class> c_{mpq_class(0)};
};

// Laurent series x^valuation * (unit series); used for checks that need
// reciprocals of series vanishing at zero.
class LaurentSeries {
public:
  LaurentSeries(const TruncSeries &s); // NOLINT: implicit from power series
  LaurentSeries(int valuation, TruncSeries unit);

  int valuation() const { return val_; }
  const TruncSeries &unit() const { return unit_; }
  // Highest exponent known exactly.
  int precision() const { return val_ + unit_.order(); }

  LaurentSeries reciprocal() const;
  friend LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b);
  friend LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b);
  friend LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b);
  mpq_class coeff(int exponent) const;
  bool is_zero_through(int exponent) const;

private:
  int val_ = 0;
  TruncSeries unit_;
};

// Iterates s <- step(s) from zero until a fixed point at the given order.
// Each step must fix at least one further coefficient; throws NonContractive
// otherwise.
TruncSeries fixpoint_solve(int order, const std::function<TruncSeries(const TruncSeries &)> &step);

// Solves y = rhs(y) when coefficient n of rhs(y) depends only on
// coefficients below n, extracting one coefficient per pass. The result is
// checked against rhs. Throws NonContractive.
TruncSeries solve_incremental(int order, const std::function<TruncSeries(const TruncSeries &)> &rhs);

std::string rational_string(const mpq_class &q);

} // namespace symmaps
