#include "symmaps/series.hpp"

#include <algorithm>
#include <sstream>

namespace symmaps {

TruncSeries::TruncSeries(int order) : order_(order), c_(order + 1, mpq_class(0)) {
  if (order < 0) throw Error(Errc::OrderMismatch, "negative order");
}

TruncSeries::TruncSeries(int order, std::vector<mpq_class> coeffs) : TruncSeries(order) {
  for (int i = 0; i <= order && i < static_cast<int>(coeffs.size()); ++i) c_[i] = std::move(coeffs[i]);
}

TruncSeries TruncSeries::constant(int order, const mpq_class &c) {
  TruncSeries s(order);
  s.c_[0] = c;
  return s;
}

TruncSeries TruncSeries::variable(int order) { return monomial(order, 1); }

TruncSeries TruncSeries::monomial(int order, int exponent, const mpq_class &c) {
  TruncSeries s(order);
  if (exponent <= order) s.c_[exponent] = c;
  return s;
}

mpq_class TruncSeries::coeff(int i) const { return i >= 0 && i <= order_ ? c_[i] : mpq_class(0); }

int TruncSeries::valuation() const {
  for (int i = 0; i <= order_; ++i) {
    if (c_[i] != 0) return i;
  }
  return order_ + 1;
}

TruncSeries TruncSeries::truncated(int order) const {
  if (order > order_) throw Error(Errc::OrderMismatch, "cannot extend a truncated series");
  return TruncSeries(order, std::vector<mpq_class>(c_.begin(), c_.begin() + order + 1));
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r(order_);
  for (int i = 0; i <= order_; ++i) r.c_[i] = -c_[i];
  return r;
}

TruncSeries &TruncSeries::operator+=(const TruncSeries &b) {
  if (b.order_ < order_) *this = truncated(b.order_);
  for (int i = 0; i <= order_; ++i) c_[i] += b.c_[i];
  return *this;
}

TruncSeries &TruncSeries::operator-=(const TruncSeries &b) {
  if (b.order_ < order_) *this = truncated(b.order_);
  for (int i = 0; i <= order_; ++i) c_[i] -= b.c_[i];
  return *this;
}

TruncSeries operator*(const TruncSeries &a, const TruncSeries &b) {
  const int n = std::min(a.order_, b.order_);
  TruncSeries r(n);
  const int va = a.valuation(), vb = b.valuation();
  mpq_class t;
  for (int i = va; i <= n; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = vb; i + j <= n; ++j) {
      if (b.c_[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      r.c_[i + j] += t;
    }
  }
  return r;
}

TruncSeries &TruncSeries::operator*=(const TruncSeries &b) { return *this = *this * b; }

TruncSeries &TruncSeries::operator*=(const mpq_class &c) {
  for (auto &x : c_) x *= c;
  return *this;
}

TruncSeries TruncSeries::inverse() const {
  if (c_[0] == 0) throw Error(Errc::DivisorNotUnit, "divisor has zero constant term");
  TruncSeries r(order_);
  const mpq_class inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  for (int n = 1; n <= order_; ++n) {
    mpq_class acc = 0;
    for (int j = 1; j <= n; ++j) {
      if (c_[j] != 0) acc += c_[j] * r.c_[n - j];
    }
    r.c_[n] = -acc * inv0;
  }
  return r;
}

TruncSeries TruncSeries::divide_shifted(const TruncSeries &b) const {
  const int v = b.valuation();
  if (v > b.order_) throw Error(Errc::DivisorNotUnit, "division by zero series");
  if (valuation() < v) throw Error(Errc::DivisorNotUnit, "dividend valuation below divisor valuation");
  const TruncSeries num = shifted(-v), den = b.shifted(-v);
  return num * den.inverse();
}

TruncSeries TruncSeries::derivative() const {
  if (order_ == 0) return TruncSeries(0);
  TruncSeries r(order_ - 1);
  for (int i = 1; i <= order_; ++i) r.c_[i - 1] = c_[i] * i;
  return r;
}

TruncSeries TruncSeries::integral() const {
  TruncSeries r(order_ + 1);
  for (int i = 0; i <= order_; ++i) r.c_[i + 1] = c_[i] / (i + 1);
  return r;
}

TruncSeries TruncSeries::shifted(int k) const {
  if (k >= 0) {
    TruncSeries r(order_ + k);
    for (int i = 0; i <= order_; ++i) r.c_[i + k] = c_[i];
    return r;
  }
  const int v = -k;
  if (valuation() < v) throw Error(Errc::DivisorNotUnit, "shift would leave the power-series ring");
  if (order_ - v < 0) return TruncSeries(0);
  TruncSeries r(order_ - v);
  for (int i = v; i <= order_; ++i) r.c_[i - v] = c_[i];
  return r;
}

TruncSeries TruncSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  TruncSeries result = constant(order_, 1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

TruncSeries TruncSeries::sqrt() const {
  if (c_[0] != 1) throw Error(Errc::BadConstantTerm, "square root needs constant term 1");
  // s_n = (a_n - sum_{0<j<n} s_j s_{n-j}) / 2
  TruncSeries s(order_);
  s.c_[0] = 1;
  for (int n = 1; n <= order_; ++n) {
    mpq_class acc = c_[n];
    for (int j = 1; j < n; ++j) acc -= s.c_[j] * s.c_[n - j];
    s.c_[n] = acc / 2;
  }
  return s;
}

TruncSeries TruncSeries::compose(const TruncSeries &inner) const {
  if (inner.c_[0] != 0) throw Error(Errc::InnerNotNilpotent, "inner series has nonzero constant term");
  const int n = std::min(order_, inner.order_);
  // Horner: (((a_n) y + a_{n-1}) y + ...) + a_0.
  TruncSeries acc = constant(n, c_[n]);
  const TruncSeries y = inner.truncated(n);
  for (int i = n - 1; i >= 0; --i) {
    acc = acc * y;
    acc.c_[0] += c_[i];
  }
  return acc;
}

bool TruncSeries::is_nonnegative_integral() const {
  for (const auto &x : c_) {
    if (x < 0 || x.get_den() != 1) return false;
  }
  return true;
}

std::string rational_string(const mpq_class &q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::string TruncSeries::to_string(const std::string &var) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= order_; ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << rational_string(c_[i]);
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << order_ + 1 << ")";
  return os.str();
}

LaurentSeries::LaurentSeries(const TruncSeries &s) {
  const int v = s.valuation();
  if (v > s.order()) {
    val_ = s.order() + 1;
    unit_ = TruncSeries(0);
    return;
  }
  val_ = v;
  unit_ = s.shifted(-v);
}

LaurentSeries::LaurentSeries(int valuation, TruncSeries unit) : val_(valuation), unit_(std::move(unit)) {}

LaurentSeries LaurentSeries::reciprocal() const { return LaurentSeries(-val_, unit_.inverse()); }

namespace {

// Aligns both series on a common lower exponent and precision.
std::pair<TruncSeries, TruncSeries> align(const LaurentSeries &a, const LaurentSeries &b, int &low) {
  low = std::min(a.valuation(), b.valuation());
  const int prec = std::min(a.precision(), b.precision());
  const int order = prec - low;
  auto lift = [&](const LaurentSeries &s) {
    TruncSeries r(order);
    for (int i = 0; i <= order; ++i) r[i] = s.coeff(low + i);
    return r;
  };
  return {lift(a), lift(b)};
}

} // namespace

LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b) {
  int low = 0;
  auto [x, y] = align(a, b, low);
  return LaurentSeries(low, x + y);
}

LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b) {
  int low = 0;
  auto [x, y] = align(a, b, low);
  return LaurentSeries(low, x - y);
}

LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b) {
  const int order = std::min(a.unit().order(), b.unit().order());
  return LaurentSeries(a.valuation() + b.valuation(), a.unit().truncated(order) * b.unit().truncated(order));
}

mpq_class LaurentSeries::coeff(int exponent) const { return unit_.coeff(exponent - val_); }

bool LaurentSeries::is_zero_through(int exponent) const {
  if (exponent > precision()) return false;
  for (int e = val_; e <= exponent; ++e) {
    if (coeff(e) != 0) return false;
  }
  return true;
}

TruncSeries fixpoint_solve(int order, const std::function<TruncSeries(const TruncSeries &)> &step) {
  TruncSeries s(order);
  for (int iter = 0; iter <= order + 2; ++iter) {
    TruncSeries next = step(s);
    if (next.order() < order) throw Error(Errc::OrderMismatch, "fixpoint step lost precision");
    next = next.truncated(order);
    if (next == s) return s;
    s = std::move(next);
  }
  throw Error(Errc::NonContractive, "fixpoint iteration did not converge");
}

TruncSeries solve_incremental(int order, const std::function<TruncSeries(const TruncSeries &)> &rhs) {
  TruncSeries y(order);
  for (int n = 0; n <= order; ++n) {
    const TruncSeries r = rhs(y);
    if (r.order() < n) throw Error(Errc::OrderMismatch, "right-hand side lost precision");
    y[n] = r[n];
  }
  const TruncSeries check = rhs(y);
  for (int n = 0; n <= order; ++n) {
    if (check.coeff(n) != y[n]) throw Error(Errc::NonContractive, "coefficient extraction is not triangular");
  }
  return y;
}

} // namespace symmaps
