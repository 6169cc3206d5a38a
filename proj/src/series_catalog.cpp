#include "symmaps/series_catalog.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace symmaps {

namespace {

using S = TruncSeries;

S var(int n) { return S::variable(n); }
S one(int n) { return S::constant(n, 1); }

S fix(int n, const std::function<S(const S &)> &step) { return fixpoint_solve(n, step); }

// ---- base algebraic series -------------------------------------------------

S quad_P(int n) {
  const S x = var(n);
  return fix(n, [&](const S &p) { return 1 + 3 * x * p * p; });
}
S quad_X(int n, const S &P) {
  const S c = var(n) * P * P; // (P - 1) / 3
  return fix(n, [&](const S &s) { return c * (s * s + s + 1); });
}
S quad_Q(int n) {
  const S y = var(n);
  return fix(n, [&](const S &q) { return 1 + y * q.pow(3); });
}
S quad_Y(int n, const S &Q) {
  const S c = Q - 1;
  return fix(n, [&](const S &s) { return c * (s * s + 1); });
}
S quad_R(int n) {
  const S z = var(n);
  return fix(n, [&](const S &r) { return z + r * r; });
}
S quad_Z(int n, const S &R) {
  return fix(n, [&](const S &s) { return R * (s * s + 1); });
}

S tri_P(int n) {
  const S x = var(n);
  return fix(n, [&](const S &p) { return 1 + 8 * x * p.pow(3) / (p + 1); });
}
S tri_X(int n, const S &P) {
  const S c = (P * P - 1) * mpq_class(1, 8);
  return fix(n, [&](const S &s) { return c * (s + 1) * (s + 1); });
}
S tri_Q(int n) {
  const S y = var(n);
  return fix(n, [&](const S &q) { return y * (1 - q).pow(-3); });
}
S tri_Y(int n, const S &Q) {
  return fix(n, [&](const S &s) { return Q * (s + 1) * (s + 1); });
}
S tri_R(int n) {
  const S z = var(n);
  return fix(n, [&](const S &r) { return z * (1 - r).pow(-2); });
}
S tri_Z(int n, const S &R) {
  return fix(n, [&](const S &s) { return R * (s * s + s + 1); });
}
S tilde_Q(const S &Q) { return (1 + 8 * Q).sqrt(); }
S tilde_R(const S &R) { return ((1 + 9 * R) / (1 + R)).sqrt(); }

S alpha_tree(int n, int arity) {
  const S x = var(n);
  return fix(n, [&](const S &a) { return 1 + x * a.pow(arity); });
}

// ---- two-point ingredients -------------------------------------------------

struct TwoPointData {
  bool triangular = false;
  S x_inf, X;
  S lambda, a_inf_sq; // triangular only
};

TwoPointData two_point_data(TwoPointFamily f, int n) {
  TwoPointData d;
  switch (f) {
  case TwoPointFamily::Quad: {
    d.x_inf = quad_P(n);
    d.X = quad_X(n, d.x_inf);
    break;
  }
  case TwoPointFamily::QuadSimple: {
    d.x_inf = quad_Q(n);
    d.X = quad_Y(n, d.x_inf);
    break;
  }
  case TwoPointFamily::QuadIrred: {
    const S R = quad_R(n);
    d.x_inf = R + 1;
    d.X = quad_Z(n, R);
    break;
  }
  case TwoPointFamily::Tri: {
    const S P = tri_P(n);
    d.triangular = true;
    d.x_inf = P;
    d.X = tri_X(n, P);
    d.lambda = (P + 1) * mpq_class(1, 4);
    d.a_inf_sq = 2 * P * (P - 1) / (1 + P);
    break;
  }
  case TwoPointFamily::TriSimple: {
    const S Q = tri_Q(n), Qt = tilde_Q(Q);
    const S oneQ = 1 - Q;
    d.triangular = true;
    d.x_inf = (Qt * oneQ * oneQ).inverse();
    d.X = tri_Y(n, Q);
    d.lambda = (Qt + 1) * mpq_class(1, 4);
    d.a_inf_sq = 16 * Q / (Qt * (1 + Qt) * (1 + Qt) * oneQ * oneQ);
    break;
  }
  case TwoPointFamily::TriIrred: {
    const S R = tri_R(n), Rt = tilde_R(R);
    d.triangular = true;
    d.x_inf = (Rt * (1 - R)).inverse();
    d.X = tri_Z(n, R);
    d.lambda = (Rt + 1) * mpq_class(1, 4);
    d.a_inf_sq = 16 * R / ((Rt + 1) * (Rt + 1) * Rt * (1 - R * R));
    break;
  }
  }
  return d;
}

S partial(const TwoPointData &d, int i) {
  const S &X = d.X;
  auto one_minus_pow = [&](int e) { return 1 - X.pow(e); };
  if (!d.triangular) {
    return d.x_inf * one_minus_pow(i) * one_minus_pow(i + 3) / (one_minus_pow(i + 1) * one_minus_pow(i + 2));
  }
  const S den = one_minus_pow(i + 1);
  return d.x_inf * one_minus_pow(i) * one_minus_pow(i + 2) / (den * den);
}

S partial_square(const TwoPointData &d, int i) {
  const S &X = d.X;
  auto one_minus_pow = [&](int e) { return 1 - X.pow(e); };
  const S inner = 1 - d.lambda * X.pow(i) * one_minus_pow(1) * one_minus_pow(2) /
                          (one_minus_pow(i + 1) * one_minus_pow(i + 2));
  return d.a_inf_sq * inner * inner;
}

S two_point_from(const TwoPointData &d, int i) {
  if (!d.triangular) return partial(d, i + 1) - partial(d, i);
  return partial(d, i + 1) - partial(d, i - 1) + partial_square(d, i) - partial_square(d, i - 1);
}

// ---- derived series of the decompositions -----------------------------------

struct Derived {
  S q, dq, a_square, a_edge, d;
  S t, dt, s, t_square, t_edge, t_dotedge, u, v, d3, d3_closed;
};

Derived derived(int n) {
  Derived r;
  const S x = var(n);
  r.q = solve_q(n);
  r.dq = r.q.derivative(); // order n - 1
  const S xm = x.truncated(n - 1);
  r.a_square = 2 * xm + xm * r.dq;
  r.a_edge = 2 * xm + 2 * xm * r.dq - r.q.truncated(n - 1);
  r.d = r.a_square / (1 - r.a_edge);

  r.t = solve_t(n);
  r.dt = r.t.derivative();
  const S tm = r.t.truncated(n - 1);
  r.s = xm * r.dt;
  r.t_square = xm * r.dt;
  r.t_edge = 3 * xm * r.dt - tm;
  r.t_dotedge = (r.t - x).divide_shifted(r.t).truncated(n - 2);
  const int m = n - 2;
  const S xs = x.truncated(m), ts = r.t_square.truncated(m), te = r.t_edge.truncated(m);
  const S& td = r.t_dotedge;
  // u = t_sq + x(1+u) + t_dot u + (t_edge - t_dot) v,  v = t_sq + 2x(1+u) + t_edge v
  S u(m), v(m);
  for (int iter = 0; iter <= m + 2; ++iter) {
    S nu = ts + xs * (1 + u) + td * u + (te - td) * v;
    S nv = ts + 2 * xs * (1 + u) + te * v;
    if (nu == u && nv == v) break;
    u = std::move(nu);
    v = std::move(nv);
    if (iter == m + 2) throw Error(Errc::NonContractive, "u/v system did not converge");
  }
  r.u = u;
  r.v = v;
  r.d3 = xs * (1 + u);
  const S dts = r.dt.truncated(m);
  const S tt = r.t.truncated(m);
  r.d3_closed = xs * (1 + tt - 2 * xs * dts) / (1 - 2 * xs + 2 * tt - 3 * xs * dts + tt * tt - 3 * xs * dts * tt);
  return r;
}

} // namespace

TruncSeries solve_q(int order) {
  if (order < 2) throw Error(Errc::OrderMismatch, "q needs order >= 2");
  const S x = var(order);
  // r = q' solved to order - 1, then q = integral(r).
  const S r = solve_incremental(order - 1, [&](const S &dq) {
    const S q = dq.integral();
    return (x * (2 + 2 * dq * dq + 3 * dq) / (1 + q)).truncated(order - 1);
  });
  return r.integral();
}

TruncSeries solve_t(int order) {
  if (order < 1) throw Error(Errc::OrderMismatch, "t needs order >= 1");
  const S x = var(order);
  const S r = solve_incremental(order - 1, [&](const S &dt) {
    const S t = dt.integral();
    return ((3 * x * dt * dt + 1) / (t + 1)).truncated(order - 1);
  });
  return r.integral();
}

std::vector<AlgebraicSeries> algebraic_catalog(int n) {
  std::vector<AlgebraicSeries> out;
  const S x = var(n);
  auto add = [&](std::string name, std::string eq, S value, S residual) {
    out.push_back({std::move(name), std::move(eq), std::move(value), std::move(residual)});
  };

  const S q = solve_q(n), dq = q.derivative();
  add("q", "x (2 q'^2 + 3 q' + 2) = q' (1 + q)", q,
      x.truncated(n - 1) * (2 * dq * dq + 3 * dq + 2) - dq * (1 + q.truncated(n - 1)));
  const S t = solve_t(n), dt = t.derivative();
  add("t", "3 x t'^2 + 1 = (t + 1) t'", t,
      3 * x.truncated(n - 1) * dt * dt + 1 - (t.truncated(n - 1) + 1) * dt);

  const S a3 = alpha_tree(n, 3), a4 = alpha_tree(n, 4);
  add("alpha3", "alpha = 1 + x alpha^3", a3, a3 - 1 - x * a3.pow(3));
  add("alpha4", "alpha = 1 + x alpha^4", a4, a4 - 1 - x * a4.pow(4));

  const S P = quad_P(n), X = quad_X(n, P);
  add("P_quad", "P = 1 + 3 x P^2", P, P - 1 - 3 * x * P * P);
  add("X_quad", "X + 1/X + 1 = 3/(P - 1)", X, (X * X + X + 1) * (P - 1) - 3 * X);
  const S Q = quad_Q(n), Y = quad_Y(n, Q);
  add("Q_quad", "Q = 1 + y Q^3", Q, Q - 1 - x * Q.pow(3));
  add("Y_quad", "Y + 1/Y = 1/(Q - 1)", Y, (Y * Y + 1) * (Q - 1) - Y);
  const S R = quad_R(n), Z = quad_Z(n, R);
  add("R_quad", "R = z + R^2", R, R - x - R * R);
  add("Z_quad", "Z + 1/Z = 1/R", Z, (Z * Z + 1) * R - Z);

  const S tP = tri_P(n), tX = tri_X(n, tP);
  add("P_tri", "P^2 = 1 + 8 x P^3", tP, tP * tP - 1 - 8 * x * tP.pow(3));
  add("X_tri", "X + 1/X + 2 = 8/(P^2 - 1)", tX, (tX + 1) * (tX + 1) * (tP * tP - 1) - 8 * tX);
  const S tQ = tri_Q(n), tY = tri_Y(n, tQ), tQt = tilde_Q(tQ);
  add("Q_tri", "Q = y/(1 - Q)^3", tQ, tQ * (1 - tQ).pow(3) - x);
  add("Qtilde_tri", "Qtilde^2 = 1 + 8 Q", tQt, tQt * tQt - (1 + 8 * tQ));
  add("Y_tri", "Y + 1/Y + 2 = 1/Q", tY, (tY + 1) * (tY + 1) * tQ - tY);
  const S tR = tri_R(n), tZ = tri_Z(n, tR), tRt = tilde_R(tR);
  add("R_tri", "R = z/(1 - R)^2", tR, tR * (1 - tR).pow(2) - x);
  add("Rtilde_tri", "Rtilde^2 (1 + R) = 1 + 9 R", tRt, tRt * tRt * (1 + tR) - (1 + 9 * tR));
  add("Z_tri", "Z + 1/Z + 1 = 1/R", tZ, (tZ * tZ + tZ + 1) * tR - tZ);
  return out;
}

AlgebraicSeries algebraic_series(const std::string &name, int order) {
  for (auto &a : algebraic_catalog(order)) {
    if (a.name == name) return a;
  }
  throw Error(Errc::UnknownName, "no algebraic series named " + name);
}

TwoPointFamily parse_two_point_family(const std::string &s) {
  static const std::map<std::string, TwoPointFamily> names{
      {"quad", TwoPointFamily::Quad},         {"quad_simple", TwoPointFamily::QuadSimple},
      {"quad_irred", TwoPointFamily::QuadIrred}, {"tri", TwoPointFamily::Tri},
      {"tri_simple", TwoPointFamily::TriSimple}, {"tri_irred", TwoPointFamily::TriIrred}};
  const auto it = names.find(s);
  if (it == names.end()) throw Error(Errc::UnknownName, "unknown two-point family " + s);
  return it->second;
}

std::string family_name(TwoPointFamily f) {
  switch (f) {
  case TwoPointFamily::Quad: return "quad";
  case TwoPointFamily::QuadSimple: return "quad_simple";
  case TwoPointFamily::QuadIrred: return "quad_irred";
  case TwoPointFamily::Tri: return "tri";
  case TwoPointFamily::TriSimple: return "tri_simple";
  case TwoPointFamily::TriIrred: return "tri_irred";
  }
  return "";
}

TruncSeries two_point(TwoPointFamily f, int i, int order) {
  if (i < 1) throw Error(Errc::BadDistance, "distance must be at least 1");
  return two_point_from(two_point_data(f, order), i);
}

TruncSeries two_point_partial(TwoPointFamily f, int i, int order) {
  if (i < 0) throw Error(Errc::BadDistance, "distance must be non-negative");
  return partial(two_point_data(f, order), i);
}

TruncSeries two_point_partial_square(TwoPointFamily f, int i, int order) {
  const auto d = two_point_data(f, order);
  if (!d.triangular) throw Error(Errc::UnknownName, "squared terms exist for triangular families only");
  if (i < 0) throw Error(Errc::BadDistance, "distance must be non-negative");
  return partial_square(d, i);
}

namespace {

struct Entry {
  std::string variable, size_convention;
  bool counting;
  std::function<S(int)> make;
};

const std::map<std::string, Entry> &registry() {
  static const std::map<std::string, Entry> r = [] {
    std::map<std::string, Entry> m;
    auto alg = [](const char *name) { return [name](int n) { return algebraic_series(name, n).value; }; };
    m["q"] = {"x", "total faces of rooted simple quadrangulations", true, solve_q};
    m["t"] = {"x", "half the faces of rooted simple triangulations", true, solve_t};
    m["alpha3"] = {"x", "nodes of rooted ternary trees (constant term 1)", true, [](int n) { return alpha_tree(n, 3); }};
    m["alpha4"] = {"x", "nodes of rooted quaternary trees (constant term 1)", true, [](int n) { return alpha_tree(n, 4); }};
    for (const char *name : {"P_quad", "X_quad", "Q_quad", "Y_quad", "R_quad", "Z_quad", "P_tri", "X_tri",
                             "Q_tri", "Qtilde_tri", "Y_tri", "R_tri", "Rtilde_tri", "Z_tri"}) {
      const std::string s(name);
      const std::string v = s[0] == 'P' || s[0] == 'X' ? "x" : (s[0] == 'Q' || s[0] == 'Y') ? "y" : "z";
      m[s] = {v, "auxiliary algebraic series", false, alg(name)};
    }
    m["f_quad"] = {"x", "faces of rooted quadrangulations", true,
                   [](int n) { const S P = quad_P(n); return P * (4 - P) * mpq_class(1, 3) - 1; }};
    m["g_quad"] = {"y", "inner faces of rooted simple quadrangulations", true,
                   [](int n) { const S Q = quad_Q(n); return 3 * Q - Q * Q - 2; }};
    m["f_tri"] = {"x", "half the faces of simply-rooted triangulations", true,
                  [](int n) { const S P = tri_P(n); return -P * (P * P - 9) * mpq_class(1, 8) - 1; }};
    m["g_tri"] = {"y", "half the faces of rooted simple triangulations", true,
                  [](int n) { const S Q = tri_Q(n); return Q - 2 * Q * Q; }};
    m["A2inf_tri"] = {"x", "auxiliary algebraic series", false,
                      [](int n) { return two_point_data(TwoPointFamily::Tri, n).a_inf_sq; }};
    m["B2inf_tri"] = {"y", "auxiliary algebraic series", false,
                      [](int n) { return two_point_data(TwoPointFamily::TriSimple, n).a_inf_sq; }};
    m["C2inf_tri"] = {"z", "auxiliary algebraic series", false,
                      [](int n) { return two_point_data(TwoPointFamily::TriIrred, n).a_inf_sq; }};
    m["Yinf_tri"] = {"y", "auxiliary algebraic series", false,
                     [](int n) { return two_point_data(TwoPointFamily::TriSimple, n).x_inf; }};
    m["Zinf_tri"] = {"z", "auxiliary algebraic series", false,
                     [](int n) { return two_point_data(TwoPointFamily::TriIrred, n).x_inf; }};
    auto der = [](S Derived::*field) { return [field](int n) { return derived(n + 2).*field; }; };
    m["a_square"] = {"x", "total faces", true, der(&Derived::a_square)};
    m["a_edge"] = {"x", "total faces", true, der(&Derived::a_edge)};
    m["d"] = {"x", "total faces", true, der(&Derived::d)};
    m["s"] = {"x", "half the faces", true, der(&Derived::s)};
    m["t_square"] = {"x", "half the faces", true, der(&Derived::t_square)};
    m["t_edge"] = {"x", "half the faces", true, der(&Derived::t_edge)};
    m["t_dotedge"] = {"x", "half the faces", true, der(&Derived::t_dotedge)};
    m["u"] = {"x", "half the faces", true, der(&Derived::u)};
    m["v"] = {"x", "half the faces", true, der(&Derived::v)};
    m["d3"] = {"x", "half the faces", true, der(&Derived::d3)};
    return m;
  }();
  return r;
}

} // namespace

std::vector<std::string> series_names() {
  std::vector<std::string> names;
  for (const auto &[k, v] : registry()) names.push_back(k);
  names.push_back("two_point");
  return names;
}

NamedSeries named_series(const std::string &name, int order) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw Error(Errc::UnknownName, "no series named " + name);
  S s = it->second.make(order);
  if (s.order() > order) s = s.truncated(order);
  return {name, it->second.variable, it->second.size_convention, it->second.counting, std::move(s)};
}

NamedSeries named_two_point(TwoPointFamily f, int i, int order) {
  static const std::map<TwoPointFamily, std::pair<std::string, std::string>> meta{
      {TwoPointFamily::Quad, {"x", "n: k-symmetric quadrangular 2k-dissections with kn inner faces"}},
      {TwoPointFamily::QuadSimple, {"y", "n: k-symmetric simple quadrangular 2k-dissections with kn inner faces"}},
      {TwoPointFamily::QuadIrred, {"z", "n: k-symmetric irreducible quadrangular 2k-dissections with kn inner faces"}},
      {TwoPointFamily::Tri, {"x", "n: k-symmetric triangular k-dissections with (2n+1)k inner faces"}},
      {TwoPointFamily::TriSimple, {"y", "n: k-symmetric simple triangular k-dissections with (2n+1)k inner faces"}},
      {TwoPointFamily::TriIrred,
       {"z", "n: k-symmetric irreducible triangular k-dissections with (2n+1)k inner faces"}}};
  const auto &m = meta.at(f);
  return {"two_point_" + family_name(f) + "_" + std::to_string(i), m.first, m.second, true, two_point(f, i, order)};
}

namespace {

IdentityCheck compare(std::string name, const S &lhs, const S &rhs) {
  IdentityCheck c;
  c.name = std::move(name);
  const S diff = lhs - rhs;
  c.passed = diff.is_zero();
  std::ostringstream os;
  if (c.passed) {
    os << "equal through x^" << diff.order();
  } else {
    const int v = diff.valuation();
    os << "first difference at x^" << v << ": " << rational_string(lhs.coeff(v)) << " vs "
       << rational_string(rhs.coeff(v));
  }
  c.details = os.str();
  return c;
}

} // namespace

IdentityCheck check_change_of_variables(const std::string &lemma, int n) {
  const S x = var(n);
  if (lemma == "xy_quad") {
    const S P = quad_P(n), f = P * (4 - P) * mpq_class(1, 3) - 1, Q = quad_Q(n);
    const S y = x * (1 + f) * (1 + f);
    return compare(lemma, P, 4 - 3 * Q.compose(y).inverse());
  }
  if (lemma == "yz_quad") {
    const S Q = quad_Q(n), g = 3 * Q - Q * Q - 2, R = quad_R(n);
    return compare(lemma, Q, R.compose(g) + 1);
  }
  if (lemma == "xy_triang") {
    const S P = tri_P(n), f = -P * (P * P - 9) * mpq_class(1, 8) - 1, Q = tri_Q(n);
    const S y = x * (1 + f).pow(3);
    const S Qy = Q.compose(y), Qty = tilde_Q(Q).compose(y);
    IdentityCheck a = compare(lemma, Qty, P), b = compare(lemma, Qy, (P * P - 1) * mpq_class(1, 8));
    a.passed = a.passed && b.passed;
    a.details = "Qtilde(y) = P: " + a.details + "; Q(y) = (P^2-1)/8: " + b.details;
    return a;
  }
  if (lemma == "yz_triang") {
    const S Q = tri_Q(n), g = Q - 2 * Q * Q, R = tri_R(n);
    const S z = (g * g).divide_shifted(x);
    const int m = z.order();
    return compare(lemma, R.compose(z), (Q / (1 - Q)).truncated(m));
  }
  throw Error(Errc::UnknownName, "unknown change-of-variable lemma " + lemma);
}

std::vector<IdentityCheck> check_reciprocal_symmetry(int n) {
  std::vector<IdentityCheck> out;
  using L = LaurentSeries;
  auto check = [&](std::string name, const S &X, const std::function<L(const L &)> &rel) {
    const L w = L(X).reciprocal();
    const L r = rel(w);
    IdentityCheck c;
    c.name = std::move(name);
    c.passed = r.precision() >= n - 4 && r.is_zero_through(r.precision());
    c.details = "zero through exponent " + std::to_string(r.precision());
    out.push_back(std::move(c));
  };
  const L one1 = L(one(n));
  const S P = quad_P(n), Q = quad_Q(n), R = quad_R(n);
  check("X_quad", quad_X(n, P), [&](const L &w) { return (w * w + w + one1) * L(P - 1) - L(3 * one(n)) * w; });
  check("Y_quad", quad_Y(n, Q), [&](const L &w) { return (w * w + one1) * L(Q - 1) - w; });
  check("Z_quad", quad_Z(n, R), [&](const L &w) { return (w * w + one1) * L(R) - w; });
  const S tP = tri_P(n), tQ = tri_Q(n), tR = tri_R(n);
  check("X_tri", tri_X(n, tP),
        [&](const L &w) { return (w + one1) * (w + one1) * L(tP * tP - 1) - L(8 * one(n)) * w; });
  check("Y_tri", tri_Y(n, tQ), [&](const L &w) { return (w + one1) * (w + one1) * L(tQ) - w; });
  check("Z_tri", tri_Z(n, tR), [&](const L &w) { return (w * w + w + one1) * L(tR) - w; });
  return out;
}

std::vector<IdentityCheck> check_series_identities(int n) {
  std::vector<IdentityCheck> out;
  const S x = var(n);
  const S q = solve_q(n), t = solve_t(n);
  {
    const S Q = quad_Q(n), g = 3 * Q - Q * Q - 2;
    out.push_back(compare("y g_quad = q", (x * g).truncated(n), q));
    const S tQ = tri_Q(n);
    out.push_back(compare("g_tri = t", tQ - 2 * tQ * tQ, t));
  }
  {
    const S a3 = alpha_tree(n, 3), a4 = alpha_tree(n, 4);
    out.push_back(compare("q = x (alpha3 - 2)(1 - alpha3)", q, x * (a3 - 2) * (1 - a3)));
    out.push_back(compare("q' = 2 alpha3 - 2", q.derivative(), (2 * a3 - 2).truncated(n - 1)));
    out.push_back(compare("t = (alpha4 - 2)(1 - alpha4)/alpha4^2", t, (a4 - 2) * (1 - a4) / (a4 * a4)));
    out.push_back(compare("t' = alpha4^2", t.derivative(), (a4 * a4).truncated(n - 1)));
  }
  {
    const S r = q.derivative(), dr = r.derivative();
    const S rm = r.truncated(n - 2), xm = x.truncated(n - 2);
    out.push_back(compare("(r+1)(r(r+2) + 2x r'(r-1)) = 0, r = q'",
                          (rm + 1) * (rm * (rm + 2) + 2 * xm * dr * (rm - 1)), S(n - 2)));
    const S xr = x.truncated(n - 1) * r;
    out.push_back(compare("4q = 2 x r - x r^2", q.truncated(n - 1),
                          xr * mpq_class(1, 2) - xr * r * mpq_class(1, 4)));
    const S dt = t.derivative(), xm1 = x.truncated(n - 1);
    const S lhs = xm1 * dt * dt + 1;
    out.push_back(compare("(x t'^2 + 1)^2 = t'", lhs * lhs, dt));
  }
  {
    const Derived d = derived(n);
    out.push_back(compare("d = q'", d.d, d.dq));
    out.push_back(compare("d3 = x (1 + u) = closed form", d.d3, d.d3_closed));
    out.push_back(compare("d3 = s = x t'", d.d3, d.s.truncated(d.d3.order())));
  }
  return out;
}

std::vector<IdentityCheck> check_two_point_substitutions(int max_i, int n) {
  std::vector<IdentityCheck> out;
  const S x = var(n);
  const S P = quad_P(n), f = P * (4 - P) * mpq_class(1, 3) - 1;
  const S Q = quad_Q(n), g = 3 * Q - Q * Q - 2;
  const S tP = tri_P(n), tf = -tP * (tP * tP - 9) * mpq_class(1, 8) - 1;
  const S tQ = tri_Q(n), tg = tQ - 2 * tQ * tQ;
  const auto dF = two_point_data(TwoPointFamily::Quad, n), dG = two_point_data(TwoPointFamily::QuadSimple, n),
             dH = two_point_data(TwoPointFamily::QuadIrred, n), tF = two_point_data(TwoPointFamily::Tri, n),
             tG = two_point_data(TwoPointFamily::TriSimple, n), tH = two_point_data(TwoPointFamily::TriIrred, n);
  const S yq = x * (1 + f) * (1 + f);
  const S yt = x * (1 + tf).pow(3);
  const S zt = (tg * tg).divide_shifted(x);
  for (int i = 1; i <= max_i; ++i) {
    const std::string s = std::to_string(i);
    const S F = two_point_from(dF, i), G = two_point_from(dG, i), H = two_point_from(dH, i);
    out.push_back(compare("F_" + s + " = (1+f) G_" + s + "(x(1+f)^2)", F, (1 + f) * G.compose(yq)));
    out.push_back(compare("G_" + s + " = H_" + s + "(g)", G, H.compose(g)));
    const S tFi = two_point_from(tF, i), tGi = two_point_from(tG, i), tHi = two_point_from(tH, i);
    out.push_back(compare("F_" + s + " = (1+f)^2 G_" + s + "(x(1+f)^3) [tri]", tFi,
                          (1 + tf) * (1 + tf) * tGi.compose(yt)));
    const S rhs = tg.divide_shifted(x).truncated(zt.order()) * tHi.compose(zt);
    out.push_back(compare("G_" + s + " = (g/y) H_" + s + "(g^2/y) [tri]", tGi.truncated(rhs.order()), rhs));
    const S U_i = partial(tF, i) - partial(tF, i - 1), U_next = partial(tF, i + 1) - partial(tF, i);
    const S V_i = partial_square(tF, i) - partial_square(tF, i - 1);
    out.push_back(compare("F_" + s + " = U_" + s + " + U_" + std::to_string(i + 1) + " + V_" + s + " [tri]", tFi,
                          U_i + U_next + V_i));
  }
  return out;
}

} // namespace symmaps
