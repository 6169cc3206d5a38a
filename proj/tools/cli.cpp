#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symmaps/canonical.hpp"
#include "symmaps/census.hpp"
#include "symmaps/map_json.hpp"
#include "symmaps/map_metrics.hpp"
#include "symmaps/orientation.hpp"
#include "symmaps/quotient.hpp"
#include "symmaps/render.hpp"
#include "symmaps/series_catalog.hpp"
#include "symmaps/verify.hpp"

namespace symmaps::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  int order = 12;
  int size = -1;
  int i = 1;
  int k = 0;
  int jobs = 1;
  std::string family, name, input, output, suite = "all", max_size = "default";
  bool count = false, inverse = false, timings = false;
};

json count_json(const mpz_class &c) {
  if (c.fits_ulong_p()) return json(c.get_ui());
  return json(c.get_str());
}

json series_json(const NamedSeries &s) {
  json j;
  j["name"] = s.name;
  j["variable"] = s.variable;
  j["size_convention"] = s.size_convention;
  j["order"] = s.series.order();
  json coeffs = json::array();
  for (int n = 0; n <= s.series.order(); ++n) coeffs.push_back(rational_string(s.series[n]));
  j["coeffs"] = std::move(coeffs);
  return j;
}

std::optional<int> parse_max_size(const Options &o) {
  if (o.max_size == "default") return std::nullopt;
  try {
    size_t used = 0;
    const int v = std::stoi(o.max_size, &used);
    if (used == o.max_size.size() && v > 0) return v;
  } catch (const std::exception &) {
  }
  throw Error(Errc::BadInput, "--max-size takes a positive integer or 'default'");
}

json read_json(const Options &o, std::istream &in) {
  if (o.input.empty() || o.input == "-") return json::parse(in);
  std::ifstream f(o.input);
  if (!f) throw Error(Errc::BadInput, "cannot open " + o.input);
  return json::parse(f);
}

MapRecord read_record(const Options &o, std::istream &in) { return record_from_json(read_json(o, in)); }

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

// Inner face degree shared by all inner faces, or 0.
int inner_degree(const PlaneMap &m) {
  const auto fd = face_degrees(m);
  if (fd.inner.empty() || fd.inner.front() != fd.inner.back()) return 0;
  return fd.inner.front();
}

SymmetricMap symmetric_input(const MapRecord &r, int k) {
  if (r.rho && r.k) return symmetric_of(r);
  if (k < 2) throw Error(Errc::BadSymmetry, "record has no rotation; pass --k");
  SymmetricMap s;
  if (!find_symmetry(r.map, k, &s)) throw Error(Errc::BadSymmetry, "no rotation of order " + std::to_string(k));
  return s;
}

MapRecord with_orientation(MapRecord r, const Orientation &o) {
  r.orient = orientation_bits(o);
  return r;
}

// ---- subcommands ---------------------------------------------------------

int cmd_series(const Options &o, std::ostream &out) {
  if (o.name.empty()) throw Error(Errc::BadInput, "--name is required");
  if (o.name == "two_point") {
    if (o.family.empty()) throw Error(Errc::BadInput, "two_point needs --family");
    out << series_json(named_two_point(parse_two_point_family(o.family), o.i, o.order)).dump() << "\n";
  } else {
    out << series_json(named_series(o.name, o.order)).dump() << "\n";
  }
  return kOk;
}

int cmd_enumerate(const Options &o, std::ostream &out) {
  if (o.size < 0) throw Error(Errc::BadInput, "--size is required");
  const auto cap = parse_max_size(o);
  std::vector<MapRecord> records;
  mpz_class total = 0;
  const bool keep = !o.count;
  auto plain = [&](CensusQuery q) {
    if (cap) q.face_cap = *cap;
    generate(q, [&](const PlaneMap &m) {
      ++total;
      if (keep) records.push_back(record_of(m));
    });
  };
  const std::string &f = o.family;
  if (f == "simple_quad") plain(CensusQuery::simple_quadrangulations(o.size));
  else if (f == "simple_tri") plain(CensusQuery::simple_triangulations(o.size));
  else if (f == "quad") plain(CensusQuery::sphere_maps(4, o.size));
  else if (f == "tri") plain(CensusQuery::sphere_maps(3, o.size));
  else if (f == "symmetric_quad" || f == "symmetric_tri") {
    const int d = f == "symmetric_quad" ? 4 : 3;
    const int k = o.k ? o.k : (d == 4 ? 2 : 3);
    for (const auto &s : symmetric_simple_classes(d, k, o.size, cap.value_or(kDefaultSymmetricCap))) {
      ++total;
      if (keep) records.push_back(record_of(s));
    }
  } else if (f == "pointed_quad" || f == "pointed_tri") {
    const int d = f == "pointed_quad" ? 4 : 3;
    auto q = CensusQuery::dissections(d, d == 4 ? 2 : 1, o.size);
    if (cap) q.face_cap = *cap;
    std::map<std::string, MapRecord> classes;
    generate(q, [&](const PlaneMap &m) {
      for (int v = 0; v < m.n_vertices(); ++v) {
        if (m.is_outer_vertex(v)) continue;
        std::string code = pointed_code(m, v);
        if (!classes.count(code)) classes.emplace(std::move(code), record_of(PointedMap::make(m, v)));
      }
    });
    total = static_cast<unsigned long>(classes.size());
    for (auto &[code, r] : classes) records.push_back(std::move(r));
  } else {
    throw Error(Errc::UnknownName, "unknown family '" + f +
                                       "' (simple_quad, simple_tri, quad, tri, symmetric_quad, symmetric_tri, "
                                       "pointed_quad, pointed_tri)");
  }
  if (o.count) {
    json j;
    j["family"] = f;
    j["size"] = o.size;
    j["count"] = count_json(total);
    out << j.dump() << "\n";
  } else {
    for (const auto &r : records) out << record_to_json(r).dump() << "\n";
  }
  return kOk;
}

int cmd_two_point(const Options &o, std::ostream &out) {
  if (o.size < 0) throw Error(Errc::BadInput, "--size is required");
  if (o.family.empty()) throw Error(Errc::BadInput, "--family is required");
  const TwoPointFamily f = parse_two_point_family(o.family);
  const TruncSeries s = two_point(f, o.i, std::max(o.size, 1));
  const auto cap = parse_max_size(o);
  std::optional<mpz_class> census;
  switch (f) {
  case TwoPointFamily::Quad: census = count_two_point_quad(o.size, o.i, cap.value_or(0)); break;
  case TwoPointFamily::Tri: census = count_pointed_dissections(3, 2 * o.size + 1, o.i, cap.value_or(0)); break;
  case TwoPointFamily::QuadSimple:
    census = count_symmetric(4, 2, 2 * o.size, o.i, cap.value_or(kDefaultSymmetricCap));
    break;
  case TwoPointFamily::TriSimple:
    census = count_symmetric(3, 3, 3 * (2 * o.size + 1), o.i, cap.value_or(kDefaultSymmetricCap));
    break;
  default: break;
  }
  json j;
  j["family"] = family_name(f);
  j["i"] = o.i;
  j["n"] = o.size;
  j["series"] = rational_string(s[o.size]);
  j["census"] = census ? count_json(*census) : json(nullptr);
  const bool agree = !census || mpq_class(*census) == s[o.size];
  j["agree"] = census ? json(agree) : json(nullptr);
  out << j.dump() << "\n";
  return agree ? kOk : kVerificationFailed;
}

int cmd_quotient(const std::string &mode, const Options &o, std::istream &in, std::ostream &out) {
  const MapRecord r = read_record(o, in);
  json j;
  bool round_trip = false;
  if (mode == "classic") {
    const SymmetricMap s = symmetric_input(r, o.k);
    const PointedMap e = classical_quotient(s);
    const SymmetricMap back = unroll(e, s.k);
    round_trip = pointed_code(back.map(), back.center()) == pointed_code(s.map(), s.center());
    j["quotient"] = record_to_json(record_of(e));
  } else if (mode == "unroll") {
    if (o.k < 2) throw Error(Errc::BadSymmetry, "unroll needs --k >= 2");
    const PointedMap e = pointed_of(r);
    const SymmetricMap s = unroll(e, o.k);
    const PointedMap back = classical_quotient(s);
    round_trip = pointed_code(back.map, back.pointed) == pointed_code(e.map, e.pointed);
    j["unrolled"] = record_to_json(record_of(s));
  } else if (!o.inverse) {
    const SymmetricMap s = symmetric_input(r, o.k ? o.k : (inner_degree(r.map) == 3 ? 3 : 2));
    const bool quad = inner_degree(s.map()) == 4;
    const NewQuotient nq = quad ? phi(s) : phi_tri(s);
    const SymmetricMap back = quad ? phi_inverse(nq.map, nq.marked_edge()) : phi_tri_inverse(nq.map, nq.marked_edge());
    round_trip = pointed_code(back.map(), back.center()) == pointed_code(s.map(), s.center());
    MapRecord q = with_orientation(record_of(nq.map), nq.orientation);
    q.marked_edge = nq.marked_edge();
    j["quotient"] = record_to_json(q);
    j["path_length"] = nq.log.p;
  } else {
    if (!r.marked_edge) throw Error(Errc::BadMark, "inverse needs a marked edge");
    const bool quad = inner_degree(r.map) == 4;
    const SymmetricMap s = quad ? phi_inverse(r.map, *r.marked_edge) : phi_tri_inverse(r.map, *r.marked_edge);
    const NewQuotient nq = quad ? phi(s) : phi_tri(s);
    round_trip = edge_code(nq.map, nq.marked_edge()) == edge_code(r.map, *r.marked_edge);
    j["symmetric"] = record_to_json(record_of(s));
  }
  j["round_trip"] = round_trip;
  out << j.dump() << "\n";
  return round_trip ? kOk : kVerificationFailed;
}

int cmd_orient(const Options &o, std::istream &in, std::ostream &out) {
  const MapRecord r = read_record(o, in);
  const int deg = inner_degree(r.map);
  if (deg != 3 && deg != 4) throw Error(Errc::WrongFamily, "inner faces must all be triangles or quadrangles");
  const int d = deg == 4 ? 2 : 3;
  const auto orientation = minimal_orientation(r.map, d);
  json j;
  j["d"] = d;
  j["feasible"] = orientation.has_value();
  if (orientation) {
    j["map"] = record_to_json(with_orientation(r, *orientation));
    j["minimal"] = is_minimal(r.map, *orientation);
    if (r.rho && r.k) j["rho_invariant"] = check_symmetric_minimal(symmetric_of(r), *orientation);
  }
  out << j.dump() << "\n";
  return kOk;
}

std::vector<int> parse_suite(const std::string &suite) {
  std::vector<int> ids;
  if (suite == "all") {
    for (int i = 1; i <= kCriteria; ++i) ids.push_back(i);
    return ids;
  }
  std::stringstream ss(suite);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string digits = item;
    if (digits.rfind("ac", 0) == 0 || digits.rfind("AC", 0) == 0) digits = digits.substr(2);
    try {
      size_t used = 0;
      const int id = std::stoi(digits, &used);
      if (used == digits.size() && id >= 1 && id <= kCriteria) {
        ids.push_back(id);
        continue;
      }
    } catch (const std::exception &) {
    }
    throw Error(Errc::BadInput, "unknown suite entry '" + item + "'");
  }
  return ids;
}

int cmd_verify(const Options &o, std::ostream &out) {
  VerifyOptions vo;
  vo.jobs = std::max(1, o.jobs);
  if (const auto cap = parse_max_size(o)) vo.symmetric_cap = *cap;
  const auto results = run_checks(parse_suite(o.suite), vo);
  json checks = json::array();
  bool all = true;
  for (const auto &c : results) {
    json e;
    e["id"] = c.id;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["details"] = c.details;
    if (o.timings) e["seconds"] = c.seconds;
    checks.push_back(std::move(e));
    all = all && c.passed;
  }
  json j;
  j["suite"] = o.suite;
  j["max_size"] = o.max_size;
  j["checks"] = std::move(checks);
  j["passed"] = all;
  out << j.dump(2) << "\n";
  return all ? kOk : kVerificationFailed;
}

int cmd_render(const Options &o, std::istream &in, std::ostream &out) {
  out << render_svg(read_record(o, in));
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  CLI::App app{"Symmetric plane maps: census, quotients, orientations and generating series"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App *sub) {
    sub->add_option("--input", o.input, "JSON map record (default: standard input)");
    sub->add_option("--output", o.output, "write the result to this file");
  };
  auto *series = app.add_subcommand("series", "print a named generating series as JSON");
  series->add_option("--name", o.name, "series name, or two_point")->required();
  series->add_option("--order", o.order, "truncation order")->check(CLI::Range(2, 400));
  series->add_option("--family", o.family, "two-point family");
  series->add_option("--i", o.i, "two-point distance")->check(CLI::PositiveNumber);
  series->add_option("--output", o.output, "write the result to this file");

  auto *enumerate = app.add_subcommand("enumerate", "list rooted maps of a family as JSON lines");
  enumerate->add_option("--family", o.family, "map family")->required();
  enumerate->add_option("--size", o.size, "faces (plain families) or inner faces (symmetric, pointed)")->required();
  enumerate->add_option("--k", o.k, "symmetry order");
  enumerate->add_option("--max-size", o.max_size, "size cap override or 'default'");
  enumerate->add_flag("--count", o.count, "print the count only");
  enumerate->add_option("--output", o.output, "write the result to this file");

  auto *two = app.add_subcommand("two-point", "compare a two-point coefficient with the census");
  two->add_option("--family", o.family, "two-point family")->required();
  two->add_option("--i", o.i, "distance")->check(CLI::PositiveNumber);
  two->add_option("--size", o.size, "size n")->required();
  two->add_option("--max-size", o.max_size, "size cap override or 'default'");
  two->add_option("--output", o.output, "write the result to this file");

  auto *quotient = app.add_subcommand("quotient", "quotients of symmetric maps and their inverses");
  quotient->require_subcommand(1);
  std::string mode;
  for (const char *m : {"classic", "new", "unroll"}) {
    auto *sub = quotient->add_subcommand(m, std::string(m) + " quotient");
    add_io(sub);
    sub->add_option("--k", o.k, "symmetry order");
    if (std::string(m) == "new") sub->add_flag("--inverse", o.inverse, "rebuild the symmetric map");
    sub->callback([&mode, m] { mode = m; });
  }

  auto *orient = app.add_subcommand("orient", "minimal 2- or 3-orientation of a map");
  add_io(orient);

  auto *verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--suite", o.suite, "all, or a comma list of criteria 1..10");
  verify->add_option("--max-size", o.max_size, "inner-face cap of symmetric maps or 'default'");
  verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timings", o.timings, "include running times (breaks byte-for-byte determinism)");
  verify->add_option("--output", o.output, "write the result to this file");

  auto *render = app.add_subcommand("render", "SVG drawing of a map record");
  add_io(render);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ostringstream buffer;
  int status = kOk;
  try {
    if (series->parsed()) status = cmd_series(o, buffer);
    else if (enumerate->parsed()) status = cmd_enumerate(o, buffer);
    else if (two->parsed()) status = cmd_two_point(o, buffer);
    else if (quotient->parsed()) status = cmd_quotient(mode, o, in, buffer);
    else if (orient->parsed()) status = cmd_orient(o, in, buffer);
    else if (verify->parsed()) status = cmd_verify(o, buffer);
    else if (render->parsed()) status = cmd_render(o, in, buffer);
  } catch (const Error &e) {
    err << json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  } catch (const json::exception &e) {
    err << json{{"error", "BadInput"}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  }

  if (o.output.empty() || o.output == "-") {
    out << buffer.str();
  } else {
    std::ofstream f(o.output);
    if (!f) {
      err << json{{"error", "BadInput"}, {"message", "cannot write " + o.output}}.dump() << "\n";
      return kUsage;
    }
    f << buffer.str();
  }
  return status;
}

} // namespace symmaps::cli
