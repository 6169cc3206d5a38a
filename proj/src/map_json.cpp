#include "symmaps/map_json.hpp"

namespace symmaps {

namespace {

template <class T> nlohmann::ordered_json opt(const std::optional<T> &v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template <class T> std::optional<T> read_opt(const nlohmann::json &j, const char *key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

} // namespace

nlohmann::ordered_json record_to_json(const MapRecord &r) {
  nlohmann::ordered_json j;
  j["n_darts"] = r.map.n_darts();
  j["sigma"] = r.map.sigma_perm();
  j["root"] = r.map.root();
  j["pointed"] = opt(r.pointed);
  j["marked_edge"] = opt(r.marked_edge);
  j["marked_face"] = opt(r.marked_face);
  j["rho"] = opt(r.rho);
  j["k"] = opt(r.k);
  if (r.orient) j["orient"] = *r.orient;
  return j;
}

MapRecord record_from_json(const nlohmann::json &j) {
  MapRecord r;
  try {
    if (!j.is_object()) throw Error(Errc::BadInput, "map record must be an object");
    auto sigma = j.at("sigma").get<std::vector<Dart>>();
    if (j.contains("n_darts") && j.at("n_darts").get<int>() != static_cast<int>(sigma.size())) {
      throw Error(Errc::BadInput, "n_darts does not match sigma length");
    }
    const int root = j.contains("root") ? j.at("root").get<int>() : 0;
    r.map = PlaneMap::build(std::move(sigma), root);
    r.pointed = read_opt<int>(j, "pointed");
    r.marked_edge = read_opt<int>(j, "marked_edge");
    r.marked_face = read_opt<int>(j, "marked_face");
    r.rho = read_opt<std::vector<Dart>>(j, "rho");
    r.k = read_opt<int>(j, "k");
    r.orient = read_opt<std::vector<int>>(j, "orient");
  } catch (const nlohmann::json::exception &e) {
    throw Error(Errc::BadInput, e.what());
  }
  if (r.pointed && (*r.pointed < 0 || *r.pointed >= r.map.n_vertices())) {
    throw Error(Errc::BadMark, "pointed vertex out of range");
  }
  if (r.marked_edge && (*r.marked_edge < 0 || *r.marked_edge >= r.map.n_edges())) {
    throw Error(Errc::BadMark, "marked edge out of range");
  }
  if (r.marked_face && (*r.marked_face < 0 || *r.marked_face >= r.map.n_faces())) {
    throw Error(Errc::BadMark, "marked face out of range");
  }
  if (r.orient && static_cast<int>(r.orient->size()) != r.map.n_edges()) {
    throw Error(Errc::BadInput, "orient must have one entry per edge");
  }
  return r;
}

MapRecord record_of(const PlaneMap &m) {
  MapRecord r;
  r.map = m;
  return r;
}

MapRecord record_of(const PointedMap &p) {
  MapRecord r = record_of(p.map);
  r.pointed = p.pointed;
  return r;
}

MapRecord record_of(const SymmetricMap &s) {
  MapRecord r = record_of(s.base);
  r.rho = s.rho;
  r.k = s.k;
  return r;
}

PointedMap pointed_of(const MapRecord &r) {
  if (!r.pointed) throw Error(Errc::BadInput, "record has no pointed vertex");
  return PointedMap::make(r.map, *r.pointed);
}

SymmetricMap symmetric_of(const MapRecord &r) {
  if (!r.rho || !r.k) throw Error(Errc::BadInput, "record has no rotation");
  return SymmetricMap::make(pointed_of(r), *r.k, *r.rho);
}

} // namespace symmaps
