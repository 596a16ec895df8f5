#include "vecdil/io_json.hpp"

#include <sstream>

#include <json.hpp>

namespace vecdil {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(long(j.get<int64_t>()));
  if (j.is_string()) {
    auto r = parse_rat(j.get<std::string>());
    if (!r) throw ParseError("invalid rational: " + j.get<std::string>());
    return *r;
  }
  throw ParseError("expected integer or \"p/q\" string");
}

RatVec vec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  RatVec v;
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

json vec_to_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_str(x));
  return a;
}

std::string expo_key(const MPoly::Expo& e) {
  std::ostringstream os;
  for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  return os.str();
}

json poly_to_json(const MPoly& p) {
  json ms = json::array();
  for (const auto& [expo, coef] : p.terms()) {
    json m;
    m["expo"] = expo;
    m["coef"] = rat_str(coef);
    ms.push_back(std::move(m));
  }
  return ms;
}

HRep hrep_from_json(const json& j) {
  if (!j.contains("A") || !j.contains("b") || !j["A"].is_array() || !j["b"].is_array())
    throw ParseError("H-representation needs \"A\" and \"b\" arrays");
  std::vector<RatVec> rows;
  for (const auto& row : j["A"]) {
    RatVec r = vec_from_json(row);
    for (const Rat& x : r)
      if (x.get_den() != 1) throw ParseError("\"A\" entries must be integers");
    rows.push_back(std::move(r));
  }
  RatVec b = vec_from_json(j["b"]);
  if (rows.empty()) throw ParseError("\"A\" must have at least one row");
  size_t n = rows[0].size();
  if (n == 0) throw ParseError("\"A\" rows must be nonempty");
  for (const RatVec& r : rows)
    if (r.size() != n) throw ParseError("ragged \"A\" matrix");
  if (b.size() != rows.size()) throw ParseError("\"b\" length must match row count of \"A\"");
  return HRep(Mat::from_rows(rows), b);
}

VRep vrep_from_json(const json& j) {
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("V-representation needs a \"vertices\" array");
  VRep v;
  size_t n = 0;
  for (const auto& row : j["vertices"]) {
    RatVec p = vec_from_json(row);
    if (v.vertices.empty())
      n = p.size();
    else if (p.size() != n)
      throw ParseError("ragged \"vertices\" array");
    v.vertices.push_back(std::move(p));
  }
  if (!v.vertices.empty() && n == 0) throw ParseError("vertices must be nonempty vectors");
  return v;
}

}  // namespace

HRep parse_hrep(const std::string& text) { return hrep_from_json(parse_text(text)); }

VRep parse_vrep(const std::string& text) { return vrep_from_json(parse_text(text)); }

VRep parse_polytope(const std::string& text, bool check_bounded) {
  json j = parse_text(text);
  if (j.contains("vertices")) return vrep_from_json(j);
  if (j.contains("A")) return vertices(hrep_from_json(j), check_bounded);
  throw ParseError("expected an object with \"A\"/\"b\" or \"vertices\"");
}

std::string hrep_json(const HRep& h) {
  json j;
  json rows = json::array();
  for (size_t i = 0; i < h.A.rows(); ++i) {
    json row = json::array();
    for (size_t c = 0; c < h.A.cols(); ++c) row.push_back(long(h.A(i, c).get_num().get_si()));
    rows.push_back(std::move(row));
  }
  j["A"] = std::move(rows);
  j["b"] = vec_to_json(h.b);
  return j.dump();
}

std::string vrep_json(const VRep& v) {
  json j;
  json rows = json::array();
  for (const RatVec& p : v.vertices) rows.push_back(vec_to_json(p));
  j["vertices"] = std::move(rows);
  return j.dump();
}

std::string coeffs_json(const CoeffVector& cv) {
  json j;
  j["point"] = vec_to_json(cv.point);
  json coeffs;
  for (const auto& [i, val] : cv.values) coeffs[expo_key(i)] = rat_str(val);
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

std::string quasipoly_json(const MultiQuasiPoly& qp) {
  json j;
  json periods = json::array();
  for (const Rat& d : qp.periods) periods.push_back(rat_str(d));
  j["periods"] = std::move(periods);
  json cells = json::array();
  for (const QPCell& cell : qp.cells) {
    json c;
    json walls = json::array();
    for (size_t w = 0; w < cell.wall_normals.size(); ++w) {
      json wall;
      wall["normal"] = vec_to_json(cell.wall_normals[w]);
      wall["offset"] = rat_str(cell.wall_offsets[w]);
      walls.push_back(std::move(wall));
    }
    c["walls"] = std::move(walls);
    c["sample"] = vec_to_json(cell.sample);
    json coeffs;
    for (const auto& [i, poly] : cell.coeffs) coeffs[expo_key(i)] = poly_to_json(poly);
    c["coeffs"] = std::move(coeffs);
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  return j.dump();
}

std::string chamber_json(const Chamber& ch) {
  json j;
  json rows = json::array();
  for (size_t i = 0; i < ch.closure.rows(); ++i) {
    json row = json::array();
    for (size_t c = 0; c < ch.closure.cols(); ++c) row.push_back(rat_str(ch.closure(i, c)));
    rows.push_back(std::move(row));
  }
  j["closure"] = std::move(rows);
  json gens = json::array();
  for (const RatVec& g : ch.generators) gens.push_back(vec_to_json(g));
  j["generators"] = std::move(gens);
  json sig = json::array();
  for (const auto& active : ch.fan_signature) sig.push_back(active);
  j["fan_signature"] = std::move(sig);
  return j.dump();
}

}  // namespace vecdil
