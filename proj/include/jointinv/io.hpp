#ifndef JOINTINV_IO_HPP
#define JOINTINV_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "jointinv/errors.hpp"
#include "jointinv/invariants.hpp"
#include "jointinv/matrix.hpp"
#include "jointinv/rational.hpp"
#include "jointinv/signature.hpp"
#include "jointinv/variants.hpp"

namespace jointinv::io {

using json = nlohmann::ordered_json;

/// Integer, decimal string or "p/q" string. JSON floats are rejected since
/// they are not exact.
inline Rat rat_from_json(const json& v) {
  if (v.is_number_integer()) return Rat(v.dump());
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_float()) throw InputError("coordinate " + v.dump() + " is a float; write it as a string");
  throw InputError("coordinate must be an integer or a string, got " + v.dump());
}

inline json to_json(const Rat& r) { return to_string(r); }

inline json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

/// Full skew-symmetric m x m table.
inline json to_json(const GramTable& g) {
  json out = json::array();
  for (std::size_t i = 1; i <= g.m(); ++i) {
    json row = json::array();
    for (std::size_t j = 1; j <= g.m(); ++j) row.push_back(to_json(g.at(i, j)));
    out.push_back(row);
  }
  return out;
}

inline json to_json(const Signature& s) {
  return json{{"group", to_string(s.group)}, {"values", to_json(s.values)}};
}

inline json to_json(const GenericityReport& r) {
  return json{{"generic", r.generic}, {"failed_predicates", r.failed_predicates}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline std::size_t read_n(const json& j) {
  if (!j.is_object() || !j.contains("n")) throw InputError("configuration must be an object with key \"n\"");
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 1) throw InputError("\"n\" must be a positive integer");
  return j["n"].get<std::size_t>();
}

/// {"n": 2, "points": [[x1, ..., xn, y1, ..., yn], ...]}
inline PointConfig config_from_json(const json& j) {
  const std::size_t n = read_n(j);
  if (!j.contains("points") || !j["points"].is_array()) throw InputError("\"points\" must be an array");
  std::vector<Vector> pts;
  for (const auto& p : j["points"]) {
    if (!p.is_array()) throw InputError("each point must be an array of 2n coordinates");
    Vector v;
    for (const auto& x : p) v.push_back(rat_from_json(x));
    pts.push_back(std::move(v));
  }
  return {n, std::move(pts)};
}

inline json to_json(const PointConfig& c) {
  json pts = json::array();
  for (const auto& p : c.points()) pts.push_back(to_json(p));
  return json{{"n", c.n()}, {"points", pts}};
}

/// {"n": 1, "points": [{"x": [...], "y": [...], "u": "p/q"}, ...]}
inline ContactConfig contact_from_json(const json& j) {
  const std::size_t n = read_n(j);
  if (!j.contains("points") || !j["points"].is_array()) throw InputError("\"points\" must be an array");
  std::vector<ContactPoint> pts;
  for (const auto& p : j["points"]) {
    if (!p.is_object() || !p.contains("x") || !p.contains("y") || !p.contains("u"))
      throw InputError("each contact point needs \"x\", \"y\" and \"u\"");
    ContactPoint cp;
    for (const auto& x : p["x"]) cp.x.push_back(rat_from_json(x));
    for (const auto& y : p["y"]) cp.y.push_back(rat_from_json(y));
    cp.u = rat_from_json(p["u"]);
    pts.push_back(std::move(cp));
  }
  return {n, std::move(pts)};
}

inline json to_json(const ContactConfig& c) {
  json pts = json::array();
  for (const auto& p : c.points()) pts.push_back(json{{"x", to_json(p.x)}, {"y", to_json(p.y)}, {"u", to_json(p.u)}});
  return json{{"n", c.n()}, {"points", pts}};
}

/// {"n": 1, "table": [[...], ...]}: a full skew-symmetric matrix.
inline GramTable table_from_json(const json& j) {
  const auto& rows = j.at("table");
  if (!rows.is_array()) throw InputError("\"table\" must be an array of rows");
  const std::size_t m = rows.size();
  GramTable g(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!rows[i].is_array() || rows[i].size() != m) throw InputError("\"table\" must be square");
    for (std::size_t k = 0; k < m; ++k) {
      const Rat v = rat_from_json(rows[i][k]);
      if (i == k && v != 0) throw InputError("\"table\" must have a zero diagonal");
      if (k > i) g.set(i + 1, k + 1, v);
      if (k < i && v != -g.at(k + 1, i + 1)) throw InputError("\"table\" must be skew-symmetric");
    }
  }
  return g;
}

}  // namespace jointinv::io

#endif  // JOINTINV_IO_HPP
