#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "csmm/diagram.hpp"
#include "csmm/hseries.hpp"
#include "csmm/npoly.hpp"
#include "csmm/pairing.hpp"
#include "csmm/partition.hpp"
#include "csmm/symfunc.hpp"

namespace csmm {

using Json = nlohmann::ordered_json;

// Exact scalars travel as strings ("num/den", denominator omitted when 1)
// so that no reader ever sees a rounded value.
inline Json json_of(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational: expected string");
  return Rational::from_string(j.get<std::string>());
}

// Degree -> coefficient-string map, ascending degree.
inline Json json_of(const NPoly& p) {
  Json j = Json::object();
  for (const auto& [d, c] : p.terms()) j[std::to_string(d)] = c.to_string();
  return j;
}

inline NPoly npoly_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("npoly: expected object");
  NPoly p;
  for (const auto& [k, v] : j.items())
    p += NPoly::monomial(std::stoi(k), rational_from_json(v));
  return p;
}

// Exponent -> NPoly map, ascending exponent. The truncation order is carried
// separately by whoever stores the fixture.
inline Json json_of(const HSeries& s) {
  Json j = Json::object();
  for (const auto& [k, c] : s.terms()) j[std::to_string(k)] = json_of(c);
  return j;
}

inline HSeries hseries_from_json(const Json& j, int order) {
  if (!j.is_object()) throw std::invalid_argument("hseries: expected object");
  HSeries s(order);
  for (const auto& [k, v] : j.items())
    s.set_term(std::stoi(k), npoly_from_json(v));
  return s;
}

inline Json json_of(const Partition& p) {
  Json j = Json::array();
  for (int x : p.parts) j.push_back(x);
  return j;
}

inline Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition: expected array");
  std::vector<int> parts;
  for (const auto& x : j) parts.push_back(x.get<int>());
  return Partition(std::move(parts));
}

// [{ "powersums": [[...], ...], "coeff": exponent->NPoly }], one entry per
// monomial in the map's own (deterministic) order. powersums[c] lists the
// power-sum subscripts of color c; a 0 subscript is the honorary p_0 = N.
inline Json json_of(const SymFunc& f) {
  Json j = Json::array();
  for (const auto& [key, coeff] : f.terms()) {
    Json entry = Json::object();
    Json cols = Json::array();
    for (const auto& lam : key) cols.push_back(json_of(lam));
    entry["powersums"] = std::move(cols);
    entry["coeff"] = json_of(coeff);
    j.push_back(std::move(entry));
  }
  return j;
}

inline Json json_of(const GluedValue& g) {
  Json by = Json::object();
  for (const auto& [e, p] : g.by_exponent) by[std::to_string(e)] = json_of(p);
  Json j = Json::object();
  j["matchings"] = g.matchings;
  j["by_exponent"] = std::move(by);
  j["total"] = json_of(g.total());
  return j;
}

inline Json json_of(const JacobiDiagram& d) {
  Json j = Json::object();
  Json tri = Json::array();
  for (const auto& v : d.trivalent) tri.push_back({v[0], v[1], v[2]});
  Json legs = Json::array();
  for (const auto& [h, c] : d.legs) legs.push_back({h, c});
  j["trivalent"] = std::move(tri);
  j["legs"] = std::move(legs);
  j["mate"] = d.mate;
  return j;
}

inline JacobiDiagram diagram_from_json(const Json& j) {
  JacobiDiagram d;
  for (const auto& v : j.at("trivalent"))
    d.trivalent.push_back({v.at(0).get<int>(), v.at(1).get<int>(), v.at(2).get<int>()});
  for (const auto& l : j.at("legs"))
    d.legs.emplace_back(l.at(0).get<int>(), l.at(1).get<int>());
  d.mate = j.at("mate").get<std::vector<int>>();
  d.validate();
  return d;
}

inline Json json_of(const MarkedSurface& s) {
  Json j = Json::object();
  j["chi"] = s.chi;
  j["circles"] = s.circles;
  return j;
}

inline MarkedSurface surface_from_json(const Json& j) {
  MarkedSurface s;
  s.chi = j.at("chi").get<int>();
  s.circles = j.at("circles").get<std::vector<std::vector<int>>>();
  s.canonicalize();
  return s;
}

// [{ "chi": ..., "circles": ..., "coeff": "r" }]
inline Json json_of(const SurfaceCombo& c) {
  Json j = Json::array();
  for (const auto& [s, r] : c.terms) {
    Json entry = json_of(s);
    entry["coeff"] = r.to_string();
    j.push_back(std::move(entry));
  }
  return j;
}

inline SurfaceCombo combo_from_json(const Json& j) {
  SurfaceCombo c;
  for (const auto& entry : j)
    c.add(surface_from_json(entry), rational_from_json(entry.at("coeff")));
  return c;
}

}  // namespace csmm
