#pragma once

#include <json.hpp>

#include <limits>
#include <string>
#include <vector>

#include "collapse.hpp"
#include "errors.hpp"
#include "fillings.hpp"
#include "graph.hpp"
#include "mlq.hpp"
#include "poly.hpp"
#include "symfun.hpp"
#include "tableau.hpp"

namespace mlqkit {

using json = nlohmann::ordered_json;

// Parses text, reporting syntax errors with a 1-based line and column.
inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
}

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

inline std::vector<std::vector<int>> int_rows(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& r : j) out.push_back(int_list(r, what));
  return out;
}

inline json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

inline Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (...) {
    }
  }
  throw ParseError("coefficients must be integers");
}

}  // namespace detail

inline json to_json(const MultilineQueue& m) { return {{"n", m.n}, {"rows", m.rows}}; }

inline MultilineQueue mlq_from_json(const json& j) {
  const json& n = detail::field(j, "n");
  if (!n.is_number_integer() || n.get<int>() < 1) throw ParseError("\"n\" must be a positive integer");
  return make_mlq(n.get<int>(), detail::int_rows(detail::field(j, "rows"), "\"rows\""));
}

inline json to_json(const Tableau& t) { return {{"shape", t.shape()}, {"rows", t.rows}}; }

inline Tableau tableau_from_json(const json& j) {
  Tableau t{detail::int_rows(detail::field(j, "rows"), "\"rows\"")};
  if (j.contains("shape") && detail::int_list(j.at("shape"), "\"shape\"") != t.shape())
    throw ParseError("\"shape\" does not match the row lengths");
  return t;
}

inline json to_json(const CompositionFilling& f) {
  return {{"kind", f.kind == FillingKind::SSAF ? "SSAF" : "SSQT"}, {"shape", f.shape}, {"columns", f.columns}};
}

inline CompositionFilling filling_from_json(const json& j) {
  CompositionFilling f;
  f.shape = detail::int_list(detail::field(j, "shape"), "\"shape\"");
  f.columns = detail::int_rows(detail::field(j, "columns"), "\"columns\"");
  if (f.columns.size() != f.shape.size()) throw ParseError("\"columns\" and \"shape\" differ in length");
  for (std::size_t k = 0; k < f.shape.size(); ++k)
    if (static_cast<int>(f.columns[k].size()) != f.shape[k]) throw ParseError("column heights do not match \"shape\"");
  if (j.contains("kind")) f.kind = j.at("kind") == "SSQT" ? FillingKind::SSQT : FillingKind::SSAF;
  return f;
}

inline json to_json(const CollapsePair& p) { return {{"nonwrap", to_json(p.nonwrap)}, {"record", to_json(p.record)}}; }

inline CollapsePair pair_from_json(const json& j) {
  return {mlq_from_json(detail::field(j, "nonwrap")), tableau_from_json(detail::field(j, "record"))};
}

inline json to_json(const QPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(detail::integer_json(c));
  return a;
}

inline QPoly qpoly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("\"q\" must be an array of coefficients");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(detail::integer_from(x));
  return QPoly(std::move(c));
}

// Terms are listed in decreasing lexicographic order of the exponent.
inline json to_json(const GenFun& g) {
  json terms = json::array();
  for (auto it = g.terms.rbegin(); it != g.terms.rend(); ++it)
    terms.push_back({{"exp", it->first}, {"q", to_json(it->second)}});
  return {{"n", g.n}, {"terms", terms}};
}

inline GenFun genfun_from_json(const json& j) {
  const json& n = detail::field(j, "n");
  if (!n.is_number_integer() || n.get<int>() < 0) throw ParseError("\"n\" must be a nonnegative integer");
  GenFun g{n.get<int>(), {}};
  const json& terms = detail::field(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  for (const auto& t : terms) {
    Exponent e = detail::int_list(detail::field(t, "exp"), "\"exp\"");
    if (static_cast<int>(e.size()) != g.n) throw ParseError("exponent length differs from \"n\"");
    g.add(e, qpoly_from_json(detail::field(t, "q")));
  }
  return g;
}

inline json to_json(const Expansion& e) {
  json cs = json::array();
  for (auto it = e.coeffs.rbegin(); it != e.coeffs.rend(); ++it)
    cs.push_back({{"index", it->first}, {"q", to_json(it->second)}});
  return {{"basis", basis_name(e.kind)}, {"coefficients", cs}};
}

inline json to_json(const CrystalGraph& g, bool with_components) {
  json vs = json::array();
  for (const auto& v : g.vertices)
    vs.push_back({{"mlq", to_json(v.m)}, {"type", v.type}, {"maj", v.maj}, {"record", v.record.rows}});
  json es = json::array();
  for (const auto& e : g.edges) es.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
  json out = {{"shape", g.shape}, {"n", g.n}, {"filter", filter_name(g.filter)}, {"vertices", vs}, {"edges", es}};
  if (with_components) out["components"] = components(g);
  return out;
}

}  // namespace mlqkit
