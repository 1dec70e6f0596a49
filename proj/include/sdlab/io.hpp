// JSON formats for complexes and observables. Exact rationals travel as
// "p/q" strings.
#pragma once

#include "sdlab/complex.hpp"
#include "sdlab/measures.hpp"
#include "sdlab/rational.hpp"
#include "sdlab/subdivision.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace sdlab {

using json = nlohmann::ordered_json;

/// A complex as read from disk, with its embedding when coordinates are given.
struct ComplexFile {
  SimplicialComplex complex;
  std::optional<EmbeddedComplex> embedding;
};

namespace detail {

inline Rational rational_from_json(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw Error(where + ": expected a rational as a \"p/q\" string or an integer");
}

inline VertexId vertex_from_json(const json& v) {
  if (!v.is_number_integer()) throw Error("vertex labels must be integers");
  const long long x = v.get<long long>();
  if (x < 0 || x > static_cast<long long>(std::numeric_limits<VertexId>::max()))
    throw Error("vertex label " + std::to_string(x) + " is out of range");
  return static_cast<VertexId>(x);
}

}  // namespace detail

inline ComplexFile complex_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array())
    throw Error("complex JSON needs a \"facets\" array");
  std::vector<std::vector<VertexId>> facets;
  for (const auto& f : doc["facets"]) {
    if (!f.is_array()) throw Error("each facet must be an array of vertex labels");
    std::vector<VertexId> v;
    for (const auto& x : f) v.push_back(detail::vertex_from_json(x));
    facets.push_back(std::move(v));
  }
  ComplexFile out{SimplicialComplex::from_facets(facets), std::nullopt};
  if (doc.contains("coordinates") && !doc["coordinates"].is_null()) {
    const auto& c = doc["coordinates"];
    if (!c.is_object()) throw Error("\"coordinates\" must map vertex ids to coordinate arrays");
    std::map<VertexId, Point> coords;
    for (const auto& [key, arr] : c.items()) {
      long long id;
      try {
        std::size_t used = 0;
        id = std::stoll(key, &used);
        if (used != key.size() || id < 0) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw Error("coordinate key \"" + key + "\" is not a vertex id");
      }
      if (!arr.is_array()) throw Error("coordinates of vertex " + key + " must be an array");
      Point x;
      for (const auto& v : arr) x.push_back(detail::rational_from_json(v, "vertex " + key));
      coords.emplace(static_cast<VertexId>(id), std::move(x));
    }
    out.embedding.emplace(out.complex, std::move(coords));
  }
  return out;
}

inline json complex_to_json(const SimplicialComplex& k, const std::map<VertexId, Point>* coords = nullptr) {
  json doc;
  json facets = json::array();
  for (const auto& f : k.facets()) facets.push_back(f.vertices());
  doc["facets"] = std::move(facets);
  if (coords) {
    json c = json::object();
    for (VertexId v : k.vertices()) {
      json arr = json::array();
      for (const auto& x : coords->at(v)) arr.push_back(to_string(x));
      c[std::to_string(v)] = std::move(arr);
    }
    doc["coordinates"] = std::move(c);
  }
  return doc;
}

inline json complex_to_json(const EmbeddedComplex& e) {
  return complex_to_json(e.complex(), &e.all_coords());
}

inline PolynomialObservable observable_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("ambient") || !doc["ambient"].is_number_integer())
    throw Error("observable JSON needs an integer \"ambient\"");
  if (!doc.contains("terms") || !doc["terms"].is_array())
    throw Error("observable JSON needs a \"terms\" array");
  const int m = doc["ambient"].get<int>();
  std::vector<PolynomialObservable::Term> terms;
  for (const auto& t : doc["terms"]) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
      throw Error("each observable term needs \"exp\" and \"coef\"");
    std::vector<int> e;
    for (const auto& x : t["exp"]) {
      if (!x.is_number_integer()) throw Error("exponents must be integers");
      e.push_back(x.get<int>());
    }
    terms.push_back({std::move(e), detail::rational_from_json(t["coef"], "coef")});
  }
  return PolynomialObservable(m, std::move(terms));
}

inline json observable_to_json(const PolynomialObservable& phi) {
  json doc;
  doc["ambient"] = phi.ambient_dim();
  json terms = json::array();
  for (const auto& t : phi.terms()) terms.push_back({{"exp", t.exponents}, {"coef", to_string(t.coef)}});
  doc["terms"] = std::move(terms);
  return doc;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace sdlab
