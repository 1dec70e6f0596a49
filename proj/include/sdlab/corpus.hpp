// The named complexes shipped with the tool: spheres and other closed
// manifolds as positive instances, balls and wedges as negatives.
#pragma once

#include "sdlab/complex.hpp"
#include "sdlab/io.hpp"
#include "sdlab/subdivision.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sdlab {

struct CorpusEntry {
  std::string name;
  std::string description;
  bool manifold = false;  // a closed manifold, so the identity theorems apply
  std::function<SimplicialComplex()> build;
  std::function<std::optional<EmbeddedComplex>()> embed;
};

namespace detail {

inline std::optional<EmbeddedComplex> no_embedding() { return std::nullopt; }

// Disc: cone over the triangle boundary with apex at the centroid.
inline EmbeddedComplex embedded_disc() {
  std::map<VertexId, Point> c;
  c[0] = {Rational(0), Rational(0)};
  c[1] = {Rational(1), Rational(0)};
  c[2] = {Rational(0), Rational(1)};
  c[3] = {Rational(1, 3), Rational(1, 3)};
  return EmbeddedComplex(cone(boundary_simplex(1)), std::move(c));
}

// Two triangles sharing vertex 0, placed on opposite sides of the origin.
inline EmbeddedComplex embedded_wedge_triangles() {
  const SimplicialComplex k = wedge(standard_simplex(2), standard_simplex(2));
  std::map<VertexId, Point> c;
  c[0] = {Rational(0), Rational(0)};
  c[1] = {Rational(1), Rational(0)};
  c[2] = {Rational(0), Rational(1)};
  c[4] = {Rational(-1), Rational(0)};
  c[5] = {Rational(0), Rational(-1)};
  return EmbeddedComplex(k, std::move(c));
}

}  // namespace detail

inline const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (int n = 1; n <= 4; ++n)
      out.push_back({"delta" + std::to_string(n), "standard " + std::to_string(n) + "-simplex", false,
                     [n] { return standard_simplex(n); },
                     [n] { return std::optional<EmbeddedComplex>(embedded_standard_simplex(n)); }});
    for (int n = 1; n <= 6; ++n)
      out.push_back({"boundary-delta-" + std::to_string(n + 1),
                     std::to_string(n) + "-sphere as the boundary of the " + std::to_string(n + 1) + "-simplex",
                     true, [n] { return boundary_simplex(n); },
                     [n] { return std::optional<EmbeddedComplex>(embedded_boundary_simplex(n)); }});
    for (int n = 1; n <= 5; ++n)
      out.push_back({"cross-polytope-" + std::to_string(n),
                     "boundary of the " + std::to_string(n + 1) + "-dimensional cross-polytope", true,
                     [n] { return cross_polytope_boundary(n); },
                     [n] { return std::optional<EmbeddedComplex>(embedded_cross_polytope_boundary(n)); }});
    out.push_back({"octahedron", "boundary of the octahedron (same as cross-polytope-2)", true,
                   [] { return cross_polytope_boundary(2); },
                   [] { return std::optional<EmbeddedComplex>(embedded_cross_polytope_boundary(2)); }});
    out.push_back({"torus-7", "7-vertex torus", true, [] { return torus7(); }, detail::no_embedding});
    out.push_back({"klein-bottle", "Klein bottle from a twisted 4x4 grid", true,
                   [] { return grid_surface(4, 4, true); }, detail::no_embedding});
    out.push_back({"torus-grid", "torus from a 4x4 grid", true, [] { return grid_surface(4, 4, false); },
                   detail::no_embedding});
    out.push_back({"disc", "cone over the triangle boundary (2-disc)", false,
                   [] { return cone(boundary_simplex(1)); },
                   [] { return std::optional<EmbeddedComplex>(detail::embedded_disc()); }});
    out.push_back({"ball-3", "cone over the tetrahedron boundary (3-ball)", false,
                   [] { return cone(boundary_simplex(2)); }, detail::no_embedding});
    out.push_back({"wedge-triangles", "two triangles sharing one vertex", false,
                   [] { return wedge(standard_simplex(2), standard_simplex(2)); },
                   [] { return std::optional<EmbeddedComplex>(detail::embedded_wedge_triangles()); }});
    out.push_back({"wedge-tetrahedra", "two solid tetrahedra sharing one vertex", false,
                   [] { return wedge(standard_simplex(3), standard_simplex(3)); }, detail::no_embedding});
    return out;
  }();
  return entries;
}

inline const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus_entries())
    if (e.name == name) return e;
  throw Error("unknown corpus complex '" + name + "'; run `sdlab corpus list` for the shipped names");
}

/// Canonical JSON: facets in (dim, lexicographic) order, coordinates when the
/// entry has an embedding.
inline json corpus_json(const std::string& name) {
  const CorpusEntry& e = corpus_entry(name);
  if (auto emb = e.embed()) return complex_to_json(*emb);
  return complex_to_json(e.build());
}

}  // namespace sdlab
