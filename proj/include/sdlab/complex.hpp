// Finite abstract simplicial complexes: ingestion, face enumeration, links,
// face vectors and the standard triangulations used as test instances.
#pragma once

#include "sdlab/polynomial.hpp"
#include "sdlab/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace sdlab {

using VertexId = std::uint32_t;

/// A non-empty, strictly increasing list of vertex labels.
class Simplex {
 public:
  Simplex() = default;

  /// Canonicalizes `vertices`; throws on an empty list or a repeated vertex.
  explicit Simplex(std::vector<VertexId> vertices) : v_(std::move(vertices)) {
    if (v_.empty()) throw Error("simplex must have at least one vertex");
    std::sort(v_.begin(), v_.end());
    if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
      throw Error("simplex has a repeated vertex");
  }
  Simplex(std::initializer_list<VertexId> vertices) : Simplex(std::vector<VertexId>(vertices)) {}

  /// Wraps an already canonical tuple without re-checking it.
  static Simplex from_sorted(std::vector<VertexId> sorted) {
    Simplex s;
    s.v_ = std::move(sorted);
    return s;
  }

  int dim() const { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const { return v_.size(); }
  const std::vector<VertexId>& vertices() const { return v_; }
  VertexId operator[](std::size_t i) const { return v_[i]; }

  bool contains(VertexId x) const { return std::binary_search(v_.begin(), v_.end(), x); }
  bool is_face_of(const Simplex& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
  }
  bool is_proper_face_of(const Simplex& other) const {
    return v_.size() < other.v_.size() && is_face_of(other);
  }
  bool disjoint_from(const Simplex& other) const {
    auto a = v_.begin(), b = other.v_.begin();
    while (a != v_.end() && b != other.v_.end()) {
      if (*a == *b) return false;
      *a < *b ? ++a : ++b;
    }
    return true;
  }

  /// Sub-simplex selected by the set bits of `mask` (bit i keeps vertex i).
  Simplex subset(std::uint64_t mask) const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (mask >> i & 1U) out.push_back(v_[i]);
    return from_sorted(std::move(out));
  }

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < v_.size(); ++i) s += (i ? "," : "") + std::to_string(v_[i]);
    return s + "]";
  }

 private:
  std::vector<VertexId> v_;
};

/// Orders by dimension first, then lexicographically.
struct DimLexLess {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (VertexId v : s.vertices()) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

/// Face numbers f_0..f_n.
struct FaceVector {
  std::vector<BigInt> counts;

  std::size_t size() const { return counts.size(); }
  const BigInt& operator[](std::size_t p) const { return counts[p]; }
  friend bool operator==(const FaceVector&, const FaceVector&) = default;
};

/// q(T) = sum_p f_p T^p.
inline IntPolynomial face_polynomial(const FaceVector& f) { return IntPolynomial(f.counts); }

/// Facet-generated, downward-closed family of simplices. Immutable once built;
/// all faces are materialized at construction so values can be shared freely.
class SimplicialComplex {
 public:
  /// The empty complex (dimension -1).
  SimplicialComplex() = default;

  /// Canonicalizes facets, drops duplicates and non-maximal facets.
  static SimplicialComplex from_facets(const std::vector<std::vector<VertexId>>& facets) {
    if (facets.empty()) throw Error("complex needs at least one facet");
    std::vector<Simplex> simplices;
    simplices.reserve(facets.size());
    for (const auto& f : facets) simplices.emplace_back(f);
    return from_simplices(std::move(simplices));
  }

  /// As `from_facets`, over already validated simplices.
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices) {
    std::sort(simplices.begin(), simplices.end(), DimLexLess{});
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    std::unordered_set<Simplex, SimplexHash> proper;
    for (const auto& s : simplices) {
      const std::uint64_t full = (std::uint64_t{1} << s.size()) - 1;
      for (std::uint64_t m = 1; m < full; ++m) proper.insert(s.subset(m));
    }
    std::vector<Simplex> maximal;
    for (auto& s : simplices)
      if (!proper.contains(s)) maximal.push_back(std::move(s));
    return from_maximal_facets(std::move(maximal));
  }

  /// Trusts that no simplex of `facets` is a face of another.
  static SimplicialComplex from_maximal_facets(std::vector<Simplex> facets) {
    SimplicialComplex k;
    std::sort(facets.begin(), facets.end(), DimLexLess{});
    k.facets_ = std::move(facets);
    k.materialize();
    return k;
  }

  int dim() const { return static_cast<int>(faces_.size()) - 1; }
  bool empty() const { return facets_.empty(); }
  const std::vector<Simplex>& facets() const { return facets_; }

  /// Sorted p-simplices; empty for p outside 0..dim.
  std::span<const Simplex> faces(int p) const {
    if (p < 0 || p > dim()) return {};
    return faces_[p];
  }

  std::size_t num_faces() const {
    std::size_t total = 0;
    for (const auto& fp : faces_) total += fp.size();
    return total;
  }

  bool contains(const Simplex& s) const {
    auto fp = faces(s.dim());
    return std::binary_search(fp.begin(), fp.end(), s);
  }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    for (const auto& s : faces(0)) out.push_back(s[0]);
    return out;
  }

  bool is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Simplex& s) { return s.dim() == dim(); });
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_;
  }

 private:
  void materialize() {
    int n = -1;
    for (const auto& f : facets_) n = std::max(n, f.dim());
    if (n > 62) throw Error("facet dimension too large");
    faces_.assign(n + 1, {});
    for (const auto& f : facets_) {
      const std::uint64_t full = (std::uint64_t{1} << f.size()) - 1;
      for (std::uint64_t m = 1; m <= full; ++m) {
        Simplex s = f.subset(m);
        faces_[s.dim()].push_back(std::move(s));
      }
    }
    for (auto& fp : faces_) {
      std::sort(fp.begin(), fp.end());
      fp.erase(std::unique(fp.begin(), fp.end()), fp.end());
    }
  }

  std::vector<Simplex> facets_;
  std::vector<std::vector<Simplex>> faces_;
};

inline FaceVector face_vector(const SimplicialComplex& k) {
  FaceVector f;
  for (int p = 0; p <= k.dim(); ++p) f.counts.emplace_back(k.faces(p).size());
  return f;
}

inline IntPolynomial face_polynomial(const SimplicialComplex& k) {
  return face_polynomial(face_vector(k));
}

inline BigInt euler_characteristic(const FaceVector& f) {
  BigInt chi = 0;
  for (std::size_t p = 0; p < f.size(); ++p) chi += (p % 2 ? -f[p] : f[p]);
  return chi;
}

inline BigInt euler_characteristic(const SimplicialComplex& k) {
  return euler_characteristic(face_vector(k));
}

/// Lk(sigma, K): simplices disjoint from sigma whose union with sigma is in K.
inline SimplicialComplex link(const Simplex& sigma, const SimplicialComplex& k) {
  if (!k.contains(sigma)) throw Error("simplex " + sigma.str() + " is not a face of the complex");
  std::vector<Simplex> pieces;
  for (const auto& f : k.facets()) {
    if (!sigma.is_face_of(f) || f.size() == sigma.size()) continue;
    std::vector<VertexId> rest;
    std::set_difference(f.vertices().begin(), f.vertices().end(), sigma.vertices().begin(),
                        sigma.vertices().end(), std::back_inserter(rest));
    pieces.push_back(Simplex::from_sorted(std::move(rest)));
  }
  if (pieces.empty()) return {};
  // Distinct facets through sigma leave distinct, mutually non-nested remainders.
  return SimplicialComplex::from_maximal_facets(std::move(pieces));
}

struct PseudomanifoldReport {
  bool closed = false;
  std::string diagnostic;
  explicit operator bool() const { return closed; }
};

/// Pure, and every codimension-one face lies in exactly two facets.
inline PseudomanifoldReport check_closed_pseudomanifold(const SimplicialComplex& k) {
  if (k.empty()) return {false, "empty complex"};
  if (!k.is_pure()) return {false, "complex is not pure"};
  const int n = k.dim();
  if (n == 0) return {k.facets().size() == 2, "0-dimensional: closed iff it is S^0"};
  auto ridges = k.faces(n - 1);
  std::vector<int> count(ridges.size(), 0);
  for (const auto& f : k.facets()) {
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      const std::uint64_t mask = ((std::uint64_t{1} << f.size()) - 1) & ~(std::uint64_t{1} << drop);
      auto it = std::lower_bound(ridges.begin(), ridges.end(), f.subset(mask));
      ++count[it - ridges.begin()];
    }
  }
  for (std::size_t i = 0; i < ridges.size(); ++i)
    if (count[i] != 2)
      return {false, "ridge " + ridges[i].str() + " lies in " + std::to_string(count[i]) +
                         " facets"};
  return {true, ""};
}

inline bool is_closed_pseudomanifold(const SimplicialComplex& k) {
  return check_closed_pseudomanifold(k).closed;
}

// ---- builders -------------------------------------------------------------

/// Delta_n on vertices 0..n.
inline SimplicialComplex standard_simplex(int n) {
  if (n < 0) throw Error("standard_simplex needs n >= 0");
  std::vector<VertexId> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = static_cast<VertexId>(i);
  return SimplicialComplex::from_maximal_facets({Simplex::from_sorted(std::move(v))});
}

/// The n-sphere as the boundary of Delta_{n+1}, on vertices 0..n+1.
inline SimplicialComplex boundary_simplex(int n) {
  if (n < 0) throw Error("boundary_simplex needs n >= 0");
  const Simplex top = standard_simplex(n + 1).facets().front();
  std::vector<Simplex> facets;
  for (std::size_t drop = 0; drop < top.size(); ++drop)
    facets.push_back(top.subset(((std::uint64_t{1} << top.size()) - 1) & ~(std::uint64_t{1} << drop)));
  return SimplicialComplex::from_maximal_facets(std::move(facets));
}

/// S^0 * ... * S^0 (n+1 factors); the k-th copy of S^0 is {2k, 2k+1}.
inline SimplicialComplex cross_polytope_boundary(int n) {
  if (n < 0) throw Error("cross_polytope_boundary needs n >= 0");
  if (n > 20) throw Error("cross_polytope_boundary: n too large");
  std::vector<Simplex> facets;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << (n + 1)); ++choice) {
    std::vector<VertexId> v;
    for (int k = 0; k <= n; ++k) v.push_back(static_cast<VertexId>(2 * k + (choice >> k & 1U)));
    facets.push_back(Simplex::from_sorted(std::move(v)));
  }
  return SimplicialComplex::from_maximal_facets(std::move(facets));
}

inline VertexId max_vertex(const SimplicialComplex& k) {
  auto v = k.vertices();
  return v.empty() ? 0 : v.back();
}

/// Join with a single new vertex placed after the existing labels.
inline SimplicialComplex cone(const SimplicialComplex& k) {
  if (k.empty()) return standard_simplex(0);
  const VertexId apex = max_vertex(k) + 1;
  std::vector<Simplex> facets;
  for (const auto& f : k.facets()) {
    auto v = f.vertices();
    v.push_back(apex);
    facets.push_back(Simplex::from_sorted(std::move(v)));
  }
  return SimplicialComplex::from_maximal_facets(std::move(facets));
}

/// Join with two new cone points placed after the existing labels.
inline SimplicialComplex suspension(const SimplicialComplex& k) {
  if (k.empty()) return cross_polytope_boundary(0);
  const VertexId a = max_vertex(k) + 1;
  std::vector<Simplex> facets;
  for (VertexId apex : {a, a + 1}) {
    for (const auto& f : k.facets()) {
      auto v = f.vertices();
      v.push_back(apex);
      facets.push_back(Simplex::from_sorted(std::move(v)));
    }
  }
  return SimplicialComplex::from_maximal_facets(std::move(facets));
}

/// Disjoint copies of `a` and `b` with the first vertex of each identified.
inline SimplicialComplex wedge(const SimplicialComplex& a, const SimplicialComplex& b) {
  const VertexId offset = max_vertex(a) + 1;
  const VertexId base_b = b.vertices().front();
  const VertexId base_a = a.vertices().front();
  std::vector<std::vector<VertexId>> facets;
  for (const auto& f : a.facets()) facets.push_back(f.vertices());
  for (const auto& f : b.facets()) {
    std::vector<VertexId> v;
    for (VertexId x : f.vertices()) v.push_back(x == base_b ? base_a : x + offset);
    facets.push_back(std::move(v));
  }
  return SimplicialComplex::from_facets(facets);
}

/// The 7-vertex (Moebius-Kantor) torus: triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7.
inline SimplicialComplex torus7() {
  std::vector<std::vector<VertexId>> facets;
  for (VertexId i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_facets(facets);
}

/// Quotient of an a x b grid of squares, each cut along its main diagonal.
/// Columns wrap periodically; rows wrap with the reflection i -> -i when
/// `twisted` (Klein bottle), periodically otherwise (torus).
inline SimplicialComplex grid_surface(int a, int b, bool twisted) {
  if (a < 3 || b < 3) throw Error("grid_surface needs a, b >= 3");
  auto id = [&](int i, int j) -> VertexId {
    if (j == b) {
      j = 0;
      if (twisted) i = (a - i) % a;
    }
    i = ((i % a) + a) % a;
    return static_cast<VertexId>(j * a + i);
  };
  std::vector<std::vector<VertexId>> facets;
  for (int j = 0; j < b; ++j) {
    for (int i = 0; i < a; ++i) {
      facets.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      facets.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace sdlab
