// Barycentric subdivision: the chain construction, iterated subdivision,
// memory-bounded streaming of Sd^d(K), exact barycenters and dual blocks.
#pragma once

#include "sdlab/complex.hpp"
#include "sdlab/rational.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sdlab {

/// Default bound on the number of simplices an enumeration may produce.
inline constexpr std::uint64_t kDefaultCellCap = 10'000'000;

/// sigma_0 < sigma_1 < ... < sigma_p, each a proper face of the next.
class Chain {
 public:
  explicit Chain(std::vector<Simplex> links) : links_(std::move(links)) {
    if (links_.empty()) throw Error("chain must be non-empty");
    for (std::size_t i = 1; i < links_.size(); ++i)
      if (!links_[i - 1].is_proper_face_of(links_[i]))
        throw Error("chain is not strictly increasing at position " + std::to_string(i));
  }
  int dim() const { return static_cast<int>(links_.size()) - 1; }
  const std::vector<Simplex>& links() const { return links_; }
  const Simplex& top() const { return links_.back(); }

 private:
  std::vector<Simplex> links_;
};

/// Sd(K) together with the bijection between faces of K and new vertex ids.
class SdComplex {
 public:
  SdComplex(SimplicialComplex parent, std::vector<Simplex> vertex_table, SimplicialComplex complex)
      : parent_(std::move(parent)), table_(std::move(vertex_table)), complex_(std::move(complex)) {}

  const SimplicialComplex& parent() const { return parent_; }
  const SimplicialComplex& complex() const { return complex_; }
  /// Faces of the parent in (dim, lexicographic) order; index = new vertex id.
  const std::vector<Simplex>& vertex_table() const { return table_; }

  const Simplex& simplex_of(VertexId id) const { return table_.at(id); }
  VertexId vertex_of(const Simplex& s) const {
    auto it = std::lower_bound(table_.begin(), table_.end(), s, DimLexLess{});
    if (it == table_.end() || *it != s) throw Error("simplex " + s.str() + " is not in the parent");
    return static_cast<VertexId>(it - table_.begin());
  }
  /// The chain of parent faces spanned by a simplex of Sd(K).
  Chain chain_of(const Simplex& s) const {
    std::vector<Simplex> links;
    for (VertexId v : s.vertices()) links.push_back(simplex_of(v));
    return Chain(std::move(links));
  }

 private:
  SimplicialComplex parent_;
  std::vector<Simplex> table_;
  SimplicialComplex complex_;
};

namespace detail {

/// Calls `emit(order)` for every ordering of `s`'s vertices, i.e. every flag.
template <typename F>
void for_each_flag(const Simplex& s, F&& emit) {
  std::vector<VertexId> order = s.vertices();
  do {
    emit(std::span<const VertexId>(order));
  } while (std::next_permutation(order.begin(), order.end()));
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
  return r;
}

}  // namespace detail

/// Estimated top-cell count f_n(K) (n+1)!^d, saturating.
inline std::uint64_t estimated_top_cells(const SimplicialComplex& k, int depth) {
  if (k.empty()) return 0;
  std::uint64_t fact = 1;
  for (int i = 2; i <= k.dim() + 1; ++i) fact = detail::saturating_mul(fact, i);
  std::uint64_t est = k.faces(k.dim()).size();
  for (int i = 0; i < depth; ++i) est = detail::saturating_mul(est, fact);
  return est;
}

inline void check_cap(const SimplicialComplex& k, int depth, std::uint64_t cap) {
  if (depth < 0) throw Error("depth must be non-negative");
  const std::uint64_t est = estimated_top_cells(k, depth);
  if (est > cap)
    throw CapExceeded("depth " + std::to_string(depth) + " needs about " + std::to_string(est) +
                      " top cells, above the cap of " + std::to_string(cap) +
                      " (raise --max-cells or SDLAB_MAX_CELLS)");
}

/// Sd(K): vertices are the faces of K, facets the maximal flags ending at facets.
inline SdComplex barycentric_subdivision(const SimplicialComplex& k) {
  std::vector<Simplex> table;
  table.reserve(k.num_faces());
  for (int p = 0; p <= k.dim(); ++p)
    for (const auto& s : k.faces(p)) table.push_back(s);
  std::unordered_map<Simplex, VertexId, SimplexHash> index;
  index.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) index.emplace(table[i], static_cast<VertexId>(i));

  std::vector<Simplex> facets;
  for (const auto& f : k.facets()) {
    detail::for_each_flag(f, [&](std::span<const VertexId> order) {
      std::vector<VertexId> ids;
      std::vector<VertexId> prefix;
      for (VertexId v : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        ids.push_back(index.at(Simplex::from_sorted(prefix)));
      }
      // (dim, lex) numbering makes chain order increasing in id.
      facets.push_back(Simplex::from_sorted(std::move(ids)));
    });
  }
  auto sd = SimplicialComplex::from_maximal_facets(std::move(facets));
  return SdComplex(k, std::move(table), std::move(sd));
}

/// Sd^d(K) as a plain complex; d = 0 returns K unchanged.
inline SimplicialComplex iterate_subdivision(const SimplicialComplex& k, int depth,
                                             std::uint64_t cap = kDefaultCellCap) {
  check_cap(k, depth, cap);
  SimplicialComplex cur = k;
  for (int i = 0; i < depth; ++i) cur = barycentric_subdivision(cur).complex();
  return cur;
}

// ---- streaming -------------------------------------------------------------

/// A point of |K| in barycentric coordinates over K's vertices, stored as
/// integer numerators over a denominator shared by every point of one level.
struct BaryPoint {
  std::vector<std::pair<VertexId, std::int64_t>> terms;  // sorted by vertex, numerators > 0

  friend bool operator==(const BaryPoint&, const BaryPoint&) = default;
  friend auto operator<=>(const BaryPoint&, const BaryPoint&) = default;

  /// Vertices of the smallest face of K containing the point.
  Simplex support() const {
    std::vector<VertexId> v;
    for (const auto& [id, num] : terms) v.push_back(id);
    return Simplex::from_sorted(std::move(v));
  }
};

/// One simplex of Sd^d(K) as seen by a streaming visitor.
struct StreamedSimplex {
  /// Vertices in chain order (support sizes increasing along the chain).
  std::span<const BaryPoint> vertices;
  /// Common denominator of all vertex coordinates at this depth.
  std::int64_t denominator;
  /// The face of K whose relative interior contains this simplex's interior.
  const Simplex* carrier;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }

  /// Barycenter in K-barycentric coordinates, numerators over
  /// denominator * (dim + 1).
  BaryPoint barycenter_numerators() const {
    std::map<VertexId, std::int64_t> acc;
    for (const auto& v : vertices)
      for (const auto& [id, num] : v.terms) acc[id] += num;
    BaryPoint b;
    b.terms.assign(acc.begin(), acc.end());
    return b;
  }
};

namespace detail {

inline std::int64_t lcm_upto(int m) {
  std::int64_t l = 1;
  for (int i = 2; i <= m; ++i) l = std::lcm(l, static_cast<std::int64_t>(i));
  return l;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw CapExceeded("barycentric coordinates overflow 64-bit numerators at this depth");
  return r;
}

class Streamer {
 public:
  using Visitor = std::function<void(const StreamedSimplex&)>;

  Streamer(int n, int depth, int min_dim, int max_dim, const Visitor& visit)
      : depth_(depth), min_dim_(min_dim), max_dim_(max_dim), visit_(visit) {
    const std::int64_t l = lcm_upto(n + 1);
    denominators_.push_back(1);
    for (int i = 0; i < depth; ++i) denominators_.push_back(checked_mul(denominators_.back(), l));
    scale_.assign(n + 2, 0);
    for (int s = 1; s <= n + 1; ++s) scale_[s] = l / s;
  }

  void run(const Simplex& carrier) {
    carrier_ = &carrier;
    std::vector<BaryPoint> pts;
    for (VertexId v : carrier.vertices()) pts.push_back(BaryPoint{{{v, 1}}});
    descend(0, pts);
  }

 private:
  // `pts` are the vertices of a simplex of Sd^level interior to the carrier.
  void descend(int level, const std::vector<BaryPoint>& pts) {
    const int m = static_cast<int>(pts.size()) - 1;
    if (level == depth_) {
      if (m >= min_dim_ && m <= max_dim_)
        visit_(StreamedSimplex{pts, denominators_[level], carrier_});
      return;
    }
    // Barycenters of every non-empty subset of this simplex, at level + 1.
    const std::uint64_t full = (std::uint64_t{1} << (m + 1)) - 1;
    std::vector<BaryPoint> bary(full + 1);
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
      std::map<VertexId, std::int64_t> acc;
      for (int i = 0; i <= m; ++i)
        if (mask >> i & 1U)
          for (const auto& [id, num] : pts[i].terms) acc[id] += num;
      const std::int64_t s = scale_[std::popcount(mask)];
      auto& b = bary[mask].terms;
      for (const auto& [id, num] : acc) b.emplace_back(id, checked_mul(num, s));
    }
    // Simplices of Sd(t) interior to t are the chains of subsets ending at t.
    const int lo = min_dim_;
    const int hi = std::min(m, level + 1 == depth_ ? max_dim_ : m);
    std::vector<std::uint64_t> chain;
    for (int q = lo; q <= hi; ++q) {
      chain.assign(q + 1, 0);
      chain[q] = full;
      chains(bary, chain, q, level);
    }
  }

  // Fills chain[0..pos-1] with strictly nested non-empty subsets of chain[pos].
  void chains(const std::vector<BaryPoint>& bary, std::vector<std::uint64_t>& chain, int pos,
              int level) {
    if (pos == 0) {
      std::vector<BaryPoint> next;
      next.reserve(chain.size());
      for (std::uint64_t mask : chain) next.push_back(bary[mask]);
      descend(level + 1, next);
      return;
    }
    const std::uint64_t top = chain[pos];
    // A proper subset still needs room for pos - 1 smaller links below it.
    for (std::uint64_t sub = (top - 1) & top; sub != 0; sub = (sub - 1) & top) {
      if (std::popcount(sub) < pos) continue;
      chain[pos - 1] = sub;
      chains(bary, chain, pos - 1, level);
    }
  }

  int depth_, min_dim_, max_dim_;
  const Visitor& visit_;
  std::vector<std::int64_t> denominators_;
  std::vector<std::int64_t> scale_;
  const Simplex* carrier_ = nullptr;
};

}  // namespace detail

/// Visits every simplex of Sd^d(K) with dimension in [min_dim, max_dim]
/// exactly once. Each simplex of Sd(L) is interior to a unique face of L, so
/// the walk recurses on (carrier, interior simplex) pairs and keeps only the
/// current branch in memory; no global face table is built.
inline void stream_faces(const SimplicialComplex& k, int depth, int min_dim, int max_dim,
                         const std::function<void(const StreamedSimplex&)>& visit,
                         std::uint64_t cap = kDefaultCellCap) {
  check_cap(k, depth, cap);
  if (k.empty() || min_dim > max_dim) return;
  min_dim = std::max(min_dim, 0);
  detail::Streamer streamer(k.dim(), depth, min_dim, max_dim, visit);
  for (int p = min_dim; p <= k.dim(); ++p)
    for (const auto& carrier : k.faces(p)) streamer.run(carrier);
}

/// Visits every p-simplex of Sd^d(K) exactly once.
inline void stream_faces(const SimplicialComplex& k, int depth, int p,
                         const std::function<void(const StreamedSimplex&)>& visit,
                         std::uint64_t cap = kDefaultCellCap) {
  stream_faces(k, depth, p, p, visit, cap);
}

/// Face numbers of Sd^d(K) counted by streaming.
inline FaceVector streamed_face_vector(const SimplicialComplex& k, int depth,
                                       std::uint64_t cap = kDefaultCellCap) {
  std::vector<std::uint64_t> counts(std::max(k.dim() + 1, 0), 0);
  stream_faces(k, depth, 0, k.dim(), [&](const StreamedSimplex& s) { ++counts[s.dim()]; }, cap);
  FaceVector f;
  for (auto c : counts) f.counts.emplace_back(c);
  return f;
}

// ---- geometry --------------------------------------------------------------

using Point = std::vector<Rational>;

inline std::string point_str(const Point& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + to_string(x[i]);
  return s + ")";
}

/// Rank of a rational matrix by Gaussian elimination.
inline int rational_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// A complex with exact rational coordinates for every vertex.
class EmbeddedComplex {
 public:
  EmbeddedComplex(SimplicialComplex k, std::map<VertexId, Point> coords)
      : k_(std::move(k)), coords_(std::move(coords)) {
    ambient_ = coords_.empty() ? 0 : static_cast<int>(coords_.begin()->second.size());
    for (VertexId v : k_.vertices()) {
      auto it = coords_.find(v);
      if (it == coords_.end()) throw Error("vertex " + std::to_string(v) + " has no coordinates");
      if (static_cast<int>(it->second.size()) != ambient_)
        throw Error("vertex " + std::to_string(v) + " has inconsistent coordinate dimension");
    }
    for (const auto& f : k_.facets()) {
      std::vector<std::vector<Rational>> edges;
      const Point& base = coords_.at(f[0]);
      for (std::size_t i = 1; i < f.size(); ++i) {
        std::vector<Rational> e(ambient_);
        const Point& x = coords_.at(f[i]);
        for (int j = 0; j < ambient_; ++j) e[j] = x[j] - base[j];
        edges.push_back(std::move(e));
      }
      if (rational_rank(edges) != f.dim())
        throw Error("facet " + f.str() + " is degenerate (affinely dependent vertices)");
    }
  }

  const SimplicialComplex& complex() const { return k_; }
  int ambient_dim() const { return ambient_; }
  const Point& coords(VertexId v) const {
    auto it = coords_.find(v);
    if (it == coords_.end()) throw Error("vertex " + std::to_string(v) + " has no coordinates");
    return it->second;
  }
  const std::map<VertexId, Point>& all_coords() const { return coords_; }

  /// Ambient position of a barycentric point with the given denominator.
  Point to_ambient(const BaryPoint& b, const BigInt& denominator) const {
    Point x(ambient_, Rational(0));
    for (const auto& [id, num] : b.terms) {
      const Point& c = coords(id);
      Rational w(BigInt(num), denominator);
      for (int j = 0; j < ambient_; ++j) x[j] += w * c[j];
    }
    return x;
  }

 private:
  SimplicialComplex k_;
  std::map<VertexId, Point> coords_;
  int ambient_ = 0;
};

/// Arithmetic mean of the vertex coordinates.
inline Point barycenter(const Simplex& s, const EmbeddedComplex& e) {
  if (!e.complex().contains(s)) throw Error("simplex " + s.str() + " is not in the complex");
  Point x(e.ambient_dim(), Rational(0));
  for (VertexId v : s.vertices()) {
    const Point& c = e.coords(v);
    for (int j = 0; j < e.ambient_dim(); ++j) x[j] += c[j];
  }
  for (auto& c : x) c /= static_cast<long>(s.size());
  return x;
}

/// Barycenter of the Sd-simplex [sigma_0^, ..., sigma_p^]: the mean of the
/// barycenters of the chain's links.
inline Point barycenter(const Chain& chain, const EmbeddedComplex& e) {
  Point x(e.ambient_dim(), Rational(0));
  for (const auto& s : chain.links()) {
    Point b = barycenter(s, e);
    for (int j = 0; j < e.ambient_dim(); ++j) x[j] += b[j];
  }
  for (auto& c : x) c /= static_cast<long>(chain.links().size());
  return x;
}

/// Delta_n with vertex 0 at the origin and vertex i at the i-th basis vector.
inline EmbeddedComplex embedded_standard_simplex(int n) {
  std::map<VertexId, Point> coords;
  for (int i = 0; i <= n; ++i) {
    Point x(n, Rational(0));
    if (i > 0) x[i - 1] = 1;
    coords.emplace(static_cast<VertexId>(i), std::move(x));
  }
  return EmbeddedComplex(standard_simplex(n), std::move(coords));
}

/// Boundary of the standard Delta_{n+1} in R^{n+1}.
inline EmbeddedComplex embedded_boundary_simplex(int n) {
  auto full = embedded_standard_simplex(n + 1);
  return EmbeddedComplex(boundary_simplex(n), full.all_coords());
}

/// Vertices 2k and 2k+1 at +e_k and -e_k in R^{n+1}.
inline EmbeddedComplex embedded_cross_polytope_boundary(int n) {
  std::map<VertexId, Point> coords;
  for (int k = 0; k <= n; ++k) {
    for (int sign : {1, -1}) {
      Point x(n + 1, Rational(0));
      x[k] = sign;
      coords.emplace(static_cast<VertexId>(2 * k + (sign < 0)), std::move(x));
    }
  }
  return EmbeddedComplex(cross_polytope_boundary(n), std::move(coords));
}

/// Sd(K) with each new vertex placed at the barycenter of its parent face.
inline EmbeddedComplex subdivide_embedded(const EmbeddedComplex& e) {
  SdComplex sd = barycentric_subdivision(e.complex());
  std::map<VertexId, Point> coords;
  for (std::size_t i = 0; i < sd.vertex_table().size(); ++i)
    coords.emplace(static_cast<VertexId>(i), barycenter(sd.vertex_table()[i], e));
  return EmbeddedComplex(sd.complex(), std::move(coords));
}

// ---- dual blocks -----------------------------------------------------------

/// Open-cell counts of the dual block D(sigma) in Sd(K): entry l counts the
/// chains sigma < tau_1 < ... < tau_l of faces of K.
struct DualBlockFaceVector {
  std::vector<BigInt> counts;
  friend bool operator==(const DualBlockFaceVector&, const DualBlockFaceVector&) = default;
};

/// Counts chains directly. Cofaces of sigma correspond to faces rho of the
/// link, so the count runs over chains of link faces by dynamic programming.
inline DualBlockFaceVector dual_block_face_vector(const Simplex& sigma, const SimplicialComplex& k) {
  const SimplicialComplex lk = link(sigma, k);
  DualBlockFaceVector out;
  out.counts.assign(lk.dim() + 2, BigInt(0));
  out.counts[0] = 1;
  // ending[rho][l]: chains of length l whose last link is rho.
  std::unordered_map<Simplex, std::vector<BigInt>, SimplexHash> ending;
  for (int h = 0; h <= lk.dim(); ++h) {
    for (const auto& rho : lk.faces(h)) {
      std::vector<BigInt> e(h + 2, BigInt(0));
      e[1] = 1;
      const std::uint64_t full = (std::uint64_t{1} << rho.size()) - 1;
      for (std::uint64_t m = 1; m < full; ++m) {
        const auto& below = ending.at(rho.subset(m));
        for (std::size_t l = 1; l < below.size(); ++l) e[l + 1] += below[l];
      }
      for (std::size_t l = 1; l < e.size(); ++l) out.counts[l] += e[l];
      ending.emplace(rho, std::move(e));
    }
  }
  return out;
}

inline IntPolynomial dual_block_polynomial(const Simplex& sigma, const SimplicialComplex& k) {
  return IntPolynomial(dual_block_face_vector(sigma, k).counts);
}

}  // namespace sdlab
