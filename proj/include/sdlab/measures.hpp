// The canonical volume dvol_K, the rescaled barycenter measures
// gamma^d_{p,K}, exact integration of polynomial observables, and the
// convergence harnesses comparing them with their limits.
#pragma once

#include "sdlab/complex.hpp"
#include "sdlab/rational.hpp"
#include "sdlab/spectral.hpp"
#include "sdlab/subdivision.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sdlab {

/// A polynomial in the ambient coordinates x_1..x_m with rational coefficients.
class PolynomialObservable {
 public:
  struct Term {
    std::vector<int> exponents;
    Rational coef;
  };

  PolynomialObservable() = default;
  PolynomialObservable(int ambient, std::vector<Term> terms) : m_(ambient), terms_(std::move(terms)) {
    if (m_ < 0) throw Error("observable ambient dimension must be non-negative");
    for (const auto& t : terms_) {
      if (static_cast<int>(t.exponents.size()) != m_)
        throw Error("observable term has " + std::to_string(t.exponents.size()) +
                    " exponents, expected " + std::to_string(m_));
      for (int e : t.exponents)
        if (e < 0) throw Error("observable exponents must be non-negative");
    }
  }

  static PolynomialObservable constant(int ambient, const Rational& c) {
    return {ambient, {{std::vector<int>(ambient, 0), c}}};
  }
  /// x_{index+1}^power.
  static PolynomialObservable coordinate(int ambient, int index, int power = 1) {
    std::vector<int> e(ambient, 0);
    e.at(index) = power;
    return {ambient, {{e, Rational(1)}}};
  }
  PolynomialObservable operator+(const PolynomialObservable& o) const {
    if (o.m_ != m_) throw Error("observable ambient dimensions differ");
    auto t = terms_;
    t.insert(t.end(), o.terms_.begin(), o.terms_.end());
    return {m_, std::move(t)};
  }

  int ambient_dim() const { return m_; }
  const std::vector<Term>& terms() const { return terms_; }
  int degree() const {
    int d = 0;
    for (const auto& t : terms_) {
      int s = 0;
      for (int e : t.exponents) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  Rational operator()(const Point& x) const {
    if (static_cast<int>(x.size()) != m_)
      throw Error("point has dimension " + std::to_string(x.size()) + ", observable expects " +
                  std::to_string(m_));
    Rational acc = 0;
    for (const auto& t : terms_) {
      Rational v = t.coef;
      for (int j = 0; j < m_; ++j) v *= rpow(x[j], t.exponents[j]);
      acc += v;
    }
    return acc;
  }

 private:
  int m_ = 0;
  std::vector<Term> terms_;
};

namespace detail {

/// Polynomial in barycentric coordinates lambda_0..lambda_n.
using BaryPoly = std::map<std::vector<int>, Rational>;

inline BaryPoly multiply(const BaryPoly& a, const BaryPoly& b) {
  BaryPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return out;
}

/// Integral of prod lambda_i^{a_i} over a simplex of unit mass:
/// n! prod a_i! / (n + sum a_i)!.
inline Rational dirichlet_moment(const std::vector<int>& a) {
  const unsigned n = static_cast<unsigned>(a.size()) - 1;
  unsigned total = 0;
  BigInt num = factorial(n);
  for (int e : a) {
    num *= factorial(e);
    total += e;
  }
  return Rational(num, factorial(n + total));
}

}  // namespace detail

/// Integral of phi against the pushforward of unit-mass Lebesgue measure on
/// one embedded n-simplex: phi is rewritten in barycentric coordinates and
/// integrated monomial by monomial.
inline Rational integrate_simplex(const std::vector<Point>& vertices, const PolynomialObservable& phi) {
  const int n = static_cast<int>(vertices.size()) - 1;
  const int m = phi.ambient_dim();
  // x_j as a linear form in the barycentric coordinates, with cached powers.
  std::vector<std::vector<detail::BaryPoly>> powers(m);
  auto power = [&](int j, int e) -> const detail::BaryPoly& {
    auto& cache = powers[j];
    if (cache.empty()) {
      detail::BaryPoly one;
      one[std::vector<int>(n + 1, 0)] = 1;
      cache.push_back(std::move(one));
    }
    while (static_cast<int>(cache.size()) <= e) {
      detail::BaryPoly linear;
      for (int i = 0; i <= n; ++i) {
        if (vertices[i][j] == 0) continue;
        std::vector<int> ex(n + 1, 0);
        ex[i] = 1;
        linear[ex] = vertices[i][j];
      }
      cache.push_back(detail::multiply(cache.back(), linear));
    }
    return cache[e];
  };
  Rational total = 0;
  for (const auto& t : phi.terms()) {
    detail::BaryPoly prod;
    prod[std::vector<int>(n + 1, 0)] = t.coef;
    for (int j = 0; j < m; ++j)
      if (t.exponents[j] > 0) prod = detail::multiply(prod, power(j, t.exponents[j]));
    for (const auto& [e, c] : prod) total += c * detail::dirichlet_moment(e);
  }
  return total;
}

/// Integral of phi against dvol_K (every top simplex has mass 1). Simplices
/// of lower dimension carry no volume.
inline Rational integrate_volume(const EmbeddedComplex& e, const PolynomialObservable& phi) {
  if (phi.ambient_dim() != e.ambient_dim())
    throw Error("observable ambient dimension " + std::to_string(phi.ambient_dim()) +
                " does not match the embedding (" + std::to_string(e.ambient_dim()) + ")");
  const int n = e.complex().dim();
  Rational total = 0;
  for (const auto& f : e.complex().faces(n)) {
    std::vector<Point> verts;
    for (VertexId v : f.vertices()) verts.push_back(e.coords(v));
    total += integrate_simplex(verts, phi);
  }
  return total;
}

// ---- atomic measures ---------------------------------------------------------

struct Atom {
  Point point;
  Rational weight;
};

struct AtomicMeasure {
  std::vector<Atom> atoms;
  Rational total_mass = 0;

  void add(Point x, Rational w) {
    total_mass += w;
    atoms.push_back({std::move(x), std::move(w)});
  }
};

inline Rational integrate_atomic(const AtomicMeasure& mu, const PolynomialObservable& phi) {
  Rational acc = 0;
  for (const auto& a : mu.atoms) acc += a.weight * phi(a.point);
  return acc;
}

/// (n+1)!^d.
inline BigInt gamma_scale(int n, int depth) {
  return ipow(factorial(static_cast<unsigned>(n + 1)), static_cast<unsigned>(depth));
}

/// Ambient barycenter of a streamed simplex.
inline Point ambient_barycenter(const EmbeddedComplex& e, const StreamedSimplex& s) {
  return e.to_ambient(s.barycenter_numerators(), BigInt(s.denominator) * (s.dim() + 1));
}

/// Calls visit(point, simplex) for every atom of gamma^d_{p,K}; all atoms
/// carry weight 1/(n+1)!^d.
template <typename Visit>
void for_each_gamma_atom(const EmbeddedComplex& e, int depth, int p, Visit&& visit,
                         std::uint64_t cap = kDefaultCellCap) {
  const int n = e.complex().dim();
  if (p < 0 || p > n) throw Error("p must lie in 0.." + std::to_string(n));
  stream_faces(e.complex(), depth, p,
               [&](const StreamedSimplex& s) { visit(ambient_barycenter(e, s), s); }, cap);
}

/// gamma^d_{p,K} materialized; use for_each_gamma_atom at scale.
inline AtomicMeasure gamma_measure(const EmbeddedComplex& e, int depth, int p,
                                   std::uint64_t cap = kDefaultCellCap) {
  const Rational w(BigInt(1), gamma_scale(e.complex().dim(), depth));
  AtomicMeasure mu;
  for_each_gamma_atom(e, depth, p, [&](Point x, const StreamedSimplex&) { mu.add(std::move(x), w); },
                      cap);
  return mu;
}

/// Integral of phi against gamma^d_{p,K}, split by whether an atom lies on
/// the (n-1)-skeleton of K.
struct GammaIntegral {
  Rational value = 0;
  Rational mass = 0;
  Rational skeleton_value = 0;
  Rational skeleton_mass = 0;
};

inline GammaIntegral integrate_gamma(const EmbeddedComplex& e, int depth, int p,
                                     const PolynomialObservable& phi,
                                     std::uint64_t cap = kDefaultCellCap) {
  const int n = e.complex().dim();
  GammaIntegral out;
  std::uint64_t count = 0, skeleton_count = 0;
  for_each_gamma_atom(
      e, depth, p,
      [&](const Point& x, const StreamedSimplex& s) {
        Rational v = phi(x);
        out.value += v;
        ++count;
        if (s.carrier->dim() < n) {
          out.skeleton_value += v;
          ++skeleton_count;
        }
      },
      cap);
  const Rational w(BigInt(1), gamma_scale(n, depth));
  out.value *= w;
  out.skeleton_value *= w;
  out.mass = Rational(BigInt(count)) * w;
  out.skeleton_mass = Rational(BigInt(skeleton_count)) * w;
  return out;
}

/// Entry k - p holds (1/(n+1)!^d) sum phi(sigma^) over pairs sigma <= tau of
/// simplices of Sd^d(K) with dim sigma = p and dim tau = k. Every link and
/// dual-block density is a linear combination of these sums: sigma has
/// f_l(Lk sigma) cofaces of dimension p+l+1, and lambda_{h,l} chains of
/// length l ending at each coface of dimension p+h.
inline std::vector<Rational> incidence_sums(const EmbeddedComplex& e, int depth, int p,
                                            const PolynomialObservable& phi,
                                            std::uint64_t cap = kDefaultCellCap) {
  const int n = e.complex().dim();
  if (p < 0 || p > n) throw Error("p must lie in 0.." + std::to_string(n));
  std::vector<Rational> sums(n - p + 1, Rational(0));
  stream_faces(
      e.complex(), depth, p, n,
      [&](const StreamedSimplex& tau) {
        const int k = tau.dim();
        const BigInt den = BigInt(tau.denominator) * (p + 1);
        const std::uint64_t full = (std::uint64_t{1} << (k + 1)) - 1;
        Rational acc = 0;
        for (std::uint64_t mask = 1; mask <= full; ++mask) {
          if (std::popcount(mask) != p + 1) continue;
          std::map<VertexId, std::int64_t> num;
          for (int i = 0; i <= k; ++i)
            if (mask >> i & 1U)
              for (const auto& [id, c] : tau.vertices[i].terms) num[id] += c;
          BaryPoint b;
          b.terms.assign(num.begin(), num.end());
          acc += phi(e.to_ambient(b, den));
        }
        sums[k - p] += acc;
      },
      cap);
  const Rational w(BigInt(1), gamma_scale(n, depth));
  for (auto& s : sums) s *= w;
  return sums;
}

// ---- densities and their limits ---------------------------------------------

/// Coefficient l (0 <= l <= n-p-1) of the link density
/// (1/(n+1)!^d) sum_sigma phi(sigma^) f_l(Lk(sigma, Sd^d K)).
inline std::vector<Rational> link_density(const EmbeddedComplex& e, int p, int depth,
                                          const PolynomialObservable& phi,
                                          std::uint64_t cap = kDefaultCellCap) {
  const int n = e.complex().dim();
  if (p < 0 || p >= n) throw Error("link density needs 0 <= p < n");
  auto sums = incidence_sums(e, depth, p, phi, cap);
  return std::vector<Rational>(sums.begin() + 1, sums.end());
}

/// Limit of link density coefficient l: q_{p+l+1,n} f_p(Delta_{p+l+1}) * volume.
inline std::vector<Rational> link_targets(int n, int p, const Rational& volume_integral) {
  const QVector q = q_solve(n);
  std::vector<Rational> t;
  for (int l = 0; l <= n - p - 1; ++l)
    t.push_back(q[p + l + 1] * Rational(binomial(p + l + 2, p + 1)) * volume_integral);
  return t;
}

/// Coefficient l (0 <= l <= n-p) of (1/(n+1)!^d) sum_sigma phi(sigma^) f_l(D(sigma)).
inline std::vector<Rational> block_density(const EmbeddedComplex& e, int p, int depth,
                                           const PolynomialObservable& phi,
                                           std::uint64_t cap = kDefaultCellCap) {
  const int n = e.complex().dim();
  if (p < 0 || p > n) throw Error("p must lie in 0.." + std::to_string(n));
  const auto sums = incidence_sums(e, depth, p, phi, cap);
  const LambdaMatrix lam = lambda_recursive(std::max(n - p, 1));
  std::vector<Rational> out(n - p + 1, Rational(0));
  for (int l = 0; l <= n - p; ++l)
    for (int h = l; h <= n - p; ++h) out[l] += Rational(lam(h, l)) * sums[h];
  return out;
}

/// Limit of block density coefficient l:
/// sum_{h=l}^{n-p} q_{p+h,n} f_p(Delta_{p+h}) lambda_{h,l} * volume.
inline std::vector<Rational> block_targets(int n, int p, const Rational& volume_integral) {
  const QVector q = q_solve(n);
  const LambdaMatrix lam = lambda_recursive(std::max(n - p, 1));
  std::vector<Rational> t;
  for (int l = 0; l <= n - p; ++l) {
    Rational acc = 0;
    for (int h = l; h <= n - p; ++h)
      acc += q[p + h] * Rational(binomial(p + h + 1, p + 1)) * Rational(lam(h, l));
    t.push_back(acc * volume_integral);
  }
  return t;
}

/// Mass of f_{n-p-1}(Lk sigma) d gamma^d_{p,K} paired with phi; for p = n the
/// weight is f_{-1} = 1.
inline Rational top_link_density(const EmbeddedComplex& e, int p, int depth,
                                 const PolynomialObservable& phi,
                                 std::uint64_t cap = kDefaultCellCap) {
  const int n = e.complex().dim();
  if (p == n) return integrate_gamma(e, depth, p, phi, cap).value;
  return link_density(e, p, depth, phi, cap).back();
}

// ---- convergence reports -----------------------------------------------------

struct ConvergenceRow {
  int depth = 0;
  Rational value;
  Rational error;                 // |value - target|
  std::optional<Rational> ratio;  // error(d) / error(d-1) when defined
};

struct ConvergenceReport {
  std::string quantity;
  std::string limit;  // what the target is the limit of
  Rational target;
  std::vector<ConvergenceRow> rows;

  /// Strictly decreasing error over the last `window` rows.
  bool strictly_decreasing_tail(std::size_t window) const {
    if (rows.size() < window) return false;
    for (std::size_t i = rows.size() - window + 1; i < rows.size(); ++i)
      if (!(rows[i].error < rows[i - 1].error)) return false;
    return true;
  }
  bool exact_everywhere() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.error == 0; });
  }
  const ConvergenceRow& at_depth(int d) const {
    for (const auto& r : rows)
      if (r.depth == d) return r;
    throw Error("no row for depth " + std::to_string(d));
  }
};

namespace detail {

inline void push_row(ConvergenceReport& rep, int depth, Rational value) {
  ConvergenceRow row{depth, value, abs(value - rep.target), std::nullopt};
  if (!rep.rows.empty() && rep.rows.back().error != 0) row.ratio = row.error / rep.rows.back().error;
  rep.rows.push_back(std::move(row));
}

}  // namespace detail

/// |int phi d gamma^d_{p,K} - q_{p,n} int phi dvol_K| for d in [dmin, dmax].
inline ConvergenceReport converge_gamma(const EmbeddedComplex& e, int p, int dmin, int dmax,
                                        const PolynomialObservable& phi,
                                        std::uint64_t cap = kDefaultCellCap) {
  const int n = e.complex().dim();
  if (p < 0 || p > n) throw Error("p must lie in 0.." + std::to_string(n));
  ConvergenceReport rep{"gamma", "weak limit q_{p,n} dvol_K of gamma^d_{p,K}"};
  rep.target = q_solve(n)[p] * integrate_volume(e, phi);
  for (int d = dmin; d <= dmax; ++d) detail::push_row(rep, d, integrate_gamma(e, d, p, phi, cap).value);
  return rep;
}

/// One report per link coefficient l = 0..n-p-1.
inline std::vector<ConvergenceReport> converge_links(const EmbeddedComplex& e, int p, int dmin, int dmax,
                                                     const PolynomialObservable& phi,
                                                     std::uint64_t cap = kDefaultCellCap) {
  const int n = e.complex().dim();
  const auto targets = link_targets(n, p, integrate_volume(e, phi));
  std::vector<ConvergenceReport> reps;
  for (int l = 0; l <= n - p - 1; ++l)
    reps.push_back({"links[l=" + std::to_string(l) + "]",
                    "weak limit q_{p+l+1,n} f_p(Delta_{p+l+1}) dvol_K of the link density",
                    targets[l]});
  for (int d = dmin; d <= dmax; ++d) {
    auto v = link_density(e, p, d, phi, cap);
    for (int l = 0; l <= n - p - 1; ++l) detail::push_row(reps[l], d, v[l]);
  }
  return reps;
}

/// One report per dual-block coefficient l = 0..n-p.
inline std::vector<ConvergenceReport> converge_blocks(const EmbeddedComplex& e, int p, int dmin, int dmax,
                                                      const PolynomialObservable& phi,
                                                      std::uint64_t cap = kDefaultCellCap) {
  const int n = e.complex().dim();
  const auto targets = block_targets(n, p, integrate_volume(e, phi));
  std::vector<ConvergenceReport> reps;
  for (int l = 0; l <= n - p; ++l)
    reps.push_back({"blocks[l=" + std::to_string(l) + "]",
                    "weak limit sum_h q_{p+h,n} f_p(Delta_{p+h}) lambda_{h,l} dvol_K of the "
                    "dual-block density",
                    targets[l]});
  for (int d = dmin; d <= dmax; ++d) {
    auto v = block_density(e, p, d, phi, cap);
    for (int l = 0; l <= n - p; ++l) detail::push_row(reps[l], d, v[l]);
  }
  return reps;
}

/// f_{n-p-1}(Lk sigma) d gamma^d_{p,K} against f_p(Delta_n) dvol_K.
inline ConvergenceReport converge_top_links(const EmbeddedComplex& e, int p, int dmin, int dmax,
                                            const PolynomialObservable& phi,
                                            std::uint64_t cap = kDefaultCellCap) {
  const int n = e.complex().dim();
  if (p < 0 || p > n) throw Error("p must lie in 0.." + std::to_string(n));
  ConvergenceReport rep{"fp-delta", "weak limit f_p(Delta_n) dvol_K of f_{n-p-1}(Lk) gamma^d_{p,K}"};
  rep.target = Rational(binomial(n + 1, p + 1)) * integrate_volume(e, phi);
  for (int d = dmin; d <= dmax; ++d) detail::push_row(rep, d, top_link_density(e, p, d, phi, cap));
  return rep;
}

/// Total mass of f_{n-p-1}(Lk sigma) d gamma^d_{p,Delta_n} against f_p(Delta_n).
inline ConvergenceReport fp_delta_identity(int n, int p, int dmin, int dmax,
                                           std::uint64_t cap = kDefaultCellCap) {
  auto e = embedded_standard_simplex(n);
  return converge_top_links(e, p, dmin, dmax, PolynomialObservable::constant(n, Rational(1)), cap);
}

}  // namespace sdlab
