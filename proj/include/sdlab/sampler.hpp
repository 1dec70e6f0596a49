// Random compositions of the affine charts of Sd(Delta_n): finite-depth
// samples of the map Phi and Monte Carlo integration against dvol.
#pragma once

#include "sdlab/measures.hpp"
#include "sdlab/rational.hpp"
#include "sdlab/subdivision.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace sdlab {

/// Counter-based generator: draw(i, j) depends only on (seed, i, j), so
/// samples can be split across workers without changing any result.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t draw(std::uint64_t stream, std::uint64_t index) const {
    return mix(mix(seed_ + stream * kGolden) + (index + 1) * kGolden);
  }

  /// Integer in [0, bound) by multiply-shift.
  std::uint64_t uniform(std::uint64_t stream, std::uint64_t index, std::uint64_t bound) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(draw(stream, index)) * bound) >> 64);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  // SplitMix64 finalizer.
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t seed_;
};

/// The (n+1)! top simplices of Sd(Delta_n), each with its order-preserving
/// chart f_sigma: vertex i of Delta_n goes to the i-dimensional link of the
/// flag. Charts are indexed by the sorted facet list of Sd(Delta_n).
class ChartAtlas {
 public:
  explicit ChartAtlas(int n) : n_(n) {
    if (n < 0) throw Error("chart atlas needs n >= 0");
    SdComplex sd = barycentric_subdivision(standard_simplex(n));
    for (const auto& facet : sd.complex().facets()) {
      std::vector<std::uint64_t> masks;
      for (VertexId v : facet.vertices()) {
        std::uint64_t mask = 0;
        for (VertexId w : sd.simplex_of(v).vertices()) mask |= std::uint64_t{1} << w;
        masks.push_back(mask);
      }
      charts_.push_back(std::move(masks));
    }
    lcm_ = 1;
    for (int i = 2; i <= n + 1; ++i) lcm_ = std::lcm(lcm_, static_cast<std::int64_t>(i));
  }

  int dim() const { return n_; }
  std::size_t size() const { return charts_.size(); }

  /// f_sigma in barycentric coordinates, over a common denominator:
  /// returns numerators over `denominator * lcm(1..n+1)`.
  std::vector<BigInt> apply(std::size_t chart, const std::vector<BigInt>& numerators) const {
    std::vector<BigInt> out(n_ + 1, BigInt(0));
    const auto& masks = charts_.at(chart);
    for (int i = 0; i <= n_; ++i) {
      if (numerators[i] == 0) continue;
      const BigInt scaled = numerators[i] * (lcm_ / (i + 1));
      for (int j = 0; j <= n_; ++j)
        if (masks[i] >> j & 1U) out[j] += scaled;
    }
    return out;
  }

  std::int64_t lcm() const { return lcm_; }

 private:
  int n_;
  std::vector<std::vector<std::uint64_t>> charts_;  // per chart: vertex-set mask of each link
  std::int64_t lcm_;
};

using ChartWord = std::vector<std::uint32_t>;

/// f_{w_1} o ... o f_{w_d}(x0) in barycentric coordinates of Delta_n.
inline std::vector<Rational> apply_word(const ChartAtlas& atlas, const ChartWord& word,
                                        const std::vector<Rational>& x0) {
  const int n = atlas.dim();
  if (static_cast<int>(x0.size()) != n + 1) throw Error("x0 must have n+1 barycentric coordinates");
  BigInt den = 1;
  for (const auto& c : x0) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
  std::vector<BigInt> num;
  for (const auto& c : x0) num.push_back(boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c)));
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    num = atlas.apply(*it, num);
    den *= atlas.lcm();
  }
  std::vector<Rational> out;
  for (const auto& c : num) out.emplace_back(c, den);
  return out;
}

inline std::vector<Rational> centroid_coordinates(int n) {
  return std::vector<Rational>(n + 1, Rational(1, n + 1));
}

/// Uniform chart word of length d for sample `index`.
inline ChartWord sample_word(const ChartAtlas& atlas, int depth, const CounterRng& rng,
                             std::uint64_t index) {
  ChartWord w(depth);
  for (int i = 0; i < depth; ++i)
    w[i] = static_cast<std::uint32_t>(rng.uniform(index, static_cast<std::uint64_t>(i), atlas.size()));
  return w;
}

/// Phi_d(omega, x0) in the ambient coordinates of the standard embedding,
/// for the sample `index` of the seeded stream.
inline Point phi_sample(int n, int depth, std::uint64_t seed, const std::vector<Rational>& x0,
                        std::uint64_t index = 0) {
  if (depth < 1) throw Error("phi_sample needs depth >= 1");
  const ChartAtlas atlas(n);
  const CounterRng rng(seed);
  const auto bary = apply_word(atlas, sample_word(atlas, depth, rng, index), x0);
  return Point(bary.begin() + 1, bary.end());
}

struct MonteCarloEstimate {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  Rational exact_mean;  // exact average of the sampled values
  double mean = 0;
  double stderr_ = 0;
};

/// Averages phi(Phi_d(omega, barycenter)) over N independent chart words.
inline MonteCarloEstimate phi_mc_integral(int n, int depth, std::uint64_t samples,
                                          const PolynomialObservable& phi, std::uint64_t seed) {
  if (depth < 1) throw Error("phi_mc_integral needs depth >= 1");
  if (samples < 1) throw Error("phi_mc_integral needs at least one sample");
  if (phi.ambient_dim() != n) throw Error("observable ambient dimension must equal n");
  const ChartAtlas atlas(n);
  const CounterRng rng(seed);
  const auto x0 = centroid_coordinates(n);
  Rational sum = 0;
  double s1 = 0, s2 = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto bary = apply_word(atlas, sample_word(atlas, depth, rng, i), x0);
    const Rational v = phi(Point(bary.begin() + 1, bary.end()));
    sum += v;
    const double dv = to_double(v);
    s1 += dv;
    s2 += dv * dv;
  }
  MonteCarloEstimate est;
  est.seed = seed;
  est.samples = samples;
  est.exact_mean = sum / Rational(BigInt(samples));
  est.mean = to_double(est.exact_mean);
  const double nn = static_cast<double>(samples);
  double var = samples > 1 ? (s2 - s1 * s1 / nn) / (nn - 1) : 0.0;
  if (var < 0) var = 0;
  est.stderr_ = std::sqrt(var / nn);
  return est;
}

/// Exact mean of phi(Phi_d(w, x0)) over all (n+1)!^d chart words.
inline Rational exhaustive_chart_average(int n, int depth, const PolynomialObservable& phi,
                                         const std::vector<Rational>& x0,
                                         std::uint64_t cap = kDefaultCellCap) {
  const ChartAtlas atlas(n);
  std::uint64_t words = 1;
  for (int i = 0; i < depth; ++i) words = detail::saturating_mul(words, atlas.size());
  if (words > cap) throw CapExceeded("exhaustive enumeration of " + std::to_string(words) + " chart words exceeds the cap");
  Rational sum = 0;
  ChartWord w(depth, 0);
  for (std::uint64_t k = 0; k < words; ++k) {
    std::uint64_t r = k;
    for (int i = depth - 1; i >= 0; --i) {
      w[i] = static_cast<std::uint32_t>(r % atlas.size());
      r /= atlas.size();
    }
    const auto bary = apply_word(atlas, w, x0);
    sum += phi(Point(bary.begin() + 1, bary.end()));
  }
  return sum / Rational(BigInt(words));
}

}  // namespace sdlab
