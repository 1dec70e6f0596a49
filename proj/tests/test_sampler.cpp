#include "sdlab/measures.hpp"
#include "sdlab/sampler.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace sdlab;

TEST(Rng, DeterministicAndSplittable) {
  CounterRng a(42), b(42), c(43);
  EXPECT_EQ(a.draw(3, 5), b.draw(3, 5));
  EXPECT_NE(a.draw(3, 5), c.draw(3, 5));
  EXPECT_NE(a.draw(3, 5), a.draw(5, 3));
  std::vector<int> hist(6, 0);
  for (std::uint64_t i = 0; i < 60000; ++i) ++hist[a.uniform(i, 0, 6)];
  for (int h : hist) EXPECT_NEAR(h, 10000, 400);
}

TEST(Charts, OnePerFlag) {
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(ChartAtlas(n).size(), factorial(n + 1).convert_to<std::size_t>());
}

TEST(Charts, VerticesGoToFlagBarycenters) {
  const int n = 2;
  ChartAtlas atlas(n);
  SdComplex sd = barycentric_subdivision(standard_simplex(n));
  auto e = embedded_standard_simplex(n);
  std::set<std::vector<Point>> images, facets;
  for (std::size_t c = 0; c < atlas.size(); ++c) {
    std::vector<Point> img;
    for (int i = 0; i <= n; ++i) {
      std::vector<Rational> vertex(n + 1, Rational(0));
      vertex[i] = 1;
      auto bary = apply_word(atlas, {static_cast<std::uint32_t>(c)}, vertex);
      img.emplace_back(bary.begin() + 1, bary.end());
    }
    // order-preserving: vertex i lands on the barycenter of an i-face
    images.insert(img);
  }
  // facet vertex ids follow the (dim, lex) table, so increasing face dimension
  for (const auto& f : sd.complex().facets()) {
    std::vector<Point> img;
    for (VertexId v : f.vertices()) img.push_back(barycenter(sd.simplex_of(v), e));
    facets.insert(img);
  }
  EXPECT_EQ(images.size(), 6U);
  EXPECT_EQ(images, facets);
}

TEST(PhiSample, Examples) {
  const auto mid = centroid_coordinates(1);
  std::map<Rational, int> hits;
  for (std::uint64_t i = 0; i < 4000; ++i) {
    Point p = phi_sample(1, 1, 7, mid, i);
    ASSERT_EQ(p.size(), 1U);
    ++hits[p[0]];
  }
  ASSERT_EQ(hits.size(), 2U);
  EXPECT_EQ(hits.begin()->first, Rational(1, 4));
  EXPECT_EQ(hits.rbegin()->first, Rational(3, 4));
  EXPECT_NEAR(hits.begin()->second, 2000, 200);

  auto est = phi_mc_integral(2, 5, 500, PolynomialObservable::constant(2, Rational(1)), 99);
  EXPECT_EQ(est.exact_mean, 1);
  EXPECT_EQ(est.stderr_, 0.0);
  EXPECT_EQ(est.seed, 99U);
}

TEST(PhiSample, ExhaustiveAverageEqualsGamma) {
  PolynomialObservable cubic(1, {{{3}, Rational(1)}, {{1}, Rational(-2)}});
  auto seg = embedded_standard_simplex(1);
  for (int d = 1; d <= 6; ++d)
    EXPECT_EQ(exhaustive_chart_average(1, d, cubic, centroid_coordinates(1)), integrate_gamma(seg, d, 1, cubic).value);
  auto tri = embedded_standard_simplex(2);
  PolynomialObservable phi(2, {{{2, 0}, Rational(1)}, {{1, 1}, Rational(-3)}, {{0, 1}, Rational(1, 2)}});
  for (int d = 1; d <= 3; ++d)
    EXPECT_EQ(exhaustive_chart_average(2, d, phi, centroid_coordinates(2)), integrate_gamma(tri, d, 2, phi).value);
}

TEST(PhiSample, MonteCarloMatchesVolume) {
  auto tri = embedded_standard_simplex(2);
  auto phi = PolynomialObservable::coordinate(2, 0);
  auto est = phi_mc_integral(2, 10, 100000, phi, 2718281828ULL);
  const double target = to_double(integrate_volume(tri, phi));
  EXPECT_GT(est.stderr_, 0);
  EXPECT_LT(std::abs(est.mean - target), 3 * est.stderr_);
}

TEST(PhiSample, SameSeedSameResult) {
  auto phi = PolynomialObservable::coordinate(2, 1, 2);
  auto a = phi_mc_integral(2, 6, 2000, phi, 5);
  auto b = phi_mc_integral(2, 6, 2000, phi, 5);
  auto c = phi_mc_integral(2, 6, 2000, phi, 6);
  EXPECT_EQ(a.exact_mean, b.exact_mean);
  EXPECT_NE(a.exact_mean, c.exact_mean);
}
