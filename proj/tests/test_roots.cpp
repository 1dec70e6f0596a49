#include "sdlab/roots.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace sdlab;

namespace {

RationalPolynomial from_roots(const std::vector<Rational>& roots) {
  RationalPolynomial p = RationalPolynomial::constant(Rational(1));
  for (const auto& r : roots) p = p * RationalPolynomial({Rational(-r), Rational(1)});
  return p;
}

// Newton's method in doubles, an oracle independent of the Sturm machinery.
double newton(const RationalPolynomial& p, double x) {
  std::vector<double> c, dc;
  for (const auto& a : p.coeffs()) c.push_back(to_double(a));
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<double>(i));
  auto eval = [](const std::vector<double>& v, double t) {
    double acc = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) acc = acc * t + *it;
    return acc;
  };
  for (int i = 0; i < 100; ++i) x -= eval(c, x) / eval(dc, x);
  return x;
}

}  // namespace

TEST(Sturm, CountsDistinctRealRoots) {
  auto p = from_roots({Rational(1), Rational(2), Rational(-3)});
  EXPECT_EQ(count_real_roots(p), 3);
  auto seq = sturm_sequence(p);
  EXPECT_EQ(count_roots(seq, Rational(0), Rational(2)), 2);  // (0, 2] holds 1 and 2
  EXPECT_EQ(count_roots(seq, Rational(1), Rational(2)), 1);  // 1 excluded
  EXPECT_EQ(count_roots_closed(p, Rational(1), Rational(2)), 2);
  EXPECT_EQ(count_real_roots(RationalPolynomial({Rational(1), Rational(0), Rational(1)})), 0);
  // repeated roots are counted once
  EXPECT_EQ(count_real_roots(from_roots({Rational(1), Rational(1), Rational(-1, 3)})), 2);
}

TEST(Sturm, SquarefreeDecomposition) {
  auto p = from_roots({Rational(1), Rational(1), Rational(-2), Rational(-2), Rational(-2), Rational(5)});
  auto f = squarefree_decomposition(Rational(7) * p);
  ASSERT_EQ(f.size(), 3U);
  EXPECT_EQ(f[0], from_roots({Rational(5)}));
  EXPECT_EQ(f[1], from_roots({Rational(1)}));
  EXPECT_EQ(f[2], from_roots({Rational(-2)}));
  auto iso = isolate_roots(p);
  ASSERT_EQ(iso.distinct(), 3);
  EXPECT_EQ(iso.with_multiplicity(), 6);
  EXPECT_EQ(iso.intervals[0].multiplicity, 3);
  EXPECT_FALSE(iso.all_simple());
}

TEST(Isolation, RationalRootsAreExact) {
  std::vector<Rational> roots = {Rational(-1), Rational(-1, 2), Rational(-2, 7), Rational(0), Rational(5, 3)};
  auto iso = isolate_roots(Rational(3, 4) * from_roots(roots));
  ASSERT_EQ(iso.distinct(), 5);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    EXPECT_TRUE(iso.intervals[i].exact());
    EXPECT_EQ(iso.intervals[i].lo, roots[i]);
  }
}

TEST(Isolation, IrrationalRootsRefinedToWidth) {
  // x^3 - 2x - 1 = (x + 1)(x^2 - x - 1)
  RationalPolynomial p({Rational(-1), Rational(-2), Rational(0), Rational(1)});
  auto iso = isolate_roots(p);
  ASSERT_EQ(iso.distinct(), 3);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<double> expect = {-1.0, 1 - phi, phi};
  for (int i = 0; i < 3; ++i) {
    const auto& r = iso.intervals[i];
    EXPECT_LE(r.hi - r.lo, default_root_width());
    EXPECT_NEAR(r.approx(), expect[i], 1e-12);
    EXPECT_NEAR(r.approx(), newton(p, expect[i] + 0.1), 1e-12);
  }
  EXPECT_TRUE(iso.intervals[0].exact());
  EXPECT_FALSE(iso.intervals[2].exact());
}

TEST(Isolation, SimplestRational) {
  EXPECT_EQ(simplest_rational(Rational(1, 3), Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(simplest_rational(Rational(3, 10), Rational(4, 10)), Rational(1, 3));
  EXPECT_EQ(simplest_rational(Rational(-4, 10), Rational(-3, 10)), Rational(-1, 3));
  EXPECT_EQ(simplest_rational(Rational(-1), Rational(2)), Rational(0));
}

TEST(Isolation, ZeroPolynomialRejected) { EXPECT_THROW(isolate_roots(RationalPolynomial()), Error); }
