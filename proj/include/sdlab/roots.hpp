// Exact real-root counting and isolation by Sturm sequences.
#pragma once

#include "sdlab/polynomial.hpp"
#include "sdlab/rational.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace sdlab {

/// Signed remainder sequence P, P', -rem(P, P'), ..., each member scaled to a
/// primitive integer polynomial with the same sign.
inline std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(primitive_part(p));
  RationalPolynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(primitive_part(d));
  while (true) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(primitive_part(-r));
  }
  return seq;
}

namespace detail {

inline int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace detail

/// Sign changes of the sequence evaluated at x, zeros dropped.
inline int sign_variations(const std::vector<RationalPolynomial>& seq, const Rational& x) {
  std::vector<int> s;
  for (const auto& q : seq) s.push_back(detail::sign(q.evaluate(x)));
  return detail::variations(s);
}

/// Sign changes at +infinity (`positive`) or -infinity.
inline int sign_variations_at_infinity(const std::vector<RationalPolynomial>& seq, bool positive) {
  std::vector<int> s;
  for (const auto& q : seq) {
    int sg = detail::sign(q.leading());
    if (!positive && q.degree() % 2) sg = -sg;
    s.push_back(sg);
  }
  return detail::variations(s);
}

/// Number of distinct real roots in (lo, hi].
inline int count_roots(const std::vector<RationalPolynomial>& seq, const Rational& lo,
                       const Rational& hi) {
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

/// Number of distinct real roots in [lo, hi].
inline int count_roots_closed(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
  auto seq = sturm_sequence(p);
  return count_roots(seq, lo, hi) + (p.evaluate(lo) == 0 ? 1 : 0);
}

inline int count_real_roots(const std::vector<RationalPolynomial>& seq) {
  if (seq.empty()) return 0;
  return sign_variations_at_infinity(seq, false) - sign_variations_at_infinity(seq, true);
}

inline int count_real_roots(const RationalPolynomial& p) { return count_real_roots(sturm_sequence(p)); }

/// Factors a_1, a_2, ... with p = c * prod a_i^i, each a_i square-free and
/// monic (Yun's algorithm). Entry i-1 holds a_i.
inline std::vector<RationalPolynomial> squarefree_decomposition(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> out;
  if (p.degree() < 1) return out;
  const RationalPolynomial dp = p.derivative();
  const RationalPolynomial a0 = gcd(p, dp);
  RationalPolynomial b = divmod(p, a0).first;
  RationalPolynomial c = divmod(dp, a0).first;
  RationalPolynomial d = c - b.derivative();
  while (b.degree() > 0) {
    RationalPolynomial a = gcd(b, d);
    out.push_back(a);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

/// An interval (lo, hi] holding exactly one real root; lo == hi for a root
/// located exactly at a rational point.
struct RootInterval {
  Rational lo, hi;
  int multiplicity = 1;

  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  double approx() const { return to_double(midpoint()); }
};

struct RootIsolation {
  std::vector<RootInterval> intervals;  // sorted, pairwise disjoint
  int sturm_total = 0;                  // distinct real roots by Sturm count

  int distinct() const { return static_cast<int>(intervals.size()); }
  int with_multiplicity() const {
    int m = 0;
    for (const auto& r : intervals) m += r.multiplicity;
    return m;
  }
  bool all_simple() const {
    return std::all_of(intervals.begin(), intervals.end(),
                       [](const RootInterval& r) { return r.multiplicity == 1; });
  }
};

/// 1 + max |a_i / a_n|; every real root lies strictly inside (-B, B).
inline Rational cauchy_bound(const RationalPolynomial& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p[i] / p.leading()));
  return m + 1;
}

inline Rational default_root_width() { return Rational(BigInt(1), ipow(BigInt(10), 12)); }

/// The rational with the smallest denominator in [lo, hi], lo <= hi.
inline Rational simplest_rational(const Rational& lo, const Rational& hi) {
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_rational(-hi, -lo);
  const BigInt fl = boost::multiprecision::numerator(lo) / boost::multiprecision::denominator(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  return Rational(fl) + Rational(1) / simplest_rational(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
}

/// Isolates the distinct real roots of a square-free polynomial and refines
/// each to width <= `width` by bisection. A rational root a/b has b dividing
/// the leading coefficient L of the primitive integer form, so once an
/// interval is narrower than 1/L^2 it holds at most one such fraction, the
/// simplest one; rational roots are therefore always reported exactly.
inline std::vector<RootInterval> isolate_squarefree(const RationalPolynomial& p, const Rational& width,
                                                    int max_steps = 400) {
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  const auto seq = sturm_sequence(p);
  const Rational bound = cauchy_bound(p);
  const BigInt lead = boost::multiprecision::numerator(seq.front().leading());
  const Rational separation(BigInt(1), lead * lead);
  struct Job {
    Rational lo, hi;
    int count;
    int steps;
  };
  std::vector<Job> stack{{-bound, bound, count_roots(seq, -bound, bound), 0}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    if (j.count == 0) continue;
    if (j.steps > max_steps)
      throw Error("root refinement budget of " + std::to_string(max_steps) + " bisections exceeded");
    if (j.count == 1) {
      if (p.evaluate(j.hi) == 0) {
        out.push_back({j.hi, j.hi, 1});
        continue;
      }
      if (j.hi - j.lo <= width && j.hi - j.lo < separation) {
        const Rational r = simplest_rational(j.lo, j.hi);
        if (r != j.lo && p.evaluate(r) == 0)
          out.push_back({r, r, 1});
        else
          out.push_back({j.lo, j.hi, 1});
        continue;
      }
    }
    const Rational mid = (j.lo + j.hi) / 2;
    const int left = count_roots(seq, j.lo, mid);
    stack.push_back({mid, j.hi, j.count - left, j.steps + 1});
    stack.push_back({j.lo, mid, left, j.steps + 1});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.hi < b.hi; });
  return out;
}

/// All real roots with multiplicities, each refined to width <= `width`.
inline RootIsolation isolate_roots(const RationalPolynomial& p,
                                   const Rational& width = default_root_width(),
                                   int max_steps = 400) {
  if (p.is_zero()) throw Error("cannot isolate the roots of the zero polynomial");
  RootIsolation iso;
  auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (auto r : isolate_squarefree(factors[i], width, max_steps)) {
      r.multiplicity = static_cast<int>(i) + 1;
      iso.intervals.push_back(r);
    }
  }
  std::sort(iso.intervals.begin(), iso.intervals.end(),
            [](const auto& a, const auto& b) { return a.hi < b.hi; });
  iso.sturm_total = count_real_roots(p);
  if (iso.sturm_total != iso.distinct())
    throw Error("root isolation found " + std::to_string(iso.distinct()) +
                " roots but the Sturm count is " + std::to_string(iso.sturm_total));
  return iso;
}

}  // namespace sdlab
