// The transfer matrix of barycentric subdivision and the limit coefficients
// q_{p,n} of the normalized face numbers.
#pragma once

#include "sdlab/complex.hpp"
#include "sdlab/polynomial.hpp"
#include "sdlab/rational.hpp"
#include "sdlab/roots.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sdlab {

/// Lower-triangular lambda_{i,j} = number of interior (j-1)-faces of
/// Sd(Delta_{i-1}), stored for 0 <= j <= i <= N with lambda_{0,0} = 1 and
/// lambda_{l,0} = 0 for l > 0.
class LambdaMatrix {
 public:
  LambdaMatrix() = default;
  explicit LambdaMatrix(int size) : n_(size), e_((size + 1) * (size + 1), BigInt(0)) {
    if (size < 0) throw Error("lambda matrix size must be non-negative");
  }

  int size() const { return n_; }
  /// Zero above the diagonal and outside the stored range.
  BigInt operator()(int i, int j) const {
    if (i < 0 || j < 0 || i > n_ || j > n_ || j > i) return 0;
    return e_[i * (n_ + 1) + j];
  }
  void set(int i, int j, BigInt v) { e_.at(i * (n_ + 1) + j) = std::move(v); }

  friend bool operator==(const LambdaMatrix&, const LambdaMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<BigInt> e_;
};

/// Interior faces are cones over boundary faces, each interior to some face
/// of the boundary: lambda_{i,j} = sum_{p=j-1}^{i-1} C(i,p) lambda_{p,j-1}.
inline LambdaMatrix lambda_recursive(int size) {
  if (size < 1) throw Error("lambda_recursive needs N >= 1");
  LambdaMatrix m(size);
  m.set(0, 0, 1);
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= i; ++j) {
      BigInt acc = 0;
      for (int p = j - 1; p <= i - 1; ++p) acc += binomial(i, p) * m(p, j - 1);
      m.set(i, j, acc);
    }
  }
  return m;
}

/// lambda_{i,j} = sum_{p=0}^{j} C(j,p) (-1)^{j-p} p^i, i.e. the number of
/// surjections from i points onto j points.
inline BigInt lambda_closed_entry(int i, int j) {
  BigInt acc = 0;
  for (int p = 0; p <= j; ++p) {
    BigInt term = binomial(j, p) * ipow(BigInt(p), static_cast<unsigned>(i));
    acc += ((j - p) % 2 ? -term : term);
  }
  return acc;
}

inline LambdaMatrix lambda_closed_form(int size) {
  if (size < 1) throw Error("lambda_closed_form needs N >= 1");
  LambdaMatrix m(size);
  for (int i = 0; i <= size; ++i)
    for (int j = 0; j <= i; ++j) m.set(i, j, lambda_closed_entry(i, j));
  return m;
}

/// Square BigInt matrix indexed from 1 (row/column 0 unused).
using IntMatrix = std::vector<std::vector<BigInt>>;

struct BinomialPowerMatrix {
  IntMatrix by_product;      // (I + C)^r by repeated multiplication
  IntMatrix by_closed_form;  // C(i,j) r^{i-j}
  bool agree = false;
};

/// (I + C)^r with c_{i,j} = C(i,j) for i > j >= 1, computed two ways.
inline BinomialPowerMatrix binomial_power_matrix(int r, int size) {
  if (r < 1) throw Error("binomial_power_matrix needs r >= 1");
  if (size < 1) throw Error("binomial_power_matrix needs N >= 1");
  const int n = size;
  IntMatrix base(n + 1, std::vector<BigInt>(n + 1, BigInt(0)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) base[i][j] = binomial(i, j);
  IntMatrix prod = base;
  for (int step = 1; step < r; ++step) {
    IntMatrix next(n + 1, std::vector<BigInt>(n + 1, BigInt(0)));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= i; ++j)
        for (int k = j; k <= i; ++k) next[i][j] += prod[i][k] * base[k][j];
    prod = std::move(next);
  }
  IntMatrix closed(n + 1, std::vector<BigInt>(n + 1, BigInt(0)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) closed[i][j] = binomial(i, j) * ipow(BigInt(r), i - j);
  BinomialPowerMatrix out{prod, closed, prod == closed};
  return out;
}

/// L_j(T) = T (T-1) ... (T-j+1) / j!, with L_0 = 1.
inline RationalPolynomial lagrange_polynomial(int j) {
  RationalPolynomial l = RationalPolynomial::constant(1);
  for (int i = 0; i < j; ++i) l = l * RationalPolynomial::linear(Rational(-i), Rational(1));
  return Rational(1, factorial(j)) * l;
}

struct LagrangeCheck {
  bool holds = true;
  std::optional<int> first_failure;
};

/// Checks T^j = sum_{i=1}^{j} lambda_{j,i} L_i(T) for 1 <= j <= jmax.
inline LagrangeCheck lagrange_identity_check(int jmax) {
  if (jmax < 1) throw Error("lagrange_identity_check needs jmax >= 1");
  const LambdaMatrix lam = lambda_recursive(jmax);
  for (int j = 1; j <= jmax; ++j) {
    RationalPolynomial sum;
    for (int i = 1; i <= j; ++i) sum = sum + Rational(lam(j, i)) * lagrange_polynomial(i);
    if (sum != RationalPolynomial::monomial(Rational(1), j)) return {false, j};
  }
  return {};
}

/// Limit coefficients q_{0,n} .. q_{n,n}.
struct QVector {
  int n = 0;
  std::vector<Rational> q;

  const Rational& operator[](std::size_t p) const { return q[p]; }
  friend bool operator==(const QVector&, const QVector&) = default;
};

/// Back-substitution on the triangular eigen-system of Lambda_n^t for the
/// eigenvalue (n+1)!, downward from q_{n,n} = 1.
inline QVector q_solve(int n) {
  if (n < 0) throw Error("q_solve needs n >= 0");
  const LambdaMatrix lam = lambda_recursive(n + 1);
  QVector out{n, std::vector<Rational>(n + 1, Rational(0))};
  out.q[n] = 1;
  const BigInt top = factorial(n + 1);
  for (int p = n - 1; p >= 0; --p) {
    Rational acc = 0;
    for (int k = 0; k <= n - p - 1; ++k) acc += Rational(lam(n + 1 - k, p + 1)) * out.q[n - k];
    out.q[p] = acc / Rational(top - factorial(p + 1));
  }
  return out;
}

/// Sum over strictly increasing sequences p+1 = p_1 < ... < p_j < n+1 of
/// lambda_{n+1,p_j} lambda_{p_j,p_{j-1}} ... lambda_{p_2,p_1} divided by
/// prod_i (lambda_{n+1,n+1} - lambda_{p_i,p_i}).
inline QVector q_partition(int n) {
  if (n < 0) throw Error("q_partition needs n >= 0");
  const LambdaMatrix lam = lambda_recursive(n + 1);
  const BigInt top = lam(n + 1, n + 1);
  QVector out{n, std::vector<Rational>(n + 1, Rational(0))};
  out.q[n] = 1;
  for (int p = 0; p < n; ++p) {
    Rational total = 0;
    // Depth-first over subsets of {p+2, ..., n} extending p_1 = p+1; `weight`
    // carries the product accumulated along the sequence so far.
    std::function<void(int, Rational)> extend = [&](int last, Rational weight) {
      total += weight * Rational(lam(n + 1, last));
      for (int next = last + 1; next <= n; ++next)
        extend(next, weight * Rational(lam(next, last)) / Rational(top - lam(next, next)));
    };
    extend(p + 1, Rational(1) / Rational(top - lam(p + 1, p + 1)));
    out.q[p] = total;
  }
  return out;
}

/// Lambda_n^t q - (n+1)! q, entry p = sum_i lambda_{i+1,p+1} q_i - (n+1)! q_p.
inline std::vector<Rational> eigen_residual(const QVector& q) {
  const int n = q.n;
  const LambdaMatrix lam = lambda_recursive(n + 1);
  const Rational top(factorial(n + 1));
  std::vector<Rational> r(n + 1, Rational(0));
  for (int p = 0; p <= n; ++p) {
    Rational acc = 0;
    for (int i = p; i <= n; ++i) acc += Rational(lam(i + 1, p + 1)) * q.q[i];
    r[p] = acc - top * q.q[p];
  }
  return r;
}

/// q_n^inf(T) = sum_p q_{p,n} T^p.
inline RationalPolynomial limit_polynomial(int n) { return RationalPolynomial(q_solve(n).q); }

/// f * Lambda_n^d where n + 1 = f.size().
inline FaceVector transfer(const FaceVector& f, int n, int depth) {
  if (static_cast<int>(f.size()) != n + 1)
    throw Error("face vector has length " + std::to_string(f.size()) + ", expected " +
                std::to_string(n + 1));
  if (depth < 0) throw Error("depth must be non-negative");
  const LambdaMatrix lam = lambda_recursive(n + 1);
  FaceVector cur = f;
  for (int d = 0; d < depth; ++d) {
    FaceVector next{std::vector<BigInt>(n + 1, BigInt(0))};
    for (int j = 0; j <= n; ++j)
      for (int i = j; i <= n; ++i) next.counts[j] += cur.counts[i] * lam(i + 1, j + 1);
    cur = std::move(next);
  }
  return cur;
}

/// Root structure of T q_n^inf(T).
struct LimitRootReport {
  int n = 0;
  RootIsolation roots;
  int roots_in_unit_interval = 0;  // distinct roots in [-1, 0], by Sturm count
  bool simple = false;             // gcd(P, P') = 1
  bool all_real = false;           // distinct real roots == degree
  bool contained = false;          // every root in [-1, 0]
  bool symmetric = false;          // r_i + r_{n-i} = -1 within tolerance
  Rational max_symmetry_defect = 0;
  bool vanishes_at_minus_half = false;
};

inline LimitRootReport analyze_limit_roots(int n, const Rational& width = default_root_width()) {
  if (n < 1) throw Error("limit root analysis needs n >= 1");
  LimitRootReport rep;
  rep.n = n;
  const RationalPolynomial q = limit_polynomial(n);
  const RationalPolynomial tq = q.shift(1);
  rep.roots = isolate_roots(tq, width);
  rep.simple = gcd(tq, tq.derivative()).degree() == 0;
  rep.all_real = rep.roots.with_multiplicity() == tq.degree() && rep.roots.all_simple();
  rep.roots_in_unit_interval = count_roots_closed(tq, Rational(-1), Rational(0));
  rep.contained = rep.roots_in_unit_interval == rep.roots.distinct();
  const auto& r = rep.roots.intervals;
  rep.symmetric = static_cast<int>(r.size()) == n + 1;
  if (rep.symmetric) {
    for (int i = 0; i <= n; ++i) {
      Rational defect = abs(r[i].midpoint() + r[n - i].midpoint() + 1);
      rep.max_symmetry_defect = std::max(rep.max_symmetry_defect, defect);
    }
    rep.symmetric = rep.max_symmetry_defect <= 2 * width;
  }
  rep.vanishes_at_minus_half = q.evaluate(Rational(-1, 2)) == 0;
  return rep;
}

}  // namespace sdlab
