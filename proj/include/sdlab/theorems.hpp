// Exact verifiers for the face-polynomial identities of triangulated closed
// manifolds and for the limit coefficients q_{p,n}.
//
// Manifoldness is not certified: each verifier that assumes it only checks
// the closed pseudo-manifold condition and records a warning when it fails,
// then reports the residual regardless.
#pragma once

#include "sdlab/complex.hpp"
#include "sdlab/polynomial.hpp"
#include "sdlab/rational.hpp"
#include "sdlab/roots.hpp"
#include "sdlab/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sdlab {

struct VerifierReport {
  std::string claim;
  bool applicable = true;
  bool holds = false;
  /// Exact residual; the zero polynomial when the claim holds. Scalar claims
  /// use a constant polynomial.
  RationalPolynomial residual;
  std::optional<std::string> witness;
  std::vector<std::string> warnings;
  /// For the root-structure claims: the polynomial examined and its real roots.
  std::optional<RationalPolynomial> polynomial;
  std::optional<RootIsolation> roots;
};

/// R_K(T) = T q_K(T) - chi(K) T.
inline IntPolynomial r_polynomial(const SimplicialComplex& k) {
  const FaceVector f = face_vector(k);
  return face_polynomial(f).shift(1) - IntPolynomial::monomial(euler_characteristic(f), 1);
}

namespace detail {

inline void manifold_warning(const SimplicialComplex& k, VerifierReport& rep) {
  auto pm = check_closed_pseudomanifold(k);
  if (!pm.closed)
    rep.warnings.push_back("not a closed pseudo-manifold (" + pm.diagnostic +
                           "); the identity assumes a closed homology manifold");
}

inline std::optional<std::string> first_nonzero(const RationalPolynomial& r, const std::string& label) {
  for (std::size_t i = 0; i < r.coeffs().size(); ++i)
    if (r.coeffs()[i] != 0) return label + "=" + std::to_string(i) + ": " + to_string(r.coeffs()[i]);
  return std::nullopt;
}

}  // namespace detail

/// Residual R_K(-1-T) - (-1)^{n+1} R_K(T).
inline VerifierReport macdonald_symmetry(const SimplicialComplex& k) {
  VerifierReport rep{"macdonald"};
  detail::manifold_warning(k, rep);
  const RationalPolynomial r = to_rational(r_polynomial(k));
  const int n = k.dim();
  const Rational sign = (n + 1) % 2 ? -1 : 1;
  rep.residual = r.compose_affine(Rational(-1), Rational(-1)) - sign * r;
  rep.holds = rep.residual.is_zero();
  if (!rep.holds) rep.witness = detail::first_nonzero(rep.residual, "coefficient of T^k, k");
  return rep;
}

/// For even n: q_K(-1/2) - chi(K).
inline VerifierReport chi_at_minus_half(const SimplicialComplex& k) {
  VerifierReport rep{"chi-half"};
  if (k.dim() % 2 != 0) {
    rep.applicable = false;
    rep.warnings.push_back("dimension " + std::to_string(k.dim()) +
                           " is odd; the identity is stated for even dimension");
    return rep;
  }
  detail::manifold_warning(k, rep);
  const FaceVector f = face_vector(k);
  const Rational value = to_rational(face_polynomial(f)).evaluate(Rational(-1, 2));
  rep.residual = RationalPolynomial::constant(value - Rational(euler_characteristic(f)));
  rep.holds = rep.residual.is_zero();
  if (!rep.holds) rep.witness = "q_K(-1/2) = " + to_string(value);
  return rep;
}

/// Entry p of the residual: f_p - sum_{i=p}^{n} (-1)^{i+n} C(i+1,p+1) f_i.
inline VerifierReport dehn_sommerville(const SimplicialComplex& k) {
  VerifierReport rep{"ds"};
  detail::manifold_warning(k, rep);
  const FaceVector f = face_vector(k);
  const int n = k.dim();
  std::vector<Rational> res(n + 1, Rational(0));
  for (int p = 0; p <= n; ++p) {
    BigInt acc = 0;
    for (int i = p; i <= n; ++i) {
      BigInt term = binomial(i + 1, p + 1) * f[i];
      acc += ((i + n) % 2 ? -term : term);
    }
    res[p] = Rational(f[p] - acc);
  }
  rep.residual = RationalPolynomial(std::move(res));
  rep.holds = rep.residual.is_zero();
  if (!rep.holds) rep.witness = detail::first_nonzero(rep.residual, "p");
  return rep;
}

/// Entry p: sum_{l=p}^{n} q_{l,n} C(l+1,p+1) (-1)^{n+l} - q_{p,n}.
inline VerifierReport asymptotic_dehn_sommerville(int n) {
  VerifierReport rep{"asymptotic-ds"};
  const QVector q = q_solve(n);
  std::vector<Rational> res(n + 1, Rational(0));
  for (int p = 0; p <= n; ++p) {
    Rational acc = 0;
    for (int l = p; l <= n; ++l) {
      Rational term = q[l] * Rational(binomial(l + 1, p + 1));
      acc += ((n + l) % 2 ? Rational(-term) : term);
    }
    res[p] = acc - q[p];
  }
  rep.residual = RationalPolynomial(std::move(res));
  rep.holds = rep.residual.is_zero();
  if (!rep.holds) rep.witness = detail::first_nonzero(rep.residual, "p");
  return rep;
}

/// q_{S^n}(T) = ((1+T)^{n+2} - 1 - T^{n+2}) / T, i.e. f_p = C(n+2, p+1).
inline IntPolynomial sphere_face_polynomial(int n) {
  std::vector<BigInt> c;
  for (int p = 0; p <= n; ++p) c.push_back(binomial(n + 2, p + 1));
  return IntPolynomial(std::move(c));
}

/// Real roots of q_{S^n}(T) - chi(S^n) on the boundary of Delta_{n+1}:
/// expected {-1} for odd n and {-1, -1/2} for even n.
inline VerifierReport sphere_root_analysis(int n) {
  VerifierReport rep{"sphere-roots"};
  if (n < 1) throw Error("sphere_root_analysis needs n >= 1");
  const IntPolynomial q = sphere_face_polynomial(n);
  const BigInt chi = n % 2 ? 0 : 2;
  const RationalPolynomial p = to_rational(q - IntPolynomial::constant(chi));
  rep.polynomial = p;
  rep.roots = isolate_roots(p);
  std::vector<Rational> expected = {Rational(-1)};
  if (n % 2 == 0) expected.push_back(Rational(-1, 2));
  std::vector<Rational> found;
  for (const auto& r : rep.roots->intervals) {
    if (!r.exact()) {
      rep.witness = "irrational real root near " + to_decimal(r.midpoint(), 12);
      rep.holds = false;
      return rep;
    }
    found.push_back(r.lo);
  }
  std::sort(expected.begin(), expected.end());
  rep.holds = found == expected;
  if (!rep.holds) rep.witness = std::to_string(found.size()) + " real roots found";
  return rep;
}

/// For chi(K) <= 0: every real root of R_K lies in [-1, 0].
inline VerifierReport r_roots_in_unit_interval(const SimplicialComplex& k) {
  VerifierReport rep{"r-roots"};
  detail::manifold_warning(k, rep);
  if (euler_characteristic(k) > 0) {
    rep.applicable = false;
    rep.warnings.push_back("chi(K) > 0; the statement assumes chi(K) <= 0");
    return rep;
  }
  const RationalPolynomial r = to_rational(r_polynomial(k));
  rep.polynomial = r;
  const int total = count_real_roots(r);
  const int inside = count_roots_closed(r, Rational(-1), Rational(0));
  rep.holds = total == inside;
  if (!rep.holds)
    rep.witness = std::to_string(total - inside) + " real roots of R_K outside [-1,0]";
  return rep;
}

/// For odd n: T q_K(T) is invariant under T -> -1-T.
inline VerifierReport odd_symmetry(const SimplicialComplex& k) {
  VerifierReport rep{"odd-symmetry"};
  if (k.dim() % 2 == 0) {
    rep.applicable = false;
    rep.warnings.push_back("dimension is even; the statement is for odd dimension");
    return rep;
  }
  detail::manifold_warning(k, rep);
  const RationalPolynomial tq = to_rational(face_polynomial(k).shift(1));
  rep.residual = tq.compose_affine(Rational(-1), Rational(-1)) - tq;
  rep.holds = rep.residual.is_zero();
  if (!rep.holds) rep.witness = detail::first_nonzero(rep.residual, "coefficient of T^k, k");
  return rep;
}

}  // namespace sdlab
