// Exact integer and rational arithmetic used throughout sdlab.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sdlab {

// Expression templates are disabled so values behave like plain value types
// under `auto` and template deduction.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A resource guard refused to run an enumeration.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt ipow(const BigInt& base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

inline Rational rpow(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

/// "p/q" in lowest terms with q > 0; integers print without a denominator.
inline std::string to_string(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_string(const BigInt& x) { return x.str(); }

/// Parses "p/q", "p" or a plain decimal literal such as "-0.25".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error("malformed rational \"" + s + "\""); };
  if (s.empty()) throw bad();
  auto check_int = [&](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) throw bad();
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw bad();
  };
  auto to_int = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return BigInt(t);
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    check_int(p);
    check_int(q);
    BigInt den = to_int(q);
    if (den == 0) throw Error("zero denominator in \"" + s + "\"");
    return Rational(to_int(p), den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.erase(0, 1);
    if (ip.empty()) ip = "0";
    if (fp.empty()) fp = "0";
    check_int(ip);
    check_int(fp);
    Rational r(BigInt(ip + fp), ipow(BigInt(10), static_cast<unsigned>(fp.size())));
    return neg ? Rational(-r) : r;
  }
  check_int(s);
  return Rational(to_int(s));
}

/// Decimal rendering rounded half away from zero to `digits` fractional digits.
inline std::string to_decimal(const Rational& x, unsigned digits = 15) {
  const BigInt scale = ipow(BigInt(10), digits);
  BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  const bool neg = num < 0;
  if (neg) num = -num;
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  std::string body = scaled.str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  bool zero = scaled == 0;
  return (neg && !zero ? "-" : "") + body;
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace sdlab
