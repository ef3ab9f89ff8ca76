// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file eisenstein.hpp
 * @brief Exact arithmetic in the hexagonal lattice ring Z[s], s = exp(i*pi/3).
 *
 * Elements are written a + b*s with integer a, b and s a primitive sixth root
 * of unity, so s^2 = s - 1 and s^3 = -1.  The ring is Euclidean for the norm
 * N(a + b*s) = a^2 + a*b + b^2 = |a + b*s|^2, and its unit group is the six
 * powers of s.  Coefficients are arbitrary-precision integers so that chains
 * of exact operations (continuant recurrences, matrix products, gcd ladders)
 * never overflow.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace farey3d {

/// Arbitrary-precision integer used for all exact coefficients.
using Int = boost::multiprecision::cpp_int;

/// Element a + b*s of Z[s] with s = exp(i*pi/3).
struct EInt {
  Int a{0};
  Int b{0};

  EInt() = default;
  EInt(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
  EInt(long long a_, long long b_) : a(a_), b(b_) {}
  /// Embeds an ordinary integer as a + 0*s.
  explicit EInt(long long n) : a(n), b(0) {}
  explicit EInt(Int n) : a(std::move(n)), b(0) {}

  friend bool operator==(const EInt& x, const EInt& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const EInt& x, const EInt& y) { return !(x == y); }

  friend EInt operator+(const EInt& x, const EInt& y) {
    return EInt(x.a + y.a, x.b + y.b);
  }
  friend EInt operator-(const EInt& x, const EInt& y) {
    return EInt(x.a - y.a, x.b - y.b);
  }
  friend EInt operator-(const EInt& x) { return EInt(-x.a, -x.b); }

  /// (a + b*s)(c + d*s) = (ac - bd) + (ad + bc + bd)*s, using s^2 = s - 1.
  friend EInt operator*(const EInt& x, const EInt& y) {
    return EInt(x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b);
  }
  friend EInt operator*(const Int& n, const EInt& x) {
    return EInt(n * x.a, n * x.b);
  }
  friend EInt operator*(const EInt& x, const Int& n) { return n * x; }

  EInt& operator+=(const EInt& y) { a += y.a; b += y.b; return *this; }
  EInt& operator-=(const EInt& y) { a -= y.a; b -= y.b; return *this; }
  EInt& operator*=(const EInt& y) { *this = *this * y; return *this; }
};

/// True iff x = 0.
inline bool is_zero(const EInt& x) { return x.a == 0 && x.b == 0; }

/// Complex conjugate: conj(a + b*s) = (a + b) - b*s, since conj(s) = 1 - s.
inline EInt conj(const EInt& x) { return EInt(x.a + x.b, -x.b); }

/// Multiplicative norm N(x) = x * conj(x) = a^2 + ab + b^2 >= 0.
inline Int norm(const EInt& x) { return x.a * x.a + x.a * x.b + x.b * x.b; }

/// True iff x is one of the six units s^0..s^5.
inline bool is_unit(const EInt& x) { return norm(x) == 1; }

/// The six units s^0, s^1, ..., s^5 in order of increasing argument.
inline const std::array<EInt, 6>& units() {
  static const std::array<EInt, 6> u = {
      EInt(1, 0),  EInt(0, 1),  EInt(-1, 1),
      EInt(-1, 0), EInt(0, -1), EInt(1, -1)};
  return u;
}

/// s^k for any integer k (k is reduced mod 6).
inline EInt sigma_pow(long long k) {
  long long r = k % 6;
  if (r < 0) r += 6;
  return units()[static_cast<std::size_t>(r)];
}

/// Fast multiplication by s: s * (a + b*s) = -b + (a + b)*s.
inline EInt mul_sigma(const EInt& x) { return EInt(-x.b, x.a + x.b); }

/// Fast multiplication by s^-1 = conj(s) = 1 - s: s^-1 * (a + b*s) = (a + b) - a*s.
inline EInt mul_sigma_inv(const EInt& x) { return EInt(x.a + x.b, -x.a); }

/// Exponent k in [0, 6) with x = s^k; throws std::invalid_argument if x is not a unit.
int unit_log(const EInt& x);

/// Inverse of a unit (throws if x is not a unit).  For units, x^-1 = conj(x).
inline EInt unit_inverse(const EInt& x) {
  if (!is_unit(x)) throw std::invalid_argument("unit_inverse: argument is not a unit");
  return conj(x);
}

/**
 * Sextant of the argument of x: the unique k in [0, 6) with
 * arg(x) in [k*pi/3, (k+1)*pi/3), decided by exact sign tests on a, b, a+b.
 * By convention sector(0) = 0 (arg(0) is treated as 0).
 */
int sector(const EInt& x);

/**
 * Euclidean division: returns (q, r) with x = q*y + r and N(r) <= (3/4)*N(y).
 * The quotient rounds both coefficients of x*conj(y)/N(y) to nearest integers
 * (ties to even); the remainder-norm decrease is asserted at runtime.
 * Throws std::domain_error if y = 0.
 */
std::pair<EInt, EInt> divmod(const EInt& x, const EInt& y);

/// Exact division: q with x = q*y; throws std::domain_error if y = 0 or y does not divide x.
EInt exact_div(const EInt& x, const EInt& y);

/**
 * Greatest common divisor via the Euclidean algorithm (determined up to a
 * unit; this routine returns whatever the remainder ladder produces).
 * Throws std::domain_error if both arguments are 0.
 */
EInt gcd(const EInt& x, const EInt& y);

/// Result of the extended Euclidean algorithm: g = u*x + v*y.
struct ExtGcd {
  EInt g;
  EInt u;
  EInt v;
};

/// Extended gcd with Bezout coefficients: g = u*x + v*y.
ExtGcd extended_gcd(const EInt& x, const EInt& y);

/// Embedding into C with s = 1/2 + i*sqrt(3)/2.  Coefficients are converted to double.
std::complex<double> to_complex(const EInt& x);

/// Human-readable form like "2-3s" (for diagnostics and error messages).
std::string to_string(const EInt& x);

}  // namespace farey3d
