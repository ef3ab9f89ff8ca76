// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file projective.hpp
 * @brief The projective line over Z[s] and 2x2 matrices acting on it.
 *
 * A point of P^1(Q(s)) is a column (p, q) != (0, 0) up to a scalar from
 * Q(s)*.  Irreducible representatives (gcd(p, q) a unit) come in six
 * unit-scalings; `reduce` picks the canonical one whose lower entry (or upper
 * entry, for the point at infinity) has argument in [0, pi/3), decided by
 * exact sign tests only.
 */

#include "farey3d/eisenstein.hpp"

#include <array>
#include <optional>
#include <string>

namespace farey3d {

/// Homogeneous representative p/q of a point on the projective line.
struct ProjPoint {
  EInt p{Int(0), Int(0)};
  EInt q{Int(0), Int(0)};

  ProjPoint() = default;
  ProjPoint(EInt p_, EInt q_) : p(std::move(p_)), q(std::move(q_)) {}

  /// Exact equality of representatives (not of underlying points; see point_eq).
  friend bool operator==(const ProjPoint& x, const ProjPoint& y) {
    return x.p == y.p && x.q == y.q;
  }
  friend bool operator!=(const ProjPoint& x, const ProjPoint& y) { return !(x == y); }
};

/// The point at infinity 1/0.
inline ProjPoint infinity_point() { return ProjPoint(EInt(1, 0), EInt(0, 0)); }

/// True iff the representative is valid, i.e. (p, q) != (0, 0).
inline bool is_valid(const ProjPoint& f) { return !is_zero(f.p) || !is_zero(f.q); }

/// True iff gcd(p, q) is a unit (the representative is in lowest terms).
bool is_irreducible(const ProjPoint& f);

/**
 * Canonical irreducible representative of the point:
 * divide by a gcd, then scale by the unit that puts arg(q) in [0, pi/3)
 * (for q = 0, i.e. the point at infinity, normalise to p = 1).
 * Throws std::invalid_argument on the invalid representative (0, 0).
 */
ProjPoint reduce(const ProjPoint& f);

/// 2x2 determinant | p_f p_g ; q_f q_g | = p_f*q_g - p_g*q_f.
inline EInt det2(const ProjPoint& f, const ProjPoint& g) {
  return f.p * g.q - g.p * f.q;
}

/// True iff f and g are representatives of the same projective point.
inline bool point_eq(const ProjPoint& f, const ProjPoint& g) {
  if (!is_valid(f) || !is_valid(g))
    throw std::invalid_argument("point_eq: (0,0) is not a projective point");
  return is_zero(det2(f, g));
}

/// Scales a representative by a ring element (t must be nonzero to stay valid).
inline ProjPoint scale(const EInt& t, const ProjPoint& f) {
  return ProjPoint(t * f.p, t * f.q);
}

/// Embedding into the Riemann sphere; nullopt encodes the point at infinity.
std::optional<std::complex<double>> to_complex(const ProjPoint& f);

/// Human-readable "p/q" form for diagnostics.
std::string to_string(const ProjPoint& f);

/// 2x2 matrix over Z[s], row-major.
struct Mat2 {
  EInt m11, m12, m21, m22;

  Mat2() : m11(Int(0), Int(0)), m12(Int(0), Int(0)), m21(Int(0), Int(0)), m22(Int(0), Int(0)) {}
  Mat2(EInt a, EInt b, EInt c, EInt d)
      : m11(std::move(a)), m12(std::move(b)), m21(std::move(c)), m22(std::move(d)) {}

  static Mat2 identity() {
    return Mat2(EInt(1, 0), EInt(0, 0), EInt(0, 0), EInt(1, 0));
  }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.m11 == y.m11 && x.m12 == y.m12 && x.m21 == y.m21 && x.m22 == y.m22;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2(x.m11 * y.m11 + x.m12 * y.m21, x.m11 * y.m12 + x.m12 * y.m22,
                x.m21 * y.m11 + x.m22 * y.m21, x.m21 * y.m12 + x.m22 * y.m22);
  }
  friend Mat2 operator-(const Mat2& x) {
    return Mat2(-x.m11, -x.m12, -x.m21, -x.m22);
  }

  EInt det() const { return m11 * m22 - m12 * m21; }

  /// Adjugate (d, -b; -c, a); satisfies M * adj(M) = det(M) * I.
  Mat2 adjugate() const { return Mat2(m22, -m12, -m21, m11); }

  /// Column view as projective representatives.
  ProjPoint col1() const { return ProjPoint(m11, m21); }
  ProjPoint col2() const { return ProjPoint(m12, m22); }
};

/// diag(x, y).
inline Mat2 diag(const EInt& x, const EInt& y) {
  return Mat2(x, EInt(0, 0), EInt(0, 0), y);
}

/// Inverse of a matrix with unit determinant; throws std::invalid_argument otherwise.
Mat2 mat_inverse(const Mat2& m);

/// Action on homogeneous coordinates: A * (p, q)^T.  Requires det(A) to be a unit.
ProjPoint mobius_apply(const Mat2& m, const ProjPoint& f);

/**
 * A matrix B with unit determinant sending the given point to infinity:
 * B * (p, q)^T = (1, 0)^T up to a unit.  Built from a Bezout relation for the
 * reduced representative, so det(B) = 1 exactly.
 */
Mat2 sl2_sending_to_infinity(const ProjPoint& f);

}  // namespace farey3d
