// SPDX-License-Identifier: MIT
#include "farey3d/projective.hpp"

namespace farey3d {

bool is_irreducible(const ProjPoint& f) {
  if (!is_valid(f)) return false;
  return is_unit(gcd(f.p, f.q));
}

ProjPoint reduce(const ProjPoint& f) {
  if (!is_valid(f))
    throw std::invalid_argument("reduce: (0,0) is not a projective point");
  const EInt g = gcd(f.p, f.q);
  EInt p = exact_div(f.p, g);
  EInt q = exact_div(f.q, g);
  // Rotate by the unit making arg(q) land in [0, pi/3); at infinity make p = 1.
  const EInt pivot = is_zero(q) ? p : q;
  const EInt u = sigma_pow(-sector(pivot));
  return ProjPoint(u * p, u * q);
}

std::optional<std::complex<double>> to_complex(const ProjPoint& f) {
  if (!is_valid(f))
    throw std::invalid_argument("to_complex: (0,0) is not a projective point");
  if (is_zero(f.q)) return std::nullopt;
  return to_complex(f.p) / to_complex(f.q);
}

std::string to_string(const ProjPoint& f) {
  return "(" + to_string(f.p) + ")/(" + to_string(f.q) + ")";
}

Mat2 mat_inverse(const Mat2& m) {
  const EInt d = m.det();
  if (!is_unit(d))
    throw std::invalid_argument("mat_inverse: determinant " + to_string(d) +
                                " is not a unit");
  const EInt di = conj(d);  // inverse of a unit
  Mat2 adj = m.adjugate();
  return Mat2(di * adj.m11, di * adj.m12, di * adj.m21, di * adj.m22);
}

ProjPoint mobius_apply(const Mat2& m, const ProjPoint& f) {
  if (!is_unit(m.det()))
    throw std::invalid_argument("mobius_apply: matrix determinant is not a unit");
  if (!is_valid(f))
    throw std::invalid_argument("mobius_apply: (0,0) is not a projective point");
  return ProjPoint(m.m11 * f.p + m.m12 * f.q, m.m21 * f.p + m.m22 * f.q);
}

Mat2 sl2_sending_to_infinity(const ProjPoint& f) {
  const ProjPoint r = reduce(f);
  // Bezout relation u*p + v*q = g with g a unit (r is irreducible).
  const ExtGcd e = extended_gcd(r.p, r.q);
  const EInt gi = unit_inverse(e.g);
  // Rows: (u, v) and (-q/g, p/g); determinant (u p + v q)/g = 1.
  return Mat2(e.u, e.v, -(gi * r.q), gi * r.p);
}

}  // namespace farey3d
