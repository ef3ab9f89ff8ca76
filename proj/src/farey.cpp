// SPDX-License-Identifier: MIT
#include "farey3d/farey.hpp"

namespace farey3d {

Int det_length_sq(const ProjPoint& f, const ProjPoint& g) {
  const ProjPoint rf = reduce(f);
  const ProjPoint rg = reduce(g);
  const Int n = norm(det2(rf, rg));
  if (n == 0)
    throw std::invalid_argument("det_length_sq: " + to_string(f) + " and " +
                                to_string(g) + " are the same point");
  return n;
}

bool is_edge(const ProjPoint& f, const ProjPoint& g) {
  if (point_eq(f, g)) return false;
  return det_length_sq(f, g) == 1;
}

std::array<ProjPoint, 6> symmetric_farey_sum(const ProjPoint& f, const ProjPoint& g) {
  if (!is_edge(f, g))
    throw std::invalid_argument("symmetric_farey_sum: arguments are not an edge");
  const ProjPoint rf = reduce(f);
  const ProjPoint rg = reduce(g);
  std::array<ProjPoint, 6> out;
  for (int i = 0; i < 6; ++i) {
    const EInt u = sigma_pow(i);
    out[static_cast<std::size_t>(i)] =
        reduce(ProjPoint(rf.p + u * rg.p, rf.q + u * rg.q));
  }
  return out;
}

bool is_face(const Face& t) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (point_eq(t[i], t[j])) return false;
      if (det_length_sq(t[i], t[j]) != 1) return false;
    }
  return true;
}

bool is_fundamental_tetrahedron(const Tetra& t) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (point_eq(t[i], t[j])) return false;
      if (det_length_sq(t[i], t[j]) != 1) return false;
    }
  return true;
}

ProjPoint reflect_apex(const Face& face, const ProjPoint& apex) {
  if (!is_face(face))
    throw std::invalid_argument("reflect_apex: not a triangle of the tessellation");
  const ProjPoint a = reduce(face[0]);
  const ProjPoint b = reduce(face[1]);
  const ProjPoint c = reduce(face[2]);
  // Solve u*a + v*b = c; all three determinants are units, so u, v are exact.
  const EInt delta = det2(a, b);
  const EInt di = unit_inverse(delta);
  const EInt u = di * det2(c, b);
  const EInt v = di * det2(a, c);
  // n sends (inf, 0, 1) to (a, b, c) and has unit determinant u*v*delta.
  const Mat2 n(u * a.p, v * b.p, u * a.q, v * b.q);
  // Pull the apex upstairs; over (inf, 0, 1) the two completions are s, conj(s).
  const ProjPoint up = mobius_apply(n.adjugate(), apex);
  const ProjPoint sig(EInt(0, 1), EInt(1, 0));
  const ProjPoint sigbar(EInt(1, -1), EInt(1, 0));
  ProjPoint other;
  if (point_eq(up, sig))
    other = sigbar;
  else if (point_eq(up, sigbar))
    other = sig;
  else
    throw std::invalid_argument(
        "reflect_apex: apex does not complete the face to a tetrahedron");
  return reduce(mobius_apply(n, other));
}

Face reduce_face(const Face& f) { return Face{reduce(f[0]), reduce(f[1]), reduce(f[2])}; }

Tetra reduce_tetra(const Tetra& t) {
  return Tetra{reduce(t[0]), reduce(t[1]), reduce(t[2]), reduce(t[3])};
}

bool tetra_contains(const Tetra& t, const ProjPoint& x) {
  for (const auto& v : t)
    if (point_eq(v, x)) return true;
  return false;
}

}  // namespace farey3d
