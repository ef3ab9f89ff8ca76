// SPDX-License-Identifier: MIT
#include "farey3d/paths.hpp"

#include "farey3d/farey.hpp"

#include <cmath>

namespace farey3d {

namespace {

// (-1)^i for possibly negative i.
int parity_sign(long long i) { return (((i % 2) + 2) % 2 == 0) ? 1 : -1; }

// Sign pattern +,+,-,- (by index mod 4) exchanging the two det conventions.
int quad_sign(long long i) {
  const long long r = ((i % 4) + 4) % 4;
  return (r == 0 || r == 1) ? 1 : -1;
}

EInt unit_one() { return EInt(1, 0); }

EInt signed_one(int s) { return EInt(Int(s), Int(0)); }

}  // namespace

PathRep normalise_path(const std::vector<ProjPoint>& vertices, const ProjPoint& seed,
                       long long base_index, PathMode target) {
  if (vertices.empty())
    throw std::invalid_argument("normalise_path: empty vertex list");
  if (!is_irreducible(seed))
    throw std::invalid_argument("normalise_path: seed representative is not irreducible");
  if (!point_eq(seed, vertices.front()))
    throw std::invalid_argument("normalise_path: seed is not on the first vertex");

  PathRep out;
  out.base_index = base_index;
  out.mode = target;
  out.reps.reserve(vertices.size());
  out.reps.push_back(seed);
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    const ProjPoint cand = reduce(vertices[i]);
    const EInt d = det2(out.reps.back(), cand);
    if (!is_unit(d))
      throw std::invalid_argument("normalise_path: vertices " + std::to_string(i - 1) +
                                  " and " + std::to_string(i) + " are not joined by an edge");
    if (target == PathMode::plain) {
      out.reps.push_back(cand);
      continue;
    }
    // Scale cand by the unique unit giving the required consecutive det.
    EInt u = conj(d);  // inverse of the unit d
    if (target == PathMode::skew) {
      const long long left = base_index + static_cast<long long>(i) - 1;
      if (parity_sign(left) < 0) u = -u;
    }
    out.reps.emplace_back(u * cand.p, u * cand.q);
  }
  return out;
}

namespace {

PathRep quad_flip(const PathRep& path, PathMode from, PathMode to) {
  if (path.mode != from)
    throw std::invalid_argument("path gauge conversion: unexpected input mode");
  PathRep out;
  out.base_index = path.base_index;
  out.mode = to;
  out.reps.reserve(path.reps.size());
  for (std::size_t k = 0; k < path.reps.size(); ++k) {
    const int s = quad_sign(path.base_index + static_cast<long long>(k));
    const EInt t = signed_one(s);
    out.reps.emplace_back(t * path.reps[k].p, t * path.reps[k].q);
  }
  return out;
}

}  // namespace

PathRep skew_to_normalised(const PathRep& path) {
  return quad_flip(path, PathMode::skew, PathMode::normalised);
}

PathRep normalised_to_skew(const PathRep& path) {
  return quad_flip(path, PathMode::normalised, PathMode::skew);
}

EInt t_angle(const ProjPoint& prev, const ProjPoint& cur, const ProjPoint& next,
             long long i) {
  const EInt d_in = det2(prev, cur);
  const EInt d_out = det2(cur, next);
  const EInt want_in = signed_one(parity_sign(i - 1));
  const EInt want_out = signed_one(parity_sign(i));
  if (d_in != want_in || d_out != want_out)
    throw std::invalid_argument("t_angle: representatives are not in the skew gauge");
  const EInt a = signed_one(parity_sign(i - 1)) * det2(prev, next);
  // The defining three-term relation must hold exactly.
  if (next != ProjPoint(prev.p + a * cur.p, prev.q + a * cur.q))
    throw std::logic_error("t_angle: three-term relation failed");
  return a;
}

AngleSeq angle_sequence(const PathRep& path) {
  if (path.mode != PathMode::skew)
    throw std::invalid_argument("angle_sequence: path must be in the skew gauge");
  AngleSeq out;
  out.base_index = path.base_index + 1;
  if (path.reps.size() < 3) return out;
  out.values.reserve(path.reps.size() - 2);
  for (std::size_t k = 1; k + 1 < path.reps.size(); ++k)
    out.values.push_back(t_angle(path.reps[k - 1], path.reps[k], path.reps[k + 1],
                                 path.base_index + static_cast<long long>(k)));
  return out;
}

PathRep path_from_angles(const ProjPoint& v0, const ProjPoint& v1, const AngleSeq& angles) {
  if (!is_irreducible(v0) || !is_irreducible(v1))
    throw std::invalid_argument("path_from_angles: seeds must be irreducible");
  if (det2(v0, v1) != unit_one())
    throw std::invalid_argument("path_from_angles: seeds must have det 1");

  PathRep out;
  out.mode = PathMode::skew;
  if (angles.values.empty()) {
    out.base_index = 0;
    out.reps = {v0, v1};
    return out;
  }
  const long long ab = angles.base_index;
  const long long ae = angles.end_index() - 1;  // last angle index
  if (ab > 1 || ae < 0)
    throw std::invalid_argument("path_from_angles: angle run does not reach the seeds");

  auto angle_at = [&](long long i) -> const EInt& {
    return angles.values[static_cast<std::size_t>(i - ab)];
  };

  std::vector<ProjPoint> forward{v0, v1};  // indices 0, 1, 2, ...
  for (long long i = 1; i <= ae; ++i) {
    const ProjPoint& prev = forward[static_cast<std::size_t>(i - 1)];
    const ProjPoint& cur = forward[static_cast<std::size_t>(i)];
    const EInt& a = angle_at(i);
    forward.emplace_back(prev.p + a * cur.p, prev.q + a * cur.q);
  }
  std::vector<ProjPoint> backward;  // indices -1, -2, ...
  {
    ProjPoint next = v1, cur = v0;
    for (long long i = 0; i >= ab; --i) {
      const EInt& a = angle_at(i);
      ProjPoint prev(next.p - a * cur.p, next.q - a * cur.q);
      backward.push_back(prev);
      next = cur;
      cur = prev;
    }
  }

  out.base_index = std::min<long long>(0, ab - 1);
  out.reps.reserve(backward.size() + forward.size());
  for (auto it = backward.rbegin(); it != backward.rend(); ++it) out.reps.push_back(*it);
  for (auto& r : forward) out.reps.push_back(std::move(r));
  return out;
}

PathRep twist_path(const PathRep& path, long long k) {
  PathRep out;
  out.base_index = path.base_index;
  out.mode = path.mode;
  out.reps.reserve(path.reps.size());
  for (std::size_t j = 0; j < path.reps.size(); ++j) {
    const long long i = path.base_index + static_cast<long long>(j);
    const EInt u = sigma_pow(parity_sign(i) * k);
    out.reps.emplace_back(u * path.reps[j].p, u * path.reps[j].q);
  }
  return out;
}

AngleSeq twist_angles(const AngleSeq& angles, long long k) {
  AngleSeq out;
  out.base_index = angles.base_index;
  out.values.reserve(angles.values.size());
  for (std::size_t j = 0; j < angles.values.size(); ++j) {
    const long long i = angles.base_index + static_cast<long long>(j);
    out.values.push_back(sigma_pow(parity_sign(i + 1) * 2 * k) * angles.values[j]);
  }
  return out;
}

ERatio t_angle_general(const ProjPoint& v0, const ProjPoint& v1, const ProjPoint& v2) {
  if (point_eq(v0, v1) || point_eq(v0, v2) || point_eq(v1, v2))
    throw std::invalid_argument("t_angle_general: points must be pairwise distinct");
  return ERatio{det2(v0, v2), det2(v0, v1)};
}

EInt continuant(const std::vector<EInt>& word) {
  // Forward recurrence K_j = K_{j-1} a_j + K_{j-2} with K_0 = 1, K_{-1} = 0.
  EInt prev(0, 0), curr(1, 0);
  for (const auto& a : word) {
    EInt next = curr * a + prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

CFResult cf_eval(const AngleSeq& angles) {
  if (angles.base_index != 1)
    throw std::invalid_argument("cf_eval: angle word must start at index 1");
  if (angles.values.empty())
    throw std::invalid_argument("cf_eval: empty angle word");
  const std::size_t m = angles.values.size();

  CFResult out;
  const PathRep path = path_from_angles(infinity_point(), ProjPoint(EInt(0, 0), EInt(1, 0)),
                                        angles);
  out.endpoint = path.reps.back();

  // Suffix continuants S_k = K(a_k..a_m): S_{m+1} = 1, S_{m+2} = 0.
  std::vector<EInt> suffix(m + 2, EInt(0, 0));
  suffix[m] = EInt(1, 0);      // S_{m+1}
  suffix[m + 1] = EInt(0, 0);  // S_{m+2}
  for (std::size_t k = m; k-- > 0;)
    suffix[k] = angles.values[k] * suffix[k + 1] + suffix[k + 2];

  // Nested value [a_1; a_2, ..., a_m] = S_1 / S_2 as a projective point.
  out.nested = reduce(ProjPoint(suffix[0], suffix[1]));

  out.strict_defined = true;
  out.first_zero_tail = 0;
  for (std::size_t k = m; k >= 2; --k) {
    if (is_zero(suffix[k - 1])) {  // tail value [a_k; ...] vanishes
      out.strict_defined = false;
      out.first_zero_tail = static_cast<long long>(k);
      break;  // innermost-first evaluation breaks at the largest such k
    }
  }
  return out;
}

std::vector<std::pair<long long, long long>> zero_subfractions(const AngleSeq& angles) {
  std::vector<std::pair<long long, long long>> out;
  const std::size_t n = angles.values.size();
  for (std::size_t k = 0; k < n; ++k) {
    // Contiguous continuants K(a_k..a_j) for growing j.
    EInt prev(1, 0), curr = angles.values[k];
    std::size_t j = k;
    while (true) {
      if (is_zero(curr))
        out.emplace_back(angles.base_index + static_cast<long long>(k),
                         angles.base_index + static_cast<long long>(j));
      ++j;
      if (j >= n) break;
      EInt next = angles.values[j] * curr + prev;
      prev = curr;
      curr = next;
    }
  }
  return out;
}

namespace {

using CPoint = std::optional<std::complex<double>>;

// Image of z under the unique Mobius map sending (z1, z2, z3) to (0, 1, inf).
std::complex<double> cross_ratio_01inf(const CPoint& z, const CPoint& z1,
                                       const CPoint& z2, const CPoint& z3) {
  if (!z) {
    // z = inf: limit of the generic formula.
    return (*z2 - *z3) / (*z2 - *z1);
  }
  if (!z1) return (*z2 - *z3) / (*z - *z3);
  if (!z2) return (*z - *z1) / (*z - *z3);
  if (!z3) return (*z - *z1) / (*z2 - *z1);
  return ((*z - *z1) * (*z2 - *z3)) / ((*z - *z3) * (*z2 - *z1));
}

}  // namespace

CyclicQuadReport verify_cyclic_quad(const std::array<ProjPoint, 4>& vs,
                                    const ProjPoint& v0, double tol,
                                    bool require_valid) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (point_eq(vs[i], v0))
      throw std::invalid_argument("verify_cyclic_quad: reference vertex coincides with a corner");
    for (std::size_t j = i + 1; j < 4; ++j)
      if (point_eq(vs[i], vs[j]))
        throw std::invalid_argument("verify_cyclic_quad: corners must be distinct");
  }

  CyclicQuadReport rep;
  const std::complex<double> t =
      cross_ratio_01inf(to_complex(vs[3]), to_complex(vs[0]), to_complex(vs[1]),
                        to_complex(vs[2]));
  rep.concyclic = std::fabs(t.imag()) <= tol * std::max(1.0, std::abs(t));
  rep.ordered = rep.concyclic && t.real() < 0.0;

  // Pair weights renormalised through the reference vertex v0.
  auto nrm = [&](const ProjPoint& f, const ProjPoint& g) {
    return det_length_sq(f, g).convert_to<double>();
  };
  std::array<double, 4> anchor{};
  for (std::size_t i = 0; i < 4; ++i) anchor[i] = nrm(vs[i], v0);
  auto x = [&](std::size_t i, std::size_t j) {
    return std::sqrt(nrm(vs[i], vs[j])) / std::pow(anchor[i] * anchor[j], 0.25);
  };
  rep.lhs = x(0, 2) * x(1, 3);
  rep.rhs = x(0, 1) * x(2, 3) + x(1, 2) * x(0, 3);
  rep.rel_residual =
      std::fabs(rep.lhs - rep.rhs) / std::max({1.0, std::fabs(rep.lhs), std::fabs(rep.rhs)});

  if (require_valid && !rep.concyclic)
    throw std::invalid_argument("verify_cyclic_quad: corners are not concyclic");
  if (require_valid && !rep.ordered)
    throw std::invalid_argument("verify_cyclic_quad: corners are not in cyclic order");
  return rep;
}

}  // namespace farey3d
