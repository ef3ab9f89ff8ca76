// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file lambda.hpp
 * @brief Horospheres, lambda-lengths, and geodesic tetrahedron walks.
 *
 * Every vertex of the graph carries a standard horosphere in upper half-space
 * (radius 1 / (2 N(q)) at a finite point p/q in lowest terms; the horizontal
 * plane at height 1 at infinity).  The lambda-length of a pair of points is
 * exp(d/2) for the signed horosphere-to-horosphere distance d along the
 * geodesic; numerically it is |z - w| / (2 sqrt(r_z r_w)) for finite points
 * and sqrt(h / (2 r)) when one point is at infinity.  Exactly, the squared
 * lambda-length of a pair equals `det_length_sq`, which is what the identity
 * checks in this module exploit: every identity is verified both in exact
 * arithmetic and in floating point through the horosphere model.
 */

#include "farey3d/farey.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace farey3d {

/// Horosphere in the upper half-space model.
struct Horosphere {
  bool at_infinity{false};
  std::complex<double> center{0.0, 0.0};  ///< base point on C (finite case)
  double size{0.0};  ///< Euclidean radius (finite case) or plane height (infinite case)
};

/// The standard horosphere at a vertex: radius 1/(2 N(q)), or the plane at height 1.
Horosphere standard_horosphere(const ProjPoint& f);

/// Horosphere with the same base point and size scaled by t > 0.
Horosphere scale_horosphere(const Horosphere& h, double t);

/**
 * Floating-point lambda-length between two horospheres (exp of half the
 * signed distance along the connecting geodesic).  Throws if the base points
 * coincide.
 */
double lambda_numeric(const Horosphere& x, const Horosphere& y);

/// Exact and floating-point views of one pair's lambda-length, for cross-checks.
struct LambdaCrossCheck {
  Int det_sq;        ///< exact squared lambda-length
  double numeric;    ///< lambda from the horosphere model
  double exact_sqrt; ///< sqrt of det_sq in double
  double rel_err;    ///< |numeric - exact_sqrt| / max(1, exact_sqrt)
};

/// Compares lambda from standard horospheres against sqrt(det_length_sq).
LambdaCrossCheck lambda_cross_check(const ProjPoint& f, const ProjPoint& g);

/// Exact + numeric residual of one polynomial identity check.
struct IdentityReport {
  bool exact_holds{false};
  Int exact_lhs{0};
  Int exact_rhs{0};
  double numeric_lhs{0.0};
  double numeric_rhs{0.0};
  double rel_residual{0.0};
};

/**
 * Quadratic exchange of squared lambda-lengths over a triangle: given the
 * squared lengths b1, b2, b3 from an external point to the three vertices of
 * a triangle and the squared length b4 to one of the two tetrahedron apexes
 * over that triangle, the squared length to the other apex is
 * b1 + b2 + b3 - b4 (the two apexes are the roots of one monic quadratic).
 */
Int quadratic_partner(const Int& b1, const Int& b2, const Int& b3, const Int& b4);

/**
 * Checks sum_i b_i^2 = sum_{i<j} b_i b_j for the four squared lambda-lengths
 * b_i from x to the vertices of a tetrahedron of the tessellation.
 * Exact check plus float residual through the horosphere model.
 * Throws std::invalid_argument if t is not a tetrahedron of the tessellation
 * or x coincides with one of its vertices.
 */
IdentityReport verify_tetra_relation(const Tetra& t, const ProjPoint& x);

/**
 * Five-point lambda-length identity: for distinct points x_1..x_5 with
 * squared pair lengths B_ij,
 *   sum_{i<j} B_ij^2 * (product of B over the complementary triangle)
 *     = sum over the 12 five-cycles of the product of B along the cycle.
 * Exact over the graph's points; float residual through horospheres.
 */
IdentityReport verify_five_point(const std::array<ProjPoint, 5>& xs);

/// Floating-point-only version for arbitrary horosphere configurations.
struct FloatIdentityReport {
  double lhs{0.0};
  double rhs{0.0};
  double rel_residual{0.0};
};
FloatIdentityReport five_point_numeric(const std::array<Horosphere, 5>& hs);

/**
 * Curvature identity for the four standard horospheres of a tetrahedron of
 * the tessellation together with the boundary plane: with k_i = 2 N(q_i)
 * (and k = 0 at infinity), sum_{i<j} k_i k_j = sum_i k_i^2.
 */
IdentityReport verify_curvature_relation(const Tetra& t);

/// Options for geodesic_walk.
struct WalkOptions {
  std::size_t max_steps{512};  ///< hard cap on the number of tetrahedra
};

/// Raised when the geodesic hugs a wall of the tessellation (e.g. the planar 2D case).
struct DegenerateGeodesic : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/**
 * The ordered chain of tetrahedra crossed by the geodesic from x to y.
 * Face-crossing decisions use exact rational arithmetic (all squared
 * crossing heights are rational), and every vertex of every reported
 * tetrahedron is computed exactly by reflections.  The first tetrahedron is
 * the unique one the geodesic enters leaving x; the last one has y as a
 * vertex.  Throws DegenerateGeodesic when the geodesic meets the 2-skeleton
 * of the tessellation, i.e. runs inside a wall or exits a cell exactly
 * through an edge (in particular whenever x, y span the classical planar
 * sub-graph), std::invalid_argument if x = y, std::runtime_error if
 * max_steps is exhausted.
 */
std::vector<Tetra> geodesic_walk(const ProjPoint& x, const ProjPoint& y,
                                 const WalkOptions& opts = {});

/**
 * Squared lambda-lengths from x to the stream of new vertices along a walk,
 * in crossing order, together with the per-step bookkeeping.
 *
 * values[0..2] are the lengths to the three non-x vertices of the first
 * tetrahedron (always 1, 1, 1); each later entry is the length to the vertex
 * added by one attachment step.  For every step the exchange relation
 *   b_dropped + b_added = sum of b over the three shared vertices
 * holds exactly, with b_dropped < b_added (checked; violations throw).
 * `fan` reports whether every step dropped the oldest active vertex (after
 * ordering the three initial vertices by drop time); precisely for such
 * walks the stream also satisfies the consecutive-index recurrence
 *   values[i] + values[i+4] = values[i+1] + values[i+2] + values[i+3],
 * which is checked when `fan` is true.
 */
struct BSequence {
  std::vector<Int> values;
  bool fan{true};
  std::size_t pivot_steps{0};  ///< number of steps that dropped a non-oldest vertex
};

BSequence b_sequence(const ProjPoint& x, const std::vector<Tetra>& walk);

}  // namespace farey3d
