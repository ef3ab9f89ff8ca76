// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file farey.hpp
 * @brief The three-dimensional Farey graph on P^1(Q(s)).
 *
 * Vertices are projective points with coordinates in Z[s]; two vertices are
 * joined exactly when their representatives in lowest terms have a unit
 * determinant.  Triangles attach along each edge in six ways (a hexagonal
 * analogue of the Farey mediant), and together with the tetrahedra they form
 * the ideal tetrahedral tessellation of hyperbolic 3-space; each tetrahedron
 * face separates exactly two tetrahedra, swapped by `reflect_apex`.
 */

#include "farey3d/projective.hpp"

#include <array>
#include <vector>

namespace farey3d {

using Face = std::array<ProjPoint, 3>;
using Tetra = std::array<ProjPoint, 4>;

/**
 * Squared distance weight of a pair of vertices: N(det2(f', g')) where f', g'
 * are representatives in lowest terms.  Invariant under the unit rescalings,
 * so well defined on points; equals 1 exactly on the edges of the graph.
 * Throws if f, g represent the same point (the weight is for distinct points).
 */
Int det_length_sq(const ProjPoint& f, const ProjPoint& g);

/// True iff the two (distinct) points are joined by an edge.
bool is_edge(const ProjPoint& f, const ProjPoint& g);

/**
 * The six common neighbours of an edge (f, g): the points
 * (p + s^i r) / (q + s^i s_) for i = 0..5, where p/q and r/s_ are the reduced
 * representatives.  Results are canonical representatives, in order i = 0..5
 * (the order depends on the chosen reduced representatives of f and g only
 * through a rotation of the index).
 * Throws std::invalid_argument if (f, g) is not an edge.
 */
std::array<ProjPoint, 6> symmetric_farey_sum(const ProjPoint& f, const ProjPoint& g);

/// True iff the three points are pairwise distinct and pairwise joined (a triangle).
bool is_face(const Face& t);

/// True iff the four points are pairwise distinct and pairwise joined (a tetrahedron of the tessellation).
bool is_fundamental_tetrahedron(const Tetra& t);

/**
 * The reflection of `apex` through the plane of `face`: the unique second
 * point completing `face` to a tetrahedron.  Exact; computed by moving the
 * face to (inf, 0, 1), where the two completions are s and conj(s), and
 * moving back.  Throws std::invalid_argument unless `face` is a triangle and
 * `apex` completes it to a tetrahedron.
 */
ProjPoint reflect_apex(const Face& face, const ProjPoint& apex);

/// Canonicalised copy (reduce every vertex).
Face reduce_face(const Face& f);
Tetra reduce_tetra(const Tetra& t);

/// True iff the point x equals one of the vertices of t.
bool tetra_contains(const Tetra& t, const ProjPoint& x);

}  // namespace farey3d
