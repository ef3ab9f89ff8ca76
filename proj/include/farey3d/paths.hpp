// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file paths.hpp
 * @brief Edge paths in the graph, their representative normalisations,
 *        turning angles, and the continued-fraction view.
 *
 * A path is a sequence of vertices with consecutive pairs joined by edges.
 * Once a representative of the first vertex is fixed, representatives of the
 * remaining vertices can be rescaled so that consecutive determinants are
 * all +1 ("normalised") or alternate +1, -1, +1, ... by absolute index
 * ("skew").  In the skew gauge each interior vertex carries a turning angle
 * a_i in Z[s] defined by u_{i+1} = u_{i-1} + a_i u_i, and the whole path is
 * recovered from two seeds and its angles; angle sequences are exactly the
 * continued-fraction expansions of the endpoint.
 */

#include "farey3d/projective.hpp"

#include <optional>
#include <vector>

namespace farey3d {

enum class PathMode { plain, normalised, skew };

/**
 * A run of consecutive vertex representatives.  reps[k] sits at absolute
 * index base_index + k; in skew mode det2(u_i, u_{i+1}) = (-1)^i with i the
 * absolute index, in normalised mode every consecutive det is +1.
 */
struct PathRep {
  long long base_index{0};
  PathMode mode{PathMode::plain};
  std::vector<ProjPoint> reps;

  long long end_index() const {
    return base_index + static_cast<long long>(reps.size());
  }
  friend bool operator==(const PathRep& x, const PathRep& y) {
    return x.base_index == y.base_index && x.mode == y.mode && x.reps == y.reps;
  }
};

/**
 * Turning angles a_i of a skew path; values[k] belongs to absolute index
 * base_index + k (an interior vertex of the path).
 */
struct AngleSeq {
  long long base_index{1};
  std::vector<EInt> values;

  long long end_index() const {
    return base_index + static_cast<long long>(values.size());
  }
  friend bool operator==(const AngleSeq& x, const AngleSeq& y) {
    return x.base_index == y.base_index && x.values == y.values;
  }
};

/**
 * Rescales the given vertices into the chosen gauge.  `seed` must be an
 * irreducible representative of the first vertex; each later representative
 * is the unique unit-scaling of the reduced vertex giving the required
 * consecutive determinant.  Throws std::invalid_argument if a consecutive
 * pair is not an edge, or the seed is reducible / not on the first vertex.
 */
PathRep normalise_path(const std::vector<ProjPoint>& vertices, const ProjPoint& seed,
                       long long base_index, PathMode target);

/// Gauge conversions between the two determinant conventions (sign pattern
/// +,+,-,- by absolute index mod 4); inverse of each other.
PathRep skew_to_normalised(const PathRep& path);
PathRep normalised_to_skew(const PathRep& path);

/**
 * The angle at one interior vertex: with consecutive skew determinants
 * checked exactly, a satisfies next = prev + a * cur (i is the absolute
 * index of cur).  Throws std::invalid_argument if the skew determinant
 * pattern does not hold at this position.
 */
EInt t_angle(const ProjPoint& prev, const ProjPoint& cur, const ProjPoint& next,
             long long i);

/// All interior angles of a skew path (empty for paths with < 3 vertices).
AngleSeq angle_sequence(const PathRep& path);

/**
 * Rebuilds the skew path from two seed representatives at absolute indices
 * 0 and 1 (det2(v0, v1) must be 1) and an angle run.  Angles with index >= 1
 * extend forward from the seeds, angles with index <= 0 extend backward
 * (u_{i-1} = u_{i+1} - a_i u_i); the angle run must be contiguous and reach
 * the seeds (base_index <= 1 and end_index() >= 0).
 */
PathRep path_from_angles(const ProjPoint& v0, const ProjPoint& v1, const AngleSeq& angles);

/// Unit gauge twist u_i -> s^((-1)^i k) u_i; preserves both determinant conventions.
PathRep twist_path(const PathRep& path, long long k);

/// The matching transformation of angles, a_i -> s^((-1)^(i+1) 2k) a_i.
AngleSeq twist_angles(const AngleSeq& angles, long long k);

/// A ratio of ring elements (num/den), den != 0; compared by cross-multiplication.
struct ERatio {
  EInt num;
  EInt den;

  friend bool operator==(const ERatio& x, const ERatio& y) {
    return x.num * y.den == y.num * x.den;
  }
};

/**
 * The angle of an ordered triple of pairwise distinct points:
 * det2(v0, v2) / det2(v0, v1).  For unit-determinant consecutive pairs this
 * reduces to the integer angle above.  The product of these ratios over the
 * consecutive triples of a closed cycle does not depend on the chosen
 * representatives; around a 3-cycle it is always -1, and around the hexagon
 * of common neighbours of an edge it is (1 + s)^6 = -27.
 */
ERatio t_angle_general(const ProjPoint& v0, const ProjPoint& v1, const ProjPoint& v2);

/// Result of evaluating an angle word as a continued fraction.
struct CFResult {
  ProjPoint endpoint;      ///< last vertex of the path seeded with 1/0, 0/1
  ProjPoint nested;        ///< projective value of a_1 + 1/(a_2 + 1/(... + 1/a_m))
  bool strict_defined{true};  ///< innermost-first evaluation hits no division by zero
  long long first_zero_tail{0};  ///< innermost (largest) k >= 2 with a zero tail value, or 0
};

/**
 * Continued-fraction view of an angle word a_1..a_m (base_index must be 1).
 * The endpoint representative equals (K(a_2..a_m), K(a_1..a_m)) exactly,
 * where K is the continuant; as a point it is the reciprocal of the nested
 * fraction [a_1; a_2, ..., a_m].  The nested value is always computed
 * projectively; `strict_defined` reports whether the innermost-first
 * arithmetic evaluation is defined (no zero tail [a_k; ...]).
 */
CFResult cf_eval(const AngleSeq& angles);

/// Continuant K(a_1..a_m): K() = 1, K(a_1) = a_1, K(..a_j) = K(..a_{j-1}) a_j + K(..a_{j-2}).
EInt continuant(const std::vector<EInt>& word);

/**
 * All index pairs (k, j), k <= j, where the contiguous continuant
 * K(a_k..a_j) vanishes; each such pair certifies that the path revisits a
 * point: vertices k-1 and j+1 coincide.  Indices are absolute.
 */
std::vector<std::pair<long long, long long>> zero_subfractions(const AngleSeq& angles);

/// Numeric four-point cyclic identity report.
struct CyclicQuadReport {
  bool concyclic{false};  ///< the four points lie on one circle/line
  bool ordered{false};    ///< and appear on it in the given cyclic order
  double lhs{0.0};        ///< x13 * x24
  double rhs{0.0};        ///< x12 * x34 + x23 * x14
  double rel_residual{0.0};
};

/**
 * For four points on a common circle in cyclic order, the renormalised pair
 * weights x_ij = |det_ij| / sqrt(|det_i0 det_j0|) (computed from exact
 * determinants against a fifth reference vertex v0) satisfy the quadrilateral
 * relation x13 x24 = x12 x34 + x23 x14.  Concyclicity and order are decided
 * numerically by a cross-ratio test at tolerance tol.
 * With require_valid, throws std::invalid_argument when the points are not
 * concyclic or not in cyclic order; otherwise the flags report it.
 */
CyclicQuadReport verify_cyclic_quad(const std::array<ProjPoint, 4>& vs,
                                    const ProjPoint& v0, double tol = 1e-9,
                                    bool require_valid = true);

}  // namespace farey3d
