// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file tilings.hpp
 * @brief Bi-infinite arrays over Z[s] with unit adjacent minors, viewed
 *        through finite windows, and their bijections with pairs of paths
 *        and with (angles, angles, matrix) triples.
 *
 * A pair of normalised paths u (rows) and v (columns) produces a tame array
 * in two equivalent forms: scalar entries p_i r_j + q_i s_j, or determinant
 * entries p_i s_j - q_i r_j; both have every adjacent 2x2 minor equal to 1.
 * Conversely a window containing rows 0, 1 and columns 0, 1 determines the
 * two paths exactly, and a further exact factorisation turns the pair of
 * paths into two angle words plus one seed matrix and back.
 */

#include "farey3d/paths.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace farey3d {

enum class TilingMode { scalar, det };

/// Finite rectangular window of a bi-infinite array; entries[r][c] sits at
/// absolute position (row_offset + r, col_offset + c).
struct TilingWindow {
  TilingMode mode{TilingMode::scalar};
  long long row_offset{0};
  long long col_offset{0};
  std::vector<std::vector<EInt>> entries;

  long long rows() const { return static_cast<long long>(entries.size()); }
  long long cols() const {
    return entries.empty() ? 0 : static_cast<long long>(entries.front().size());
  }
  /// Entry at absolute position (i, j); throws std::out_of_range outside the window.
  const EInt& at(long long i, long long j) const;

  friend bool operator==(const TilingWindow& x, const TilingWindow& y) {
    return x.mode == y.mode && x.row_offset == y.row_offset &&
           x.col_offset == y.col_offset && x.entries == y.entries;
  }
};

/// Window validity report.
struct WindowCheck {
  bool ok{true};
  bool rectangular{true};
  bool minors_ok{true};
  long long bad_row{0};  ///< absolute row of the first failing minor
  long long bad_col{0};  ///< absolute column of the first failing minor
};

/// Verifies shape and that every adjacent 2x2 minor equals 1.
WindowCheck check_window(const TilingWindow& w);

/**
 * The window of the array built from two normalised paths: rows from u,
 * columns from v, entry (i, j) = p_i r_j + q_i s_j (scalar mode) or
 * p_i s_j - q_i r_j (det mode).  Both paths must be normalised.
 */
TilingWindow tiling_from_paths(const PathRep& u, const PathRep& v, TilingMode mode);

/// Pointwise companion (r, s) -> (s, -r); det-mode window of (u, v) equals
/// the scalar-mode window of (u, companion(v)).
PathRep path_det_companion(const PathRep& v);

/// Inverse companion (r, s) -> (-s, r).
PathRep path_det_companion_inverse(const PathRep& v);

/**
 * Recovers the unique pair of normalised paths reproducing a window whose
 * row range contains {0, 1} and column range contains {0, 1}.  The window
 * must pass check_window and reproduce exactly from the recovered pair
 * (otherwise std::invalid_argument).  The returned v matches w.mode, i.e.
 * tiling_from_paths(u, v, w.mode) == w.
 */
std::pair<PathRep, PathRep> paths_from_tiling(const TilingWindow& w);

/// Row angle word a, column angle word b, and seed matrix X.
struct TilingTriple {
  AngleSeq a;
  AngleSeq b;
  Mat2 x;

  friend bool operator==(const TilingTriple& s, const TilingTriple& t) {
    return s.a == t.a && s.b == t.b && s.x == t.x;
  }
};

/**
 * Builds the window rows [r0, r1) x columns [c0, c1) of the array encoded by
 * a triple.  Rows are the skew path with seeds (s^-alpha, 0), (0, s^alpha)
 * where alpha = sector(a_0) div 2 (alpha = 0 when angle 0 is absent from the
 * word or a_0 = 0); columns come from the skew path seeded by the columns of
 * X * diag(s^-beta, s^beta) with beta from b_0 likewise; both paths are then
 * converted to the normalised gauge and combined in det mode (converted to
 * scalar mode on request).  Requires r0 <= 0 < 2 <= r1, the angle word a to
 * cover [r0 + 1, r1 - 2], det(X) = 1, and the analogous column conditions.
 */
TilingWindow triple_to_tiling(const TilingTriple& t, long long r0, long long r1,
                              long long c0, long long c1, TilingMode mode);

/**
 * Reads the triple back off a window (row/column ranges as in
 * paths_from_tiling).  Exact inverse: triple_to_tiling over the same ranges
 * returns the window, and applying it to a window produced by
 * triple_to_tiling returns the exact same triple (angle ranges
 * [r0+1, r1-2] and [c0+1, c1-2]).
 */
TilingTriple tiling_to_triple(const TilingWindow& w);

/**
 * The unit-gauge action on windows: entry (i, j) is multiplied by
 * s^((-1)^i k) * s^((-1)^j l) * (-1)^flip with i, j absolute indices.
 * k, l are taken mod 6.
 */
TilingWindow equivalence_transform(const TilingWindow& w, long long k, long long l,
                                   bool flip);

/// Parameters (k, l, flip) of a gauge transform matching w1 to w2, if any.
std::optional<std::tuple<int, int, bool>> tilings_equivalent(const TilingWindow& w1,
                                                             const TilingWindow& w2);

/// Number of distinct windows in the gauge orbit (at most 18).
int orbit_size(const TilingWindow& w);

/**
 * The action on triples that matches window equivalence: the angle words get
 * the alternating twists a_i -> s^((-1)^(i+1) 2k) a_i and
 * b_j -> s^((-1)^(j+1) 2l) b_j, and X flips sign when `negate` is set.
 * The case-based seed selection in triple_to_tiling absorbs the word twists
 * (the rebuilt seed paths differ from the originals by an in-group unit
 * regauge), so X itself only carries the residual sign.  The action has
 * order 3*3*2 = 18 on a generic triple.
 */
TilingTriple triple_transform(const TilingTriple& t, long long k, long long l,
                              bool negate);

/// Parameters over k, l in {-1, 0, 1} and both signs matching t1 to t2, if any.
std::optional<std::tuple<int, int, bool>> triples_equivalent(const TilingTriple& t1,
                                                             const TilingTriple& t2);

/// Integrality structure of a window (detects arrays of the planar sub-graph).
struct CoplanarityReport {
  bool all_integer{false};       ///< every entry has zero s-coefficient
  bool integer_row_pair{false};  ///< some two consecutive rows are all integer
  bool integer_col_pair{false};  ///< some two consecutive columns are all integer
  bool consistent{true};         ///< all_integer == (integer_row_pair && integer_col_pair)
  long long row_witness{0};      ///< absolute index of the first such row pair
  long long col_witness{0};      ///< absolute index of the first such column pair
};

/**
 * On a valid window (check_window passes, at least 2x2), having two
 * consecutive all-integer rows and two consecutive all-integer columns is
 * equivalent to the whole window being integer; the report records both
 * sides and their agreement.
 */
CoplanarityReport coplanarity_report(const TilingWindow& w);

}  // namespace farey3d
