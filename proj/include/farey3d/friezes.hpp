// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file friezes.hpp
 * @brief Closed paths of period m and the frieze bands they induce.
 *
 * A closed path is encoded by its cyclic angle word (quiddity) a_1..a_m; the
 * closure condition is that the transfer-matrix product equals
 * diag(k, (-1)^m k^-1) for a unit k.  Angle words of closed paths are
 * quasi-periodic rather than periodic: continuing past index m multiplies
 * each angle by (-1)^m times a squared diagonal unit of the transfer
 * product.  The band of pair determinants of the quasi-periodically
 * continued, normalised lift between the two border diagonals is the frieze
 * of the path: height m - 3, first column equal to the quiddity in the
 * normalised gauge, zero entries exactly at revisited points.  Enumeration
 * searches angle words over a norm ball, solving the last two angles from
 * the closure conditions, and deduplicates by a canonical band signature
 * (rebasing along the path x reversal x seed-edge unit twists, optionally
 * complex conjugation; rebase and reversal carry the quasi-period unit
 * corrections, so every variant again closes).
 */

#include "farey3d/paths.hpp"

#include <cstdint>
#include <vector>

namespace farey3d {

/// Cyclic angle word a_1..a_m (index k holds a_{k+1}).
using Quiddity = std::vector<EInt>;

/// True iff the transfer-matrix product of the word is diag(k, (-1)^m k^-1), k a unit.
bool quiddity_closes(const Quiddity& q);

/// Frieze band of a closed path.
struct FriezeBand {
  std::size_t m{0};
  /// rows[i][k] = det2 of normalised lifts at indices i and i + 2 + k,
  /// for i in [0, m) and k in [0, m - 3).
  std::vector<std::vector<EInt>> rows;
  bool zero_free{true};  ///< no vanishing entry (no revisited point)

  friend bool operator==(const FriezeBand& x, const FriezeBand& y) {
    return x.m == y.m && x.rows == y.rows;
  }
};

/**
 * Band of the closed path with the given quiddity (m >= 4 and
 * quiddity_closes required).  The lift continues the angle word
 * quasi-periodically around the closed path, seeds the skew path with
 * (1,0), (0,1) and converts to the normalised gauge before taking pair
 * determinants.
 */
FriezeBand frieze_band(const Quiddity& q);

/// Serialised canonical representative of a band's equivalence class.
std::string band_signature(const Quiddity& q, bool modulo_conjugation);

/// Enumeration options.
struct FriezeEnumOptions {
  Int cap_norm{0};            ///< search ball: N(a_i) <= cap (0 = default (m-2)^2)
  std::size_t limit{0};       ///< stop after this many distinct classes (0 = unlimited)
  std::uint64_t node_budget{0};  ///< DFS node cap (0 = unlimited)
  bool modulo_conjugation{false};
  bool require_zero_free{true};  ///< keep only friezes with no vanishing band entry
  bool disable_growth_prune{false};  ///< cross-check switch: drop the continuant bound prune
};

/// Enumeration result.
struct FriezeEnumResult {
  std::vector<Quiddity> quiddities;  ///< one canonical representative per class
  bool truncated{false};             ///< limit or node budget was hit
  std::uint64_t nodes{0};            ///< DFS nodes visited
};

/**
 * All closed paths of period m with angle norms bounded by the cap, up to
 * rebasing, reversal, and the unit gauge (and optionally conjugation).
 * Deterministic order.  m >= 4.
 */
FriezeEnumResult enumerate_friezes(std::size_t m, const FriezeEnumOptions& opts = {});

}  // namespace farey3d
