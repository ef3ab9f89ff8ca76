// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file sampling.hpp
 * @brief Deterministic random generators for tests and self-checks.
 *
 * All generators draw from a caller-owned std::mt19937_64 so that a fixed
 * seed reproduces the exact same sample stream on every platform.
 */

#include "farey3d/projective.hpp"

#include <random>
#include <vector>

namespace farey3d {

/// Uniform integer in [lo, hi].
long long random_in(std::mt19937_64& rng, long long lo, long long hi);

/// Ring element with both coefficients uniform in [-coeff, coeff].
EInt random_eint(std::mt19937_64& rng, long long coeff);

/// Nonzero ring element with coefficients in [-coeff, coeff].
EInt random_nonzero_eint(std::mt19937_64& rng, long long coeff);

/// One of the six units, uniformly.
EInt random_unit(std::mt19937_64& rng);

/**
 * Determinant-1 matrix built as a product of `factors` elementary shears
 * with coefficients in [-coeff, coeff], with occasional unit diagonal
 * twists diag(t, t^-1).
 */
Mat2 random_sl2(std::mt19937_64& rng, int factors, long long coeff);

/// Image of infinity under random_sl2: a random point in canonical form.
ProjPoint random_point(std::mt19937_64& rng, int factors, long long coeff);

/// Angle word of the given length with entry norms <= cap (entries may be 0).
std::vector<EInt> random_angles(std::mt19937_64& rng, std::size_t len, long long cap_norm);

}  // namespace farey3d
