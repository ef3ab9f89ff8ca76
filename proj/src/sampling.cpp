// SPDX-License-Identifier: MIT
#include "farey3d/sampling.hpp"

#include <cmath>

namespace farey3d {

long long random_in(std::mt19937_64& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

EInt random_eint(std::mt19937_64& rng, long long coeff) {
  const Int a(random_in(rng, -coeff, coeff));
  const Int b(random_in(rng, -coeff, coeff));
  return EInt(a, b);
}

EInt random_nonzero_eint(std::mt19937_64& rng, long long coeff) {
  for (;;) {
    const EInt x = random_eint(rng, coeff);
    if (!is_zero(x)) return x;
  }
}

EInt random_unit(std::mt19937_64& rng) {
  return sigma_pow(random_in(rng, 0, 5));
}

Mat2 random_sl2(std::mt19937_64& rng, int factors, long long coeff) {
  Mat2 m = Mat2::identity();
  const EInt one(1, 0);
  const EInt zero(0, 0);
  for (int i = 0; i < factors; ++i) {
    const EInt t = random_eint(rng, coeff);
    // Alternate lower and upper shears so the product does not collapse
    // to a triangular matrix; sprinkle in unit diagonal twists.
    if (random_in(rng, 0, 1) == 0)
      m = m * Mat2(one, t, zero, one);
    else
      m = m * Mat2(one, zero, t, one);
    if (random_in(rng, 0, 3) == 0) {
      const EInt u = random_unit(rng);
      m = m * Mat2(u, zero, zero, unit_inverse(u));
    }
  }
  return m;
}

ProjPoint random_point(std::mt19937_64& rng, int factors, long long coeff) {
  return reduce(mobius_apply(random_sl2(rng, factors, coeff), infinity_point()));
}

std::vector<EInt> random_angles(std::mt19937_64& rng, std::size_t len, long long cap_norm) {
  std::vector<EInt> out;
  out.reserve(len);
  // norm(a,b) = a^2 + a b + b^2 >= (3/4) max(a,b)^2, so this box covers
  // every element of norm <= cap_norm; rejection keeps the sample uniform.
  const long long box =
      static_cast<long long>(std::sqrt(4.0 * static_cast<double>(cap_norm) / 3.0)) + 1;
  while (out.size() < len) {
    const EInt x = random_eint(rng, box);
    if (norm(x) <= Int(cap_norm)) out.push_back(x);
  }
  return out;
}

}  // namespace farey3d
