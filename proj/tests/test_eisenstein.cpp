// SPDX-License-Identifier: MIT
// Frozen-value and property tests for exact ring arithmetic in Z[s].
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "farey3d/eisenstein.hpp"
#include "farey3d/sampling.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace farey3d;

TEST_CASE("norm: frozen values") {
  CHECK(norm(EInt(0, 0)) == 0);
  CHECK(norm(EInt(1, 0)) == 1);
  CHECK(norm(EInt(0, 1)) == 1);
  CHECK(norm(EInt(1, 1)) == 3);   // 1 + s has modulus sqrt(3)
  CHECK(norm(EInt(2, 1)) == 7);
  CHECK(norm(EInt(2, -1)) == 3);
  CHECK(norm(EInt(-3, 2)) == 7);  // 9 - 6 + 4
}

TEST_CASE("units: table, powers, logs") {
  const auto& u = units();
  for (int k = 0; k < 6; ++k) {
    CHECK(is_unit(u[static_cast<std::size_t>(k)]));
    CHECK(sigma_pow(k) == u[static_cast<std::size_t>(k)]);
    CHECK(unit_log(u[static_cast<std::size_t>(k)]) == k);
  }
  CHECK(sigma_pow(6) == EInt(1, 0));
  CHECK(sigma_pow(3) == EInt(-1, 0));   // s^3 = -1
  CHECK(sigma_pow(-1) == EInt(1, -1));  // s^-1 = conj(s)
  CHECK(sigma_pow(2) == EInt(-1, 1));   // s^2 = s - 1
  // s * conj(s) = 1
  CHECK(EInt(0, 1) * conj(EInt(0, 1)) == EInt(1, 0));
  CHECK_THROWS_AS(unit_log(EInt(2, 0)), std::invalid_argument);
  CHECK_THROWS_AS(unit_inverse(EInt(0, 0)), std::invalid_argument);
  for (int k = 0; k < 6; ++k)
    CHECK(sigma_pow(k) * unit_inverse(sigma_pow(k)) == EInt(1, 0));
}

TEST_CASE("multiplication: ring axioms on random samples") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const EInt x = random_eint(rng, 50);
    const EInt y = random_eint(rng, 50);
    const EInt z = random_eint(rng, 50);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(norm(x * y) == norm(x) * norm(y));
    CHECK(conj(x * y) == conj(x) * conj(y));
    CHECK(conj(conj(x)) == x);
    CHECK(mul_sigma(x) == EInt(0, 1) * x);
    CHECK(mul_sigma_inv(x) == EInt(1, -1) * x);
    CHECK(mul_sigma_inv(mul_sigma(x)) == x);
  }
}

TEST_CASE("sector: agrees with the floating-point argument") {
  const double third_pi = std::numbers::pi / 3.0;
  for (long long a = -6; a <= 6; ++a) {
    for (long long b = -6; b <= 6; ++b) {
      if (a == 0 && b == 0) continue;
      const EInt x(a, b);
      double arg = std::arg(to_complex(x));
      if (arg < 0) arg += 2.0 * std::numbers::pi;
      const double k = arg / third_pi;
      const double nearest = std::round(k);
      int expected;
      if (std::abs(k - nearest) < 1e-9)  // on a boundary ray: lower sector wins
        expected = static_cast<int>(nearest) % 6;
      else
        expected = static_cast<int>(std::floor(k)) % 6;
      CHECK(sector(x) == expected);
    }
  }
  CHECK(sector(EInt(0, 0)) == 0);
  CHECK(sector(EInt(1, 0)) == 0);
  CHECK(sector(EInt(0, 1)) == 1);   // arg exactly pi/3
  CHECK(sector(EInt(-1, 1)) == 2);  // arg exactly 2 pi/3
  CHECK(sector(EInt(-1, 0)) == 3);
  CHECK(sector(EInt(0, -1)) == 4);
  CHECK(sector(EInt(1, -1)) == 5);
  // scaling by s advances the sector by one for pure unit directions
  for (int k = 0; k < 6; ++k) CHECK(sector(sigma_pow(k)) == k);
}

TEST_CASE("divmod: frozen examples") {
  {
    // (2 + s) = (-1 + 3s)(1 - s) exactly
    const auto [q, r] = divmod(EInt(2, 1), EInt(1, -1));
    CHECK(q == EInt(-1, 3));
    CHECK(r == EInt(0, 0));
  }
  {
    // 5 / 2: quotient coefficient 2.5 rounds to the even 2
    const auto [q, r] = divmod(EInt(5, 0), EInt(2, 0));
    CHECK(q == EInt(2, 0));
    CHECK(r == EInt(1, 0));
  }
  {
    // -5 / 2: -2.5 rounds to the even -2
    const auto [q, r] = divmod(EInt(-5, 0), EInt(2, 0));
    CHECK(q == EInt(-2, 0));
    CHECK(r == EInt(-1, 0));
  }
  CHECK_THROWS_AS(divmod(EInt(1, 0), EInt(0, 0)), std::domain_error);
}

TEST_CASE("divmod: Euclidean property on random samples") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const EInt x = random_eint(rng, 1000);
    const EInt y = random_nonzero_eint(rng, 40);
    const auto [q, r] = divmod(x, y);
    CHECK(x == q * y + r);
    CHECK(4 * norm(r) <= 3 * norm(y));  // remainder strictly inside the covering radius
  }
}

TEST_CASE("gcd: frozen values and Bezout") {
  CHECK(norm(gcd(EInt(4, 2), EInt(2, 0))) == 4);   // common factor 2
  CHECK(norm(gcd(EInt(2, 1), EInt(1, -1))) == 1);  // norms 7 and 3 are coprime
  CHECK(norm(gcd(EInt(0, 0), EInt(3, 1))) == norm(EInt(3, 1)));
  CHECK_THROWS_AS(gcd(EInt(0, 0), EInt(0, 0)), std::domain_error);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const EInt x = random_eint(rng, 200);
    const EInt y = random_eint(rng, 200);
    if (is_zero(x) && is_zero(y)) continue;
    const ExtGcd e = extended_gcd(x, y);
    CHECK(e.g == e.u * x + e.v * y);
    CHECK(norm(e.g) == norm(gcd(x, y)));
    if (!is_zero(x)) CHECK(exact_div(x, e.g) * e.g == x);
    if (!is_zero(y)) CHECK(exact_div(y, e.g) * e.g == y);
  }
}

TEST_CASE("exact_div: throws when division is not exact") {
  CHECK(exact_div(EInt(4, 2), EInt(2, 0)) == EInt(2, 1));
  CHECK_THROWS_AS(exact_div(EInt(1, 0), EInt(2, 0)), std::domain_error);
  CHECK_THROWS_AS(exact_div(EInt(1, 0), EInt(0, 0)), std::domain_error);
}

TEST_CASE("to_complex and to_string") {
  const auto z = to_complex(EInt(2, 1));  // 2 + s = 2.5 + i sqrt(3)/2
  CHECK(z.real() == doctest::Approx(2.5));
  CHECK(z.imag() == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(to_string(EInt(2, -3)) == "2-3s");
  CHECK(to_string(EInt(0, 1)) == "s");
  CHECK(to_string(EInt(-1, 0)) == "-1");
  CHECK(to_string(EInt(0, 0)) == "0");
  CHECK(to_string(EInt(3, 1)) == "3+s");
}
