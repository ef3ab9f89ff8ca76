// SPDX-License-Identifier: MIT
#include "farey3d/eisenstein.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

namespace farey3d {

int unit_log(const EInt& x) {
  const auto& u = units();
  for (int k = 0; k < 6; ++k)
    if (u[static_cast<std::size_t>(k)] == x) return k;
  throw std::invalid_argument("unit_log: " + to_string(x) + " is not a unit");
}

int sector(const EInt& x) {
  if (is_zero(x)) return 0;
  const int sa = x.a.sign();
  const int sb = x.b.sign();
  const int sab = Int(x.a + x.b).sign();
  if (sa > 0 && sb >= 0) return 0;
  if (sa <= 0 && sab > 0) return 1;
  if (sb > 0 && sab <= 0) return 2;
  if (sa < 0 && sb <= 0) return 3;
  if (sa >= 0 && sab < 0) return 4;
  return 5;  // sb < 0 && sab >= 0: the remaining sign pattern
}

namespace {

// Nearest integer to n/d for d > 0, ties to even.
Int round_div(const Int& n, const Int& d) {
  Int q = n / d;          // truncates toward zero
  Int r = n - q * d;
  if (r < 0) {            // shift to floor division: 0 <= r < d
    q -= 1;
    r += d;
  }
  const Int twice = 2 * r;
  if (twice > d) return q + 1;
  if (twice < d) return q;
  return (q % 2 == 0) ? q : q + 1;  // exact half: round to even
}

}  // namespace

std::pair<EInt, EInt> divmod(const EInt& x, const EInt& y) {
  if (is_zero(y)) throw std::domain_error("divmod: division by zero");
  const EInt num = x * conj(y);
  const Int den = norm(y);
  const EInt q(round_div(num.a, den), round_div(num.b, den));
  const EInt r = x - q * y;
  // Nearest-coefficient rounding guarantees N(r) <= (3/4) N(y).
  assert(4 * norm(r) <= 3 * den);
  if (!(norm(r) < den))
    throw std::logic_error("divmod: remainder norm failed to decrease");
  return {q, r};
}

EInt exact_div(const EInt& x, const EInt& y) {
  auto [q, r] = divmod(x, y);
  if (!is_zero(r))
    throw std::domain_error("exact_div: " + to_string(y) + " does not divide " +
                            to_string(x));
  return q;
}

EInt gcd(const EInt& x, const EInt& y) {
  if (is_zero(x) && is_zero(y)) throw std::domain_error("gcd(0, 0) is undefined");
  EInt a = x, b = y;
  while (!is_zero(b)) {
    EInt r = divmod(a, b).second;
    a = b;
    b = r;
  }
  return a;
}

ExtGcd extended_gcd(const EInt& x, const EInt& y) {
  if (is_zero(x) && is_zero(y)) throw std::domain_error("gcd(0, 0) is undefined");
  // Invariants: a = u1*x + v1*y, b = u2*x + v2*y.
  EInt a = x, b = y;
  EInt u1(1, 0), v1(0, 0), u2(0, 0), v2(1, 0);
  while (!is_zero(b)) {
    auto [q, r] = divmod(a, b);
    a = b;
    b = r;
    EInt u3 = u1 - q * u2;
    EInt v3 = v1 - q * v2;
    u1 = u2;
    v1 = v2;
    u2 = u3;
    v2 = v3;
  }
  return ExtGcd{a, u1, v1};
}

std::complex<double> to_complex(const EInt& x) {
  static const double kRoot3Half = std::sqrt(3.0) / 2.0;
  const double a = x.a.convert_to<double>();
  const double b = x.b.convert_to<double>();
  return {a + 0.5 * b, kRoot3Half * b};
}

std::string to_string(const EInt& x) {
  std::ostringstream os;
  if (x.b == 0) {
    os << x.a;
  } else {
    if (x.a != 0) os << x.a << (x.b > 0 ? "+" : "");
    if (x.b == 1)
      os << "s";
    else if (x.b == -1)
      os << "-s";
    else
      os << x.b << "s";
  }
  return os.str();
}

}  // namespace farey3d
