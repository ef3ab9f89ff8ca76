// SPDX-License-Identifier: MIT
// Path gauges, turning angles, and the continued-fraction correspondence.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "farey3d/farey.hpp"
#include "farey3d/paths.hpp"
#include "farey3d/sampling.hpp"

#include <doctest.h>

using namespace farey3d;

namespace {

ProjPoint lat(long long a, long long b) {
  return ProjPoint(EInt(a, b), EInt(1, 0));
}

ProjPoint pq(long long pa, long long pb, long long qa, long long qb) {
  return ProjPoint(EInt(pa, pb), EInt(qa, qb));
}

const ProjPoint zero = lat(0, 0);
const ProjPoint one = lat(1, 0);
const ProjPoint sig = lat(0, 1);
const ProjPoint inf = infinity_point();

// The four-vertex pair of closed-path gauges behind the worked 4x4 window:
// points (inf, 0, 1, s) and (0, s^2, -1, inf) in fixed unit gauges.
PathRep figure_u() {
  PathRep u;
  u.base_index = 0;
  u.mode = PathMode::normalised;
  u.reps = {pq(1, 0, 0, 0), pq(0, 0, 1, 0), pq(-1, 0, -1, 0), pq(1, -1, 0, -1)};
  return u;
}

PathRep figure_v() {
  PathRep v;
  v.base_index = 0;
  v.mode = PathMode::normalised;
  v.reps = {pq(0, 0, -1, 1), pq(0, 1, 1, -1), pq(-1, 0, 1, 0), pq(-1, 0, 0, 0)};
  return v;
}

AngleSeq word(std::vector<EInt> values, long long base = 1) {
  AngleSeq a;
  a.base_index = base;
  a.values = std::move(values);
  return a;
}

// Random skew path built forward from the standard seeds.
PathRep random_skew_path(std::mt19937_64& rng, std::size_t angles, long long cap) {
  const AngleSeq a = word(random_angles(rng, angles, cap));
  return path_from_angles(infinity_point(), ProjPoint(EInt(0, 0), EInt(1, 0)), a);
}

}  // namespace

TEST_CASE("normalise_path: frozen gauges of the worked example") {
  const std::vector<ProjPoint> upts = {inf, zero, one, sig};
  const PathRep u = normalise_path(upts, pq(1, 0, 0, 0), 0, PathMode::normalised);
  CHECK(u == figure_u());

  const ProjPoint sig2 = lat(-1, 1);
  const std::vector<ProjPoint> vpts = {zero, sig2, lat(-1, 0), inf};
  const PathRep v = normalise_path(vpts, pq(0, 0, -1, 1), 0, PathMode::normalised);
  CHECK(v == figure_v());

  for (std::size_t i = 0; i + 1 < u.reps.size(); ++i)
    CHECK(det2(u.reps[i], u.reps[i + 1]) == EInt(1, 0));

  CHECK_THROWS_AS(normalise_path({zero, lat(2, 0)}, pq(0, 0, 1, 0), 0,
                                 PathMode::normalised),
                  std::invalid_argument);           // not an edge
  CHECK_THROWS_AS(normalise_path(upts, pq(2, 0, 0, 0), 0, PathMode::normalised),
                  std::invalid_argument);           // reducible seed
  CHECK_THROWS_AS(normalise_path(upts, pq(0, 0, 1, 0), 0, PathMode::normalised),
                  std::invalid_argument);           // seed not on first vertex
}

TEST_CASE("skew gauge: sign pattern and inverse conversions") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const PathRep skew = random_skew_path(rng, 6, 7);
    REQUIRE(skew.mode == PathMode::skew);
    for (std::size_t k = 0; k + 1 < skew.reps.size(); ++k) {
      const long long i = skew.base_index + static_cast<long long>(k);
      const EInt want = (i % 2 == 0) ? EInt(1, 0) : EInt(-1, 0);
      CHECK(det2(skew.reps[k], skew.reps[k + 1]) == want);
    }
    const PathRep norm = skew_to_normalised(skew);
    for (std::size_t k = 0; k + 1 < norm.reps.size(); ++k)
      CHECK(det2(norm.reps[k], norm.reps[k + 1]) == EInt(1, 0));
    CHECK(normalised_to_skew(norm) == skew);
    CHECK(skew_to_normalised(normalised_to_skew(norm)) == norm);
    for (std::size_t k = 0; k < norm.reps.size(); ++k)
      CHECK(point_eq(norm.reps[k], skew.reps[k]));
  }
}

TEST_CASE("t_angle: frozen value and contract") {
  // skew triple 1/0, 0/1, 1/1 turns with angle 1
  CHECK(t_angle(pq(1, 0, 0, 0), pq(0, 0, 1, 0), pq(1, 0, 1, 0), 1) == EInt(1, 0));
  // the same representatives at an even position violate the sign pattern
  CHECK_THROWS_AS(t_angle(pq(1, 0, 0, 0), pq(0, 0, 1, 0), pq(1, 0, 1, 0), 2),
                  std::invalid_argument);
}

TEST_CASE("angle_sequence and path_from_angles: round trips") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const PathRep skew = random_skew_path(rng, 7, 7);
    const AngleSeq a = angle_sequence(skew);
    CHECK(a.base_index == 1);
    CHECK(a.values.size() == skew.reps.size() - 2);
    const PathRep rebuilt = path_from_angles(skew.reps[0], skew.reps[1], a);
    CHECK(rebuilt == skew);
  }
}

TEST_CASE("path_from_angles: backward extension against a forward witness") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const PathRep skew = random_skew_path(rng, 6, 7);
    const AngleSeq a = angle_sequence(skew);
    // shift the whole object left by two: seeds then live at indices 2 and 3
    AngleSeq shifted = a;
    shifted.base_index = -1;  // angles now cover [-1, end-2)
    const PathRep direct = path_from_angles(skew.reps[2], skew.reps[3], shifted);
    CHECK(direct.base_index == -2);
    CHECK(direct.reps.size() == skew.reps.size());
    for (std::size_t k = 0; k < skew.reps.size(); ++k)
      CHECK(direct.reps[k] == skew.reps[k]);
  }
}

TEST_CASE("twists: path and angle transforms are consistent") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const PathRep skew = random_skew_path(rng, 6, 7);
    for (long long k = -2; k <= 2; ++k) {
      const PathRep twisted = twist_path(skew, k);
      REQUIRE(twisted.reps.size() == skew.reps.size());
      for (std::size_t t = 0; t + 1 < twisted.reps.size(); ++t) {
        const long long i = twisted.base_index + static_cast<long long>(t);
        const EInt want = (i % 2 == 0) ? EInt(1, 0) : EInt(-1, 0);
        CHECK(det2(twisted.reps[t], twisted.reps[t + 1]) == want);
      }
      CHECK(angle_sequence(twisted) == twist_angles(angle_sequence(skew), k));
      CHECK(twist_path(twisted, -k) == skew);
    }
  }
}

TEST_CASE("t_angle_general: reduces to the integer angle on skew paths") {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 100; ++trial) {
    const PathRep skew = random_skew_path(rng, 6, 7);
    const AngleSeq a = angle_sequence(skew);
    for (std::size_t k = 0; k < a.values.size(); ++k) {
      // a zero angle makes the path backtrack (prev == next), which the
      // general angle excludes
      if (is_zero(a.values[k])) continue;
      const ERatio r = t_angle_general(skew.reps[k], skew.reps[k + 1], skew.reps[k + 2]);
      CHECK(r == ERatio{a.values[k], EInt(1, 0)});
    }
  }
}

TEST_CASE("t_angle_general: closed-cycle products") {
  // any 3-cycle of pairwise distinct points multiplies to -1
  std::mt19937_64 rng(27);
  int done = 0;
  while (done < 100) {
    const ProjPoint a = random_point(rng, 5, 3);
    const ProjPoint b = random_point(rng, 5, 3);
    const ProjPoint c = random_point(rng, 5, 3);
    if (point_eq(a, b) || point_eq(b, c) || point_eq(a, c)) continue;
    const ERatio r1 = t_angle_general(a, b, c);
    const ERatio r2 = t_angle_general(b, c, a);
    const ERatio r3 = t_angle_general(c, a, b);
    const ERatio prod{r1.num * r2.num * r3.num, r1.den * r2.den * r3.den};
    CHECK(prod == ERatio{EInt(-1, 0), EInt(1, 0)});
    ++done;
  }
  // the hexagon of common neighbours of an edge multiplies to (1+s)^6 = -27
  const auto hexagon_product = [](const ProjPoint& f, const ProjPoint& g) {
    const auto n = symmetric_farey_sum(f, g);
    ERatio prod{EInt(1, 0), EInt(1, 0)};
    for (std::size_t k = 0; k < 6; ++k) {
      const ERatio r =
          t_angle_general(n[k], n[(k + 1) % 6], n[(k + 2) % 6]);
      prod = ERatio{prod.num * r.num, prod.den * r.den};
    }
    return prod;
  };
  CHECK(hexagon_product(infinity_point(), zero) == ERatio{EInt(-27, 0), EInt(1, 0)});
  done = 0;
  while (done < 20) {
    const Mat2 m = random_sl2(rng, 6, 4);
    const ProjPoint f = reduce(mobius_apply(m, infinity_point()));
    const ProjPoint g = reduce(mobius_apply(m, zero));
    CHECK(hexagon_product(f, g) == ERatio{EInt(-27, 0), EInt(1, 0)});
    ++done;
  }
}

TEST_CASE("cf_eval: frozen pins") {
  {
    const CFResult r = cf_eval(word({EInt(1, 0), EInt(1, 0)}));
    CHECK(r.endpoint == pq(1, 0, 2, 0));  // (K(a2), K(a1 a2)) = (1, 2)
    CHECK(point_eq(r.nested, lat(2, 0)));  // [1; 1] = 2
    CHECK(r.strict_defined);
    CHECK(r.first_zero_tail == 0);
  }
  {
    // single angle: endpoint 1/a1, nested value a1
    const CFResult r = cf_eval(word({EInt(3, 1)}));
    CHECK(point_eq(r.endpoint, ProjPoint(EInt(1, 0), EInt(3, 1))));
    CHECK(point_eq(r.nested, ProjPoint(EInt(3, 1), EInt(1, 0))));
  }
  {
    // [-1; 1] = 0 in the middle: the innermost-first evaluation divides by zero
    const CFResult r = cf_eval(word({EInt(1, 0), EInt(-1, 0), EInt(1, 0)}));
    CHECK(!r.strict_defined);
    CHECK(r.first_zero_tail == 2);
    CHECK(point_eq(r.nested, infinity_point()));  // projective value still defined
  }
  {
    // two vanishing tails (k = 2 and k = 4): the innermost one is reported
    const CFResult r =
        cf_eval(word({EInt(0, 0), EInt(0, 0), EInt(0, 0), EInt(0, 0)}));
    CHECK(!r.strict_defined);
    CHECK(r.first_zero_tail == 4);
  }
  CHECK_THROWS_AS(cf_eval(word({EInt(1, 0)}, 0)), std::invalid_argument);
}

TEST_CASE("cf_eval: endpoint is the reciprocal of the nested value") {
  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t len = 1 + static_cast<std::size_t>(random_in(rng, 0, 11));
    const AngleSeq a = word(random_angles(rng, len, 9));
    const CFResult r = cf_eval(a);
    // endpoint representative: pure continuant form
    std::vector<EInt> tail(a.values.begin() + 1, a.values.end());
    CHECK(r.endpoint.p == continuant(tail));
    CHECK(r.endpoint.q == continuant(a.values));
    // as points, endpoint and nested are reciprocal
    CHECK(point_eq(r.endpoint, ProjPoint(r.nested.q, r.nested.p)));
  }
}

TEST_CASE("continuant: recurrence and reversal symmetry") {
  std::mt19937_64 rng(29);
  CHECK(continuant({}) == EInt(1, 0));
  CHECK(continuant({EInt(4, 1)}) == EInt(4, 1));
  for (int trial = 0; trial < 200; ++trial) {
    const std::vector<EInt> w = random_angles(rng, 6, 9);
    std::vector<EInt> r(w.rbegin(), w.rend());
    CHECK(continuant(w) == continuant(r));
    std::vector<EInt> head(w.begin(), w.end() - 1);
    std::vector<EInt> head2(w.begin(), w.end() - 2);
    CHECK(continuant(w) == continuant(head) * w.back() + continuant(head2));
  }
}

TEST_CASE("zero_subfractions: certificates match actual revisits") {
  std::mt19937_64 rng(30);
  // frozen: all-zero word alternates between two vertices
  {
    const AngleSeq a = word({EInt(0, 0), EInt(0, 0), EInt(0, 0)});
    const PathRep p = path_from_angles(inf, pq(0, 0, 1, 0), a);
    CHECK(point_eq(p.reps[0], p.reps[2]));
    CHECK(point_eq(p.reps[1], p.reps[3]));
    const auto zs = zero_subfractions(a);
    CHECK(zs.size() == 4);  // the three singletons and the full length-3 word
  }
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = 1 + static_cast<std::size_t>(random_in(rng, 0, 6));
    const AngleSeq a = word(random_angles(rng, len, 4));
    const PathRep p = path_from_angles(inf, pq(0, 0, 1, 0), a);
    const auto zs = zero_subfractions(a);
    // every reported pair certifies a revisit
    for (const auto& [k, j] : zs) {
      const std::size_t lo = static_cast<std::size_t>(k - p.base_index - 1);
      const std::size_t hi = static_cast<std::size_t>(j - p.base_index + 1);
      CHECK(point_eq(p.reps[lo], p.reps[hi]));
    }
    // every revisit at distance >= 2 is certified
    for (std::size_t x = 0; x < p.reps.size(); ++x)
      for (std::size_t y = x + 2; y < p.reps.size(); ++y)
        if (point_eq(p.reps[x], p.reps[y])) {
          bool found = false;
          for (const auto& [k, j] : zs)
            found = found ||
                    (k == p.base_index + static_cast<long long>(x) + 1 &&
                     j == p.base_index + static_cast<long long>(y) - 1);
          CHECK(found);
        }
  }
}

TEST_CASE("verify_cyclic_quad: frozen pins") {
  {
    // 0, 1, 2, infinity on the real line; reference vertex s.
    // x13 = 2 * 3^(-1/4), x24 = 1, x12 = x14 = 1, x34 = x23 = 3^(-1/4).
    const CyclicQuadReport r =
        verify_cyclic_quad({zero, one, lat(2, 0), inf}, sig);
    CHECK(r.concyclic);
    CHECK(r.ordered);
    CHECK(r.lhs == doctest::Approx(2.0 * std::pow(3.0, -0.25)).epsilon(1e-9));
    CHECK(r.rhs == doctest::Approx(2.0 * std::pow(3.0, -0.25)).epsilon(1e-9));
    CHECK(r.rel_residual < 1e-9);
  }
  {
    // four sixth-roots of unity on the unit circle; reference vertex 0
    const CyclicQuadReport r =
        verify_cyclic_quad({one, sig, lat(-1, 1), lat(-1, 0)}, zero);
    CHECK(r.concyclic);
    CHECK(r.ordered);
    CHECK(r.lhs == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(r.rhs == doctest::Approx(3.0).epsilon(1e-9));
  }
  {
    // same four points out of cyclic order
    const CyclicQuadReport r = verify_cyclic_quad(
        {one, lat(-1, 1), sig, lat(-1, 0)}, zero, 1e-9, false);
    CHECK(r.concyclic);
    CHECK(!r.ordered);
    CHECK_THROWS_AS(
        verify_cyclic_quad({one, lat(-1, 1), sig, lat(-1, 0)}, zero),
        std::invalid_argument);
  }
  {
    // not concyclic at all
    const CyclicQuadReport r =
        verify_cyclic_quad({zero, one, sig, lat(3, 2)}, lat(5, 0), 1e-9, false);
    CHECK(!r.concyclic);
  }
}
