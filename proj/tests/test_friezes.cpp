// SPDX-License-Identifier: MIT
// Closed angle words, their bands, canonical signatures, and enumeration.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "farey3d/friezes.hpp"
#include "farey3d/sampling.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace farey3d;

namespace {

Quiddity ints(std::initializer_list<long long> xs) {
  Quiddity q;
  for (long long x : xs) q.emplace_back(x, 0);
  return q;
}

// The closed pentagon in the planar sub-graph (vertices inf, 0, -1, -3/2, -2
// up to gauge); its transfer product is diag(-1, 1).
const Quiddity kPentagon = ints({-1, 3, -1, 2, -2});

// The angle word of a closed path is quasi-periodic, not periodic: one turn
// around the path rescales the skew representatives by the diagonal units of
// the transfer product P = prod (0 1; 1 a_i), so a_{j+m} = (-1)^m u_{j+1}^2 a_j
// with u even/odd = P_11 / P_22.  Rebasing and reversal therefore carry unit
// corrections; plain cyclic rotation of the word does not close.
Mat2 transfer(const Quiddity& q) {
  Mat2 p = Mat2::identity();
  for (const auto& a : q) p = p * Mat2(EInt(0, 0), EInt(1, 0), EInt(1, 0), a);
  return p;
}

EInt angle_at(const Quiddity& q, long long j) {
  const long long m = static_cast<long long>(q.size());
  const Mat2 p = transfer(q);
  if (1 <= j && j <= m) return q[static_cast<std::size_t>(j - 1)];
  if (j > m) {
    const EInt u = ((j - m + 1) % 2 == 0) ? p.m11 : p.m22;
    const EInt f = u * u;
    return (m % 2 != 0 ? -f : f) * angle_at(q, j - m);
  }
  const EInt u = ((j + 1) % 2 == 0) ? p.m11 : p.m22;
  const EInt f = conj(u) * conj(u);
  return (m % 2 != 0 ? -f : f) * angle_at(q, j + m);
}

// Word of the same closed path based r vertices later.
Quiddity rebase(const Quiddity& q, std::size_t r) {
  Quiddity out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    out[i] = angle_at(q, static_cast<long long>(r + i) + 1);
  return out;
}

// Word of the closed path traversed backwards: angle j becomes -a_{-j}.
Quiddity reverse_path(const Quiddity& q) {
  Quiddity out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    out[i] = -angle_at(q, -static_cast<long long>(i) - 1);
  return out;
}

Quiddity twist(const Quiddity& q, int unit_exp, int phase) {
  Quiddity out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const int e = ((i + static_cast<std::size_t>(phase)) % 2 == 0) ? unit_exp
                                                                  : -unit_exp;
    out[i] = sigma_pow(e) * q[i];
  }
  return out;
}

Quiddity conj_word(const Quiddity& q) {
  Quiddity out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = conj(q[i]);
  return out;
}

std::multiset<std::string> signature_set(const FriezeEnumResult& r, bool mc) {
  std::multiset<std::string> out;
  for (const auto& q : r.quiddities) out.insert(band_signature(q, mc));
  return out;
}

}  // namespace

TEST_CASE("quiddity_closes: pinned words") {
  CHECK(quiddity_closes(kPentagon));
  CHECK(quiddity_closes(ints({0, 0, 0, 0})));       // doubled edge (revisiting)
  CHECK(!quiddity_closes(ints({1, 3, 1, 2, 2})));   // sign pattern matters
  CHECK(!quiddity_closes(ints({-1, 3, -1, 2, -1})));
  CHECK(!quiddity_closes(ints({1, 1, 1})));
  CHECK(!quiddity_closes({}));
  // closure is rebase / reversal / conjugation invariant
  for (std::size_t r = 0; r < kPentagon.size(); ++r) {
    CHECK(quiddity_closes(rebase(kPentagon, r)));
    CHECK(quiddity_closes(reverse_path(rebase(kPentagon, r))));
    CHECK(quiddity_closes(conj_word(rebase(kPentagon, r))));
  }
  // plain cyclic rotation is not a gauge move: for this pentagon the unit
  // corrections flip the sign of the wrapped entry, so closure breaks
  CHECK(!quiddity_closes({kPentagon[1], kPentagon[2], kPentagon[3], kPentagon[4],
                          kPentagon[0]}));
}

TEST_CASE("frieze_band: pinned pentagon band") {
  const FriezeBand band = frieze_band(kPentagon);
  CHECK(band.m == 5);
  CHECK(band.zero_free);
  REQUIRE(band.rows.size() == 5);
  // Second-column moduli (2, 2, 1, 3, 1) match the classical pentagon
  // frieze generated by the quiddity moduli (1, 3, 1, 2, 2).
  const std::vector<std::vector<EInt>> expect = {
      {EInt(1, 0), EInt(2, 0)},  {EInt(3, 0), EInt(2, 0)}, {EInt(1, 0), EInt(1, 0)},
      {EInt(2, 0), EInt(3, 0)},  {EInt(2, 0), EInt(1, 0)},
  };
  CHECK(band.rows == expect);
}

TEST_CASE("frieze_band: first column is the alternately signed word") {
  const FriezeBand band = frieze_band(kPentagon);
  for (std::size_t i = 0; i < band.m; ++i) {
    const EInt want = (i % 2 == 0) ? -kPentagon[i] : kPentagon[i];
    CHECK(band.rows[i][0] == want);
  }
}

TEST_CASE("frieze_band: rejects short or non-closing words") {
  CHECK_THROWS_AS(frieze_band(ints({1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(frieze_band(ints({1, 3, 1, 2, 2})), std::invalid_argument);
}

TEST_CASE("frieze_band: the doubled edge has an all-zero band") {
  const FriezeBand band = frieze_band(ints({0, 0, 0, 0}));
  CHECK(band.m == 4);
  CHECK(!band.zero_free);
  for (const auto& row : band.rows)
    for (const auto& e : row) CHECK(is_zero(e));
}

TEST_CASE("band_signature: invariance under the gauge moves") {
  std::mt19937_64 rng(40);
  FriezeEnumResult r5 = enumerate_friezes(5);
  std::vector<Quiddity> pool = r5.quiddities;
  pool.push_back(kPentagon);
  for (const auto& q : pool) {
    const std::string sig = band_signature(q, false);
    const std::string sig_mc = band_signature(q, true);
    for (int trial = 0; trial < 8; ++trial) {
      Quiddity v = rebase(q, static_cast<std::size_t>(random_in(rng, 0, 4)));
      if (random_in(rng, 0, 1) == 1) v = reverse_path(v);
      v = twist(v, static_cast<int>(random_in(rng, 0, 5)),
                static_cast<int>(random_in(rng, 0, 1)));
      CHECK(quiddity_closes(v));  // every gauge move preserves closure
      CHECK(band_signature(v, false) == sig);
      CHECK(band_signature(conj_word(v), true) == sig_mc);
    }
  }
}

TEST_CASE("enumerate_friezes: period 5 output is sound and deduplicated") {
  const FriezeEnumResult r = enumerate_friezes(5);
  CHECK(!r.truncated);
  CHECK(!r.quiddities.empty());
  std::set<std::string> sigs;
  for (const auto& q : r.quiddities) {
    REQUIRE(q.size() == 5);
    CHECK(quiddity_closes(q));
    for (const auto& a : q) {
      CHECK(norm(a) >= 1);
      CHECK(norm(a) <= 9);  // default cap (m - 2)^2
    }
    const FriezeBand band = frieze_band(q);
    CHECK(band.zero_free);
    CHECK(band.rows.front().size() == 2);  // height m - 3
    CHECK(sigs.insert(band_signature(q, false)).second);  // pairwise distinct
  }
  // exactly one class contains the planar pentagon
  const std::string target = band_signature(kPentagon, false);
  CHECK(sigs.count(target) == 1);
}

TEST_CASE("enumerate_friezes: pruned and unpruned searches agree") {
  for (const std::size_t m : {std::size_t{4}, std::size_t{5}}) {
    FriezeEnumOptions fast, slow;
    slow.disable_growth_prune = true;
    const FriezeEnumResult a = enumerate_friezes(m, fast);
    const FriezeEnumResult b = enumerate_friezes(m, slow);
    CHECK(signature_set(a, false) == signature_set(b, false));
    CHECK(a.nodes <= b.nodes);
  }
}

TEST_CASE("enumerate_friezes: limits and budgets truncate") {
  FriezeEnumOptions one;
  one.limit = 1;
  const FriezeEnumResult r1 = enumerate_friezes(5, one);
  CHECK(r1.quiddities.size() == 1);
  CHECK(r1.truncated);

  FriezeEnumOptions tiny;
  tiny.node_budget = 10;
  const FriezeEnumResult r2 = enumerate_friezes(5, tiny);
  CHECK(r2.truncated);
  CHECK(r2.nodes <= 11);

  CHECK_THROWS_AS(enumerate_friezes(3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_friezes(9), std::invalid_argument);
}

TEST_CASE("enumerate_friezes: conjugation-modding never enlarges the count") {
  FriezeEnumOptions mc;
  mc.modulo_conjugation = true;
  const FriezeEnumResult plain = enumerate_friezes(5);
  const FriezeEnumResult folded = enumerate_friezes(5, mc);
  CHECK(folded.quiddities.size() <= plain.quiddities.size());
  // every plain class maps onto some folded class
  std::set<std::string> folded_sigs;
  for (const auto& q : folded.quiddities) folded_sigs.insert(band_signature(q, true));
  for (const auto& q : plain.quiddities)
    CHECK(folded_sigs.count(band_signature(q, true)) == 1);
}
