// SPDX-License-Identifier: MIT
// Serialisation round trips and strictness of the decoders.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "farey3d/json_io.hpp"
#include "farey3d/sampling.hpp"

#include <doctest.h>

using namespace farey3d;

TEST_CASE("integers: numbers inside 53 bits, strings outside") {
  CHECK(encode(Int(42)).is_number());
  CHECK(encode(Int(-7)).is_number());
  CHECK(encode(Int("9007199254740991")).is_number());
  const Int big = Int("9007199254740992");  // 2^53: first value past the safe range
  CHECK(encode(big).is_string());
  CHECK(decode_int(encode(big)) == big);
  const Int huge = -(Int(1) << 200);
  CHECK(decode_int(encode(huge)) == huge);
  CHECK(decode_int(Json(12)) == 12);
  CHECK(decode_int(Json("-31")) == -31);
  CHECK_THROWS_AS(decode_int(Json(1.5)), std::invalid_argument);
  CHECK_THROWS_AS(decode_int(Json("12x")), std::invalid_argument);
  CHECK_THROWS_AS(decode_int(Json::array()), std::invalid_argument);
}

TEST_CASE("ring elements and points") {
  const EInt x(3, -2);
  CHECK(encode(x).dump() == "[3,-2]");
  CHECK(decode_eint(encode(x)) == x);
  const EInt big(Int(1) << 60, Int(-1) << 61);
  CHECK(encode(big)[0].is_string());
  CHECK(decode_eint(encode(big)) == big);
  CHECK_THROWS_AS(decode_eint(Json::parse("[1]")), std::invalid_argument);
  CHECK_THROWS_AS(decode_eint(Json::parse("[1,2,3]")), std::invalid_argument);

  const ProjPoint f(EInt(1, -1), EInt(0, 2));
  CHECK(encode(f).dump() == R"({"p":[1,-1],"q":[0,2]})");
  const ProjPoint g = decode_point(encode(f));
  CHECK(g == f);
  CHECK_THROWS_AS(decode_point(Json::parse(R"({"p":[1,0]})")), std::invalid_argument);
}

TEST_CASE("matrices") {
  const Mat2 m(EInt(1, 0), EInt(2, -1), EInt(0, 0), EInt(1, 1));
  CHECK(encode(m).dump() == "[[[1,0],[2,-1]],[[0,0],[1,1]]]");
  CHECK(decode_mat2(encode(m)) == m);
  CHECK_THROWS_AS(decode_mat2(Json::parse("[[1,2],[3,4]]")), std::invalid_argument);
}

TEST_CASE("paths: mode names and defaults") {
  PathRep p;
  p.base_index = -2;
  p.mode = PathMode::normalised;
  p.reps = {ProjPoint(EInt(1, 0), EInt(0, 0)), ProjPoint(EInt(0, 0), EInt(1, 0))};
  const Json j = encode(p);
  CHECK(j["mode"] == "normalised");
  CHECK(j["base_index"] == -2);
  CHECK(decode_path(j) == p);

  // defaults: plain mode, base 0
  const PathRep q = decode_path(
      Json::parse(R"({"vertices":[{"p":[1,0],"q":[0,0]}]})"));
  CHECK(q.mode == PathMode::plain);
  CHECK(q.base_index == 0);

  CHECK_THROWS_AS(
      decode_path(Json::parse(R"({"mode":"twisted","vertices":[]})")),
      std::invalid_argument);
}

TEST_CASE("angle words: object form and bare array") {
  AngleSeq a;
  a.base_index = 3;
  a.values = {EInt(1, 0), EInt(0, -2)};
  CHECK(decode_angles(encode(a)) == a);

  const AngleSeq bare = decode_angles(Json::parse("[[2,0],[0,1]]"));
  CHECK(bare.base_index == 1);
  REQUIRE(bare.values.size() == 2);
  CHECK(bare.values[1] == EInt(0, 1));
}

TEST_CASE("windows and triples") {
  std::mt19937_64 rng(41);
  TilingWindow w;
  w.mode = TilingMode::det;
  w.row_offset = -1;
  w.col_offset = 2;
  w.entries = {{random_eint(rng, 5), random_eint(rng, 5)},
               {random_eint(rng, 5), random_eint(rng, 5)}};
  const Json j = encode(w);
  CHECK(j["mode"] == "det");
  CHECK(decode_window(j) == w);

  // mode defaults to scalar
  const TilingWindow v = decode_window(Json::parse(R"({"entries":[[[1,0]]]})"));
  CHECK(v.mode == TilingMode::scalar);
  CHECK(v.row_offset == 0);

  TilingTriple t;
  t.a.base_index = 0;
  t.a.values = {EInt(2, 1)};
  t.b.base_index = -1;
  t.b.values = {EInt(0, 0), EInt(1, -1)};
  t.x = Mat2::identity();
  CHECK(decode_triple(encode(t)) == t);
  CHECK_THROWS_AS(decode_triple(Json::parse(R"({"a":[],"b":[]})")),
                  std::invalid_argument);
}

TEST_CASE("frieze bands serialise with period and rows") {
  FriezeBand b;
  b.m = 4;
  b.zero_free = true;
  b.rows = {{EInt(1, 0)}, {EInt(0, 1)}, {EInt(-1, 0)}, {EInt(2, 2)}};
  const Json j = encode(b);
  CHECK(j["period"] == 4);
  CHECK(j["zero_free"] == true);
  CHECK(j["rows"].size() == 4);
}

TEST_CASE("random structured round trips") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat2 m = random_sl2(rng, 6, 4);
    CHECK(decode_mat2(encode(m)) == m);
    const ProjPoint f = random_point(rng, 6, 4);
    CHECK(decode_point(encode(f)) == f);
    AngleSeq a;
    a.base_index = random_in(rng, -3, 3);
    a.values = random_angles(rng, 5, 7);
    CHECK(decode_angles(encode(a)) == a);
  }
}

TEST_CASE("point lists") {
  const auto pts = decode_points(
      Json::parse(R"([{"p":[1,0],"q":[0,0]},{"p":[0,0],"q":[1,0]}])"));
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == ProjPoint(EInt(1, 0), EInt(0, 0)));
  CHECK_THROWS_AS(decode_points(Json::parse(R"({"p":[1,0]})")),
                  std::invalid_argument);
}
