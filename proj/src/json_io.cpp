// SPDX-License-Identifier: MIT
#include "farey3d/json_io.hpp"

namespace farey3d {

namespace {

const Int kMaxSafe(("9007199254740991"));  // 2^53 - 1

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("json: " + what);
}

}  // namespace

Json encode(const Int& n) {
  if (n <= kMaxSafe && n >= -kMaxSafe) return Json(n.convert_to<std::int64_t>());
  return Json(n.str());
}

Json encode(const EInt& x) { return Json::array({encode(x.a), encode(x.b)}); }

Json encode(const ProjPoint& f) {
  Json j = Json::object();
  j["p"] = encode(f.p);
  j["q"] = encode(f.q);
  return j;
}

Json encode(const Mat2& m) {
  return Json::array({Json::array({encode(m.m11), encode(m.m12)}),
                      Json::array({encode(m.m21), encode(m.m22)})});
}

namespace {

const char* mode_name(PathMode m) {
  switch (m) {
    case PathMode::plain: return "plain";
    case PathMode::normalised: return "normalised";
    case PathMode::skew: return "skew";
  }
  bad("unknown path mode");
}

const char* mode_name(TilingMode m) {
  return m == TilingMode::scalar ? "scalar" : "det";
}

}  // namespace

Json encode(const PathRep& p) {
  Json j = Json::object();
  j["base_index"] = p.base_index;
  j["mode"] = mode_name(p.mode);
  Json verts = Json::array();
  for (const auto& v : p.reps) verts.push_back(encode(v));
  j["vertices"] = std::move(verts);
  return j;
}

Json encode(const AngleSeq& a) {
  Json j = Json::object();
  j["base_index"] = a.base_index;
  Json vals = Json::array();
  for (const auto& v : a.values) vals.push_back(encode(v));
  j["values"] = std::move(vals);
  return j;
}

Json encode(const TilingWindow& w) {
  Json j = Json::object();
  j["mode"] = mode_name(w.mode);
  j["row_offset"] = w.row_offset;
  j["col_offset"] = w.col_offset;
  Json rows = Json::array();
  for (const auto& row : w.entries) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(encode(e));
    rows.push_back(std::move(r));
  }
  j["entries"] = std::move(rows);
  return j;
}

Json encode(const TilingTriple& t) {
  Json j = Json::object();
  j["a"] = encode(t.a);
  j["b"] = encode(t.b);
  j["x"] = encode(t.x);
  return j;
}

Json encode(const FriezeBand& b) {
  Json j = Json::object();
  j["period"] = b.m;
  j["zero_free"] = b.zero_free;
  Json rows = Json::array();
  for (const auto& row : b.rows) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(encode(e));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

Int decode_int(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty()) bad("empty integer string");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) bad("integer string '" + s + "' has no digits");
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') bad("bad integer string '" + s + "'");
    return Int(s);
  }
  if (j.is_number_float()) bad("non-integral number " + j.dump());
  bad("expected an integer, got " + j.dump());
}

EInt decode_eint(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    bad("expected a ring element [a, b], got " + j.dump());
  return EInt(decode_int(j[0]), decode_int(j[1]));
}

ProjPoint decode_point(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q"))
    bad("expected a point {\"p\":.., \"q\":..}, got " + j.dump());
  return ProjPoint(decode_eint(j.at("p")), decode_eint(j.at("q")));
}

Mat2 decode_mat2(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    bad("expected a matrix [[m11, m12], [m21, m22]], got " + j.dump());
  return Mat2(decode_eint(j[0][0]), decode_eint(j[0][1]), decode_eint(j[1][0]),
              decode_eint(j[1][1]));
}

namespace {

long long decode_index(const Json& j, const char* field) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    bad(std::string(field) + " must be an integer, got " + j.dump());
  return j.get<long long>();
}

}  // namespace

PathRep decode_path(const Json& j) {
  if (!j.is_object() || !j.contains("vertices"))
    bad("expected a path object with \"vertices\", got " + j.dump());
  PathRep p;
  p.base_index = j.contains("base_index") ? decode_index(j.at("base_index"), "base_index") : 0;
  p.mode = PathMode::plain;
  if (j.contains("mode")) {
    const std::string m = j.at("mode").get<std::string>();
    if (m == "plain")
      p.mode = PathMode::plain;
    else if (m == "normalised")
      p.mode = PathMode::normalised;
    else if (m == "skew")
      p.mode = PathMode::skew;
    else
      bad("unknown path mode '" + m + "'");
  }
  const Json& verts = j.at("vertices");
  if (!verts.is_array()) bad("\"vertices\" must be an array");
  for (const auto& v : verts) p.reps.push_back(decode_point(v));
  return p;
}

AngleSeq decode_angles(const Json& j) {
  AngleSeq a;
  if (j.is_array()) {  // bare list: angles starting at index 1
    a.base_index = 1;
    for (const auto& v : j) a.values.push_back(decode_eint(v));
    return a;
  }
  if (!j.is_object() || !j.contains("values"))
    bad("expected an angle word (array or {\"base_index\",\"values\"}), got " + j.dump());
  a.base_index = j.contains("base_index") ? decode_index(j.at("base_index"), "base_index") : 1;
  const Json& vals = j.at("values");
  if (!vals.is_array()) bad("\"values\" must be an array");
  for (const auto& v : vals) a.values.push_back(decode_eint(v));
  return a;
}

TilingWindow decode_window(const Json& j) {
  if (!j.is_object() || !j.contains("entries"))
    bad("expected a window object with \"entries\", got " + j.dump());
  TilingWindow w;
  const std::string m = j.contains("mode") ? j.at("mode").get<std::string>() : "scalar";
  if (m == "scalar")
    w.mode = TilingMode::scalar;
  else if (m == "det")
    w.mode = TilingMode::det;
  else
    bad("unknown window mode '" + m + "'");
  w.row_offset = j.contains("row_offset") ? decode_index(j.at("row_offset"), "row_offset") : 0;
  w.col_offset = j.contains("col_offset") ? decode_index(j.at("col_offset"), "col_offset") : 0;
  const Json& rows = j.at("entries");
  if (!rows.is_array()) bad("\"entries\" must be an array of arrays");
  for (const auto& row : rows) {
    if (!row.is_array()) bad("\"entries\" must be an array of arrays");
    std::vector<EInt> out;
    for (const auto& e : row) out.push_back(decode_eint(e));
    w.entries.push_back(std::move(out));
  }
  return w;
}

TilingTriple decode_triple(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("x"))
    bad("expected a triple {\"a\",\"b\",\"x\"}, got " + j.dump());
  TilingTriple t;
  t.a = decode_angles(j.at("a"));
  t.b = decode_angles(j.at("b"));
  t.x = decode_mat2(j.at("x"));
  return t;
}

std::vector<ProjPoint> decode_points(const Json& j) {
  if (!j.is_array()) bad("expected an array of points, got " + j.dump());
  std::vector<ProjPoint> out;
  for (const auto& v : j) out.push_back(decode_point(v));
  return out;
}

}  // namespace farey3d
