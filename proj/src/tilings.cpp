// SPDX-License-Identifier: MIT
#include "farey3d/tilings.hpp"

#include <set>
#include <string>

namespace farey3d {

namespace {

const EInt kOne(1, 0);

void require_normalised(const PathRep& p, const char* who) {
  if (p.mode != PathMode::normalised)
    throw std::invalid_argument(std::string(who) + ": path must be normalised");
  if (p.reps.empty())
    throw std::invalid_argument(std::string(who) + ": empty path");
}

}  // namespace

const EInt& TilingWindow::at(long long i, long long j) const {
  const long long r = i - row_offset;
  const long long c = j - col_offset;
  if (r < 0 || r >= rows() || c < 0 || c >= cols())
    throw std::out_of_range("TilingWindow::at: position outside the window");
  return entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
}

WindowCheck check_window(const TilingWindow& w) {
  WindowCheck out;
  if (w.entries.empty() || w.entries.front().empty()) {
    out.ok = out.rectangular = false;
    return out;
  }
  const std::size_t width = w.entries.front().size();
  for (const auto& row : w.entries)
    if (row.size() != width) {
      out.ok = out.rectangular = false;
      return out;
    }
  for (std::size_t r = 0; r + 1 < w.entries.size(); ++r)
    for (std::size_t c = 0; c + 1 < width; ++c) {
      const EInt det = w.entries[r][c] * w.entries[r + 1][c + 1] -
                       w.entries[r][c + 1] * w.entries[r + 1][c];
      if (det != kOne) {
        out.ok = out.minors_ok = false;
        out.bad_row = w.row_offset + static_cast<long long>(r);
        out.bad_col = w.col_offset + static_cast<long long>(c);
        return out;
      }
    }
  return out;
}

TilingWindow tiling_from_paths(const PathRep& u, const PathRep& v, TilingMode mode) {
  require_normalised(u, "tiling_from_paths(u)");
  require_normalised(v, "tiling_from_paths(v)");
  TilingWindow w;
  w.mode = mode;
  w.row_offset = u.base_index;
  w.col_offset = v.base_index;
  w.entries.resize(u.reps.size());
  for (std::size_t r = 0; r < u.reps.size(); ++r) {
    auto& row = w.entries[r];
    row.reserve(v.reps.size());
    const ProjPoint& ur = u.reps[r];
    for (const ProjPoint& vc : v.reps) {
      if (mode == TilingMode::scalar)
        row.push_back(ur.p * vc.p + ur.q * vc.q);
      else
        row.push_back(ur.p * vc.q - ur.q * vc.p);
    }
  }
  return w;
}

PathRep path_det_companion(const PathRep& v) {
  PathRep out;
  out.base_index = v.base_index;
  out.mode = v.mode;
  out.reps.reserve(v.reps.size());
  for (const auto& f : v.reps) out.reps.emplace_back(f.q, -f.p);
  return out;
}

PathRep path_det_companion_inverse(const PathRep& v) {
  PathRep out;
  out.base_index = v.base_index;
  out.mode = v.mode;
  out.reps.reserve(v.reps.size());
  for (const auto& f : v.reps) out.reps.emplace_back(-f.q, f.p);
  return out;
}

std::pair<PathRep, PathRep> paths_from_tiling(const TilingWindow& w) {
  const WindowCheck chk = check_window(w);
  if (!chk.ok)
    throw std::invalid_argument("paths_from_tiling: window fails the minor condition");
  const long long r0 = w.row_offset, r1 = w.row_offset + w.rows();
  const long long c0 = w.col_offset, c1 = w.col_offset + w.cols();
  if (!(r0 <= 0 && 2 <= r1 && c0 <= 0 && 2 <= c1))
    throw std::invalid_argument(
        "paths_from_tiling: window must contain rows 0, 1 and columns 0, 1");

  // Scalar-form columns read off rows 0 and 1.
  PathRep vsc;
  vsc.base_index = c0;
  vsc.mode = PathMode::normalised;
  vsc.reps.reserve(static_cast<std::size_t>(w.cols()));
  for (long long j = c0; j < c1; ++j)
    vsc.reps.emplace_back(w.at(0, j), w.at(1, j));

  // Rows from columns 0 and 1 through the inverse of the (0,1)x(0,1) corner.
  const EInt rr0 = w.at(0, 0), rr1 = w.at(0, 1);
  const EInt ss0 = w.at(1, 0), ss1 = w.at(1, 1);
  PathRep u;
  u.base_index = r0;
  u.mode = PathMode::normalised;
  u.reps.reserve(static_cast<std::size_t>(w.rows()));
  for (long long i = r0; i < r1; ++i) {
    const EInt m0 = w.at(i, 0), m1 = w.at(i, 1);
    u.reps.emplace_back(m0 * ss1 - m1 * ss0, m1 * rr0 - m0 * rr1);
  }

  PathRep v = (w.mode == TilingMode::scalar) ? vsc : path_det_companion_inverse(vsc);
  if (!(tiling_from_paths(u, v, w.mode) == w))
    throw std::invalid_argument("paths_from_tiling: window is not generated by a pair of paths");
  return {u, v};
}

namespace {

// diag(s^-g, s^g) for the case exponent g.
Mat2 case_gauge(int g) {
  return diag(sigma_pow(-g), sigma_pow(g));
}

// Seed-gauge exponent of an angle word.  The alternating unit twist by k
// multiplies the entry at index i by s^(-+2k) (minus at even i), shifting
// its sector by -+2k; reading the first nonzero entry with a parity sign
// therefore shifts the exponent by exactly -k (mod 3), which is what lets
// the seed construction absorb a twist as an in-path unit regauge.  Words
// with no nonzero entry are fixed by every twist, so 0 is consistent.
int case_exponent(const AngleSeq& a) {
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (is_zero(a.values[i])) continue;
    const long long idx = a.base_index + static_cast<long long>(i);
    const int g = sector(a.values[i]) / 2;
    return (idx % 2) == 0 ? g : (3 - g) % 3;
  }
  return 0;
}

PathRep slice_path(const PathRep& p, long long lo, long long hi) {
  if (p.base_index > lo || p.end_index() < hi)
    throw std::invalid_argument("triple_to_tiling: angle word does not cover the window");
  PathRep out;
  out.base_index = lo;
  out.mode = p.mode;
  out.reps.assign(p.reps.begin() + static_cast<std::ptrdiff_t>(lo - p.base_index),
                  p.reps.begin() + static_cast<std::ptrdiff_t>(hi - p.base_index));
  return out;
}

}  // namespace

TilingWindow triple_to_tiling(const TilingTriple& t, long long r0, long long r1,
                              long long c0, long long c1, TilingMode mode) {
  if (!(r0 <= 0 && 2 <= r1 && c0 <= 0 && 2 <= c1))
    throw std::invalid_argument("triple_to_tiling: ranges must contain indices 0 and 1");
  if (t.x.det() != kOne)
    throw std::invalid_argument("triple_to_tiling: seed matrix must have det 1");

  const int alpha = case_exponent(t.a);
  const int beta = case_exponent(t.b);

  const ProjPoint u0(sigma_pow(-alpha), EInt(0, 0));
  const ProjPoint u1(EInt(0, 0), sigma_pow(alpha));
  const PathRep u_skew = slice_path(path_from_angles(u0, u1, t.a), r0, r1);

  const Mat2 vmat = t.x * case_gauge(beta);
  const PathRep v_skew = slice_path(path_from_angles(vmat.col1(), vmat.col2(), t.b), c0, c1);

  const PathRep u_n = skew_to_normalised(u_skew);
  const PathRep v_n = skew_to_normalised(v_skew);
  if (mode == TilingMode::det) return tiling_from_paths(u_n, v_n, TilingMode::det);
  return tiling_from_paths(u_n, path_det_companion(v_n), TilingMode::scalar);
}

TilingTriple tiling_to_triple(const TilingWindow& w) {
  auto [u, v] = paths_from_tiling(w);
  const PathRep v_det =
      (w.mode == TilingMode::det) ? v : path_det_companion_inverse(v);

  const PathRep u_skew = normalised_to_skew(u);
  const PathRep v_skew = normalised_to_skew(v_det);

  TilingTriple t;
  t.a = angle_sequence(u_skew);
  t.b = angle_sequence(v_skew);

  const int alpha = case_exponent(t.a);
  const int beta = case_exponent(t.b);
  const ProjPoint& w0 = v_skew.reps[static_cast<std::size_t>(-v_skew.base_index)];
  const ProjPoint& w1 = v_skew.reps[static_cast<std::size_t>(1 - v_skew.base_index)];
  const Mat2 v01(w0.p, w1.p, w0.q, w1.q);
  // Undo the two case gauges: X = E_alpha * V01 * E_beta^-1.
  t.x = case_gauge(alpha) * v01 * diag(sigma_pow(beta), sigma_pow(-beta));
  return t;
}

TilingWindow equivalence_transform(const TilingWindow& w, long long k, long long l,
                                   bool flip) {
  TilingWindow out = w;
  for (long long r = 0; r < w.rows(); ++r)
    for (long long c = 0; c < w.cols(); ++c) {
      const long long i = w.row_offset + r;
      const long long j = w.col_offset + c;
      EInt factor = sigma_pow((((i % 2) + 2) % 2 == 0 ? k : -k) +
                              (((j % 2) + 2) % 2 == 0 ? l : -l));
      if (flip) factor = -factor;
      auto& e = out.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      e = factor * e;
    }
  return out;
}

std::optional<std::tuple<int, int, bool>> tilings_equivalent(const TilingWindow& w1,
                                                             const TilingWindow& w2) {
  if (w1.mode != w2.mode || w1.row_offset != w2.row_offset ||
      w1.col_offset != w2.col_offset || w1.rows() != w2.rows() || w1.cols() != w2.cols())
    return std::nullopt;
  for (int k = 0; k < 6; ++k)
    for (int l = 0; l < 6; ++l)
      for (int f = 0; f < 2; ++f)
        if (equivalence_transform(w1, k, l, f != 0) == w2)
          return std::make_tuple(k, l, f != 0);
  return std::nullopt;
}

namespace {

std::string window_key(const TilingWindow& w) {
  std::string key;
  for (const auto& row : w.entries)
    for (const auto& e : row) {
      key += to_string(e);
      key += ';';
    }
  return key;
}

}  // namespace

int orbit_size(const TilingWindow& w) {
  std::set<std::string> seen;
  for (int k = 0; k < 6; ++k)
    for (int l = 0; l < 6; ++l)
      for (int f = 0; f < 2; ++f)
        seen.insert(window_key(equivalence_transform(w, k, l, f != 0)));
  return static_cast<int>(seen.size());
}

TilingTriple triple_transform(const TilingTriple& t, long long k, long long l,
                              bool negate) {
  TilingTriple out;
  out.a = twist_angles(t.a, k);
  out.b = twist_angles(t.b, l);
  out.x = negate ? -t.x : t.x;
  return out;
}

std::optional<std::tuple<int, int, bool>> triples_equivalent(const TilingTriple& t1,
                                                             const TilingTriple& t2) {
  for (int k = -1; k <= 1; ++k)
    for (int l = -1; l <= 1; ++l)
      for (int s = 0; s < 2; ++s)
        if (triple_transform(t1, k, l, s != 0) == t2)
          return std::make_tuple(k, l, s != 0);
  return std::nullopt;
}

CoplanarityReport coplanarity_report(const TilingWindow& w) {
  if (!check_window(w).ok)
    throw std::invalid_argument("coplanarity_report: window fails the minor condition");
  if (w.rows() < 2 || w.cols() < 2)
    throw std::invalid_argument("coplanarity_report: window must be at least 2x2");

  CoplanarityReport rep;
  rep.all_integer = true;
  for (const auto& row : w.entries)
    for (const auto& e : row)
      if (e.b != 0) rep.all_integer = false;

  auto row_is_integer = [&](long long r) {
    for (const auto& e : w.entries[static_cast<std::size_t>(r)])
      if (e.b != 0) return false;
    return true;
  };
  auto col_is_integer = [&](long long c) {
    for (const auto& row : w.entries)
      if (row[static_cast<std::size_t>(c)].b != 0) return false;
    return true;
  };
  for (long long r = 0; r + 1 < w.rows(); ++r)
    if (row_is_integer(r) && row_is_integer(r + 1)) {
      rep.integer_row_pair = true;
      rep.row_witness = w.row_offset + r;
      break;
    }
  for (long long c = 0; c + 1 < w.cols(); ++c)
    if (col_is_integer(c) && col_is_integer(c + 1)) {
      rep.integer_col_pair = true;
      rep.col_witness = w.col_offset + c;
      break;
    }
  rep.consistent = (rep.all_integer == (rep.integer_row_pair && rep.integer_col_pair));
  return rep;
}

}  // namespace farey3d
