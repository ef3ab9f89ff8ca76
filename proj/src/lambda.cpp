// SPDX-License-Identifier: MIT
#include "farey3d/lambda.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include <boost/rational.hpp>

namespace farey3d {

namespace {

double to_double(const Int& n) { return n.convert_to<double>(); }

double rel_residual_of(double lhs, double rhs) {
  const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
  return std::fabs(lhs - rhs) / scale;
}

}  // namespace

Horosphere standard_horosphere(const ProjPoint& f) {
  const ProjPoint r = reduce(f);
  Horosphere h;
  if (is_zero(r.q)) {
    h.at_infinity = true;
    h.size = 1.0;  // horizontal plane at height 1
    return h;
  }
  h.at_infinity = false;
  h.center = to_complex(r.p) / to_complex(r.q);
  h.size = 1.0 / (2.0 * to_double(norm(r.q)));
  return h;
}

Horosphere scale_horosphere(const Horosphere& h, double t) {
  if (!(t > 0.0))
    throw std::invalid_argument("scale_horosphere: scale factor must be positive");
  Horosphere out = h;
  out.size = h.size * t;
  return out;
}

double lambda_numeric(const Horosphere& x, const Horosphere& y) {
  if (x.at_infinity && y.at_infinity)
    throw std::invalid_argument("lambda_numeric: both horospheres are at infinity");
  if (x.at_infinity) return std::sqrt(x.size / (2.0 * y.size));
  if (y.at_infinity) return std::sqrt(y.size / (2.0 * x.size));
  const double d = std::abs(x.center - y.center);
  if (d == 0.0)
    throw std::invalid_argument("lambda_numeric: coincident base points");
  return d / (2.0 * std::sqrt(x.size * y.size));
}

LambdaCrossCheck lambda_cross_check(const ProjPoint& f, const ProjPoint& g) {
  LambdaCrossCheck out;
  out.det_sq = det_length_sq(f, g);
  out.numeric = lambda_numeric(standard_horosphere(f), standard_horosphere(g));
  out.exact_sqrt = std::sqrt(to_double(out.det_sq));
  out.rel_err = std::fabs(out.numeric - out.exact_sqrt) / std::max(1.0, out.exact_sqrt);
  return out;
}

Int quadratic_partner(const Int& b1, const Int& b2, const Int& b3, const Int& b4) {
  return b1 + b2 + b3 - b4;
}

IdentityReport verify_tetra_relation(const Tetra& t, const ProjPoint& x) {
  if (!is_fundamental_tetrahedron(t))
    throw std::invalid_argument("verify_tetra_relation: not a tetrahedron of the tessellation");
  if (tetra_contains(t, x))
    throw std::invalid_argument("verify_tetra_relation: point is a vertex of the tetrahedron");

  std::array<Int, 4> b;
  std::array<double, 4> bf;
  const Horosphere hx = standard_horosphere(x);
  for (std::size_t i = 0; i < 4; ++i) {
    b[i] = det_length_sq(x, t[i]);
    const double lam = lambda_numeric(hx, standard_horosphere(t[i]));
    bf[i] = lam * lam;
  }

  IdentityReport rep;
  rep.exact_lhs = 0;
  rep.exact_rhs = 0;
  rep.numeric_lhs = 0.0;
  rep.numeric_rhs = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    rep.exact_lhs += b[i] * b[i];
    rep.numeric_lhs += bf[i] * bf[i];
    for (std::size_t j = i + 1; j < 4; ++j) {
      rep.exact_rhs += b[i] * b[j];
      rep.numeric_rhs += bf[i] * bf[j];
    }
  }
  rep.exact_holds = (rep.exact_lhs == rep.exact_rhs);
  rep.rel_residual = rel_residual_of(rep.numeric_lhs, rep.numeric_rhs);
  return rep;
}

namespace {

// The 12 distinct five-cycles through points 0..4 with 0 first: permutations
// (c1, c2, c3, c4) of {1, 2, 3, 4} with c1 < c4 (killing the reversal).
const std::array<std::array<int, 4>, 12>& five_cycles() {
  static const auto cycles = [] {
    std::array<std::array<int, 4>, 12> out{};
    std::array<int, 4> perm{1, 2, 3, 4};
    std::size_t n = 0;
    std::sort(perm.begin(), perm.end());
    do {
      if (perm[0] < perm[3]) out[n++] = perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (n != 12) throw std::logic_error("five_cycles: enumeration bug");
    return out;
  }();
  return cycles;
}

template <typename T>
void five_point_sums(const std::array<std::array<T, 5>, 5>& b, T& lhs, T& rhs) {
  lhs = T(0);
  rhs = T(0);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      // Complementary triangle of the pair (i, j).
      std::array<int, 3> rest{};
      int n = 0;
      for (int k = 0; k < 5; ++k)
        if (k != i && k != j) rest[static_cast<std::size_t>(n++)] = k;
      const std::size_t si = static_cast<std::size_t>(i);
      const std::size_t sj = static_cast<std::size_t>(j);
      const std::size_t r0 = static_cast<std::size_t>(rest[0]);
      const std::size_t r1 = static_cast<std::size_t>(rest[1]);
      const std::size_t r2 = static_cast<std::size_t>(rest[2]);
      lhs += b[si][sj] * b[si][sj] * b[r0][r1] * b[r0][r2] * b[r1][r2];
    }
  for (const auto& c : five_cycles()) {
    const std::size_t c1 = static_cast<std::size_t>(c[0]);
    const std::size_t c2 = static_cast<std::size_t>(c[1]);
    const std::size_t c3 = static_cast<std::size_t>(c[2]);
    const std::size_t c4 = static_cast<std::size_t>(c[3]);
    rhs += b[0][c1] * b[c1][c2] * b[c2][c3] * b[c3][c4] * b[c4][0];
  }
}

}  // namespace

IdentityReport verify_five_point(const std::array<ProjPoint, 5>& xs) {
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (point_eq(xs[i], xs[j]))
        throw std::invalid_argument("verify_five_point: points must be distinct");

  std::array<std::array<Int, 5>, 5> b{};
  std::array<std::array<double, 5>, 5> bf{};
  std::array<Horosphere, 5> hs;
  for (std::size_t i = 0; i < 5; ++i) hs[i] = standard_horosphere(xs[i]);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      if (i == j) continue;
      b[i][j] = det_length_sq(xs[i], xs[j]);
      const double lam = lambda_numeric(hs[i], hs[j]);
      bf[i][j] = lam * lam;
    }

  IdentityReport rep;
  five_point_sums(b, rep.exact_lhs, rep.exact_rhs);
  five_point_sums(bf, rep.numeric_lhs, rep.numeric_rhs);
  rep.exact_holds = (rep.exact_lhs == rep.exact_rhs);
  rep.rel_residual = rel_residual_of(rep.numeric_lhs, rep.numeric_rhs);
  return rep;
}

FloatIdentityReport five_point_numeric(const std::array<Horosphere, 5>& hs) {
  std::array<std::array<double, 5>, 5> bf{};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      if (i == j) continue;
      const double lam = lambda_numeric(hs[i], hs[j]);
      bf[i][j] = lam * lam;
    }
  FloatIdentityReport rep;
  five_point_sums(bf, rep.lhs, rep.rhs);
  rep.rel_residual = rel_residual_of(rep.lhs, rep.rhs);
  return rep;
}

IdentityReport verify_curvature_relation(const Tetra& t) {
  if (!is_fundamental_tetrahedron(t))
    throw std::invalid_argument("verify_curvature_relation: not a tetrahedron of the tessellation");
  std::array<Int, 4> k;
  std::array<double, 4> kf;
  for (std::size_t i = 0; i < 4; ++i) {
    const ProjPoint r = reduce(t[i]);
    k[i] = 2 * norm(r.q);  // 0 at infinity
    const Horosphere h = standard_horosphere(t[i]);
    kf[i] = h.at_infinity ? 0.0 : 1.0 / h.size;
  }
  IdentityReport rep;
  rep.exact_lhs = 0;
  rep.exact_rhs = 0;
  rep.numeric_lhs = 0.0;
  rep.numeric_rhs = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    rep.exact_rhs += k[i] * k[i];
    rep.numeric_rhs += kf[i] * kf[i];
    for (std::size_t j = i + 1; j < 4; ++j) {
      rep.exact_lhs += k[i] * k[j];
      rep.numeric_lhs += kf[i] * kf[j];
    }
  }
  rep.exact_holds = (rep.exact_lhs == rep.exact_rhs);
  rep.rel_residual = rel_residual_of(rep.numeric_lhs, rep.numeric_rhs);
  return rep;
}

// ---------------------------------------------------------------------------
// Geodesic walk
// ---------------------------------------------------------------------------

namespace {

// Deterministic total order on canonical representatives.
bool point_less(const ProjPoint& f, const ProjPoint& g) {
  if (f.p.a != g.p.a) return f.p.a < g.p.a;
  if (f.p.b != g.p.b) return f.p.b < g.p.b;
  if (f.q.a != g.q.a) return f.q.a < g.q.a;
  return f.q.b < g.q.b;
}

// In the frame where one endpoint sits at infinity the geodesic is the
// vertical line over w, and every relevant ideal point p/q has exact
// rational coordinates in the basis (1, s): p * conj(q) / norm(q).  Under
// the complex embedding the Euclidean inner product pulls back to
//   <u, v> = ux vx + (ux vy + uy vx)/2 + uy vy,
// so circumcentres of faces and squared crossing heights of the vertical
// line with face hemispheres are rational, and every comparison the walk
// makes is exact.

using Rat = boost::rational<Int>;

struct QPt {
  Rat x, y;
};

QPt operator-(const QPt& a, const QPt& b) { return {a.x - b.x, a.y - b.y}; }

const Rat kHalf(Int(1), Int(2));

Rat inner(const QPt& u, const QPt& v) {
  return u.x * v.x + (u.x * v.y + u.y * v.x) * kHalf + u.y * v.y;
}

Rat qnorm(const QPt& u) { return inner(u, u); }

Rat cross2(const QPt& u, const QPt& v) { return u.x * v.y - u.y * v.x; }

QPt embed(const ProjPoint& f) {
  const EInt n = f.p * conj(f.q);
  const Int den = norm(f.q);
  return {Rat(n.a, den), Rat(n.b, den)};
}

// Floor of a/b for b > 0 (cpp_int division truncates toward zero).
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

struct FaceCrossing {
  bool crosses{false};
  Rat height_sq{};
};

// Squared height at which the vertical line over w crosses the hemisphere
// spanned by three finite ideal points.  Non-transversal contacts: if the
// three points are collinear the face spans a vertical plane, which the
// line either runs inside (degenerate) or never crosses; if w lies on the
// circumcircle the line meets the dome only at height 0.
FaceCrossing face_crossing(const std::array<QPt, 3>& z, const QPt& w) {
  const QPt u = z[1] - z[0], v = z[2] - z[0];
  if (cross2(u, v) == Rat{}) {
    if (cross2(w - z[0], u) == Rat{})
      throw DegenerateGeodesic("geodesic lies in a vertical face plane");
    return {};
  }
  // Circumcentre o solves <o, u> = (|z1|^2 - |z0|^2)/2 and likewise for v.
  const Rat a1 = u.x + u.y * kHalf, b1 = u.x * kHalf + u.y;
  const Rat a2 = v.x + v.y * kHalf, b2 = v.x * kHalf + v.y;
  const Rat d = a1 * b2 - b1 * a2;  // = (3/4) cross2(u, v), nonzero here
  const Rat e1 = (qnorm(z[1]) - qnorm(z[0])) * kHalf;
  const Rat e2 = (qnorm(z[2]) - qnorm(z[0])) * kHalf;
  const QPt o{(e1 * b2 - e2 * b1) / d, (a1 * e2 - a2 * e1) / d};
  const Rat r_sq = qnorm(z[0] - o);
  const Rat d_sq = qnorm(w - o);
  if (!(d_sq < r_sq)) return {};
  return {true, r_sq - d_sq};
}

}  // namespace

std::vector<Tetra> geodesic_walk(const ProjPoint& x, const ProjPoint& y,
                                 const WalkOptions& opts) {
  if (point_eq(x, y))
    throw std::invalid_argument("geodesic_walk: endpoints coincide");

  // Move x to infinity; the geodesic becomes the vertical line over w.
  const Mat2 bmat = sl2_sending_to_infinity(x);
  const Mat2 binv = mat_inverse(bmat);
  const ProjPoint w_pt = reduce(mobius_apply(bmat, y));
  auto map_down = [&](const Tetra& t) {
    return Tetra{reduce(mobius_apply(binv, t[0])), reduce(mobius_apply(binv, t[1])),
                 reduce(mobius_apply(binv, t[2])), reduce(mobius_apply(binv, t[3]))};
  };

  const ProjPoint inf = infinity_point();
  if (norm(w_pt.q) == 1) {
    // Neighbouring endpoints: the geodesic crosses the one tetrahedron
    // (inf, w, w+1, w+s) in the moved frame.
    const EInt w0 = w_pt.p;  // canonical form has q = 1
    const Tetra up{inf, ProjPoint(w0, EInt(1, 0)), ProjPoint(w0 + EInt(1, 0), EInt(1, 0)),
                   ProjPoint(w0 + EInt(0, 1), EInt(1, 0))};
    return {map_down(up)};
  }

  // Locate the unit lattice triangle strictly containing w; its coordinates
  // in the basis (1, s) are exact rationals.  Landing on a triangle edge
  // means the whole geodesic runs inside a vertical wall.
  const QPt w = embed(w_pt);
  const Int fu = floor_div(w.x.numerator(), w.x.denominator());
  const Int fv = floor_div(w.y.numerator(), w.y.denominator());
  const Rat du = w.x - Rat(fu), dv = w.y - Rat(fv);
  const Rat one(Int(1));
  if (du == Rat{} || dv == Rat{} || du + dv == one)
    throw DegenerateGeodesic("geodesic meets the boundary of a lattice triangle");
  const EInt base(fu, fv);
  auto lattice = [](const EInt& z) { return ProjPoint(z, EInt(1, 0)); };
  std::array<ProjPoint, 3> floor_tri;
  if (du + dv < one)
    floor_tri = {lattice(base), lattice(base + EInt(1, 0)), lattice(base + EInt(0, 1))};
  else
    floor_tri = {lattice(base + EInt(1, 0)), lattice(base + EInt(0, 1)),
                 lattice(base + EInt(1, 1))};
  std::sort(floor_tri.begin(), floor_tri.end(), point_less);

  std::vector<Tetra> upstairs;
  Tetra cur{inf, floor_tri[0], floor_tri[1], floor_tri[2]};
  int entry_opposite = -1;  // vertex opposite the entry face (-1 for the start)
  std::optional<Rat> entry_h2;  // squared entry height (none at the start)

  for (std::size_t step = 0;; ++step) {
    if (step >= opts.max_steps)
      throw std::runtime_error("geodesic_walk: step budget exhausted");
    upstairs.push_back(cur);
    if (tetra_contains(cur, w_pt)) break;

    // The exit face is the one whose dome the downward line crosses at the
    // greatest height strictly below the entry height.  Faces through
    // infinity span vertical walls and are never crossed transversally.
    int exit_opposite = -1;
    std::optional<Rat> exit_h2;
    for (int skip = 0; skip < 4; ++skip) {
      if (skip == entry_opposite) continue;  // never re-cross the entry face

      std::array<QPt, 3> pts;
      bool has_inf = false;
      int n = 0;
      for (int i = 0; i < 4; ++i) {
        if (i == skip) continue;
        const ProjPoint& vtx = cur[static_cast<std::size_t>(i)];
        if (is_zero(vtx.q)) {
          has_inf = true;
          break;
        }
        pts[static_cast<std::size_t>(n++)] = embed(vtx);
      }
      if (has_inf) continue;

      const FaceCrossing fc = face_crossing(pts, w);
      if (!fc.crosses) continue;
      if (entry_h2) {
        if (fc.height_sq == *entry_h2)
          throw DegenerateGeodesic("geodesic exits a cell exactly through an edge");
        if (fc.height_sq > *entry_h2) continue;  // crossed above the cell: not an exit
      }
      if (exit_h2 && fc.height_sq == *exit_h2)
        throw DegenerateGeodesic("geodesic exits a cell exactly through an edge");
      if (!exit_h2 || fc.height_sq > *exit_h2) {
        exit_h2 = fc.height_sq;
        exit_opposite = skip;
      }
    }
    if (exit_opposite < 0)
      throw std::logic_error("geodesic_walk: no exit face found");

    // Reflect the vertex opposite the exit face through that face.
    const std::size_t opp = static_cast<std::size_t>(exit_opposite);
    std::array<ProjPoint, 3> face_pts;
    int n = 0;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != opp) face_pts[static_cast<std::size_t>(n++)] = cur[i];
    const ProjPoint added = reflect_apex(Face{face_pts[0], face_pts[1], face_pts[2]},
                                         cur[opp]);
    cur = Tetra{face_pts[0], face_pts[1], face_pts[2], added};
    entry_opposite = 3;  // the new vertex is opposite the face just crossed
    entry_h2 = *exit_h2;
  }

  std::vector<Tetra> out;
  out.reserve(upstairs.size());
  for (const auto& t : upstairs) out.push_back(map_down(t));
  return out;
}

BSequence b_sequence(const ProjPoint& x, const std::vector<Tetra>& walk) {
  if (walk.empty()) throw std::invalid_argument("b_sequence: empty walk");
  if (!tetra_contains(walk.front(), x))
    throw std::invalid_argument("b_sequence: walk does not start at the given vertex");

  // Stream of non-x vertices of the first tetrahedron, in stored order.
  std::vector<ProjPoint> stream;
  for (const auto& v : walk.front())
    if (!point_eq(v, x)) stream.push_back(reduce(v));
  if (stream.size() != 3)
    throw std::invalid_argument("b_sequence: first tetrahedron is degenerate");

  struct Active {
    ProjPoint pt;
    Int b;
    long long stream_pos;  // -1 for x itself
  };
  std::vector<Active> active;
  active.push_back({reduce(x), Int(0), -1});
  std::vector<Int> values;
  for (const auto& v : stream) {
    Int b = det_length_sq(x, v);
    if (b != 1)
      throw std::invalid_argument("b_sequence: first tetrahedron does not contain x");
    active.push_back({v, b, static_cast<long long>(values.size())});
    values.push_back(std::move(b));
  }

  // drop_step[p]: the walk step at which initial stream position p was
  // dropped (npos if never); used to relabel the three symmetric seeds.
  std::array<std::size_t, 3> drop_step{SIZE_MAX, SIZE_MAX, SIZE_MAX};
  std::vector<long long> dropped_pos;  // per step: stream_pos of dropped vertex

  for (std::size_t k = 1; k < walk.size(); ++k) {
    const Tetra& prev = walk[k - 1];
    const Tetra& cur = walk[k];
    // Identify added / dropped / shared vertices.
    std::vector<ProjPoint> shared;
    std::optional<ProjPoint> added;
    for (const auto& v : cur) {
      if (tetra_contains(prev, v))
        shared.push_back(reduce(v));
      else if (!added)
        added = reduce(v);
      else
        throw std::invalid_argument("b_sequence: consecutive tetrahedra share < 3 vertices");
    }
    std::optional<ProjPoint> dropped;
    for (const auto& v : prev)
      if (!tetra_contains(cur, v)) {
        if (dropped)
          throw std::invalid_argument("b_sequence: consecutive tetrahedra share < 3 vertices");
        dropped = reduce(v);
      }
    if (shared.size() != 3 || !added || !dropped)
      throw std::invalid_argument("b_sequence: walk is not an attachment chain");
    if (point_eq(*added, x))
      throw std::logic_error("b_sequence: walk returned to the base vertex");

    // Look up the active records.
    auto find_active = [&](const ProjPoint& v) -> std::size_t {
      for (std::size_t i = 0; i < active.size(); ++i)
        if (point_eq(active[i].pt, v)) return i;
      throw std::logic_error("b_sequence: attachment does not match the active tetrahedron");
    };
    const std::size_t di = find_active(*dropped);
    Int sum_shared = 0;
    for (const auto& v : shared) sum_shared += active[find_active(v)].b;

    const Int b_added = det_length_sq(x, *added);
    const Int b_dropped = active[di].b;
    if (b_dropped + b_added != sum_shared)
      throw std::logic_error("b_sequence: exchange relation violated");
    if (!(b_dropped < b_added))
      throw std::logic_error("b_sequence: new vertex is not farther than the dropped one");

    const long long dpos = active[di].stream_pos;
    dropped_pos.push_back(dpos);
    if (k == 1 && dpos != -1)
      throw std::logic_error("b_sequence: first step must leave the base vertex");
    if (k > 1 && dpos == -1)
      throw std::logic_error("b_sequence: base vertex dropped twice");
    if (dpos >= 0 && dpos < 3)
      drop_step[static_cast<std::size_t>(dpos)] = k;

    active[di] = Active{*added, b_added, static_cast<long long>(values.size())};
    values.push_back(b_added);
  }

  if (values.size() >= 4 && values[3] != 3)
    throw std::logic_error("b_sequence: fourth stream value must be 3");

  // Relabel the three initial seeds by drop time (they are symmetric, all
  // b = 1), then test whether every step removed the oldest active vertex.
  std::array<long long, 3> relabel{0, 1, 2};
  std::sort(relabel.begin(), relabel.end(), [&](long long lhs, long long rhs) {
    const auto dl = drop_step[static_cast<std::size_t>(lhs)];
    const auto dr = drop_step[static_cast<std::size_t>(rhs)];
    if (dl != dr) return dl < dr;
    return lhs < rhs;
  });
  auto relabelled = [&](long long pos) -> long long {
    for (long long i = 0; i < 3; ++i)
      if (relabel[static_cast<std::size_t>(i)] == pos) return i;
    return pos;
  };

  BSequence out;
  out.values = values;
  out.fan = true;
  out.pivot_steps = 0;
  // Replay: the active window starts as {-1 (x), 0, 1, 2} and each step
  // removes one member and inserts the next stream index.
  std::array<long long, 4> window{-1, 0, 1, 2};
  for (std::size_t k = 0; k < dropped_pos.size(); ++k) {
    const long long d = relabelled(dropped_pos[k]);
    const long long oldest = *std::min_element(window.begin(), window.end());
    if (d != oldest) {
      out.fan = false;
      ++out.pivot_steps;
    }
    for (auto& m : window)
      if (m == d) m = static_cast<long long>(k) + 3;
  }

  if (out.fan) {
    // For fan walks the active window is always four consecutive stream
    // indices, so the exchange relation becomes the five-term recurrence.
    for (std::size_t i = 0; i + 4 < out.values.size(); ++i) {
      if (out.values[i] + out.values[i + 4] !=
          out.values[i + 1] + out.values[i + 2] + out.values[i + 3])
        throw std::logic_error("b_sequence: fan recurrence violated");
    }
  }
  return out;
}

}  // namespace farey3d
