// SPDX-License-Identifier: MIT
#include "farey3d/friezes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

namespace farey3d {

namespace {

// Transfer product (0 1; 1 a_1) ... (0 1; 1 a_m) = (w_m | w_{m+1}) for the
// path seeded with the identity columns.
Mat2 transfer(const Quiddity& q) {
  Mat2 p = Mat2::identity();
  for (const auto& a : q) p = p * Mat2(EInt(0, 0), EInt(1, 0), EInt(1, 0), a);
  return p;
}

// The angle sequence of a closed path is only quasi-periodic: one full turn
// rescales the vertex representatives by the units on the transfer product's
// diagonal (m11 at even vertices, m22 at odd ones), so
//   a_{j+m} = (-1)^m * u_{j+1}^2 * a_j.
// continued_angle extends the stored entries a_1..a_m to any index with that
// rule (downward steps use the conjugate = inverse unit).
EInt continued_angle(const Quiddity& q, const Mat2& p, long long j) {
  const long long m = static_cast<long long>(q.size());
  if (1 <= j && j <= m) return q[static_cast<std::size_t>(j - 1)];
  if (j > m) {
    const long long x = j - m;
    const EInt u = ((x + 1) % 2 == 0) ? p.m11 : p.m22;
    EInt f = u * u;
    if (m % 2 != 0) f = -f;
    return f * continued_angle(q, p, x);
  }
  const EInt u = ((j + 1) % 2 == 0) ? p.m11 : p.m22;
  EInt f = conj(u) * conj(u);
  if (m % 2 != 0) f = -f;
  return f * continued_angle(q, p, j + m);
}

}  // namespace

bool quiddity_closes(const Quiddity& q) {
  if (q.empty()) return false;
  const Mat2 p = transfer(q);
  if (!is_zero(p.m12) || !is_zero(p.m21)) return false;
  if (!is_unit(p.m11)) return false;
  const EInt expect = (q.size() % 2 == 0) ? conj(p.m11) : -conj(p.m11);
  return p.m22 == expect;
}

FriezeBand frieze_band(const Quiddity& q) {
  const std::size_t m = q.size();
  if (m < 4) throw std::invalid_argument("frieze_band: period must be at least 4");
  if (!quiddity_closes(q))
    throw std::invalid_argument("frieze_band: angle word does not close");

  // Skew lift long enough for every band entry, continued around the closed
  // path (the continuation is quasi-periodic, not a plain repetition: one
  // full turn rescales the angles by the squared units of the transfer
  // product's diagonal).
  const Mat2 p = transfer(q);
  AngleSeq angles;
  angles.base_index = 1;
  const std::size_t need = 2 * m - 3;  // angles a_1..a_{2m-3}
  angles.values.reserve(need);
  for (std::size_t i = 0; i < need; ++i)
    angles.values.push_back(continued_angle(q, p, static_cast<long long>(i) + 1));
  const PathRep lift = skew_to_normalised(
      path_from_angles(infinity_point(), ProjPoint(EInt(0, 0), EInt(1, 0)), angles));

  FriezeBand band;
  band.m = m;
  band.rows.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto& row = band.rows[i];
    row.reserve(m - 3);
    for (std::size_t k = 0; k + 3 < m; ++k) {
      const std::size_t j = i + 2 + k;
      const EInt d = det2(lift.reps[i], lift.reps[j]);
      if (is_zero(d)) band.zero_free = false;
      row.push_back(d);
    }
  }
  return band;
}

namespace {

std::string word_string(const Quiddity& q) {
  std::string s;
  for (const auto& a : q) {
    s += to_string(a);
    s += '|';
  }
  return s;
}

// Rebasing the closed path one step drops a_1 and appends the continuation
// a_{m+1}; the appended entry carries the quasi-period unit factor.
Quiddity rebase(const Quiddity& q) {
  const Mat2 p = transfer(q);
  Quiddity out(q.begin() + 1, q.end());
  out.push_back(continued_angle(q, p, static_cast<long long>(q.size()) + 1));
  return out;
}

// Traversing the closed path backwards: the reversed path is already
// skew-normalised and its angle at vertex j is -a_{-j} of the original.
Quiddity reverse_path(const Quiddity& q) {
  const Mat2 p = transfer(q);
  Quiddity out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    out[i] = -continued_angle(q, p, -static_cast<long long>(i) - 1);
  return out;
}

// Residual stabiliser of the anchored seed edge: alternating unit twists
// a_i -> t^(+-1) a_i with either alignment.
Quiddity twist_word(const Quiddity& q, int t, int phase) {
  Quiddity out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const int e = ((i + static_cast<std::size_t>(phase)) % 2 == 0) ? t : -t;
    out[i] = sigma_pow(e) * q[i];
  }
  return out;
}

Quiddity conj_quiddity(const Quiddity& q) {
  Quiddity out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = conj(q[i]);
  return out;
}

// Closure of {q} under the gauge moves.  Every move maps closing words to
// closing words and preserves entry norms, so the orbit is finite; forward
// search reaches the whole group orbit because each move is a bijection on
// that finite set.
std::map<std::string, Quiddity> gauge_orbit(const Quiddity& q,
                                            bool modulo_conjugation) {
  std::map<std::string, Quiddity> seen;
  std::vector<Quiddity> frontier;
  seen.emplace(word_string(q), q);
  frontier.push_back(q);
  auto push = [&](Quiddity w) {
    auto [it, fresh] = seen.emplace(word_string(w), std::move(w));
    if (fresh) frontier.push_back(it->second);
  };
  while (!frontier.empty()) {
    const Quiddity w = frontier.back();
    frontier.pop_back();
    push(rebase(w));
    push(reverse_path(w));
    for (int t = 1; t < 6; ++t)
      for (int phase = 0; phase < 2; ++phase) push(twist_word(w, t, phase));
    if (modulo_conjugation) push(conj_quiddity(w));
  }
  return seen;
}

}  // namespace

std::string band_signature(const Quiddity& q, bool modulo_conjugation) {
  return gauge_orbit(q, modulo_conjugation).begin()->first;
}

namespace {

// ---------------------------------------------------------------------------
// Enumeration in fixed-width arithmetic (coefficients stay far below 2^62
// for the supported periods and caps).
// ---------------------------------------------------------------------------

struct SE {
  long long a{0}, b{0};
};

SE se_add(SE x, SE y) { return {x.a + y.a, x.b + y.b}; }
SE se_neg(SE x) { return {-x.a, -x.b}; }
SE se_mul(SE x, SE y) {
  return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
}
SE se_conj(SE x) { return {x.a + x.b, -x.b}; }
long long se_norm(SE x) { return x.a * x.a + x.a * x.b + x.b * x.b; }
bool se_zero(SE x) { return x.a == 0 && x.b == 0; }

struct SPoint {
  SE p, q;
};

SE sp_det2(const SPoint& f, const SPoint& g) {
  return se_add(se_mul(f.p, g.q), se_neg(se_mul(g.p, f.q)));
}

// Exact division x / y in the ring; nullopt when y does not divide x.
std::optional<SE> se_exact_div(SE x, SE y) {
  const long long n = se_norm(y);
  if (n == 0) return std::nullopt;
  const SE num = se_mul(x, se_conj(y));
  if (num.a % n != 0 || num.b % n != 0) return std::nullopt;
  return SE{num.a / n, num.b / n};
}

struct Enumerator {
  std::size_t m;
  long long cap;
  FriezeEnumOptions opts;
  std::vector<SE> candidates;
  std::vector<double> growth;  // growth[r]: max |continuant| of a word of length r
  std::vector<SPoint> w;       // w[0..m]
  std::vector<SE> word;        // chosen angles a_1..a_m
  FriezeEnumResult result;
  std::set<std::string> seen;
  bool done{false};

  Enumerator(std::size_t m_, const FriezeEnumOptions& o) : m(m_), opts(o) {
    const long long def = static_cast<long long>((m - 2) * (m - 2));
    cap = opts.cap_norm > 0 ? opts.cap_norm.convert_to<long long>() : def;

    // Candidate angles with 1 <= N(a) <= cap, by increasing norm then lex.
    const long long box = static_cast<long long>(
        std::floor(std::sqrt(4.0 * static_cast<double>(cap) / 3.0))) + 1;
    for (long long a = -box; a <= box; ++a)
      for (long long b = -box; b <= box; ++b) {
        const SE e{a, b};
        const long long n = se_norm(e);
        if (n >= 1 && n <= cap) candidates.push_back(e);
      }
    std::sort(candidates.begin(), candidates.end(), [](SE x, SE y) {
      const long long nx = se_norm(x), ny = se_norm(y);
      if (nx != ny) return nx < ny;
      if (x.a != y.a) return x.a < y.a;
      return x.b < y.b;
    });

    growth.resize(m + 2);
    growth[0] = 1.0;
    if (growth.size() > 1) growth[1] = std::sqrt(static_cast<double>(cap));
    for (std::size_t r = 2; r < growth.size(); ++r)
      growth[r] = growth[1] * growth[r - 1] + growth[r - 2];

    w.assign(m + 1, SPoint{});
    w[0] = {SE{1, 0}, SE{0, 0}};
    w[1] = {SE{0, 0}, SE{1, 0}};
    word.assign(m, SE{});
  }

  bool distinct_from_prefix(std::size_t t) const {
    for (std::size_t s = 0; s < t; ++s)
      if (se_zero(sp_det2(w[s], w[t]))) return false;
    return true;
  }

  // A vertex of a closed path must satisfy |det2(w_0, w_t)| <= max possible
  // continuant of the remaining m-1-t angles (and likewise against w_1).
  bool growth_ok(std::size_t t) const {
    const double b0 = growth[m - 1 - t];
    const double b1 = growth[m - t];
    const double n0 = static_cast<double>(se_norm(sp_det2(w[0], w[t])));
    const double n1 = static_cast<double>(se_norm(sp_det2(w[1], w[t])));
    return n0 <= b0 * b0 * (1.0 + 1e-9) + 0.5 && n1 <= b1 * b1 * (1.0 + 1e-9) + 0.5;
  }

  void emit() {
    Quiddity q(m);
    for (std::size_t i = 0; i < m; ++i) q[i] = EInt(word[i].a, word[i].b);
    // Canonical representative: the gauge variant with the least signature.
    const auto orbit = gauge_orbit(q, opts.modulo_conjugation);
    if (!seen.insert(orbit.begin()->first).second) return;
    result.quiddities.push_back(orbit.begin()->second);
    if (opts.limit > 0 && result.quiddities.size() >= opts.limit) {
      result.truncated = true;
      done = true;
    }
  }

  // Solve the last two angles from the two closure conditions.
  void close() {
    const SE d1 = sp_det2(w[m - 2], w[0]);
    const SE d2 = sp_det2(w[m - 1], w[0]);
    if (se_zero(d2)) return;  // w_{m-1} coincides with w_0 (revisiting family)
    const auto am1 = se_exact_div(se_neg(d1), d2);
    if (!am1) return;
    const long long n1 = se_norm(*am1);
    if (n1 < 1 || n1 > cap) return;
    w[m] = {se_add(w[m - 2].p, se_mul(*am1, w[m - 1].p)),
            se_add(w[m - 2].q, se_mul(*am1, w[m - 1].q))};
    const SE dm = sp_det2(w[m], w[1]);
    if (se_zero(dm)) return;
    const auto am = se_exact_div(se_neg(sp_det2(w[m - 1], w[1])), dm);
    if (!am) return;
    const long long n2 = se_norm(*am);
    if (n2 < 1 || n2 > cap) return;
    word[m - 2] = *am1;
    word[m - 1] = *am;
    emit();
  }

  void dfs(std::size_t j) {  // choose a_j (1-based), j <= m-2
    if (done) return;
    if (j > m - 2) {
      close();
      return;
    }
    for (const SE& a : candidates) {
      if (done) return;
      ++result.nodes;
      if (opts.node_budget > 0 && result.nodes > opts.node_budget) {
        result.truncated = true;
        done = true;
        return;
      }
      const std::size_t t = j + 1;  // index of the vertex this angle creates
      w[t] = {se_add(w[t - 2].p, se_mul(a, w[t - 1].p)),
              se_add(w[t - 2].q, se_mul(a, w[t - 1].q))};
      if (opts.require_zero_free && !distinct_from_prefix(t)) continue;
      if (!opts.disable_growth_prune && !growth_ok(t)) continue;
      word[j - 1] = a;
      dfs(j + 1);
    }
  }
};

}  // namespace

FriezeEnumResult enumerate_friezes(std::size_t m, const FriezeEnumOptions& opts) {
  if (m < 4) throw std::invalid_argument("enumerate_friezes: period must be at least 4");
  // Fixed-width arithmetic in the search is sized for these periods.
  if (m > 8) throw std::invalid_argument("enumerate_friezes: period above 8 is unsupported");
  Enumerator e(m, opts);
  e.dfs(1);
  return std::move(e.result);
}

}  // namespace farey3d
