#include "klfactor/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace klfactor {

DirectednessProfile directedness_profile(const Permutation& w) {
  const int n = w.n();
  DirectednessProfile prof;
  prof.positions.resize(n);
  // prefix_max[p] over [1,p], suffix_min[p] over [p,n], as positions.
  std::vector<int> prefix_max(n + 1), suffix_min(n + 2);
  for (int p = 1; p <= n; ++p)
    prefix_max[p] = (p == 1 || w(p) > w(prefix_max[p - 1])) ? p : prefix_max[p - 1];
  for (int p = n; p >= 1; --p)
    suffix_min[p] = (p == n || w(p) < w(suffix_min[p + 1])) ? p : suffix_min[p + 1];
  for (int p = 1; p <= n; ++p) {
    PositionDirectedness& d = prof.positions[p - 1];
    d.lambda = prefix_max[p];
    d.rho = suffix_min[p];
    d.strong_left = d.lambda == p;
    d.strong_right = d.rho == p;
    d.left_directed = true;
    for (int x = 1; x < d.lambda; ++x)
      if (w(x) > w(p)) { d.left_directed = false; break; }
    d.right_directed = true;
    for (int x = d.rho + 1; x <= n; ++x)
      if (w(x) < w(p)) { d.right_directed = false; break; }
    d.uncrossed = d.strong_left && d.strong_right;
    d.properly_directed = d.directed() && !d.uncrossed;
  }
  return prof;
}

namespace {

// Dominance bounds around [a,b]: largest value before a, smallest value
// after b (0 and n+1 when absent).
std::pair<int, int> context_bounds(const Permutation& w, int a, int b) {
  int before = 0, after = w.n() + 1;
  for (int x = 1; x < a; ++x) before = std::max(before, w(x));
  for (int x = b + 1; x <= w.n(); ++x) after = std::min(after, w(x));
  return {before, after};
}

bool decreasing_on(const Permutation& w, int a, int b) {
  for (int p = a; p < b; ++p)
    if (w(p) < w(p + 1)) return false;
  return true;
}

}  // namespace

bool is_strong_rdes_interval(const Permutation& w, int a, int b) {
  if (a < 1 || b > w.n() || a >= b) return false;
  if (!decreasing_on(w, a, b)) return false;
  auto [before, after] = context_bounds(w, a, b);
  return before < w(a) && w(b) < after;
}

bool is_right_monotone_interval(const Permutation& w, int a, int b) {
  if (!is_strong_rdes_interval(w, a, b)) return false;
  auto [before, after] = context_bounds(w, a, b);
  // Directedness cutoffs on a descent run: p left-directed iff w(p) > before,
  // right-directed iff w(p) < after.  Monotone iff the two ranges cover [a,b].
  int l = a, r = b;
  for (int p = a; p <= b; ++p)
    if (w(p) > before) l = p;
  for (int p = b; p >= a; --p)
    if (w(p) < after) r = p;
  return r <= l + 1;
}

std::vector<DescentInterval> strong_rdes_intervals(const Permutation& w) {
  std::vector<DescentInterval> out;
  const int n = w.n();
  int a = 1;
  while (a <= n) {
    int b = a;
    while (b < n && w(b) > w(b + 1)) ++b;
    if (b > a && is_strong_rdes_interval(w, a, b)) {
      auto [before, after] = context_bounds(w, a, b);
      DescentInterval iv;
      iv.a = a;
      iv.b = b;
      iv.l = a;
      iv.r = b;
      for (int p = a; p <= b; ++p)
        if (w(p) > before) iv.l = p;
      for (int p = b; p >= a; --p)
        if (w(p) < after) iv.r = p;
      iv.right_monotone = iv.r <= iv.l + 1;
      out.push_back(iv);
    }
    a = b > a ? b : a + 1;
  }
  return out;
}

PeelResult peel_step(const Permutation& w) {
  if (w.is_identity()) throw std::invalid_argument("peel_step requires a non-identity input");
  PeelResult res;
  std::vector<DescentInterval> intervals = strong_rdes_intervals(w);
  if (intervals.empty()) {
    PeelFailure f;
    f.kind = PeelFailure::Kind::Realizes4231;
    f.stage = w;
    res.failure = f;
    return res;
  }
  std::vector<int> jr_gens, jstar_gens;
  for (const DescentInterval& iv : intervals) {
    if (!iv.right_monotone) {
      PeelFailure f;
      f.kind = PeelFailure::Kind::Realizes45312;
      f.stage = w;
      f.interval = {iv.a, iv.b};
      res.failure = f;
      return res;
    }
    for (int g = iv.a; g < iv.b; ++g) jr_gens.push_back(g);
    // Position intervals [a, a+b-l-1] and [b-r+a+1, b]; singletons carry no
    // generators.
    int left_hi = iv.a + iv.b - iv.l - 1;
    for (int g = iv.a; g < left_hi; ++g) jstar_gens.push_back(g);
    int right_lo = iv.b - iv.r + iv.a + 1;
    for (int g = right_lo; g < iv.b; ++g) jstar_gens.push_back(g);
  }
  PeelStep step{GenSet(w.n(), jr_gens), GenSet(w.n(), jstar_gens), Permutation(w.n())};
  step.x = compose(coset_decompose_right(w, step.j_r).min_rep, w0(step.j_star));
  res.step = step;
  return res;
}

MonotoneResult monotone_factorization(const Permutation& w) {
  MonotoneResult res;
  std::vector<GenSet> blocks_last_first;
  Permutation x = w;
  while (!x.is_identity()) {
    PeelResult p = peel_step(x);
    if (!p.ok()) {
      res.failure = p.failure;
      return res;
    }
    blocks_last_first.push_back(p.step->j_r);
    if (p.step->x.length() >= x.length())
      throw std::logic_error("peel step failed to shorten the stage permutation");
    x = p.step->x;
  }
  res.factorization =
      Factorization(w.n(), std::vector<GenSet>(blocks_last_first.rbegin(), blocks_last_first.rend()));
  return res;
}

namespace {

bool components_are(const Factorization& j,
                    bool (*interval_check)(const Permutation&, int, int)) {
  Permutation w(j.n());
  for (int k = 1; k <= j.r(); ++k) {
    w = compose(coset_decompose_right(w, j.block(k)).min_rep, w0(j.block(k)));
    for (auto [a, b] : j.block(k).intervals())
      if (!interval_check(w, a, b)) return false;
  }
  return true;
}

}  // namespace

bool is_strong_rdes_direct(const Factorization& j) {
  return components_are(j, is_strong_rdes_interval);
}

bool is_right_monotone(const Factorization& j) {
  return components_are(j, is_right_monotone_interval);
}

bool is_strong_ldes_direct(const Factorization& j) {
  return is_strong_rdes_direct(j.reversed());
}

bool is_left_monotone(const Factorization& j) { return is_right_monotone(j.reversed()); }

bool is_monotone(const Factorization& j) {
  return is_right_monotone(j) && is_left_monotone(j);
}

AvoidanceClass avoidance_class(const Permutation& w) {
  AvoidanceClass out;
  out.avoids_4231 = !pattern_positions(w, Permutation::from_window({4, 2, 3, 1})).has_value();
  out.avoids_45312 = !pattern_positions(w, Permutation::from_window({4, 5, 3, 1, 2})).has_value();
  out.avoids_34512 = !pattern_positions(w, Permutation::from_window({3, 4, 5, 1, 2})).has_value();
  out.avoids_45123 = !pattern_positions(w, Permutation::from_window({4, 5, 1, 2, 3})).has_value();
  return out;
}

}  // namespace klfactor
