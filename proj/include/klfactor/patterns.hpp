#ifndef KLFACTOR_PATTERNS_HPP
#define KLFACTOR_PATTERNS_HPP

#include <optional>
#include <string>
#include <vector>

#include "klfactor/factorization.hpp"

namespace klfactor {

// Directedness data of one position:
//   lambda  position of max { w(x) : x <= p }
//   rho     position of min { w(x) : x >= p }
//   left-directed   x < lambda implies w(x) < w(p)
//   right-directed  x > rho implies w(p) < w(x)
//   strong left/right: lambda = p, resp. rho = p
//   uncrossed = strong left and strong right
//   properly directed = directed but not uncrossed.
struct PositionDirectedness {
  int lambda = 0;
  int rho = 0;
  bool left_directed = false;
  bool right_directed = false;
  bool strong_left = false;
  bool strong_right = false;
  bool uncrossed = false;
  bool properly_directed = false;

  bool directed() const { return left_directed || right_directed; }
};

struct DirectednessProfile {
  std::vector<PositionDirectedness> positions;  // index 0 = position 1
  const PositionDirectedness& at(int p) const { return positions.at(p - 1); }
};

DirectednessProfile directedness_profile(const Permutation& w);

// A strong right-descent interval [a,b]: w decreasing on [a,b] with a < b,
// w(x) < w(a) for x < a and w(b) < w(x) for x > b.  The cutoffs l and r are
// the directedness thresholds: p in [a,b] is left-directed iff p <= l and
// right-directed iff p >= r.  Right-monotone when every position in [a,b]
// is directed, i.e. r <= l+1.
struct DescentInterval {
  int a = 0;
  int b = 0;
  int l = 0;
  int r = 0;
  bool right_monotone = false;
};

std::vector<DescentInterval> strong_rdes_intervals(const Permutation& w);

// Interval-level checks used by the definitional (non-heap) predicates.
bool is_strong_rdes_interval(const Permutation& w, int a, int b);
bool is_right_monotone_interval(const Permutation& w, int a, int b);

// One stage of the monotone-factorization loop.  J_r collects the generator
// runs of all strong right-descent intervals; each interval contributes to
// J_* the runs of [a, a+b-l-1] and [b-r+a+1, b] (singletons dropped); the
// next stage is x = (min coset rep of w mod W_{J_r}) * w0(J_*).
struct PeelStep {
  GenSet j_r;
  GenSet j_star;
  Permutation x;
};

struct PeelFailure {
  enum class Kind { Realizes4231, Realizes45312 };
  Kind kind = Kind::Realizes4231;
  Permutation stage;
  std::optional<std::pair<int, int>> interval;  // offending interval for 45312

  PeelFailure() : stage(1) {}
  std::string status() const {
    return kind == Kind::Realizes4231 ? "fails-4231" : "fails-45312";
  }
};

struct PeelResult {
  std::optional<PeelStep> step;
  std::optional<PeelFailure> failure;
  bool ok() const { return step.has_value(); }
};

// Fails exactly when w has no strong right-descent interval (w realizes
// 4231) or some interval is not right-monotone (w realizes 45312).
PeelResult peel_step(const Permutation& w);

struct MonotoneResult {
  std::optional<Factorization> factorization;
  std::optional<PeelFailure> failure;
  bool ok() const { return factorization.has_value(); }
};

// Iterates peel_step, prepending each J_r, until the identity.  Succeeds
// iff w avoids 4231 and 45312; the output is the minimal monotone
// factorization of w, unique up to Cartier-Foata equivalence.
MonotoneResult monotone_factorization(const Permutation& w);

// Every component of J_k is a strong right-descent (resp. right-monotone)
// interval of the leading element of the upslice J_1..J_k.
bool is_strong_rdes_direct(const Factorization& j);
bool is_right_monotone(const Factorization& j);
// Left notions apply the right ones to the reversed sequence.
bool is_strong_ldes_direct(const Factorization& j);
bool is_left_monotone(const Factorization& j);
bool is_monotone(const Factorization& j);

struct AvoidanceClass {
  bool avoids_4231 = true;
  bool avoids_45312 = true;
  bool avoids_34512 = true;
  bool avoids_45123 = true;
};

AvoidanceClass avoidance_class(const Permutation& w);

}  // namespace klfactor

#endif
