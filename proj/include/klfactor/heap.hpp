#ifndef KLFACTOR_HEAP_HPP
#define KLFACTOR_HEAP_HPP

#include <array>
#include <optional>
#include <vector>

#include "klfactor/factorization.hpp"

namespace klfactor {

// One connected component of a block: position interval [i,j] (j >= i+1),
// living at the given level.
struct Component {
  int i = 0;
  int j = 0;
  int level = 0;

  friend bool operator==(const Component& a, const Component& b) {
    return a.i == b.i && a.j == b.j && a.level == b.level;
  }
};

enum class Step { PlusU1, PlusU2, MinusU1, MinusU2 };

Step negate(Step s);

// Heap of connected components with the four partial steps:
//   f + u1  lowest component above f whose interval contains j_f
//   f + u2  lowest component above f whose interval contains i_f
//   h - u1  highest component below h whose interval contains i_h
//   h - u2  highest component below h whose interval contains j_h
// (each undefined when no such component exists).
class Heap {
public:
  explicit Heap(const Factorization& j);

  int size() const { return static_cast<int>(comps_.size()); }
  const std::vector<Component>& components() const { return comps_; }
  const Component& component(int idx) const { return comps_.at(idx); }

  // Index of the step target, or nullopt.
  std::optional<int> step(int idx, Step s) const;

  // Left-to-right application; nullopt as soon as a step is undefined.
  std::optional<int> apply_path(int idx, const std::vector<Step>& path) const;

private:
  std::vector<Component> comps_;  // sorted by (level, i)
  std::array<std::vector<int>, 4> steps_;  // -1 for undefined
};

Heap build_heap(const Factorization& j);

// Heap characterization of strong descent conditions:
//   strong right-descent:  f = g - u_i implies g = f + m u_i for some m > 0
//   strong bidescent:      f = g +- u_i iff g = f -+ u_i.
bool is_strong_rdes(const Heap& h);
bool is_strong_bidescent(const Heap& h);

// For strong bidescent heaps: minimal iff no component has e+u1 = e+u2.
// Throws std::invalid_argument when the heap is not strong bidescent.
bool is_minimal_strong_bidescent(const Heap& h);

// Lattice realization iota with iota(+-u1) = +-(1,1), iota(+-u2) = -+(-1,1)
// as level increases; each connected class of the step graph is anchored at
// (0,0) on its least component and tagged with a class id.
struct LatticePoint {
  int cls = 0;
  int x = 0;
  int y = 0;

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.cls == b.cls && a.x == b.x && a.y == b.y;
  }
};

// Throws std::invalid_argument on path-sum inconsistency (which would
// falsify the minimal-strong-bidescent precondition).
std::vector<LatticePoint> lattice_embedding(const Heap& h);

// Whether e + (m1-1) u1 + (m2-1) u2 is defined.
bool diamond_exists(const Heap& h, int idx, int m1, int m2);

}  // namespace klfactor

#endif
