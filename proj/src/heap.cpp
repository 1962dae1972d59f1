#include "klfactor/heap.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace klfactor {

Step negate(Step s) {
  switch (s) {
    case Step::PlusU1: return Step::MinusU1;
    case Step::PlusU2: return Step::MinusU2;
    case Step::MinusU1: return Step::PlusU1;
    case Step::MinusU2: return Step::PlusU2;
  }
  throw std::logic_error("bad step");
}

Heap::Heap(const Factorization& j) {
  for (int k = 1; k <= j.r(); ++k)
    for (auto [a, b] : j.block(k).intervals()) comps_.push_back({a, b, k});
  std::sort(comps_.begin(), comps_.end(), [](const Component& a, const Component& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.i < b.i;
  });
  for (auto& v : steps_) v.assign(comps_.size(), -1);

  auto contains = [](const Component& c, int p) { return c.i <= p && p <= c.j; };
  for (int f = 0; f < size(); ++f) {
    // +u1: lowest level above holding j_f; +u2: same for i_f.
    for (int endpoint = 0; endpoint < 2; ++endpoint) {
      int p = endpoint == 0 ? comps_[f].j : comps_[f].i;
      int best = -1;
      for (int h = 0; h < size(); ++h) {
        if (comps_[h].level <= comps_[f].level || !contains(comps_[h], p)) continue;
        if (best == -1 || comps_[h].level < comps_[best].level) best = h;
      }
      steps_[endpoint][f] = best;
    }
    // -u1: highest level below holding i_f; -u2: same for j_f.
    for (int endpoint = 0; endpoint < 2; ++endpoint) {
      int p = endpoint == 0 ? comps_[f].i : comps_[f].j;
      int best = -1;
      for (int h = 0; h < size(); ++h) {
        if (comps_[h].level >= comps_[f].level || !contains(comps_[h], p)) continue;
        if (best == -1 || comps_[h].level > comps_[best].level) best = h;
      }
      steps_[2 + endpoint][f] = best;
    }
  }
}

std::optional<int> Heap::step(int idx, Step s) const {
  if (idx < 0 || idx >= size()) throw std::out_of_range("component index out of range");
  int t = steps_[static_cast<int>(s)][idx];
  if (t < 0) return std::nullopt;
  return t;
}

std::optional<int> Heap::apply_path(int idx, const std::vector<Step>& path) const {
  if (idx < 0 || idx >= size()) throw std::out_of_range("component index out of range");
  int cur = idx;
  for (Step s : path) {
    auto next = step(cur, s);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

Heap build_heap(const Factorization& j) { return Heap(j); }

namespace {

// f = g - u_i implies g = f + m u_i for some m > 0.
bool chain_reaches(const Heap& h, int from, int to, Step dir) {
  int cur = from;
  while (true) {
    auto next = h.step(cur, dir);
    if (!next) return false;
    cur = *next;
    if (cur == to) return true;
    if (h.component(cur).level >= h.component(to).level) return false;
  }
}

}  // namespace

bool is_strong_rdes(const Heap& h) {
  for (int g = 0; g < h.size(); ++g) {
    for (Step down : {Step::MinusU1, Step::MinusU2}) {
      auto f = h.step(g, down);
      if (f && !chain_reaches(h, *f, g, negate(down))) return false;
    }
  }
  return true;
}

bool is_strong_bidescent(const Heap& h) {
  for (int g = 0; g < h.size(); ++g) {
    for (Step s : {Step::PlusU1, Step::PlusU2, Step::MinusU1, Step::MinusU2}) {
      auto f = h.step(g, s);
      if (f && h.step(*f, negate(s)) != std::optional<int>(g)) return false;
    }
  }
  return true;
}

bool is_minimal_strong_bidescent(const Heap& h) {
  if (!is_strong_bidescent(h)) throw std::invalid_argument("heap is not strong bidescent");
  for (int e = 0; e < h.size(); ++e) {
    auto a = h.step(e, Step::PlusU1);
    auto b = h.step(e, Step::PlusU2);
    if (a && b && *a == *b) return false;
  }
  return true;
}

std::vector<LatticePoint> lattice_embedding(const Heap& h) {
  const int m = h.size();
  std::vector<LatticePoint> out(m);
  std::vector<int> cls(m, -1);
  auto delta = [](Step s) -> std::pair<int, int> {
    switch (s) {
      case Step::PlusU1: return {1, 1};
      case Step::PlusU2: return {-1, 1};
      case Step::MinusU1: return {-1, -1};
      case Step::MinusU2: return {1, -1};
    }
    throw std::logic_error("bad step");
  };
  int next_cls = 0;
  for (int root = 0; root < m; ++root) {
    if (cls[root] != -1) continue;
    // Components are stored in (level, i) order, so the first unvisited
    // index is the lexicographically least of its class.
    int c = next_cls++;
    cls[root] = c;
    out[root] = {c, 0, 0};
    std::queue<int> bfs;
    bfs.push(root);
    while (!bfs.empty()) {
      int cur = bfs.front();
      bfs.pop();
      for (Step s : {Step::PlusU1, Step::PlusU2, Step::MinusU1, Step::MinusU2}) {
        auto t = h.step(cur, s);
        if (!t) continue;
        auto [dx, dy] = delta(s);
        LatticePoint want{c, out[cur].x + dx, out[cur].y + dy};
        if (cls[*t] == -1) {
          cls[*t] = c;
          out[*t] = want;
          bfs.push(*t);
        } else if (!(out[*t] == want)) {
          throw std::invalid_argument("path sums disagree: heap is not minimal strong bidescent");
        }
      }
    }
  }
  // Injectivity per class, and unit diagonal differences only where the
  // corresponding step exists.
  std::map<std::tuple<int, int, int>, int> where;
  for (int a = 0; a < m; ++a) {
    auto [it, fresh] = where.insert({{out[a].cls, out[a].x, out[a].y}, a});
    if (!fresh) throw std::invalid_argument("embedding not injective within a class");
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (out[a].cls != out[b].cls || out[b].y != out[a].y + 1) continue;
      if (out[b].x == out[a].x + 1 && h.step(a, Step::PlusU1) != std::optional<int>(b))
        throw std::invalid_argument("unit diagonal without +u1 step");
      if (out[b].x == out[a].x - 1 && h.step(a, Step::PlusU2) != std::optional<int>(b))
        throw std::invalid_argument("unit diagonal without +u2 step");
    }
  return out;
}

bool diamond_exists(const Heap& h, int idx, int m1, int m2) {
  if (m1 < 1 || m2 < 1) throw std::invalid_argument("diamond sides must be positive");
  std::vector<Step> path;
  for (int t = 1; t < m1; ++t) path.push_back(Step::PlusU1);
  for (int t = 1; t < m2; ++t) path.push_back(Step::PlusU2);
  return h.apply_path(idx, path).has_value();
}

}  // namespace klfactor
