#include <doctest.h>

#include <set>

#include "klfactor/checks.hpp"
#include "klfactor/heap.hpp"
#include "klfactor/patterns.hpp"

using namespace klfactor;

namespace {

Factorization F(int n, std::initializer_list<std::initializer_list<int>> blocks) {
  std::vector<GenSet> bs;
  for (auto b : blocks) bs.push_back(GenSet(n, std::vector<int>(b)));
  return Factorization(n, std::move(bs));
}

int find_comp(const Heap& h, int i, int j, int level) {
  for (int idx = 0; idx < h.size(); ++idx) {
    const Component& c = h.component(idx);
    if (c.i == i && c.j == j && c.level == level) return idx;
  }
  REQUIRE(false);
  return -1;
}

const Factorization k3412 = F(4, {{2}, {1, 3}, {2}});

}  // namespace

TEST_CASE("heap construction and steps") {
  Heap h = build_heap(k3412);
  REQUIRE(h.size() == 4);
  int c = find_comp(h, 2, 3, 1);
  int f = find_comp(h, 1, 2, 2);
  int g = find_comp(h, 3, 4, 2);
  int e = find_comp(h, 2, 3, 3);
  CHECK(h.step(c, Step::PlusU1) == g);
  CHECK(h.step(c, Step::PlusU2) == f);
  CHECK(h.step(e, Step::MinusU1) == f);
  CHECK(h.step(e, Step::MinusU2) == g);
  CHECK(!h.step(e, Step::PlusU1).has_value());
  CHECK(!h.step(c, Step::MinusU1).has_value());

  Heap single = build_heap(F(4, {{1, 2, 3}}));
  REQUIRE(single.size() == 1);
  for (Step s : {Step::PlusU1, Step::PlusU2, Step::MinusU1, Step::MinusU2})
    CHECK(!single.step(0, s).has_value());

  Heap a2 = build_heap(F(3, {{1}, {2}, {1}}));
  REQUIRE(a2.size() == 3);
  int e1 = find_comp(a2, 1, 2, 1);
  int e2 = find_comp(a2, 2, 3, 2);
  int e3 = find_comp(a2, 1, 2, 3);
  CHECK(a2.step(e2, Step::MinusU1) == e1);
  CHECK(a2.step(e3, Step::MinusU1) == e1);
  CHECK(a2.step(e1, Step::PlusU1) == e2);
}

TEST_CASE("path application") {
  Heap h = build_heap(k3412);
  int c = find_comp(h, 2, 3, 1);
  int e = find_comp(h, 2, 3, 3);
  CHECK(h.apply_path(c, {}) == c);
  CHECK(h.apply_path(c, {Step::PlusU1, Step::PlusU2}) == e);
  CHECK(h.apply_path(c, {Step::PlusU2, Step::PlusU1}) == e);
  CHECK(!h.apply_path(e, {Step::PlusU1}).has_value());
  CHECK_THROWS_AS(h.apply_path(99, {}), std::out_of_range);
}

TEST_CASE("strong descent characterizations on the heap") {
  CHECK(is_strong_bidescent(build_heap(k3412)));
  CHECK(is_strong_rdes(build_heap(k3412)));
  // ({1},{2},{1}): e2 - u1 = e1 but e1 + u1 = e2, never reaching e3.
  Heap a2 = build_heap(F(3, {{1}, {2}, {1}}));
  CHECK(!is_strong_rdes(a2));
  CHECK(!is_strong_bidescent(a2));
  CHECK(is_strong_bidescent(build_heap(F(4, {{1, 2, 3}}))));
  CHECK_THROWS_AS(is_minimal_strong_bidescent(a2), std::invalid_argument);
}

TEST_CASE("minimality of strong bidescent heaps") {
  CHECK(is_minimal_strong_bidescent(build_heap(k3412)));
  CHECK(is_minimal_strong_bidescent(build_heap(F(4, {{1, 2, 3}}))));
  // A component repeated across a commuting spacer: e + u1 = e + u2.
  Heap dup = build_heap(F(4, {{1}, {3}, {1}}));
  CHECK(is_strong_bidescent(dup));
  CHECK(!is_minimal_strong_bidescent(dup));
}

TEST_CASE("lattice embedding") {
  Heap h = build_heap(k3412);
  auto pts = lattice_embedding(h);
  int c = find_comp(h, 2, 3, 1);
  int f = find_comp(h, 1, 2, 2);
  int g = find_comp(h, 3, 4, 2);
  int e = find_comp(h, 2, 3, 3);
  CHECK(pts[c] == LatticePoint{0, 0, 0});
  CHECK(pts[g] == LatticePoint{0, 1, 1});
  CHECK(pts[f] == LatticePoint{0, -1, 1});
  CHECK(pts[e] == LatticePoint{0, 0, 2});

  auto single = lattice_embedding(build_heap(F(4, {{1, 2, 3}})));
  CHECK(single.size() == 1);
  CHECK(single[0] == LatticePoint{0, 0, 0});

  // Two incomparable components: separate classes, both anchored at (0,0).
  auto two = lattice_embedding(build_heap(F(5, {{1, 4}})));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == LatticePoint{0, 0, 0});
  CHECK(two[1] == LatticePoint{1, 0, 0});
}

TEST_CASE("diamond existence") {
  Heap h = build_heap(k3412);
  int c = find_comp(h, 2, 3, 1);
  CHECK(diamond_exists(h, c, 2, 2));
  CHECK(!diamond_exists(h, c, 3, 2));
  for (int idx = 0; idx < h.size(); ++idx) CHECK(diamond_exists(h, idx, 1, 1));
}

TEST_CASE("heap agreement with definitional checks on the small corpus") {
  CheckResult r = check_heap_agreement(CorpusBounds{4, 3, 3});
  CHECK(r.pass);
}

TEST_CASE("diamond pattern equivalence up to n = 6") {
  CheckResult r = check_diamond_pattern(6);
  CHECK(r.pass);
}

TEST_CASE("lateral convexity on monotone outputs") {
  for (const Permutation& w : all_permutations(5)) {
    MonotoneResult res = monotone_factorization(w);
    if (!res.ok()) continue;
    Heap h = build_heap(*res.factorization);
    for (int e = 0; e < h.size(); ++e) {
      auto a = h.apply_path(e, {Step::PlusU1, Step::PlusU2});
      auto b = h.apply_path(e, {Step::PlusU2, Step::PlusU1});
      if (a || b) CHECK(a == b);
    }
  }
}
