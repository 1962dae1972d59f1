#include <doctest.h>

#include <algorithm>
#include <set>

#include "klfactor/checks.hpp"
#include "klfactor/factorization.hpp"

using namespace klfactor;

namespace {

Permutation P(std::initializer_list<int> w) { return Permutation::from_window(w); }

Factorization F(int n, std::initializer_list<std::initializer_list<int>> blocks) {
  std::vector<GenSet> bs;
  for (auto b : blocks) bs.push_back(GenSet(n, std::vector<int>(b)));
  return Factorization(n, std::move(bs));
}

Mask M(std::initializer_list<Permutation> parts) {
  return Mask(std::vector<Permutation>(parts));
}

const Factorization kA2 = F(3, {{1}, {2}, {1}});            // leading 321
const Factorization k3412 = F(4, {{2}, {1, 3}, {2}});       // leading 3412

}  // namespace

TEST_CASE("defect data") {
  // Level 3 defect at pair (1,2): w2 = 213 inverts it.
  DefectData d = defect_data(kA2, M({P({2, 1, 3}), P({1, 2, 3}), P({2, 1, 3})}));
  CHECK(d.d_r == 1);
  CHECK(d.position_pairs[0].empty());
  CHECK(d.position_pairs[1].empty());
  CHECK(d.position_pairs[2] == std::vector<std::pair<int, int>>{{1, 2}});

  CHECK(defect_data(kA2, Mask::all_identity(kA2)).d_r == 0);

  DefectData d2 = defect_data(k3412, M({Permutation::simple(4, 2), Permutation::identity(4),
                                        Permutation::simple(4, 2)}));
  CHECK(d2.d_r == 1);
  CHECK(d2.position_pairs[2] == std::vector<std::pair<int, int>>{{2, 3}});

  CHECK_THROWS_AS(defect_data(kA2, Mask::all_identity(k3412)), std::invalid_argument);
  // A part moving positions outside its block is rejected.
  CHECK_THROWS_AS(defect_data(kA2, M({P({1, 3, 2}), P({1, 2, 3}), P({1, 2, 3})})),
                  std::invalid_argument);
}

TEST_CASE("defect position pairs move across representatives, value pairs do not") {
  Factorization j = F(3, {{1}, {2}, {1, 2}});
  Mask a = M({P({2, 1, 3}), P({1, 2, 3}), P({1, 2, 3})});
  Mask b = M({P({2, 1, 3}), P({1, 3, 2}), P({1, 3, 2})});  // same class, shifted through s2
  CHECK(a.target(3) == b.target(3));
  DefectData da = defect_data(j, a), db = defect_data(j, b);
  CHECK(da.d_r == db.d_r);
  CHECK(da.value_pairs == db.value_pairs);
  CHECK(da.position_pairs != db.position_pairs);
  CHECK(canonicalize(j, a) == canonicalize(j, b));
}

TEST_CASE("mask canonicalization") {
  Factorization j = F(2, {{1}, {1}});
  Mask m = M({P({2, 1}), P({2, 1})});
  Mask canon = canonicalize(j, m);
  CHECK(canon == M({P({1, 2}), P({1, 2})}));
  CHECK(canon.target(2) == m.target(2));
  // All-identity masks and empty-overlap factorizations are fixed points.
  CHECK(canonicalize(kA2, Mask::all_identity(kA2)) == Mask::all_identity(kA2));
  Mask arbitrary = M({P({2, 1, 3}), P({1, 3, 2}), P({2, 1, 3})});
  CHECK(canonicalize(kA2, arbitrary) == arbitrary);
}

TEST_CASE("mask class enumeration") {
  MaskClassEnumerator two(F(2, {{1}, {1}}));
  CHECK(two.count() == 2);
  std::set<Permutation> targets;
  two.scan([&](const Mask&, const Permutation& t, int) {
    targets.insert(t);
    return true;
  });
  CHECK(targets == std::set<Permutation>{P({1, 2}), P({2, 1})});

  CHECK(MaskClassEnumerator(kA2).count() == 8);
  CHECK(MaskClassEnumerator(k3412).count() == 16);
  // A single empty block: one class, the empty-support mask.
  MaskClassEnumerator empty_block(Factorization(3, {GenSet(3)}));
  CHECK(empty_block.count() == 1);
  CHECK(empty_block.class_at(0).target(3).is_identity());

  // class_at agrees with the scan order; every class is emitted once.
  MaskClassEnumerator en(kA2);
  std::vector<Mask> scanned;
  en.scan([&](const Mask& m, const Permutation&, int) {
    scanned.push_back(m);
    return true;
  });
  REQUIRE(scanned.size() == en.count());
  for (std::uint64_t i = 0; i < en.count(); ++i) CHECK(en.class_at(i) == scanned[i]);
  CHECK(std::set<Mask>(scanned.begin(), scanned.end()).size() == en.count());
  // Scanned representatives are already in fiber-product normal form.
  for (const Mask& m : scanned) CHECK(canonicalize(kA2, m) == m);

  // The empty factorization has one class: the empty mask targeting e.
  Factorization trivial(3);
  MaskClassEnumerator none(trivial);
  CHECK(none.count() == 1);
  DefectFamily fam0 = defect_polynomials(trivial);
  CHECK(fam0.leading.is_identity());
  CHECK(fam0.polys.size() == 1);
  CHECK(fam0.polys.at(Permutation::identity(3)).is_one());
}

TEST_CASE("tightness implies admissibility on the corpus") {
  for_each_corpus_factorization(CorpusBounds{4, 3, 3}, [](const Factorization& j) {
    if (is_tight(j).tight) CHECK(is_admissible(j));
  });
}

TEST_CASE("defect polynomials") {
  LaurentPoly one = LaurentPoly::one();
  LaurentPoly oneq = LaurentPoly::one() + LaurentPoly::q_power(1);

  DefectFamily a2 = defect_polynomials(kA2);
  CHECK(a2.leading == P({3, 2, 1}));
  CHECK(a2.polys.at(P({1, 2, 3})) == oneq);
  CHECK(a2.polys.at(P({2, 1, 3})) == oneq);
  CHECK(a2.polys.at(P({1, 3, 2})) == one);
  CHECK(a2.polys.at(P({2, 3, 1})) == one);
  CHECK(a2.polys.at(P({3, 1, 2})) == one);
  CHECK(a2.polys.at(P({3, 2, 1})) == one);

  // Single block: all ones over the parabolic.
  DefectFamily single = defect_polynomials(F(4, {{1, 2, 3}}));
  CHECK(single.polys.size() == 24);
  for (const auto& [x, p] : single.polys) CHECK(p == one);

  DefectFamily d3412 = defect_polynomials(k3412);
  CHECK(d3412.polys.at(Permutation::identity(4)) == oneq);
  CHECK(d3412.polys.at(P({3, 4, 1, 2})) == one);

  // Support is Bruhat-below the leading element; coefficients nonnegative;
  // evaluation at q = 1 counts classes.
  for (const Factorization& j : {kA2, k3412, F(4, {{1, 3}, {2}})}) {
    DefectFamily fam = defect_polynomials(j);
    std::int64_t total = 0;
    for (const auto& [x, p] : fam.polys) {
      CHECK(bruhat_leq(x, fam.leading));
      CHECK(p.all_coeffs_nonnegative());
      total += p.eval_at_one();
    }
    CHECK(total == static_cast<std::int64_t>(MaskClassEnumerator(j).count()));
  }
}

TEST_CASE("defect polynomials via the hecke route") {
  DefectFamily direct = defect_polynomials(kA2);
  DefectFamily via = defect_polynomials_via_hecke(kA2);
  CHECK(via == direct);
  CHECK(defect_polynomials_via_hecke(k3412) == defect_polynomials(k3412));
  // Rank-1 idempotent case.
  Factorization ss = F(3, {{1}, {1}});
  DefectFamily fam = defect_polynomials_via_hecke(ss);
  CHECK(fam.polys.size() == 2);
  for (const auto& [x, p] : fam.polys) CHECK(p.is_one());
  CHECK(defect_polynomials(ss) == fam);
  // The degree shift differs from l(w(J)) once a block swallows earlier ones.
  Factorization swallow = F(3, {{1}, {2}, {1, 2}});
  CHECK(schur_degree_shift(swallow) == 4);
  CHECK(swallow.leading().length() == 3);
  CHECK(defect_polynomials_via_hecke(swallow) == defect_polynomials(swallow));
}

TEST_CASE("admissibility and tightness") {
  CHECK(is_admissible(F(4, {{1, 2, 3}})));
  CHECK(is_admissible(kA2));
  CHECK(is_admissible(k3412));

  TightResult a2 = is_tight(kA2);
  CHECK(!a2.tight);
  CHECK(a2.witness_target == P({2, 1, 3}));
  CHECK(a2.witness_defects == 1);
  CHECK(a2.witness_gap == 2);
  CHECK(a2.witness == M({P({2, 1, 3}), P({1, 2, 3}), P({1, 2, 3})}));

  CHECK(is_tight(k3412).tight);
  CHECK(is_tight(F(4, {{1, 2, 3}})).tight);

  KLTable t3 = KLTable::build(3);
  KLTable t4 = KLTable::build(4);
  CHECK(!is_tight_via_hecke(kA2, t3));
  CHECK(is_tight_via_hecke(k3412, t4));
  CHECK(is_tight_via_hecke(F(3, {{1}}), t3));
}

TEST_CASE("string positions") {
  Mask id3 = Mask::all_identity(kA2);
  for (int p = 1; p <= 3; ++p)
    for (int k = 0; k <= 3; ++k) CHECK(string_position(id3, 3, p, k) == p);
  Mask swap2 = M({P({2, 1})});
  CHECK(string_position(swap2, 2, 1, 1) == 2);
  Mask m = M({Permutation::simple(4, 2), P({2, 1, 4, 3})});
  CHECK(string_position(m, 4, 2, 1) == 3);
  CHECK(string_position(m, 4, 2, 2) == 4);  // (s2 s1s3)^-1 = 2413
  CHECK_THROWS_AS(string_position(m, 4, 2, 3), std::out_of_range);
  CHECK_THROWS_AS(string_position(m, 4, 5, 1), std::out_of_range);
}

TEST_CASE("component statistics") {
  // All-identity mask on a single full block: every pair meets, none defect,
  // all bounce.
  Factorization full = F(4, {{1, 2, 3}});
  auto stats = component_stats(full, Mask::all_identity(full));
  REQUIRE(stats.size() == 1);
  CHECK(stats[0].rmeet.size() == 6);
  CHECK(stats[0].rdef.empty());
  CHECK(stats[0].rcross.empty());
  CHECK(stats[0].rbounce.size() == 6);

  auto a2 = component_stats(kA2, M({P({2, 1, 3}), P({1, 2, 3}), P({2, 1, 3})}));
  REQUIRE(a2.size() == 3);
  CHECK(a2[2].level == 3);
  CHECK(a2[2].rdef == std::set<std::pair<int, int>>{{1, 2}});
  CHECK(a2[2].rcross == std::set<std::pair<int, int>>{{1, 2}});
  CHECK(a2[2].rbounce.empty());

  auto d = component_stats(k3412, M({Permutation::simple(4, 2), Permutation::identity(4),
                                     Permutation::simple(4, 2)}));
  REQUIRE(d.size() == 4);
  // Level-2 components each carry one non-defect bounce.
  CHECK(d[1].rbounce.size() == 1);
  CHECK(d[1].rdef.empty());
  CHECK(d[2].rbounce.size() == 1);
  CHECK(d[2].rdef.empty());
  // Level-3 component has the defect.
  CHECK(d[3].rdef == std::set<std::pair<int, int>>{{2, 3}});
}

TEST_CASE("contractions") {
  auto c = contract_once(F(4, {{1}, {3}, {1}}));
  std::set<Factorization> got(c.begin(), c.end());
  CHECK(got == std::set<Factorization>{F(4, {{1}, {3}}), F(4, {{3}, {1}})});

  CHECK(contract_once(kA2).empty());

  auto dup = contract_once(F(3, {{1, 2}, {1, 2}}));
  REQUIRE(dup.size() == 1);
  CHECK(dup[0] == F(3, {{1, 2}}));

  for (const Factorization& j : {F(4, {{1}, {3}, {1}}), F(3, {{1, 2}, {1, 2}})})
    for (const Factorization& k : contract_once(j)) CHECK(k.leading() == j.leading());
}

TEST_CASE("cartier-foata normal forms and equivalence") {
  CHECK(cf_normal_form(F(4, {{3}, {1}})) == F(4, {{1, 3}}));
  CHECK(cf_equivalent(F(4, {{1}, {3}}), F(4, {{3}, {1}})));
  CHECK(cf_normal_form(F(3, {{1}, {2}})) == F(3, {{1}, {2}}));
  CHECK(!cf_equivalent(F(3, {{1}, {2}}), F(3, {{2}, {1}})));
  CHECK(cf_normal_form(Factorization(3)) == Factorization(3));
  // Empty blocks are dropped.
  CHECK(cf_normal_form(Factorization(3, {GenSet(3), GenSet(3, {1})})) == F(3, {{1}}));
  // Moves preserve the leading element.
  Factorization j = F(5, {{1, 4}, {2}, {4}});
  for (const Factorization& m : cf_moves(j)) CHECK(m.leading() == j.leading());
  for (const Factorization& m : cf_orbit(j)) CHECK(cf_normal_form(m) == cf_normal_form(j));
}

TEST_CASE("cf confluence on the small corpus") {
  CheckResult r = check_cf_confluence(CorpusBounds{4, 3, 3});
  CHECK(r.pass);
}

TEST_CASE("descent-type predicates") {
  CHECK(is_bidescent(F(4, {{1, 2, 3}})));
  CHECK(is_rdes_factorization(k3412));
  CHECK(is_bidescent(k3412));
  CHECK(is_absolutely_bidescent(k3412));
  // 231 = s1 s2: the outward components sit in rdes(231) = {2} and
  // ldes(231) = {1}, so the definition holds on both sides.
  Factorization updown = F(3, {{1}, {2}});
  CHECK(is_rdes_factorization(updown));
  CHECK(is_ldes_factorization(updown));
  CHECK(is_bidescent(updown));
  CHECK(is_absolutely_bidescent(updown));
  // 321 as ({1},{2},{1}): the trailing {1} is a proper subset, not a
  // component, of rdes(321) = {1,2}.
  CHECK(!is_rdes_factorization(kA2));
  CHECK(!is_bidescent(kA2));
  CHECK(is_bidescent(F(3, {{2}, {1}})));
  // ({1,2},{1}) leads to 321 but the trailing {1} is a proper subset of the
  // descent component {1,2}: not right-descent.
  CHECK(!is_rdes_factorization(F(3, {{1, 2}, {1}})));
  CHECK(is_ldes_factorization(F(3, {{1, 2}, {1}})));
  // Mirror image fails on the left side only.
  CHECK(is_rdes_factorization(F(3, {{1}, {1, 2}})));
  CHECK(!is_ldes_factorization(F(3, {{1}, {1, 2}})));
  CHECK(!is_bidescent(F(3, {{1}, {1, 2}})));
  CHECK(!is_absolutely_bidescent(F(3, {{1}, {1, 2}})));
}

TEST_CASE("exploratory graded identity for tight factorizations") {
  // For tight J, the q^{l}-graded family sum factors over the slot
  // contributions.
  for_each_corpus_factorization(CorpusBounds{4, 3, 3}, [](const Factorization& j) {
    if (!is_tight(j).tight) return;
    DefectFamily fam = defect_polynomials(j);
    LaurentPoly lhs;
    for (const auto& [x, p] : fam.polys) lhs += p * LaurentPoly::q_power(x.length());
    LaurentPoly rhs = LaurentPoly::one();
    for (int k = 1; k <= j.r(); ++k) {
      std::vector<Permutation> reps =
          k < j.r() ? min_coset_reps(j.block(k), j.block(k).set_intersection(j.block(k + 1)))
                    : parabolic_elements(j.block(k));
      LaurentPoly factor;
      for (const Permutation& u : reps) factor += LaurentPoly::q_power(u.length());
      rhs *= factor;
    }
    CHECK(lhs == rhs);
  });
}

TEST_CASE("defect family accumulation is schedule independent") {
  // Partitioned accumulation over class indices reproduces the scan result.
  for (const Factorization& j : {kA2, k3412, F(5, {{1, 2}, {2, 3}, {1, 4}})}) {
    DefectFamily whole = defect_polynomials(j);
    MaskClassEnumerator en(j);
    DefectFamily chunked(j.leading());
    const int chunks = 3;
    for (int c = 0; c < chunks; ++c) {
      for (std::uint64_t i = c; i < en.count(); i += chunks) {
        Mask m = en.class_at(i);
        DefectData d = defect_data(j, m);
        chunked.polys[m.target(j.n())] += LaurentPoly::q_power(d.d_r);
      }
    }
    CHECK(chunked == whole);
  }
}
