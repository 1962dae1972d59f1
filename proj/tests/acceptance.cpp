// Acceptance suite: runs every acceptance criterion at its stated bounds and
// prints one pass/fail line per criterion.  Exit status is the number of
// failing criteria.

#include <chrono>
#include <cstdio>
#include <string>

#include "klfactor/checks.hpp"
#include "klfactor/heap.hpp"
#include "klfactor/io_json.hpp"
#include "klfactor/patterns.hpp"

using namespace klfactor;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& details,
            double seconds) {
  std::printf("%s criterion %2d [%7.2fs] %s: %s\n", pass ? "PASS" : "FAIL", index, seconds,
              name.c_str(), details.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

template <class F>
void criterion(int index, const std::string& name, F f) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string details;
  try {
    CheckResult r = f();
    pass = r.pass;
    details = r.details;
  } catch (const std::exception& e) {
    details = std::string("exception: ") + e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(index, name, pass, details, dt);
}

Permutation P(std::initializer_list<int> w) { return Permutation::from_window(w); }

Factorization F(int n, std::initializer_list<std::initializer_list<int>> blocks) {
  std::vector<GenSet> bs;
  for (auto b : blocks) bs.push_back(GenSet(n, std::vector<int>(b)));
  return Factorization(n, std::move(bs));
}

// Criterion 1: the A2 worked case.
CheckResult criterion1() {
  Factorization j = F(3, {{1}, {2}, {1}});
  LaurentPoly one = LaurentPoly::one();
  LaurentPoly oneq = LaurentPoly::one() + LaurentPoly::q_power(1);
  DefectFamily fam = defect_polynomials(j);
  bool ok = fam.leading == P({3, 2, 1});
  ok = ok && fam.polys.size() == 6;
  ok = ok && fam.polys.at(P({1, 2, 3})) == oneq && fam.polys.at(P({2, 1, 3})) == oneq;
  for (const Permutation& x : {P({1, 3, 2}), P({2, 3, 1}), P({3, 1, 2}), P({3, 2, 1})})
    ok = ok && fam.polys.at(x) == one;
  ok = ok && is_admissible(j);
  TightResult t = is_tight(j);
  ok = ok && !t.tight && t.witness_target == P({2, 1, 3}) && t.witness_gap == 2 &&
       t.witness_defects == 1;
  DefectFamily via = defect_polynomials_via_hecke(j);
  ok = ok && via == fam;
  KLTable table = KLTable::build(3);
  auto expansion = expand_in_kl_basis(schur_quotient(3, j.blocks()), table);
  ok = ok && expansion.size() == 2 && expansion.at(P({3, 2, 1})).is_one() &&
       expansion.at(P({2, 1, 3})).is_one();
  ok = ok && !is_tight_via_hecke(j, table);
  return {"a2-worked-case", ok,
          ok ? "family, witness, hecke route and KL expansion all match"
             : "mismatch in the worked case"};
}

// Criterion 2: the 3412 case.
CheckResult criterion2() {
  Permutation w = P({3, 4, 1, 2});
  MonotoneResult res = monotone_factorization(w);
  bool ok = res.ok();
  Factorization expected = F(4, {{2}, {1, 3}, {2}});
  ok = ok && cf_equivalent(*res.factorization, expected);
  ok = ok && is_tight(*res.factorization).tight;
  DefectFamily fam = defect_polynomials(*res.factorization);
  KLTable table = KLTable::build(4);
  ok = ok && fam.polys == table.row(w);
  ok = ok && fam.polys.at(Permutation::identity(4)) ==
                 LaurentPoly::one() + LaurentPoly::q_power(1);
  return {"3412-case", ok,
          ok ? "monotone factorization ({2},{1,3},{2}), tight, family equals the KL row"
             : "3412 case failed"};
}

CheckResult criterion9() {
  CheckResult agreement = check_heap_agreement(CorpusBounds{5, 3, 3});
  CheckResult diamond = check_diamond_pattern(7);
  bool pass = agreement.pass && diamond.pass;
  return {"heap-characterizations", pass, agreement.details + "; " + diamond.details};
}

}  // namespace

int main() {
  std::printf("klfactor acceptance suite\n");
  criterion(1, "a2-worked-case", criterion1);
  criterion(2, "3412-case", criterion2);
  criterion(3, "4231-two-tight-factorizations", [] { return check_4231_two_tight(4); });
  criterion(4, "monotone-iff-4231-45312-avoiding (n <= 6)",
            [] { return check_monotone_iff_avoidance(6); });
  criterion(5, "thm4-sweep (S6)", [] { return check_thm4_sweep(6); });
  criterion(6, "deodhar-321-specialization (S5, all reduced words)",
            [] { return check_deodhar_specialization(5); });
  criterion(7, "defect-invariance (n <= 5, r <= 3, blocks <= 3)",
            [] { return check_defect_invariance(CorpusBounds{5, 3, 3}); });
  criterion(8, "hecke-identity and tight agreement (same corpus)",
            [] { return check_hecke_identity(CorpusBounds{5, 3, 3}); });
  criterion(9, "heap-characterizations and diamond patterns (n <= 7)", criterion9);
  criterion(10, "tight-factorizations-have-monotone-contractions (S4 r<=4, S5 r<=3)",
            [] { return check_tight_monotone_contraction(); });
  criterion(11, "bounce-inequality on the thm4 class (S6)",
            [] { return check_bounce_inequality(6); });
  criterion(12, "kl-oracle-self-consistency (S4 and S5 exhaustive)",
            [] { return check_kl_self_consistency(5); });
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", g_failures);
  }
  return g_failures;
}
