#include "klfactor/checks.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "klfactor/parallel.hpp"

namespace klfactor {

namespace {

std::vector<GenSet> corpus_blocks(int n, int max_block_size) {
  std::vector<GenSet> out;
  int m = n - 1;
  for (int bits = 1; bits < (1 << m); ++bits) {
    if (__builtin_popcount(static_cast<unsigned>(bits)) > max_block_size) continue;
    std::vector<int> gens;
    for (int g = 1; g <= m; ++g)
      if (bits & (1 << (g - 1))) gens.push_back(g);
    out.push_back(GenSet(n, std::move(gens)));
  }
  return out;
}

std::string counted(const char* what, long long n) {
  std::ostringstream os;
  os << n << " " << what;
  return os.str();
}

Permutation staircase_pattern(int m1, int m2) {
  std::vector<int> window;
  for (int v = m2 + 1; v <= m2 + m1; ++v) window.push_back(v);
  for (int v = 1; v <= m2; ++v) window.push_back(v);
  return Permutation::from_window(std::move(window));
}

// Closure of a factorization under contract_once.
std::vector<Factorization> contraction_closure(const Factorization& j) {
  std::set<Factorization> seen{j};
  std::deque<Factorization> queue{j};
  std::vector<Factorization> out;
  while (!queue.empty()) {
    Factorization cur = queue.front();
    queue.pop_front();
    out.push_back(cur);
    for (const Factorization& next : contract_once(cur))
      if (seen.insert(next).second) queue.push_back(next);
  }
  return out;
}

}  // namespace

void for_each_corpus_factorization(const CorpusBounds& bounds,
                                   const std::function<void(const Factorization&)>& fn) {
  for (int n = 2; n <= bounds.nmax; ++n) {
    std::vector<GenSet> choices = corpus_blocks(n, bounds.max_block_size);
    for (int r = 1; r <= bounds.rmax; ++r) {
      std::vector<std::size_t> idx(r, 0);
      while (true) {
        std::vector<GenSet> blocks;
        blocks.reserve(r);
        for (int k = 0; k < r; ++k) blocks.push_back(choices[idx[k]]);
        fn(Factorization(n, std::move(blocks)));
        int k = r - 1;
        while (k >= 0 && ++idx[k] == choices.size()) idx[k--] = 0;
        if (k < 0) break;
      }
    }
  }
}

CheckResult check_defect_invariance(const CorpusBounds& bounds) {
  long long masks = 0, mismatches = 0;
  for_each_corpus_factorization(bounds, [&](const Factorization& j) {
    MaskClassEnumerator en(j);
    en.scan_all_masks([&](const Mask& m) {
      ++masks;
      DefectData d = defect_data(j, m);
      DefectData dc = defect_data(j, canonicalize(j, m));
      if (d.d_r != dc.d_r || d.value_pairs != dc.value_pairs) ++mismatches;
      return true;
    });
  });
  return {"defect-invariance", mismatches == 0,
          counted("masks checked", masks) + ", " + counted("mismatches", mismatches)};
}

CheckResult check_hecke_identity(const CorpusBounds& bounds) {
  std::map<int, KLTable> tables;
  for (int n = 2; n <= bounds.nmax; ++n) tables.emplace(n, KLTable::build(n));
  long long checked = 0, identity_failures = 0, tight_disagreements = 0, division_failures = 0;
  for_each_corpus_factorization(bounds, [&](const Factorization& j) {
    ++checked;
    DefectFamily fam = defect_polynomials(j);
    // Product route.
    HeckeElt lhs = HeckeElt::unit(j.n());
    for (const GenSet& b : j.blocks()) lhs = mul(lhs, cprime_longest(b));
    LaurentPoly denom = LaurentPoly::one();
    for (int k = 1; k < j.r(); ++k)
      denom *= poincare_laurent(j.block(k).set_intersection(j.block(k + 1)));
    HeckeElt rhs(j.n());
    const LaurentPoly shift = LaurentPoly::v_power(-schur_degree_shift(j));
    for (const auto& [x, p] : fam.polys) rhs.add_term(x, denom * shift * p);
    if (lhs != rhs) ++identity_failures;
    try {
      DefectFamily via = defect_polynomials_via_hecke(j);
      if (via != fam) ++identity_failures;
    } catch (const InexactDivision&) {
      ++division_failures;
    }
    bool tight_enum = is_tight(j).tight;
    bool tight_hecke = is_tight_via_hecke(j, tables.at(j.n()));
    if (tight_enum != tight_hecke) ++tight_disagreements;
  });
  std::ostringstream os;
  os << checked << " factorizations, " << identity_failures << " identity failures, "
     << division_failures << " division failures, " << tight_disagreements
     << " tight disagreements";
  return {"hecke-identity", identity_failures == 0 && tight_disagreements == 0, os.str()};
}

CheckResult check_heap_agreement(const CorpusBounds& bounds) {
  long long checked = 0, mismatches = 0, embedding_failures = 0;
  for_each_corpus_factorization(bounds, [&](const Factorization& j) {
    ++checked;
    Heap h = build_heap(j);
    bool rdes_heap = is_strong_rdes(h);
    bool rdes_direct = is_strong_rdes_direct(j);
    if (rdes_heap != rdes_direct) ++mismatches;
    bool bides_heap = is_strong_bidescent(h);
    bool bides_direct = rdes_direct && is_strong_ldes_direct(j);
    if (bides_heap != bides_direct) ++mismatches;
    if (bides_heap) {
      bool minimal_heap = is_minimal_strong_bidescent(h);
      bool minimal_direct = contract_once(j).empty();
      if (minimal_heap != minimal_direct) ++mismatches;
      if (minimal_heap) {
        try {
          lattice_embedding(h);
        } catch (const std::invalid_argument&) {
          ++embedding_failures;
        }
        // Lateral convexity: e+u1+u2 defined implies e+u2+u1 defined and equal.
        for (int e = 0; e < h.size(); ++e) {
          auto a = h.apply_path(e, {Step::PlusU1, Step::PlusU2});
          auto b = h.apply_path(e, {Step::PlusU2, Step::PlusU1});
          if (a && (!b || *a != *b)) ++mismatches;
          if (b && (!a || *a != *b)) ++mismatches;
        }
        // Diamond steps against pattern scans of the leading element.
        Permutation lead = j.leading();
        for (int m1 = 2; m1 <= 3; ++m1)
          for (int m2 = 2; m2 <= 3; ++m2) {
            std::vector<int> window;
            for (int v = m2 + 1; v <= m2 + m1; ++v) window.push_back(v);
            for (int v = 1; v <= m2; ++v) window.push_back(v);
            bool diamond = false;
            for (int e = 0; e < h.size() && !diamond; ++e)
              diamond = diamond_exists(h, e, m1, m2);
            if (diamond !=
                pattern_positions(lead, Permutation::from_window(window)).has_value())
              ++mismatches;
          }
      }
    }
  });
  std::ostringstream os;
  os << checked << " factorizations, " << mismatches << " mismatches, " << embedding_failures
     << " embedding failures";
  return {"heap-agreement", mismatches == 0 && embedding_failures == 0, os.str()};
}

CheckResult check_diamond_pattern(int nmax) {
  long long checked = 0, mismatches = 0;
  for (int n = 2; n <= nmax; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      MonotoneResult res = monotone_factorization(w);
      if (!res.ok()) continue;
      Heap h = build_heap(*res.factorization);
      ++checked;
      for (int m1 = 2; m1 <= 3; ++m1)
        for (int m2 = 2; m2 <= 3; ++m2) {
          bool diamond = false;
          for (int e = 0; e < h.size() && !diamond; ++e)
            diamond = diamond_exists(h, e, m1, m2);
          bool pattern = pattern_positions(w, staircase_pattern(m1, m2)).has_value();
          if (diamond != pattern) ++mismatches;
        }
    }
  }
  return {"diamond-pattern", mismatches == 0,
          counted("factorizations checked", checked) + ", " + counted("mismatches", mismatches)};
}

CheckResult check_monotone_iff_avoidance(int nmax) {
  long long checked = 0, mismatches = 0;
  for (int n = 1; n <= nmax; ++n) {
    std::vector<Permutation> perms = all_permutations(n);
    std::vector<char> bad(perms.size(), 0);
    parallel_for(perms.size(), [&](std::size_t i) {
      const Permutation& w = perms[i];
      AvoidanceClass av = avoidance_class(w);
      bool expect = av.avoids_4231 && av.avoids_45312;
      if (monotone_factorization(w).ok() != expect) bad[i] = 1;
    });
    checked += static_cast<long long>(perms.size());
    for (char b : bad) mismatches += b;
  }
  return {"monotone-iff-avoidance", mismatches == 0,
          counted("permutations checked", checked) + ", " + counted("mismatches", mismatches)};
}

CheckResult check_monotone_properties(int nmax, int nmax_search) {
  long long checked = 0, failures = 0;
  for (int n = 1; n <= nmax; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      MonotoneResult res = monotone_factorization(w);
      if (!res.ok()) continue;
      ++checked;
      const Factorization& j = *res.factorization;
      if (j.leading() != w) { ++failures; continue; }
      if (!is_monotone(j)) { ++failures; continue; }
      if (!is_admissible(j)) { ++failures; continue; }
      Heap h = build_heap(j);
      if (!is_strong_bidescent(h) || !is_minimal_strong_bidescent(h)) { ++failures; continue; }
      // Monotone implies absolutely 4231-avoiding on upslices.
      for (int k = 1; k <= j.r(); ++k) {
        if (pattern_positions(j.upslice(k).leading(), Permutation::from_window({4, 2, 3, 1}))) {
          ++failures;
          break;
        }
      }
    }
  }
  // Uniqueness by bounded search on the smaller range.
  long long unique_failures = 0;
  for (int n = 2; n <= nmax_search; ++n) {
    std::vector<GenSet> choices = corpus_blocks(n, n - 1);
    std::map<Permutation, std::vector<Factorization>> minimal_monotone;
    for (int r = 1; r <= 4; ++r) {
      std::vector<std::size_t> idx(r, 0);
      while (true) {
        std::vector<GenSet> blocks;
        for (int k = 0; k < r; ++k) blocks.push_back(choices[idx[k]]);
        Factorization j(n, std::move(blocks));
        if (is_monotone(j) && contract_once(j).empty())
          minimal_monotone[j.leading()].push_back(j);
        int k = r - 1;
        while (k >= 0 && ++idx[k] == choices.size()) idx[k--] = 0;
        if (k < 0) break;
      }
    }
    for (const auto& [w, list] : minimal_monotone) {
      MonotoneResult res = monotone_factorization(w);
      if (!res.ok()) { ++unique_failures; continue; }
      for (const Factorization& j : list)
        if (!cf_equivalent(j, *res.factorization)) ++unique_failures;
    }
  }
  std::ostringstream os;
  os << checked << " successes checked, " << failures << " property failures, "
     << unique_failures << " uniqueness failures";
  return {"monotone-properties", failures == 0 && unique_failures == 0, os.str()};
}

CheckResult check_kl_self_consistency(int nmax) {
  long long failures = 0, elements = 0;
  for (int n = 2; n <= nmax; ++n) {
    KLTable t = KLTable::build(n);
    std::map<Permutation, HeckeElt> bar_basis_memo;
    auto bar_memo = [&](const HeckeElt& h) {
      HeckeElt r(h.n());
      for (const auto& [x, c] : h.terms()) {
        auto it = bar_basis_memo.find(x);
        if (it == bar_basis_memo.end())
          it = bar_basis_memo.emplace(x, bar(HeckeElt::basis(x))).first;
        r += c.bar() * it->second;
      }
      return r;
    };
    for (const Permutation& w : all_permutations(n)) {
      ++elements;
      const HeckeElt& cw = t.cprime(w);
      if (bar_memo(cw) != cw) ++failures;
      for (const auto& [x, p] : t.row(w)) {
        if (x == w) {
          if (!p.is_one()) ++failures;
          continue;
        }
        if (!bruhat_leq(x, w)) ++failures;
        if (p.is_zero() || p.degree() > w.length() - x.length() - 1) ++failures;
        if (!p.all_coeffs_nonnegative()) ++failures;
      }
      if (n <= 4) {
        GenSet rdes = right_descents(w);
        for (int s : rdes.generators()) {
          for (const Permutation& x : all_permutations(n)) {
            Permutation xs = compose(x, Permutation::simple(n, s));
            if (t.P(xs, w) != t.P(x, w)) ++failures;
          }
        }
      }
    }
  }
  return {"kl-self-consistency", failures == 0,
          counted("elements checked", elements) + ", " + counted("failures", failures)};
}

CheckResult check_deodhar_specialization(int n) {
  long long words = 0, failures = 0;
  KLTable t = KLTable::build(n);
  Permutation p321 = Permutation::from_window({3, 2, 1});
  for (const Permutation& w : all_permutations(n)) {
    if (pattern_positions(w, p321)) continue;
    for (const std::vector<int>& word : all_reduced_words(w)) {
      ++words;
      std::vector<GenSet> blocks;
      for (int i : word) blocks.push_back(GenSet(n, {i}));
      Factorization j(n, std::move(blocks));
      if (j.leading() != w) { ++failures; continue; }
      if (!is_tight(j).tight) { ++failures; continue; }
      DefectFamily fam = defect_polynomials(j);
      if (fam.polys != t.row(w)) ++failures;
    }
  }
  return {"deodhar-321", failures == 0,
          counted("reduced words checked", words) + ", " + counted("failures", failures)};
}

CheckResult check_4231_two_tight(int rmax, std::vector<Factorization>* out_minimal) {
  const int n = 4;
  Permutation target = Permutation::from_window({4, 2, 3, 1});
  std::vector<GenSet> choices = corpus_blocks(n, n - 1);
  std::vector<Factorization> tight;
  for (int r = 1; r <= rmax; ++r) {
    std::vector<std::size_t> idx(r, 0);
    while (true) {
      std::vector<GenSet> blocks;
      for (int k = 0; k < r; ++k) blocks.push_back(choices[idx[k]]);
      Factorization j(n, std::move(blocks));
      if (j.leading() == target && is_tight(j).tight) tight.push_back(j);
      int k = r - 1;
      while (k >= 0 && ++idx[k] == choices.size()) idx[k--] = 0;
      if (k < 0) break;
    }
  }
  // Reduce each to its minimal contractions and dedupe by normal form.
  std::set<Factorization> minimal_forms;
  long long non_tight_minimal = 0;
  for (const Factorization& j : tight) {
    for (const Factorization& c : contraction_closure(j)) {
      if (!contract_once(c).empty()) continue;
      Factorization nf = cf_normal_form(c);
      if (minimal_forms.insert(nf).second && !is_tight(nf).tight) ++non_tight_minimal;
    }
  }
  bool flip_exchange = false;
  if (minimal_forms.size() == 2) {
    auto it = minimal_forms.begin();
    Factorization a = *it++;
    Factorization b = *it;
    std::vector<GenSet> flipped;
    for (const GenSet& g : a.blocks()) flipped.push_back(flip(g));
    flip_exchange = cf_equivalent(Factorization(n, flipped), b);
  }
  if (out_minimal) out_minimal->assign(minimal_forms.begin(), minimal_forms.end());
  std::ostringstream os;
  os << tight.size() << " tight factorizations found, " << minimal_forms.size()
     << " minimal classes, flip exchange " << (flip_exchange ? "yes" : "no");
  return {"4231-two-tight",
          minimal_forms.size() == 2 && flip_exchange && non_tight_minimal == 0, os.str()};
}

CheckResult check_tight_monotone_contraction() {
  long long tight_count = 0, contraction_failures = 0, avoidance_failures = 0;
  Permutation p4231 = Permutation::from_window({4, 2, 3, 1});
  Permutation p45312 = Permutation::from_window({4, 5, 3, 1, 2});
  auto run = [&](int n, int rmax) {
    std::vector<GenSet> choices = corpus_blocks(n, n - 1);
    for (int r = 1; r <= rmax; ++r) {
      std::vector<std::size_t> idx(r, 0);
      while (true) {
        std::vector<GenSet> blocks;
        for (int k = 0; k < r; ++k) blocks.push_back(choices[idx[k]]);
        Factorization j(n, std::move(blocks));
        Permutation lead = j.leading();
        if (!pattern_positions(lead, p4231).has_value() && is_tight(j).tight) {
          ++tight_count;
          bool has_monotone = false;
          for (const Factorization& c : contraction_closure(j))
            if (is_monotone(c)) { has_monotone = true; break; }
          if (!has_monotone) ++contraction_failures;
          for (int k = 1; k <= j.r(); ++k) {
            Permutation up = j.upslice(k).leading();
            if (pattern_positions(up, p4231).has_value() ||
                pattern_positions(up, p45312).has_value()) {
              ++avoidance_failures;
              break;
            }
          }
        }
        int k = r - 1;
        while (k >= 0 && ++idx[k] == choices.size()) idx[k--] = 0;
        if (k < 0) break;
      }
    }
  };
  run(4, 4);
  run(5, 3);
  std::ostringstream os;
  os << tight_count << " tight factorizations of 4231-avoiding targets, " << contraction_failures
     << " without monotone contraction, " << avoidance_failures << " upslice avoidance failures";
  return {"tight-monotone-contraction", contraction_failures == 0 && avoidance_failures == 0,
          os.str()};
}

namespace {

std::vector<Permutation> thm4_class(int n) {
  std::vector<Permutation> out;
  for (const Permutation& w : all_permutations(n)) {
    AvoidanceClass av = avoidance_class(w);
    if (av.avoids_4231 && av.avoids_45312 && av.avoids_45123 && av.avoids_34512)
      out.push_back(w);
  }
  return out;
}

}  // namespace

CheckResult check_thm4_sweep(int n) {
  KLTable t = KLTable::build(n);
  std::vector<Permutation> cls = thm4_class(n);
  std::vector<char> bad(cls.size(), 0);
  parallel_for(cls.size(), [&](std::size_t i) {
    const Permutation& w = cls[i];
    MonotoneResult res = monotone_factorization(w);
    if (!res.ok()) { bad[i] = 1; return; }
    const Factorization& j = *res.factorization;
    if (!is_admissible(j) || !is_tight(j).tight) { bad[i] = 1; return; }
    if (defect_polynomials(j).polys != t.row(w)) bad[i] = 1;
  });
  long long failures = 0;
  std::string failing;
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (bad[i]) {
      ++failures;
      if (failures <= 4) failing += " [" + cls[i].to_string() + "]";
    }
  std::string details =
      counted("permutations in class", cls.size()) + ", " + counted("failures", failures);
  if (failures > 0) details += ", failing:" + failing;
  return {"thm4-sweep", failures == 0, details};
}

CheckResult check_bounce_inequality(int n) {
  std::vector<Permutation> cls = thm4_class(n);
  std::vector<long long> classes_seen(cls.size(), 0);
  std::vector<char> bad(cls.size(), 0);
  parallel_for(cls.size(), [&](std::size_t i) {
    MonotoneResult res = monotone_factorization(cls[i]);
    if (!res.ok()) { bad[i] = 1; return; }
    const Factorization& j = *res.factorization;
    MaskClassEnumerator en(j);
    en.scan([&](const Mask& m, const Permutation&, int d) {
      if (d == 0) return true;
      ++classes_seen[i];
      long long excess = 0;
      for (const ComponentStats& st : component_stats(j, m)) {
        std::vector<std::pair<int, int>> diff;
        std::set_difference(st.rbounce.begin(), st.rbounce.end(), st.rdef.begin(), st.rdef.end(),
                            std::back_inserter(diff));
        excess += static_cast<long long>(diff.size());
      }
      if (d >= excess) bad[i] = 1;
      return true;
    });
  });
  long long failures = 0, classes = 0;
  std::string failing;
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (bad[i]) {
      ++failures;
      if (failures <= 4) failing += " [" + cls[i].to_string() + "]";
    }
  for (long long c : classes_seen) classes += c;
  std::ostringstream os;
  os << classes << " defect classes checked, " << failures << " failures";
  if (failures > 0) os << ", failing:" << failing;
  return {"bounce-inequality", failures == 0, os.str()};
}

CheckResult check_cf_confluence(const CorpusBounds& bounds) {
  long long checked = 0, failures = 0;
  for_each_corpus_factorization(bounds, [&](const Factorization& j) {
    ++checked;
    Factorization nf = cf_normal_form(j);
    for (const Factorization& m : cf_orbit(j))
      if (cf_normal_form(m) != nf) ++failures;
  });
  return {"cf-confluence", failures == 0,
          counted("factorizations checked", checked) + ", " + counted("failures", failures)};
}

CheckResult check_bruhat_subword(int nmax) {
  long long pairs = 0, mismatches = 0;
  for (int n = 2; n <= nmax; ++n) {
    std::vector<Permutation> perms = all_permutations(n);
    for (const Permutation& w : perms) {
      // Subword oracle: all products of subwords of a fixed reduced word.
      std::set<Permutation> below{Permutation::identity(n)};
      for (int i : reduced_word(w)) {
        std::set<Permutation> next = below;
        for (const Permutation& x : below) next.insert(compose(x, Permutation::simple(n, i)));
        below = std::move(next);
      }
      for (const Permutation& x : perms) {
        ++pairs;
        if (bruhat_leq(x, w) != (below.count(x) > 0)) ++mismatches;
      }
    }
  }
  return {"bruhat-subword", mismatches == 0,
          counted("pairs checked", pairs) + ", " + counted("mismatches", mismatches)};
}

}  // namespace klfactor
