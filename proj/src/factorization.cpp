#include "klfactor/factorization.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace klfactor {

Factorization::Factorization(int n, std::vector<GenSet> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  for (const GenSet& j : blocks_)
    if (j.n() != n_) throw std::invalid_argument("mismatched window sizes in factorization");
}

Factorization Factorization::upslice(int k) const { return slice(1, k); }

Factorization Factorization::slice(int i, int k) const {
  if (i < 1 || k > r() || i > k + 1) throw std::out_of_range("bad slice bounds");
  return Factorization(n_, std::vector<GenSet>(blocks_.begin() + (i - 1), blocks_.begin() + k));
}

Factorization Factorization::reversed() const {
  return Factorization(n_, std::vector<GenSet>(blocks_.rbegin(), blocks_.rend()));
}

Mask Mask::all_identity(const Factorization& j) {
  return Mask(std::vector<Permutation>(j.r(), Permutation::identity(j.n())));
}

Permutation Mask::target(int n) const {
  Permutation t(n);
  for (const Permutation& p : parts_) t = compose(t, p);
  return t;
}

void validate_mask(const Factorization& j, const Mask& mask) {
  if (mask.r() != j.r()) throw std::invalid_argument("mask length differs from factorization");
  for (int k = 1; k <= j.r(); ++k) {
    const Permutation& s = mask.part(k);
    if (s.n() != j.n()) throw std::invalid_argument("mask part has wrong window size");
    auto ivs = j.block(k).intervals();
    std::vector<char> in_interval(j.n() + 1, 0);
    for (auto [a, b] : ivs)
      for (int p = a; p <= b; ++p) in_interval[p] = 1;
    for (int p = 1; p <= j.n(); ++p)
      if (!in_interval[p] && s(p) != p)
        throw std::invalid_argument("mask part moves a position outside its block");
    for (auto [a, b] : ivs)
      for (int p = a; p <= b; ++p)
        if (s(p) < a || s(p) > b)
          throw std::invalid_argument("mask part does not stabilize a block interval");
  }
}

namespace {

// Defect pairs contributed at level k, given the entering product w_{k-1}.
void level_defects(const Factorization& j, int k, const Permutation& w_prev,
                   std::vector<std::pair<int, int>>* pos_pairs,
                   std::vector<std::pair<int, int>>* val_pairs, int* count) {
  const GenSet& jk = j.block(k);
  GenSet overlap = k >= 2 ? jk.set_intersection(j.block(k - 1)) : GenSet(j.n());
  std::vector<int> overlap_comp(j.n() + 1, 0);
  {
    int id = 0;
    for (auto [a, b] : overlap.intervals()) {
      ++id;
      for (int p = a; p <= b; ++p) overlap_comp[p] = id;
    }
  }
  for (auto [a, b] : jk.intervals()) {
    for (int p = a; p <= b; ++p)
      for (int q = p + 1; q <= b; ++q) {
        if (overlap_comp[p] != 0 && overlap_comp[p] == overlap_comp[q]) continue;  // not fresh
        if (w_prev(p) > w_prev(q)) {
          ++*count;
          if (pos_pairs) pos_pairs->push_back({p, q});
          if (val_pairs) val_pairs->push_back({w_prev(q), w_prev(p)});
        }
      }
  }
  if (val_pairs) std::sort(val_pairs->begin(), val_pairs->end());
}

}  // namespace

DefectData defect_data(const Factorization& j, const Mask& mask) {
  validate_mask(j, mask);
  DefectData d;
  d.position_pairs.resize(j.r());
  d.value_pairs.resize(j.r());
  Permutation w(j.n());
  for (int k = 1; k <= j.r(); ++k) {
    level_defects(j, k, w, &d.position_pairs[k - 1], &d.value_pairs[k - 1], &d.d_r);
    w = compose(w, mask.part(k));
  }
  return d;
}

Mask canonicalize(const Factorization& j, const Mask& mask) {
  validate_mask(j, mask);
  std::vector<Permutation> parts = mask.parts();
  for (int k = 0; k + 1 < j.r(); ++k) {
    GenSet overlap = j.block(k + 1).set_intersection(j.block(k + 2));
    CosetDecomposition dec = coset_decompose_right(parts[k], overlap);
    parts[k] = dec.min_rep;
    parts[k + 1] = compose(dec.parabolic, parts[k + 1]);
  }
  return Mask(std::move(parts));
}

MaskClassEnumerator::MaskClassEnumerator(const Factorization& j) : j_(j) {
  count_ = 1;
  for (int k = 1; k <= j.r(); ++k) {
    full_slots_.push_back(parabolic_elements(j.block(k)));
    if (k < j.r()) {
      GenSet overlap = j.block(k).set_intersection(j.block(k + 1));
      slots_.push_back(min_coset_reps(j.block(k), overlap));
    } else {
      slots_.push_back(full_slots_.back());
    }
    count_ *= slots_.back().size();
  }
}

Mask MaskClassEnumerator::class_at(std::uint64_t index) const {
  if (index >= count_) throw std::out_of_range("class index out of range");
  std::vector<Permutation> parts;
  parts.reserve(slots_.size());
  // Mixed radix, first slot most significant.
  std::uint64_t rest = index;
  std::vector<std::uint64_t> digits(slots_.size());
  for (std::size_t k = slots_.size(); k-- > 0;) {
    digits[k] = rest % slots_[k].size();
    rest /= slots_[k].size();
  }
  for (std::size_t k = 0; k < slots_.size(); ++k) parts.push_back(slots_[k][digits[k]]);
  return Mask(std::move(parts));
}

namespace {

bool scan_rec(const Factorization& j, const std::vector<std::vector<Permutation>>& slots,
              std::vector<Permutation>& parts, const Permutation& w_prev, int d_so_far,
              const std::function<bool(const Mask&, const Permutation&, int)>& fn) {
  int k = static_cast<int>(parts.size()) + 1;
  if (k > j.r()) {
    return fn(Mask(parts), w_prev, d_so_far);
  }
  int d_here = 0;
  level_defects(j, k, w_prev, nullptr, nullptr, &d_here);
  for (const Permutation& s : slots[k - 1]) {
    parts.push_back(s);
    if (!scan_rec(j, slots, parts, compose(w_prev, s), d_so_far + d_here, fn)) return false;
    parts.pop_back();
  }
  return true;
}

}  // namespace

bool MaskClassEnumerator::scan(
    const std::function<bool(const Mask&, const Permutation&, int)>& fn) const {
  if (j_.r() == 0) return fn(Mask(), Permutation::identity(j_.n()), 0);
  std::vector<Permutation> parts;
  return scan_rec(j_, slots_, parts, Permutation::identity(j_.n()), 0, fn);
}

bool MaskClassEnumerator::scan_all_masks(const std::function<bool(const Mask&)>& fn) const {
  if (j_.r() == 0) return fn(Mask());
  std::vector<Permutation> parts;
  return scan_rec(j_, full_slots_, parts, Permutation::identity(j_.n()), 0,
                  [&fn](const Mask& m, const Permutation&, int) { return fn(m); });
}

DefectFamily defect_polynomials(const Factorization& j) {
  DefectFamily fam(j.leading());
  MaskClassEnumerator en(j);
  en.scan([&fam](const Mask&, const Permutation& target, int d) {
    fam.polys[target] += LaurentPoly::q_power(d);
    return true;
  });
  return fam;
}

int schur_degree_shift(const Factorization& j) {
  int shift = 0;
  for (int k = 1; k <= j.r(); ++k) shift += w0(j.block(k)).length();
  for (int k = 1; k < j.r(); ++k)
    shift -= w0(j.block(k).set_intersection(j.block(k + 1))).length();
  return shift;
}

DefectFamily defect_polynomials_via_hecke(const Factorization& j) {
  HeckeElt q = schur_quotient(j.n(), j.blocks());
  DefectFamily fam(j.leading());
  const LaurentPoly shift = LaurentPoly::v_power(schur_degree_shift(j));
  for (const auto& [x, c] : q.terms()) fam.polys[x] = shift * c;
  return fam;
}

bool is_admissible(const Factorization& j) {
  Permutation lead = j.leading();
  LaurentPoly p;
  MaskClassEnumerator en(j);
  en.scan([&](const Mask&, const Permutation& target, int d) {
    if (target == lead) p += LaurentPoly::q_power(d);
    return true;
  });
  return p.is_one();
}

TightResult is_tight(const Factorization& j) {
  TightResult res;
  const int lead_len = j.leading().length();
  MaskClassEnumerator en(j);
  en.scan([&](const Mask& m, const Permutation& target, int d) {
    if (d > 0 && lead_len - target.length() <= 2 * d) {
      res.tight = false;
      res.witness = m;
      res.witness_target = target;
      res.witness_defects = d;
      res.witness_gap = lead_len - target.length();
      return false;
    }
    return true;
  });
  return res;
}

bool is_tight_via_hecke(const Factorization& j, const KLTable& table) {
  HeckeElt q(j.n());
  try {
    q = schur_quotient(j.n(), j.blocks());
  } catch (const InexactDivision&) {
    return false;
  }
  auto expansion = expand_in_kl_basis(q, table);
  return expansion.size() == 1 && expansion.begin()->first == j.leading() &&
         expansion.begin()->second.is_one();
}

int string_position(const Mask& mask, int n, int p, int k) {
  if (k < 0 || k > mask.r()) throw std::out_of_range("level out of range");
  if (p < 1 || p > n) throw std::out_of_range("position out of range");
  Permutation w(n);
  for (int i = 1; i <= k; ++i) w = compose(w, mask.part(i));
  return w.inverse()(p);
}

std::vector<ComponentStats> component_stats(const Factorization& j, const Mask& mask) {
  validate_mask(j, mask);
  std::vector<ComponentStats> out;
  Permutation w_prev(j.n());
  for (int k = 1; k <= j.r(); ++k) {
    Permutation w_cur = compose(w_prev, mask.part(k));
    GenSet overlap = k >= 2 ? j.block(k).set_intersection(j.block(k - 1)) : GenSet(j.n());
    std::vector<int> overlap_comp(j.n() + 1, 0);
    {
      int id = 0;
      for (auto [a, b] : overlap.intervals()) {
        ++id;
        for (int p = a; p <= b; ++p) overlap_comp[p] = id;
      }
    }
    Permutation wci = w_cur.inverse();
    for (auto [a, b] : j.block(k).intervals()) {
      ComponentStats st;
      st.a = a;
      st.b = b;
      st.level = k;
      for (int p = a; p <= b; ++p)
        for (int q = p + 1; q <= b; ++q) {
          if (overlap_comp[p] != 0 && overlap_comp[p] == overlap_comp[q]) continue;
          st.rmeet.insert({p, q});
          bool inverted_before = w_prev(p) > w_prev(q);
          if (inverted_before) st.rdef.insert({p, q});
          // Track the value pair through level k to compare inversion status.
          int lo = std::min(w_prev(p), w_prev(q)), hi = std::max(w_prev(p), w_prev(q));
          bool inverted_after = wci(lo) > wci(hi);
          if (inverted_before != inverted_after) st.rcross.insert({p, q});
        }
      std::set_difference(st.rmeet.begin(), st.rmeet.end(), st.rcross.begin(), st.rcross.end(),
                          std::inserter(st.rbounce, st.rbounce.end()));
      out.push_back(std::move(st));
    }
    w_prev = w_cur;
  }
  return out;
}

std::vector<Factorization> contract_once(const Factorization& j) {
  std::set<Factorization> seen;
  std::vector<Factorization> out;
  for (int i = 1; i <= j.r(); ++i) {
    for (const GenSet& comp : j.block(i).components()) {
      bool removable = false;
      for (int k = 1; k <= j.r() && !removable; ++k) {
        if (k == i) continue;
        if (!comp.subset_of(j.block(k))) continue;
        bool commuting_gap = true;
        for (int m = std::min(i, k) + 1; m < std::max(i, k); ++m)
          if (!commutes(comp, j.block(m))) { commuting_gap = false; break; }
        if (commuting_gap) removable = true;
      }
      if (!removable) continue;
      std::vector<GenSet> blocks;
      for (int m = 1; m <= j.r(); ++m) {
        GenSet b = m == i ? j.block(m).set_minus(comp) : j.block(m);
        if (!b.empty()) blocks.push_back(b);
      }
      Factorization contracted(j.n(), std::move(blocks));
      assert(contracted.leading() == j.leading());
      if (seen.insert(contracted).second) out.push_back(contracted);
    }
  }
  return out;
}

std::vector<Factorization> cf_moves(const Factorization& j) {
  std::set<Factorization> seen;
  std::vector<Factorization> out;
  for (int i = 1; i <= j.r(); ++i) {
    for (const GenSet& comp : j.block(i).components()) {
      for (int k = 1; k <= j.r(); ++k) {
        if (k == i) continue;
        bool ok = commutes(comp, j.block(k));
        for (int m = std::min(i, k) + 1; m < std::max(i, k) && ok; ++m)
          if (!commutes(comp, j.block(m))) ok = false;
        if (!ok) continue;
        std::vector<GenSet> blocks;
        for (int m = 1; m <= j.r(); ++m) {
          GenSet b = j.block(m);
          if (m == i) b = b.set_minus(comp);
          if (m == k) b = b.set_union(comp);
          if (!b.empty()) blocks.push_back(b);
        }
        Factorization moved(j.n(), std::move(blocks));
        assert(moved.leading() == j.leading());
        if (seen.insert(moved).second) out.push_back(moved);
      }
    }
  }
  return out;
}

Factorization cf_normal_form(const Factorization& j) {
  Factorization cur = j;
  // Strip empty blocks up front.
  {
    std::vector<GenSet> blocks;
    for (const GenSet& b : cur.blocks())
      if (!b.empty()) blocks.push_back(b);
    cur = Factorization(j.n(), std::move(blocks));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    // Components in (level, left endpoint) order; restart after each move.
    for (int i = 1; i <= cur.r() && !changed; ++i) {
      for (const GenSet& comp : cur.block(i).components()) {
        int l = i;
        while (l > 1 && commutes(comp, cur.block(l - 1))) --l;
        if (l == i) continue;
        std::vector<GenSet> blocks;
        for (int m = 1; m <= cur.r(); ++m) {
          GenSet b = cur.block(m);
          if (m == i) b = b.set_minus(comp);
          if (m == l) b = b.set_union(comp);
          if (!b.empty()) blocks.push_back(b);
        }
        cur = Factorization(cur.n(), std::move(blocks));
        changed = true;
        break;
      }
    }
  }
  return cur;
}

bool cf_equivalent(const Factorization& a, const Factorization& b) {
  return cf_normal_form(a) == cf_normal_form(b);
}

std::vector<Factorization> cf_orbit(const Factorization& j, std::size_t limit) {
  Factorization start = j;
  {
    std::vector<GenSet> blocks;
    for (const GenSet& b : j.blocks())
      if (!b.empty()) blocks.push_back(b);
    start = Factorization(j.n(), std::move(blocks));
  }
  std::set<Factorization> seen{start};
  std::deque<Factorization> queue{start};
  std::vector<Factorization> orbit;
  while (!queue.empty()) {
    Factorization cur = queue.front();
    queue.pop_front();
    orbit.push_back(cur);
    for (const Factorization& next : cf_moves(cur)) {
      if (seen.insert(next).second) {
        if (seen.size() > limit) throw std::runtime_error("Cartier-Foata orbit too large");
        queue.push_back(next);
      }
    }
  }
  return orbit;
}

namespace {

bool descent_side(const Factorization& j, bool right) {
  Permutation lead = j.leading();
  GenSet des = right ? right_descents(lead) : left_descents(lead);
  std::vector<GenSet> des_comps = des.components();
  for (int i = 1; i <= j.r(); ++i) {
    for (const GenSet& comp : j.block(i).components()) {
      bool outward = true;
      if (right) {
        for (int m = i + 1; m <= j.r() && outward; ++m)
          if (!commutes(comp, j.block(m))) outward = false;
      } else {
        for (int m = 1; m < i && outward; ++m)
          if (!commutes(comp, j.block(m))) outward = false;
      }
      if (!outward) continue;
      bool found = false;
      for (const GenSet& dc : des_comps)
        if (dc == comp) { found = true; break; }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

bool is_rdes_factorization(const Factorization& j) { return descent_side(j, true); }
bool is_ldes_factorization(const Factorization& j) { return descent_side(j, false); }
bool is_bidescent(const Factorization& j) {
  return is_rdes_factorization(j) && is_ldes_factorization(j);
}

bool is_absolutely_bidescent(const Factorization& j) {
  for (const Factorization& m : cf_orbit(j)) {
    for (int i = 1; i <= m.r(); ++i)
      for (int k = i; k <= m.r(); ++k)
        if (!is_bidescent(m.slice(i, k))) return false;
  }
  return true;
}

}  // namespace klfactor
