#ifndef KLFACTOR_FACTORIZATION_HPP
#define KLFACTOR_FACTORIZATION_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "klfactor/coxeter.hpp"
#include "klfactor/hecke.hpp"

namespace klfactor {

// A sequence J_1,...,J_r of generator subsets of {1..n-1}.
class Factorization {
public:
  explicit Factorization(int n) : n_(n) {}
  Factorization(int n, std::vector<GenSet> blocks);

  int n() const { return n_; }
  int r() const { return static_cast<int>(blocks_.size()); }
  const std::vector<GenSet>& blocks() const { return blocks_; }
  const GenSet& block(int k) const { return blocks_.at(k - 1); }  // 1-based

  Factorization upslice(int k) const;  // J_1,...,J_k
  Factorization slice(int i, int k) const;  // J_i,...,J_k
  Factorization reversed() const;

  Permutation leading() const { return demazure_leading(n_, blocks_); }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const Factorization& a, const Factorization& b) { return !(a == b); }
  friend bool operator<(const Factorization& a, const Factorization& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.blocks_ < b.blocks_;
  }

private:
  int n_;
  std::vector<GenSet> blocks_;
};

// A mask on J: parts sigma_k in W_{J_k}; its target is sigma_1...sigma_r.
class Mask {
public:
  Mask() = default;
  explicit Mask(std::vector<Permutation> parts) : parts_(std::move(parts)) {}
  static Mask all_identity(const Factorization& j);

  int r() const { return static_cast<int>(parts_.size()); }
  const std::vector<Permutation>& parts() const { return parts_; }
  const Permutation& part(int k) const { return parts_.at(k - 1); }  // 1-based
  Permutation target(int n) const;

  friend bool operator==(const Mask& a, const Mask& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Mask& a, const Mask& b) { return !(a == b); }
  friend bool operator<(const Mask& a, const Mask& b) { return a.parts_ < b.parts_; }

private:
  std::vector<Permutation> parts_;
};

// Throws std::invalid_argument unless every part lies in its block parabolic.
void validate_mask(const Factorization& j, const Mask& mask);

// Right-defect data of a mask.  At level k with w_{k-1} = sigma_1...sigma_{k-1},
// a defect is a position pair p<q lying in one component interval of J_k,
// not both in one component interval of J_{k-1} n J_k (J_0 = empty), with
// w_{k-1}(p) > w_{k-1}(q).  Level sets are also recorded as value pairs
// (w_{k-1}(q), w_{k-1}(p)), the reflections of the paper's formula; these
// are the class-invariant form.
struct DefectData {
  int d_r = 0;
  std::vector<std::vector<std::pair<int, int>>> position_pairs;  // per level
  std::vector<std::vector<std::pair<int, int>>> value_pairs;     // per level, sorted
};

DefectData defect_data(const Factorization& j, const Mask& mask);

// Fiber-product normal form: sigma_k a minimum-length representative of
// sigma_k W_{J_k n J_{k+1}} for every k < r, reached by one left-to-right
// sweep that pushes the parabolic part into the next slot.
Mask canonicalize(const Factorization& j, const Mask& mask);

// Enumerates canonical representatives of the fiber-product quotient
// W_{J_1} x_{W_{J_1 n J_2}} W_{J_2} x ... as an indexable family.
class MaskClassEnumerator {
public:
  explicit MaskClassEnumerator(const Factorization& j);

  std::uint64_t count() const { return count_; }
  Mask class_at(std::uint64_t index) const;

  // Depth-first scan over all classes.  The per-level defect contribution
  // depends only on the prefix product, so it is computed once per prefix.
  // Callback: (mask, target, defect count).  Return false to stop early.
  bool scan(const std::function<bool(const Mask&, const Permutation&, int)>& fn) const;

  // Same scan over the full mask product (all representatives, not classes).
  bool scan_all_masks(const std::function<bool(const Mask&)>& fn) const;

private:
  const Factorization j_;
  std::vector<std::vector<Permutation>> slots_;       // canonical per-slot choices
  std::vector<std::vector<Permutation>> full_slots_;  // whole parabolic per slot
  std::uint64_t count_;
};

// Generating functions P^J_x = sum over classes with target x of q^{d_R}.
struct DefectFamily {
  Permutation leading;
  std::map<Permutation, LaurentPoly, PermLenLexLess> polys;

  DefectFamily() : leading(1) {}
  explicit DefectFamily(Permutation lead) : leading(std::move(lead)) {}
  friend bool operator==(const DefectFamily& a, const DefectFamily& b) {
    return a.leading == b.leading && a.polys == b.polys;
  }
  friend bool operator!=(const DefectFamily& a, const DefectFamily& b) { return !(a == b); }
};

DefectFamily defect_polynomials(const Factorization& j);

// Uniform degree shift between the Schur quotient and the defect family:
// sum of l(w0(J_k)) minus sum of l(w0(J_k n J_{k+1})).  Coincides with
// l(w(J)) for r = 1 and for every tight factorization.
int schur_degree_shift(const Factorization& j);

// Reads the family off the Schur quotient: coefficient of T_x times
// v^{schur_degree_shift(J)}.  Throws InexactDivision when the quotient does
// not exist.
DefectFamily defect_polynomials_via_hecke(const Factorization& j);

// P^J_{w(J)} = 1.
bool is_admissible(const Factorization& j);

struct TightResult {
  bool tight = true;
  // On failure, a violating class: l(w(J)) - l(target) <= 2 d_R with d_R > 0.
  std::optional<Mask> witness;
  Permutation witness_target;
  int witness_defects = 0;
  int witness_gap = 0;

  TightResult() : witness_target(1) {}
};

// Smallness inequality: l(w(J)) - l(target) > 2 d_R for every class with
// d_R > 0.
TightResult is_tight(const Factorization& j);

// The Schur quotient equals C'_{w(J)}; inexact division counts as not tight.
bool is_tight_via_hecke(const Factorization& j, const KLTable& table);

// p^sigma_k = (sigma_1...sigma_k)^{-1}(p); level 0 returns p.
int string_position(const Mask& mask, int n, int p, int k);

// Per heap-component meeting statistics of a mask.  For the component at
// level k with interval [a,b], over position pairs p<q in [a,b] at entry:
//   rmeet   fresh meetings (not both within one component of J_{k-1} n J_k)
//   rdef    fresh meetings with w_{k-1}(p) > w_{k-1}(q)
//   rcross  meetings whose inversion status differs between w_{k-1} and w_k
//   rbounce rmeet minus rcross
struct ComponentStats {
  int a = 0, b = 0, level = 0;
  std::set<std::pair<int, int>> rmeet, rdef, rcross, rbounce;
};

std::vector<ComponentStats> component_stats(const Factorization& j, const Mask& mask);

// All factorizations reachable by removing one connected component of a
// block that is contained in another block and commutes with every block
// strictly between.  Emptied blocks are dropped; the leading element is
// preserved.
std::vector<Factorization> contract_once(const Factorization& j);

// Cartier-Foata moves: relocate a connected component of J_i into J_k when
// it commutes with every block between them, J_k included.
std::vector<Factorization> cf_moves(const Factorization& j);

// Confluent normal form: greedily move each component to the smallest level
// it commutes into, dropping emptied blocks, until a fixpoint.
Factorization cf_normal_form(const Factorization& j);

bool cf_equivalent(const Factorization& a, const Factorization& b);

// Breadth-first closure of single moves (normal-formed member set is the
// quotient; this returns the raw orbit with empty blocks dropped).
std::vector<Factorization> cf_orbit(const Factorization& j, std::size_t limit = 100000);

// Every connected component of J_i commuting with all later (resp. earlier)
// blocks is a connected component of the right (resp. left) descent set of
// the leading element.
bool is_rdes_factorization(const Factorization& j);
bool is_ldes_factorization(const Factorization& j);
bool is_bidescent(const Factorization& j);

// Every contiguous slice of every Cartier-Foata-equivalent sequence is
// bidescent.
bool is_absolutely_bidescent(const Factorization& j);

}  // namespace klfactor

#endif
