#ifndef KLFACTOR_COXETER_HPP
#define KLFACTOR_COXETER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace klfactor {

// Element of the symmetric group S_n in one-line notation.  Positions and
// values are 1-based throughout, matching interval notation [a,b].
// Composition convention: (u*v)(p) = u(v(p)).
class Permutation {
public:
  explicit Permutation(int n);  // identity
  static Permutation identity(int n) { return Permutation(n); }
  static Permutation from_window(std::vector<int> window);
  // Adjacent transposition s_i in S_n.
  static Permutation simple(int n, int i);
  // Transposition of positions a and b.
  static Permutation transposition(int n, int a, int b);
  static Permutation parse(std::string_view text);  // "3 4 1 2"

  int n() const { return static_cast<int>(win_.size()); }
  int operator()(int p) const { return win_[p - 1]; }
  const std::vector<int>& window() const { return win_; }

  bool is_identity() const;
  Permutation inverse() const;
  int length() const;  // inversion count

  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.win_ == b.win_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.win_ != b.win_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.win_ < b.win_; }

private:
  std::vector<int> win_;
};

// (u*v)(p) = u(v(p)); throws std::invalid_argument on mismatched n.
Permutation compose(const Permutation& u, const Permutation& v);

// Orders by length, then window lexicographically.  Used wherever a
// deterministic enumeration or rendering order of group elements is needed.
struct PermLenLexLess {
  bool operator()(const Permutation& a, const Permutation& b) const {
    int la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a < b;
  }
};

// Subset of the simple generators {1..n-1}.  Connected components are the
// maximal runs of consecutive indices; the run {a,..,b-1} acts on the
// position interval [a,b].
class GenSet {
public:
  explicit GenSet(int n) : n_(n) {}
  GenSet(int n, std::vector<int> gens);
  static GenSet parse(std::string_view text, int n);  // "1,3"

  int n() const { return n_; }
  const std::vector<int>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }
  int size() const { return static_cast<int>(gens_.size()); }
  bool contains(int i) const;
  bool subset_of(const GenSet& other) const;

  // Maximal runs as position intervals [a,b] (b >= a+1).
  std::vector<std::pair<int, int>> intervals() const;
  // Maximal runs as generator subsets.
  std::vector<GenSet> components() const;

  GenSet set_union(const GenSet& o) const;
  GenSet set_intersection(const GenSet& o) const;
  GenSet set_minus(const GenSet& o) const;

  std::string to_string() const;

  friend bool operator==(const GenSet& a, const GenSet& b) { return a.n_ == b.n_ && a.gens_ == b.gens_; }
  friend bool operator!=(const GenSet& a, const GenSet& b) { return !(a == b); }
  friend bool operator<(const GenSet& a, const GenSet& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.gens_ < b.gens_;
  }

private:
  int n_;
  std::vector<int> gens_;  // sorted, unique, within [1, n-1]
};

// Disjoint and everywhere at distance >= 2, so the parabolic subgroups
// commute elementwise.
bool commutes(const GenSet& a, const GenSet& b);

// Right and left descent sets.
GenSet right_descents(const Permutation& w);
GenSet left_descents(const Permutation& w);

// lref(w): value pairs (a,b) with a<b and w^-1(a) > w^-1(b); these are the
// reflections t with l(tw) < l(w).
std::vector<std::pair<int, int>> left_inversion_reflections(const Permutation& w);

// Bruhat order via the rank-matrix criterion.
bool bruhat_leq(const Permutation& x, const Permutation& w);

// Longest element of the parabolic W_J: reverses each component interval.
Permutation w0(const GenSet& j);

struct CosetDecomposition {
  Permutation min_rep;   // values sorted increasingly on each J-interval
  Permutation parabolic; // element of W_J with w = min_rep * parabolic
};
// w = min_rep * parabolic with l(w) = l(min_rep) + l(parabolic).
CosetDecomposition coset_decompose_right(const Permutation& w, const GenSet& j);

// Leading (Bruhat-maximal) element of C'_{J_1}...C'_{J_r}: the Demazure
// product of the w0(J_k), computed by the peeling recursion.
Permutation demazure_leading(int n, const std::vector<GenSet>& blocks);

// Lexicographically least increasing position sequence whose values are
// order-isomorphic to the pattern, or nullopt when w avoids it.
std::optional<std::vector<int>> pattern_positions(const Permutation& w, const Permutation& pattern);

// All elements of the parabolic W_J, sorted by window.
std::vector<Permutation> parabolic_elements(const GenSet& j);

// Minimum-length representatives of W_J / W_K for K a subset of J,
// sorted by window.
std::vector<Permutation> min_coset_reps(const GenSet& j, const GenSet& k);

// Reduced word, rightmost letter chosen as the smallest right descent.
std::vector<int> reduced_word(const Permutation& w);

// All reduced words of w.
std::vector<std::vector<int>> all_reduced_words(const Permutation& w);

// All of S_n in window-lexicographic order.
std::vector<Permutation> all_permutations(int n);

// The i -> n+1-i symmetry: flip(w)(p) = n+1 - w(n+1-p).
Permutation flip(const Permutation& w);
GenSet flip(const GenSet& j);

}  // namespace klfactor

#endif
