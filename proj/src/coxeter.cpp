#include "klfactor/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klfactor {

Permutation::Permutation(int n) : win_(n) {
  if (n <= 0) throw std::invalid_argument("window size must be positive");
  std::iota(win_.begin(), win_.end(), 1);
}

Permutation Permutation::from_window(std::vector<int> window) {
  std::vector<char> seen(window.size(), 0);
  for (int v : window) {
    if (v < 1 || v > static_cast<int>(window.size()) || seen[v - 1])
      throw std::invalid_argument("window is not a permutation of 1..n");
    seen[v - 1] = 1;
  }
  Permutation w(static_cast<int>(window.size()));
  w.win_ = std::move(window);
  return w;
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  Permutation w(n);
  std::swap(w.win_[i - 1], w.win_[i]);
  return w;
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b)
    throw std::invalid_argument("bad transposition");
  Permutation w(n);
  std::swap(w.win_[a - 1], w.win_[b - 1]);
  return w;
}

Permutation Permutation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> window;
  int v;
  while (in >> v) window.push_back(v);
  if (window.empty()) throw std::invalid_argument("empty permutation");
  return from_window(std::move(window));
}

bool Permutation::is_identity() const {
  for (int p = 1; p <= n(); ++p)
    if (win_[p - 1] != p) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(n());
  for (int p = 1; p <= n(); ++p) r.win_[win_[p - 1] - 1] = p;
  return r;
}

int Permutation::length() const {
  int count = 0;
  for (int p = 0; p < n(); ++p)
    for (int q = p + 1; q < n(); ++q)
      if (win_[p] > win_[q]) ++count;
  return count;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int p = 0; p < n(); ++p) {
    if (p) s += ' ';
    s += std::to_string(win_[p]);
  }
  return s;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("mismatched window sizes");
  std::vector<int> window(u.n());
  for (int p = 1; p <= u.n(); ++p) window[p - 1] = u(v(p));
  return Permutation::from_window(std::move(window));
}

GenSet::GenSet(int n, std::vector<int> gens) : n_(n), gens_(std::move(gens)) {
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  for (int g : gens_)
    if (g < 1 || g >= n_) throw std::invalid_argument("generator index out of range");
}

GenSet GenSet::parse(std::string_view text, int n) {
  std::vector<int> gens;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    if (token.find_first_not_of(" \t") == std::string::npos) continue;
    gens.push_back(std::stoi(token));
  }
  return GenSet(n, std::move(gens));
}

bool GenSet::contains(int i) const {
  return std::binary_search(gens_.begin(), gens_.end(), i);
}

bool GenSet::subset_of(const GenSet& other) const {
  return std::includes(other.gens_.begin(), other.gens_.end(), gens_.begin(), gens_.end());
}

std::vector<std::pair<int, int>> GenSet::intervals() const {
  std::vector<std::pair<int, int>> out;
  std::size_t i = 0;
  while (i < gens_.size()) {
    std::size_t j = i;
    while (j + 1 < gens_.size() && gens_[j + 1] == gens_[j] + 1) ++j;
    out.push_back({gens_[i], gens_[j] + 1});
    i = j + 1;
  }
  return out;
}

std::vector<GenSet> GenSet::components() const {
  std::vector<GenSet> out;
  for (auto [a, b] : intervals()) {
    std::vector<int> run;
    for (int g = a; g < b; ++g) run.push_back(g);
    out.push_back(GenSet(n_, std::move(run)));
  }
  return out;
}

GenSet GenSet::set_union(const GenSet& o) const {
  std::vector<int> g = gens_;
  g.insert(g.end(), o.gens_.begin(), o.gens_.end());
  return GenSet(n_, std::move(g));
}

GenSet GenSet::set_intersection(const GenSet& o) const {
  std::vector<int> g;
  std::set_intersection(gens_.begin(), gens_.end(), o.gens_.begin(), o.gens_.end(),
                        std::back_inserter(g));
  return GenSet(n_, std::move(g));
}

GenSet GenSet::set_minus(const GenSet& o) const {
  std::vector<int> g;
  std::set_difference(gens_.begin(), gens_.end(), o.gens_.begin(), o.gens_.end(),
                      std::back_inserter(g));
  return GenSet(n_, std::move(g));
}

std::string GenSet::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(gens_[i]);
  }
  return s;
}

bool commutes(const GenSet& a, const GenSet& b) {
  for (int i : a.generators())
    for (int j : b.generators())
      if (std::abs(i - j) < 2) return false;
  return true;
}

GenSet right_descents(const Permutation& w) {
  std::vector<int> gens;
  for (int i = 1; i < w.n(); ++i)
    if (w(i) > w(i + 1)) gens.push_back(i);
  return GenSet(w.n(), std::move(gens));
}

GenSet left_descents(const Permutation& w) { return right_descents(w.inverse()); }

std::vector<std::pair<int, int>> left_inversion_reflections(const Permutation& w) {
  Permutation wi = w.inverse();
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= w.n(); ++a)
    for (int b = a + 1; b <= w.n(); ++b)
      if (wi(a) > wi(b)) out.push_back({a, b});
  return out;
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
  if (x.n() != w.n()) throw std::invalid_argument("mismatched window sizes");
  int n = x.n();
  // x <= w iff #{a<=i : x(a)>=j} <= #{a<=i : w(a)>=j} for all i,j.
  for (int j = 1; j <= n; ++j) {
    int cx = 0, cw = 0;
    for (int i = 1; i <= n; ++i) {
      if (x(i) >= j) ++cx;
      if (w(i) >= j) ++cw;
      if (cx > cw) return false;
    }
  }
  return true;
}

Permutation w0(const GenSet& j) {
  std::vector<int> window(j.n());
  std::iota(window.begin(), window.end(), 1);
  for (auto [a, b] : j.intervals())
    std::reverse(window.begin() + (a - 1), window.begin() + b);
  return Permutation::from_window(std::move(window));
}

CosetDecomposition coset_decompose_right(const Permutation& w, const GenSet& j) {
  if (w.n() != j.n()) throw std::invalid_argument("mismatched window sizes");
  std::vector<int> window = w.window();
  for (auto [a, b] : j.intervals())
    std::sort(window.begin() + (a - 1), window.begin() + b);
  Permutation min_rep = Permutation::from_window(std::move(window));
  Permutation parabolic = compose(min_rep.inverse(), w);
  return {min_rep, parabolic};
}

Permutation demazure_leading(int n, const std::vector<GenSet>& blocks) {
  Permutation w(n);
  for (const GenSet& j : blocks) {
    if (j.n() != n) throw std::invalid_argument("mismatched window sizes");
    w = compose(coset_decompose_right(w, j).min_rep, w0(j));
  }
  return w;
}

namespace {

bool pattern_search(const Permutation& w, const Permutation& pat,
                    std::vector<int>& chosen, int next_pos) {
  int k = static_cast<int>(chosen.size());
  if (k == pat.n()) return true;
  for (int p = next_pos; p + (pat.n() - k) <= w.n() + 1; ++p) {
    bool ok = true;
    for (int t = 0; t < k && ok; ++t) {
      bool vw = w(chosen[t]) < w(p);
      bool vp = pat(t + 1) < pat(k + 1);
      if (vw != vp) ok = false;
    }
    if (!ok) continue;
    chosen.push_back(p);
    if (pattern_search(w, pat, chosen, p + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> pattern_positions(const Permutation& w, const Permutation& pattern) {
  if (pattern.n() > w.n()) return std::nullopt;
  std::vector<int> chosen;
  if (pattern_search(w, pattern, chosen, 1)) return chosen;
  return std::nullopt;
}

std::vector<Permutation> parabolic_elements(const GenSet& j) {
  std::vector<Permutation> out;
  auto ivs = j.intervals();
  // Odometer over per-interval arrangements.
  std::vector<std::vector<std::vector<int>>> arrangements;
  for (auto [a, b] : ivs) {
    std::vector<int> base(b - a + 1);
    std::iota(base.begin(), base.end(), a);
    std::vector<std::vector<int>> arr;
    std::vector<int> cur = base;
    do {
      arr.push_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    arrangements.push_back(std::move(arr));
  }
  std::vector<std::size_t> idx(ivs.size(), 0);
  while (true) {
    std::vector<int> window(j.n());
    std::iota(window.begin(), window.end(), 1);
    for (std::size_t c = 0; c < ivs.size(); ++c) {
      auto [a, b] = ivs[c];
      const auto& arr = arrangements[c][idx[c]];
      for (int p = a; p <= b; ++p) window[p - 1] = arr[p - a];
    }
    out.push_back(Permutation::from_window(std::move(window)));
    std::size_t c = ivs.size();
    while (c > 0) {
      --c;
      if (++idx[c] < arrangements[c].size()) break;
      idx[c] = 0;
      if (c == 0) { c = ivs.size() + 1; break; }
    }
    if (ivs.empty() || c == ivs.size() + 1) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> min_coset_reps(const GenSet& j, const GenSet& k) {
  if (!k.subset_of(j)) throw std::invalid_argument("K must be a subset of J");
  std::vector<Permutation> out;
  for (const Permutation& u : parabolic_elements(j)) {
    bool minrep = true;
    for (int g : k.generators())
      if (u(g) > u(g + 1)) { minrep = false; break; }
    if (minrep) out.push_back(u);
  }
  return out;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation x = w;
  while (!x.is_identity()) {
    int s = 0;
    for (int i = 1; i < x.n(); ++i)
      if (x(i) > x(i + 1)) { s = i; break; }
    word.push_back(s);
    x = compose(x, Permutation::simple(x.n(), s));
  }
  std::reverse(word.begin(), word.end());
  return word;
}

namespace {

void reduced_words_rec(const Permutation& x, std::vector<int>& word,
                       std::vector<std::vector<int>>& out) {
  if (x.is_identity()) {
    out.push_back(std::vector<int>(word.rbegin(), word.rend()));
    return;
  }
  for (int i = 1; i < x.n(); ++i) {
    if (x(i) > x(i + 1)) {
      word.push_back(i);
      reduced_words_rec(compose(x, Permutation::simple(x.n(), i)), word, out);
      word.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> word;
  reduced_words_rec(w, word, out);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> window(n);
  std::iota(window.begin(), window.end(), 1);
  do {
    out.push_back(Permutation::from_window(window));
  } while (std::next_permutation(window.begin(), window.end()));
  return out;
}

Permutation flip(const Permutation& w) {
  int n = w.n();
  std::vector<int> window(n);
  for (int p = 1; p <= n; ++p) window[p - 1] = n + 1 - w(n + 1 - p);
  return Permutation::from_window(std::move(window));
}

GenSet flip(const GenSet& j) {
  std::vector<int> gens;
  for (int g : j.generators()) gens.push_back(j.n() - g);
  return GenSet(j.n(), std::move(gens));
}

}  // namespace klfactor
