#include "klfactor/hecke.hpp"

#include <stdexcept>

namespace klfactor {

HeckeElt HeckeElt::unit(int n) { return basis(Permutation::identity(n)); }

HeckeElt HeckeElt::basis(const Permutation& w) {
  HeckeElt h(w.n());
  h.terms_[w] = LaurentPoly::one();
  return h;
}

LaurentPoly HeckeElt::coeff(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly::zero() : it->second;
}

void HeckeElt::add_term(const Permutation& w, const LaurentPoly& c) {
  if (w.n() != n_) throw std::invalid_argument("mismatched window sizes");
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  if (o.n_ != n_) throw std::invalid_argument("mismatched window sizes");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  if (o.n_ != n_) throw std::invalid_argument("mismatched window sizes");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h) {
  HeckeElt r(h.n_);
  if (c.is_zero()) return r;
  for (const auto& [w, cw] : h.terms_) r.terms_[w] = c * cw;
  return r;
}

HeckeElt HeckeElt::mul_gen_right(int i) const {
  static const LaurentPoly q = LaurentPoly::q_power(1);
  static const LaurentPoly qm1 = LaurentPoly::q_power(1) - LaurentPoly::one();
  HeckeElt r(n_);
  for (const auto& [w, c] : terms_) {
    Permutation ws = compose(w, Permutation::simple(n_, i));
    if (w(i) < w(i + 1)) {
      r.add_term(ws, c);
    } else {
      r.add_term(ws, q * c);
      r.add_term(w, qm1 * c);
    }
  }
  return r;
}

HeckeElt HeckeElt::mul_gen_left(int i) const {
  static const LaurentPoly q = LaurentPoly::q_power(1);
  static const LaurentPoly qm1 = LaurentPoly::q_power(1) - LaurentPoly::one();
  HeckeElt r(n_);
  for (const auto& [w, c] : terms_) {
    Permutation sw = compose(Permutation::simple(n_, i), w);
    Permutation wi = w.inverse();
    if (wi(i) < wi(i + 1)) {
      r.add_term(sw, c);
    } else {
      r.add_term(sw, q * c);
      r.add_term(w, qm1 * c);
    }
  }
  return r;
}

HeckeElt mul(const HeckeElt& a, const HeckeElt& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mismatched window sizes");
  HeckeElt r(a.n());
  for (const auto& [x, c] : b.terms()) {
    HeckeElt cur = a;
    for (int i : reduced_word(x)) cur = cur.mul_gen_right(i);
    r += c * cur;
  }
  return r;
}

namespace {

// bar(T_w) = T_{s_{j_1}}^-1 ... T_{s_{j_k}}^-1 for w = s_{j_1}...s_{j_k} reduced.
HeckeElt bar_of_basis(const Permutation& w) {
  static const LaurentPoly qinv = LaurentPoly::q_power(-1);
  static const LaurentPoly qinv_m1 = LaurentPoly::q_power(-1) - LaurentPoly::one();
  HeckeElt cur = HeckeElt::unit(w.n());
  for (int i : reduced_word(w)) {
    HeckeElt next = qinv * cur.mul_gen_right(i);
    next += qinv_m1 * cur;
    cur = next;
  }
  return cur;
}

}  // namespace

HeckeElt bar(const HeckeElt& h) {
  HeckeElt r(h.n());
  for (const auto& [w, c] : h.terms()) r += c.bar() * bar_of_basis(w);
  return r;
}

KLTable KLTable::build(int n) {
  KLTable t(n);
  std::vector<Permutation> elems = all_permutations(n);
  std::sort(elems.begin(), elems.end(), PermLenLexLess{});
  for (const Permutation& w : elems) {
    if (w.is_identity()) {
      t.cbasis_.emplace(w, HeckeElt::unit(n));
      t.p_[w][w] = LaurentPoly::one();
      continue;
    }
    Permutation wi = w.inverse();
    int s = 0;
    for (int i = 1; i < n; ++i)
      if (wi(i) > wi(i + 1)) { s = i; break; }
    Permutation v = compose(Permutation::simple(n, s), w);
    // C'_s C'_v = C'_w + sum over z < v with sz < z of mu(z,v) C'_z.
    const HeckeElt& cv = t.cbasis_.at(v);
    HeckeElt h = cv.mul_gen_left(s);
    h += cv;
    h = LaurentPoly::v_power(-1) * h;
    for (const auto& [z, pz] : t.p_.at(v)) {
      Permutation zi = z.inverse();
      if (zi(s) < zi(s + 1)) continue;  // need sz < z
      std::int64_t m = t.mu(z, v);
      if (m != 0) h -= LaurentPoly::constant(m) * t.cbasis_.at(z);
    }
    auto& row = t.p_[w];
    const LaurentPoly shift = LaurentPoly::v_power(w.length());
    for (const auto& [x, c] : h.terms()) row[x] = shift * c;
    t.cbasis_.emplace(w, std::move(h));
  }
  return t;
}

const LaurentPoly& KLTable::P(const Permutation& x, const Permutation& w) const {
  static const LaurentPoly zero;
  auto itw = p_.find(w);
  if (itw == p_.end()) throw std::invalid_argument("w not in table");
  auto itx = itw->second.find(x);
  return itx == itw->second.end() ? zero : itx->second;
}

std::int64_t KLTable::mu(const Permutation& x, const Permutation& w) const {
  int d = w.length() - x.length();
  if (d <= 0 || d % 2 == 0) return 0;
  return P(x, w).coeff(d - 1);  // q^{(d-1)/2} = v^{d-1}
}

const HeckeElt& KLTable::cprime(const Permutation& w) const {
  auto it = cbasis_.find(w);
  if (it == cbasis_.end()) throw std::invalid_argument("w not in table");
  return it->second;
}

const std::map<Permutation, LaurentPoly, PermLenLexLess>& KLTable::row(const Permutation& w) const {
  auto it = p_.find(w);
  if (it == p_.end()) throw std::invalid_argument("w not in table");
  return it->second;
}

LaurentPoly poincare_laurent(const GenSet& j) {
  LaurentPoly p = LaurentPoly::one();
  int shift = 0;
  for (auto [a, b] : j.intervals()) {
    int m = b - a + 1;
    for (int k = 1; k <= m; ++k) {
      LaurentPoly factor;
      for (int t = 0; t < k; ++t) factor += LaurentPoly::q_power(t);
      p *= factor;
    }
    shift += m * (m - 1) / 2;
  }
  return p * LaurentPoly::v_power(-shift);
}

HeckeElt cprime_longest(const GenSet& j) {
  HeckeElt h(j.n());
  const LaurentPoly shift = LaurentPoly::v_power(-w0(j).length());
  for (const Permutation& u : parabolic_elements(j)) h.add_term(u, shift);
  return h;
}

HeckeElt schur_quotient(int n, const std::vector<GenSet>& blocks) {
  HeckeElt h = HeckeElt::unit(n);
  for (const GenSet& j : blocks) h = mul(h, cprime_longest(j));
  LaurentPoly denom = LaurentPoly::one();
  for (std::size_t k = 0; k + 1 < blocks.size(); ++k)
    denom *= poincare_laurent(blocks[k].set_intersection(blocks[k + 1]));
  if (denom.is_one()) return h;
  HeckeElt r(n);
  for (const auto& [w, c] : h.terms()) r.add_term(w, c.divided_exactly_by(denom));
  return r;
}

std::map<Permutation, LaurentPoly, PermLenLexLess> expand_in_kl_basis(const HeckeElt& h,
                                                                      const KLTable& table) {
  std::map<Permutation, LaurentPoly, PermLenLexLess> out;
  HeckeElt rem = h;
  while (!rem.is_zero()) {
    // The longest support element is Bruhat-maximal among contributing C'_z.
    const auto& [w, c] = *rem.terms().rbegin();
    LaurentPoly cw = LaurentPoly::v_power(w.length()) * c;
    out[w] = cw;
    rem -= cw * table.cprime(w);
  }
  return out;
}

}  // namespace klfactor
