#ifndef KLFACTOR_HECKE_HPP
#define KLFACTOR_HECKE_HPP

#include <map>
#include <vector>

#include "klfactor/coxeter.hpp"
#include "klfactor/laurent.hpp"

namespace klfactor {

// Element of the Hecke algebra of S_n in the standard basis T_w, with
// coefficients in Z[v, v^-1] and q = v^2.  Relations:
//   T_w * T_s = T_{ws}                 if l(ws) > l(w)
//   T_w * T_s = q T_{ws} + (q-1) T_w   otherwise.
class HeckeElt {
public:
  using TermMap = std::map<Permutation, LaurentPoly, PermLenLexLess>;

  explicit HeckeElt(int n) : n_(n) {}
  static HeckeElt zero(int n) { return HeckeElt(n); }
  static HeckeElt unit(int n);                       // T_e
  static HeckeElt basis(const Permutation& w);       // T_w

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  LaurentPoly coeff(const Permutation& w) const;

  void add_term(const Permutation& w, const LaurentPoly& c);

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h);
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }

  // Right and left multiplication by T_{s_i}.
  HeckeElt mul_gen_right(int i) const;
  HeckeElt mul_gen_left(int i) const;

private:
  int n_;
  TermMap terms_;  // no zero coefficients
};

// Product, applied letter-by-letter along reduced words of the right factor.
HeckeElt mul(const HeckeElt& a, const HeckeElt& b);

// Ring involution with bar(v) = v^-1 and bar(T_w) = (T_{w^-1})^-1,
// via T_s^-1 = q^-1 T_s + (q^-1 - 1) T_e along a reduced word.
HeckeElt bar(const HeckeElt& h);

// Kazhdan-Lusztig data for S_n: polynomials P_{x,w} (in q) and basis
// elements C'_w = v^{-l(w)} sum_{x<=w} P_{x,w}(q) T_x, built by the
// standard recursion with the smallest-index left descent as pivot.
class KLTable {
public:
  static KLTable build(int n);

  int n() const { return n_; }
  // P_{x,w}; zero unless x <= w.
  const LaurentPoly& P(const Permutation& x, const Permutation& w) const;
  // Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}; zero when l(w)-l(x) is even.
  std::int64_t mu(const Permutation& x, const Permutation& w) const;
  const HeckeElt& cprime(const Permutation& w) const;
  // Row of C'_w as the map x -> P_{x,w}.
  const std::map<Permutation, LaurentPoly, PermLenLexLess>& row(const Permutation& w) const;

private:
  explicit KLTable(int n) : n_(n) {}
  int n_;
  std::map<Permutation, std::map<Permutation, LaurentPoly, PermLenLexLess>, PermLenLexLess> p_;
  std::map<Permutation, HeckeElt, PermLenLexLess> cbasis_;
};

// v^{-l(w0(J))} * sum_{u in W_J} q^{l(u)}: a bar-invariant Laurent polynomial.
LaurentPoly poincare_laurent(const GenSet& j);

// C'_{w0(J)} = v^{-l(w0(J))} sum_{u in W_J} T_u (all KL polynomials of a
// longest parabolic element are 1).
HeckeElt cprime_longest(const GenSet& j);

// C'_{w0(J_1)}...C'_{w0(J_r)} divided coefficient-wise by the product of the
// adjacent-overlap Poincare polynomials; throws InexactDivision when the
// quotient does not exist.
HeckeElt schur_quotient(int n, const std::vector<GenSet>& blocks);

// Coefficients c_w with h = sum c_w C'_w, by triangular elimination from the
// Bruhat-maximal support element downward.
std::map<Permutation, LaurentPoly, PermLenLexLess> expand_in_kl_basis(const HeckeElt& h,
                                                                      const KLTable& table);

}  // namespace klfactor

#endif
