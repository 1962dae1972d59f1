#ifndef KLFACTOR_LAURENT_HPP
#define KLFACTOR_LAURENT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace klfactor {

// Thrown by LaurentPoly::divided_exactly_by when no exact quotient exists
// over the integers.  Callers in the Hecke layer interpret this as the
// absence of a Schur quotient.
struct InexactDivision : std::runtime_error {
  InexactDivision() : std::runtime_error("inexact Laurent division") {}
};

// Integer Laurent polynomial in one variable v, with q = v^2.
// Terms are kept sorted by exponent with no zero coefficients, so
// structural equality is polynomial equality.
class LaurentPoly {
public:
  using Term = std::pair<int, std::int64_t>;  // (exponent of v, coefficient)

  LaurentPoly() = default;  // zero

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return term(1, 0); }
  static LaurentPoly constant(std::int64_t c) { return term(c, 0); }
  static LaurentPoly term(std::int64_t coeff, int exp);
  static LaurentPoly v_power(int exp) { return term(1, exp); }
  static LaurentPoly q_power(int exp) { return term(1, 2 * exp); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  std::int64_t coeff(int exp) const;
  const std::vector<Term>& terms() const { return terms_; }

  // Top and bottom exponents; meaningless on zero (throws).
  int degree() const;
  int valuation() const;

  bool all_exponents_even() const;
  bool all_coeffs_nonnegative() const;
  std::int64_t eval_at_one() const;

  // v -> v^-1
  LaurentPoly bar() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

  // Exact division: returns c with (*this) == b * c, throws InexactDivision
  // when no such integer Laurent polynomial exists.
  LaurentPoly divided_exactly_by(const LaurentPoly& b) const;

  // "v^-1 + v" style rendering, exponent ascending.
  std::string to_v_string() const;
  // Rendering in q = v^2; requires all exponents even.
  std::string to_q_string() const;
  // q when all exponents are even, otherwise v.
  std::string to_string() const;

  // Accepts the rendered grammar, plus "q" as an alias for "v^2".
  static LaurentPoly parse(std::string_view text);

private:
  std::vector<Term> terms_;
  void normalize();
};

}  // namespace klfactor

#endif
