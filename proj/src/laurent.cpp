#include "klfactor/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace klfactor {

LaurentPoly LaurentPoly::term(std::int64_t coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exp, coeff});
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

std::int64_t LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return 0;
}

int LaurentPoly::degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  return terms_.back().first;
}

int LaurentPoly::valuation() const {
  if (is_zero()) throw std::domain_error("valuation of zero polynomial");
  return terms_.front().first;
}

bool LaurentPoly::all_exponents_even() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

bool LaurentPoly::all_coeffs_nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::int64_t LaurentPoly::eval_at_one() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.push_back({-it->first, it->second});
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(t);
    if (!out.empty() && out.back().second == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      merged.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      merged.push_back(o.terms_[j++]);
    } else {
      std::int64_t c = terms_[i].second + o.terms_[j].second;
      if (c != 0) merged.push_back({terms_[i].first, c});
      ++i, ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.terms_.push_back({ea + eb, ca * cb});
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::divided_exactly_by(const LaurentPoly& b) const {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (is_zero()) return LaurentPoly();
  int qlo = valuation() - b.valuation();
  if (degree() - b.degree() < qlo) throw InexactDivision();
  LaurentPoly rem = *this, quot;
  const std::int64_t blead = b.terms_.back().second;
  while (!rem.is_zero()) {
    int e = rem.degree() - b.degree();
    if (e < qlo) throw InexactDivision();
    std::int64_t rlead = rem.terms_.back().second;
    if (rlead % blead != 0) throw InexactDivision();
    LaurentPoly t = term(rlead / blead, e);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

namespace {

std::string render(const std::vector<LaurentPoly::Term>& terms, const char* var, int exp_div) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    std::int64_t a = c < 0 ? -c : c;
    int ee = e / exp_div;
    std::string body;
    if (ee == 0) {
      body = std::to_string(a);
    } else {
      if (a != 1) body = std::to_string(a);
      body += var;
      if (ee != 1) body += "^" + std::to_string(ee);
    }
    if (first) {
      if (c < 0) out += "-";
      out += body;
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace

std::string LaurentPoly::to_v_string() const { return render(terms_, "v", 1); }

std::string LaurentPoly::to_q_string() const {
  if (!all_exponents_even()) throw std::domain_error("odd v-exponent, not a polynomial in q");
  return render(terms_, "q", 2);
}

std::string LaurentPoly::to_string() const {
  return all_exponents_even() ? to_q_string() : to_v_string();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  LaurentPoly out;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  auto parse_int = [&]() -> std::int64_t {
    skip_ws();
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    skip_ws();
    if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
      throw std::invalid_argument("expected integer in polynomial: " + std::string(text));
    std::int64_t v = 0;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) v = v * 10 + (text[i++] - '0');
    return neg ? -v : v;
  };

  skip_ws();
  if (i >= text.size()) throw std::invalid_argument("empty polynomial");
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    std::int64_t sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("expected + or - between terms: " + std::string(text));
    }
    first = false;
    std::int64_t coeff = 1;
    bool saw_coeff = false;
    if (i < text.size() && std::isdigit((unsigned char)text[i])) {
      coeff = parse_int();
      saw_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
    }
    int exp = 0;
    if (i < text.size() && (text[i] == 'v' || text[i] == 'q')) {
      int unit = text[i] == 'q' ? 2 : 1;
      ++i;
      skip_ws();
      int pow = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        pow = static_cast<int>(parse_int());
      }
      exp = unit * pow;
    } else if (!saw_coeff) {
      throw std::invalid_argument("expected term in polynomial: " + std::string(text));
    }
    out += term(sign * coeff, exp);
  }
  return out;
}

}  // namespace klfactor
