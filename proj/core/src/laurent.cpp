#include "knotvol/laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace knotvol {

LaurentPolynomial::LaurentPolynomial(Variable var, int exponent_scale)
    : var_(var), scale_(exponent_scale) {
  if (exponent_scale < 1) throw std::invalid_argument("exponent scale must be positive");
}

LaurentPolynomial LaurentPolynomial::monomial(const mpz_class& coefficient, int exponent,
                                              Variable var, int exponent_scale) {
  LaurentPolynomial p(var, exponent_scale);
  if (coefficient != 0) p.terms_.push_back({exponent, coefficient});
  return p;
}

LaurentPolynomial LaurentPolynomial::constant(long value, Variable var) {
  return monomial(mpz_class(value), 0, var);
}

LaurentPolynomial LaurentPolynomial::from_terms(std::vector<std::pair<int, mpz_class>> terms,
                                                Variable var, int exponent_scale) {
  std::map<int, mpz_class> acc;
  for (auto& [e, c] : terms) acc[e] += c;
  LaurentPolynomial p(var, exponent_scale);
  for (auto& [e, c] : acc) {
    if (c != 0) p.terms_.push_back({e, std::move(c)});
  }
  return p;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.front().exponent;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.back().exponent;
}

int LaurentPolynomial::span() const {
  return terms_.empty() ? 0 : terms_.back().exponent - terms_.front().exponent;
}

mpz_class LaurentPolynomial::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coefficient;
  return 0;
}

mpz_class LaurentPolynomial::evaluate_at_one() const {
  mpz_class sum = 0;
  for (const auto& t : terms_) sum += t.coefficient;
  return sum;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial p = *this;
  for (auto& t : p.terms_) t.exponent += k;
  return p;
}

LaurentPolynomial LaurentPolynomial::reflected() const {
  LaurentPolynomial p(var_, scale_);
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    p.terms_.push_back({-it->exponent, it->coefficient});
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::rescaled(Variable var, int divisor, int new_scale) const {
  if (divisor == 0) throw std::invalid_argument("zero divisor");
  LaurentPolynomial p(var, new_scale);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.exponent % divisor != 0) {
      throw std::domain_error("exponent " + std::to_string(t.exponent) +
                              " not divisible by " + std::to_string(divisor));
    }
    p.terms_.push_back({t.exponent / divisor, t.coefficient});
  }
  if (divisor < 0) std::reverse(p.terms_.begin(), p.terms_.end());
  return p;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned n) const {
  LaurentPolynomial result = monomial(1, 0, var_, scale_);
  LaurentPolynomial base = *this;
  while (n != 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n != 0) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::exact_divide(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  check_compatible(divisor);
  if (is_zero()) return LaurentPolynomial(var_, scale_);

  // Dense long division from the top degree down.
  const int d_lo = divisor.min_exponent();
  const int d_hi = divisor.max_exponent();
  const int n_lo = min_exponent();
  const int n_hi = max_exponent();
  std::vector<mpz_class> rem(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (const auto& t : terms_) rem[static_cast<std::size_t>(t.exponent - n_lo)] = t.coefficient;
  const mpz_class& lead = divisor.terms_.back().coefficient;

  std::vector<std::pair<int, mpz_class>> quotient;
  for (int top = n_hi; top - (d_hi - d_lo) >= n_lo; --top) {
    mpz_class& c = rem[static_cast<std::size_t>(top - n_lo)];
    if (c == 0) continue;
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) {
      throw std::domain_error("polynomial division is not exact");
    }
    mpz_class factor = c / lead;
    const int shift = top - d_hi;
    for (const auto& t : divisor.terms_) {
      rem[static_cast<std::size_t>(t.exponent + shift - n_lo)] -= factor * t.coefficient;
    }
    quotient.emplace_back(shift, std::move(factor));
  }
  for (const auto& c : rem) {
    if (c != 0) throw std::domain_error("polynomial division is not exact");
  }
  return from_terms(std::move(quotient), var_, scale_);
}

void LaurentPolynomial::check_compatible(const LaurentPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return;
  if (var_ != rhs.var_ || scale_ != rhs.scale_) {
    throw std::invalid_argument("mixing polynomials in different variables");
  }
}

void LaurentPolynomial::add_scaled(const LaurentPolynomial& rhs, int sign) {
  check_compatible(rhs);
  if (rhs.is_zero()) return;
  if (is_zero()) {
    var_ = rhs.var_;
    scale_ = rhs.scale_;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exponent < a->exponent) {
      merged.push_back({b->exponent, sign > 0 ? b->coefficient : mpz_class(-b->coefficient)});
      ++b;
    } else {
      mpz_class c = sign > 0 ? mpz_class(a->coefficient + b->coefficient)
                             : mpz_class(a->coefficient - b->coefficient);
      if (c != 0) merged.push_back({a->exponent, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  add_scaled(rhs, +1);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  add_scaled(rhs, -1);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  lhs.check_compatible(rhs);
  Variable var = lhs.is_zero() ? rhs.var_ : lhs.var_;
  int scale = lhs.is_zero() ? rhs.scale_ : lhs.scale_;
  LaurentPolynomial out(var, scale);
  if (lhs.is_zero() || rhs.is_zero()) return out;

  const int lo = lhs.min_exponent() + rhs.min_exponent();
  const int hi = lhs.max_exponent() + rhs.max_exponent();
  std::vector<mpz_class> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      mpz_addmul(dense[static_cast<std::size_t>(a.exponent + b.exponent - lo)].get_mpz_t(),
                 a.coefficient.get_mpz_t(), b.coefficient.get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) out.terms_.push_back({lo + static_cast<int>(i), std::move(dense[i])});
  }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(long scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= scalar;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& rhs) const {
  if (terms_ != rhs.terms_) return false;
  return is_zero() || (var_ == rhs.var_ && scale_ == rhs.scale_);
}

namespace {

std::string exponent_text(int e, int scale) {
  if (e % scale == 0) return std::to_string(e / scale);
  return "(" + std::to_string(e) + "/" + std::to_string(scale) + ")";
}

}  // namespace

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  const char var = var_ == Variable::A ? 'A' : 'q';
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    const bool negative = t.coefficient < 0;
    mpz_class magnitude = abs(t.coefficient);
    if (i == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += magnitude.get_str();
    out += '*';
    out += var;
    out += '^';
    out += exponent_text(t.exponent, scale_);
  }
  return out;
}

std::vector<std::pair<int, std::string>> LaurentPolynomial::to_pairs() const {
  std::vector<std::pair<int, std::string>> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.emplace_back(t.exponent, t.coefficient.get_str());
  return out;
}

}  // namespace knotvol
