#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace knotvol {

enum class Variable { A, q };

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// A stored exponent e denotes var^(e / exponent_scale()). The scale is 1 for
/// ordinary Laurent polynomials and 2 when half-integer powers of q occur
/// (Jones polynomials of links with an even number of components).
/// Terms are kept sorted by exponent and zero coefficients are never stored.
class LaurentPolynomial {
 public:
  struct Term {
    int exponent;
    mpz_class coefficient;
    bool operator==(const Term&) const = default;
  };

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(Variable var, int exponent_scale = 1);

  static LaurentPolynomial monomial(const mpz_class& coefficient, int exponent,
                                    Variable var = Variable::q, int exponent_scale = 1);
  static LaurentPolynomial constant(long value, Variable var = Variable::q);
  /// Terms in any order; repeated exponents are summed.
  static LaurentPolynomial from_terms(std::vector<std::pair<int, mpz_class>> terms,
                                      Variable var = Variable::q, int exponent_scale = 1);

  Variable variable() const noexcept { return var_; }
  int exponent_scale() const noexcept { return scale_; }
  std::span<const Term> terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;
  /// max - min in stored units; 0 for monomials and zero.
  int span() const;
  mpz_class coefficient(int exponent) const;
  mpz_class evaluate_at_one() const;

  /// Multiply by var^(k / scale).
  LaurentPolynomial shifted(int k) const;
  /// var -> var^-1.
  LaurentPolynomial reflected() const;
  /// Reinterpret stored exponents: new exponent = e / divisor; throws if inexact.
  LaurentPolynomial rescaled(Variable var, int divisor, int new_scale = 1) const;
  LaurentPolynomial pow(unsigned n) const;
  /// Exact quotient; throws std::domain_error if the division leaves a remainder.
  LaurentPolynomial exact_divide(const LaurentPolynomial& divisor) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(long scalar);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
    return lhs += rhs;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator*(LaurentPolynomial lhs, long scalar) { return lhs *= scalar; }

  bool operator==(const LaurentPolynomial& rhs) const;

  /// Canonical text: `c_min*q^min + ... + c_max*q^max`, ascending, explicit signs.
  std::string to_string() const;
  /// (exponent, decimal coefficient) pairs in ascending order; exponents in stored units.
  std::vector<std::pair<int, std::string>> to_pairs() const;

 private:
  void check_compatible(const LaurentPolynomial& rhs) const;
  void add_scaled(const LaurentPolynomial& rhs, int sign);

  std::vector<Term> terms_;
  Variable var_ = Variable::q;
  int scale_ = 1;
};

}  // namespace knotvol
