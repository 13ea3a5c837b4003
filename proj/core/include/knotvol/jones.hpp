#pragma once

#include <cstddef>

#include "knotvol/bracket.hpp"
#include "knotvol/diagram.hpp"
#include "knotvol/laurent.hpp"

namespace knotvol {

/// Jones polynomial in q, normalised so the unknot is 1. The bracket variable
/// is A = q^(1/4); with this choice the right-handed trefoil has
/// J = q^-1 + q^-3 - q^-4.
LaurentPolynomial jones2(const LinkDiagram& d, const BracketOptions& options = {});

/// The n = 3 colored Jones polynomial, from blackboard 2-parallels of every
/// subset of components combined by the second Chebyshev polynomial z^2 - 1.
/// Throws ResourceError when the base diagram has more than max_base_crossings.
struct ColoredOptions {
  BracketOptions bracket{};
  std::size_t max_base_crossings = 10;
};
LaurentPolynomial colored_jones3(const LinkDiagram& d, const ColoredOptions& options = {});

/// The three extreme coefficients at each end, read with the alternating sign
/// pattern  s(a q^k - b q^(k-1) + c q^(k-2)) + ... + s'(g q^(k-r+2) - b' q^(k-r+1) + a' q^(k-r)).
/// Exponents (k, r) are in units of q^(1/exponent_scale).
struct HeadTail {
  int n = 0;
  long a = 0, b = 0, c = 0;
  long gamma = 0, beta = 0, alpha = 0;
  int k = 0;
  int r = 0;
  int exponent_scale = 1;
  int leading_sign = 1;
  int trailing_sign = 1;
};

/// Throws ExtractionError when the span is below 2 and ConventionError when
/// b or beta come out negative.
HeadTail head_tail(const LaurentPolynomial& p, int n);

}  // namespace knotvol
