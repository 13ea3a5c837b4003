#include "knotvol/jones.hpp"

#include <string>
#include <vector>

#include "knotvol/error.hpp"

namespace knotvol {

namespace {

// A = q^(1/4): an A-exponent e becomes q^(e/4).
LaurentPolynomial to_q(const LaurentPolynomial& p) {
  bool quarter = true;
  for (const auto& t : p.terms()) {
    if (t.exponent % 2 != 0) throw ConventionError("odd power of A after normalisation");
    if (t.exponent % 4 != 0) quarter = false;
  }
  return quarter ? p.rescaled(Variable::q, 4, 1) : p.rescaled(Variable::q, 2, 2);
}

long to_long(const mpz_class& v) {
  if (!v.fits_slong_p()) throw ExtractionError("coefficient does not fit in a machine integer");
  return v.get_si();
}

}  // namespace

LaurentPolynomial jones2(const LinkDiagram& d, const BracketOptions& options) {
  const int w = d.writhe();
  LaurentPolynomial p = kauffman_bracket(d, options).shifted(-3 * w);
  if (w % 2 != 0) p = -p;
  return to_q(p);
}

LaurentPolynomial colored_jones3(const LinkDiagram& d, const ColoredOptions& options) {
  if (d.crossing_count() > options.max_base_crossings) {
    throw ResourceError("colored Jones needs " + std::to_string(d.crossing_count()) +
                        " base crossings; the budget is max_base_crossings = " +
                        std::to_string(options.max_base_crossings));
  }
  const int components = d.component_count();
  if (components > 16) throw ResourceError("too many components for the subset expansion");

  LaurentPolynomial sum(Variable::A);
  std::vector<int> strands(static_cast<std::size_t>(components));
  for (unsigned mask = 0; mask < (1u << components); ++mask) {
    int dropped = 0;
    for (int i = 0; i < components; ++i) {
      const bool kept = (mask >> i) & 1u;
      strands[i] = kept ? 2 : 0;
      if (!kept) ++dropped;
    }
    LaurentPolynomial term = bracket_unnormalized(cable(d, strands), options.bracket);
    if (dropped % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }

  // Each colored component picks up (-1)^2 A^(2*2+2*2) = A^8 per unit of framing.
  int framing = 0;
  for (int i = 0; i < components; ++i) framing += d.self_writhe(i);
  const LaurentPolynomial& delta = loop_value();
  const LaurentPolynomial unknot = delta * delta - LaurentPolynomial::constant(1, Variable::A);
  return to_q(sum.shifted(-8 * framing).exact_divide(unknot));
}

HeadTail head_tail(const LaurentPolynomial& p, int n) {
  if (p.is_zero() || p.span() < 2 * p.exponent_scale()) {
    throw ExtractionError("head/tail extraction needs a span of at least 2, got " +
                          std::to_string(p.is_zero() ? 0 : p.span()));
  }
  HeadTail h;
  h.n = n;
  h.exponent_scale = p.exponent_scale();
  h.k = p.max_exponent();
  h.r = p.span();
  const int lo = p.min_exponent();
  const int step = h.exponent_scale;  // one whole power of q

  h.leading_sign = sgn(p.coefficient(h.k)) > 0 ? 1 : -1;
  h.a = h.leading_sign * to_long(p.coefficient(h.k));
  h.b = -h.leading_sign * to_long(p.coefficient(h.k - step));
  h.c = h.leading_sign * to_long(p.coefficient(h.k - 2 * step));

  h.trailing_sign = sgn(p.coefficient(lo)) > 0 ? 1 : -1;
  h.alpha = h.trailing_sign * to_long(p.coefficient(lo));
  h.beta = -h.trailing_sign * to_long(p.coefficient(lo + step));
  h.gamma = h.trailing_sign * to_long(p.coefficient(lo + 2 * step));

  if (h.b < 0 || h.beta < 0) {
    throw ConventionError("second coefficient breaks the alternating sign pattern (b = " +
                          std::to_string(h.b) + ", beta = " + std::to_string(h.beta) + ")");
  }
  return h;
}

}  // namespace knotvol
