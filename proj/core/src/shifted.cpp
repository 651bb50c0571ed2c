#include "jackpoly/shifted.hpp"

#include <stdexcept>

namespace jackpoly {

MultiPoly shifted_jack(const Partition& mu, const JackParams& params) {
  // More rows than variables: no tableau has entries in 1..n, so the sum is
  // empty and the polynomial is zero.
  MultiPoly p(params.n);
  for_each_reverse_tableau(mu, params.n, [&](const ReverseTableau& t) {
    MultiPoly term = MultiPoly::constant(params.n, tableau_weight(t, params.theta));
    for (int i = 1; i <= mu.length(); ++i)
      for (int j = 1; j <= mu.part(i); ++j) {
        const Rational offset = params.theta * Rational(coleg({i, j})) - Rational(coarm({i, j}));
        term *= MultiPoly::variable(params.n, t.entry(i, j)) + MultiPoly::constant(params.n, offset);
      }
    p += term;
  });
  return p;
}

Rational shifted_eval(const Partition& mu, const Partition& lambda, const JackParams& params) {
  if (mu.length() > params.n || lambda.length() > params.n)
    throw std::domain_error("shifted_eval: partition longer than variable count");
  Rational total(0);
  for_each_reverse_tableau(mu, params.n, [&](const ReverseTableau& t) {
    Rational term = tableau_weight(t, params.theta);
    for (int i = 1; i <= mu.length() && !term.is_zero(); ++i)
      for (int j = 1; j <= mu.part(i); ++j)
        term *= Rational(lambda.part(t.entry(i, j))) - Rational(coarm({i, j})) +
                params.theta * Rational(coleg({i, j}));
    total += term;
  });
  return total;
}

MultiPoly shifted_top_term(const Partition& mu, const JackParams& params) {
  return shifted_jack(mu, params).homogeneous_part(mu.size());
}

bool is_shifted_symmetric(const MultiPoly& p, const Rational& theta) {
  std::vector<Rational> shift;
  shift.reserve(p.var_count());
  for (int i = 1; i <= p.var_count(); ++i) shift.push_back(theta * Rational(i));
  return p.shift_vars(shift).is_symmetric();
}

}  // namespace jackpoly
