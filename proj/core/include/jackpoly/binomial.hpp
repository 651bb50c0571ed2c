#pragma once

#include <string>

#include "jackpoly/jack.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"
#include "jackpoly/sym_expansion.hpp"

namespace jackpoly {

// Both sides of the binomial identity
//   P_lambda(1+x) / P_lambda(1^n) = sum_{mu subset lambda}
//       P*_mu(lambda) Q_mu(x) / (n theta)_mu
// as monomial-basis expansions.
SymExpansion binomial_lhs(const Partition& lambda, const JackParams& params);
SymExpansion binomial_rhs(const Partition& lambda, const JackParams& params);

// Generalized binomial coefficient (lambda choose mu)_theta = P*_mu(lambda) / H(mu).
// Independent of the number of variables used to evaluate it.
Rational binomial_coefficient(const Partition& lambda, const Partition& mu, const Rational& theta);

struct BinomialReport {
  Partition lambda;
  int n = 0;
  Rational theta;
  bool equal = false;
  Rational max_abs_diff;  // largest |lhs - rhs| coefficient in the monomial basis
  SymExpansion lhs{0, SymBasis::monomial};
  SymExpansion rhs{0, SymBasis::monomial};
};

BinomialReport verify_binomial(const Partition& lambda, const JackParams& params);
std::string to_json(const BinomialReport& report);

}  // namespace jackpoly
