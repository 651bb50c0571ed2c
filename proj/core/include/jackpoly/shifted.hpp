#pragma once

#include "jackpoly/jack.hpp"
#include "jackpoly/multipoly.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"

namespace jackpoly {

// Shifted Jack polynomial P*_mu(x_1..x_n; theta): the interpolation analogue
// of P_mu, as a sum over reverse tableaux T of shape mu with entries in 1..n,
// each contributing psi_T * prod_{cells s} (x_{T(s)} - coarm(s) + theta coleg(s)).
// Zero polynomial when mu has more than n rows (no admissible tableaux).
MultiPoly shifted_jack(const Partition& mu, const JackParams& params);

// P*_mu evaluated at the point (lambda_1, ..., lambda_n) by direct
// substitution into the tableau sum, without expanding the polynomial.
Rational shifted_eval(const Partition& mu, const Partition& lambda, const JackParams& params);

// Homogeneous component of top degree |mu| (equals the ordinary P_mu).
MultiPoly shifted_top_term(const Partition& mu, const JackParams& params);

// Whether p becomes symmetric after the substitution x_i -> x_i + theta*i,
// i.e. p is symmetric in the shifted variables x_i - theta*i.
bool is_shifted_symmetric(const MultiPoly& p, const Rational& theta);

}  // namespace jackpoly
