#pragma once

#include <functional>
#include <map>

#include "jackpoly/jack.hpp"
#include "jackpoly/multipoly.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"
#include "jackpoly/sym_expansion.hpp"

namespace jackpoly {

// theta-deformed dimension of the skew diagram lambda/mu: the coefficient in
//   (x_1 + ... + x_n)^{|lambda|-|mu|} P_mu = sum_lambda thetadim(lambda/mu) P_lambda.
// At theta = 1 it counts standard tableaux of shape lambda/mu.
struct ThetaDim {
  Partition lambda;
  Partition mu;
  Rational theta;
  Rational value;
};

// Rewrite a symmetric polynomial in the Jack basis by graded triangular
// elimination (dominance makes the change of basis unitriangular).
SymExpansion to_jack_expansion(const MultiPoly& p, const Rational& theta);
SymExpansion to_jack_expansion(const MultiPoly& p, JackTable& table);

// Route 1: literal expansion of (sum x_i)^{|lambda|-|mu|} P_mu in the Jack
// basis.  Needs n >= length(lambda).  An optional shared table avoids
// recomputing Jack polynomials across calls.
Rational thetadim_by_expansion(const Partition& lambda, const Partition& mu, const JackParams& params);
Rational thetadim_by_expansion(const Partition& lambda, const Partition& mu, JackTable& table);

// Straight shape: thetadim(lambda) = |lambda|! / H(lambda).
Rational thetadim_closed(const Partition& lambda, const Rational& theta);

// Route 2, skew shape in closed form:
//   thetadim(lambda/mu) = thetadim(lambda) P*_mu(lambda) / (|lambda| (|lambda|-1) ... (|lambda|-|mu|+1)).
// Returns 0 when mu is not contained in lambda.
Rational thetadim_skew(const Partition& lambda, const Partition& mu, const JackParams& params);

// One Pieri step in the shifted basis:
//   (sum x_i - |mu|) P*_mu = sum_{|lambda| = |mu|+1} thetadim(lambda/mu) P*_lambda,
// recovered by Newton interpolation over partition points.  Needs
// n >= length(mu) + 1.
using PieriMap = std::map<Partition, Rational, GradedLexLess>;
PieriMap pieri_shifted(const Partition& mu, const JackParams& params);

// Route 3: iterate single Pieri steps from mu up to lambda, pruning shapes
// outside lambda.  `lookup` may supply precomputed Pieri maps.
Rational thetadim_iterated_pieri(
    const Partition& lambda, const Partition& mu, const JackParams& params,
    const std::function<const PieriMap&(const Partition&)>& lookup = nullptr);

// Convenience record built from the closed skew form.
ThetaDim thetadim(const Partition& lambda, const Partition& mu, const Rational& theta);

}  // namespace jackpoly
