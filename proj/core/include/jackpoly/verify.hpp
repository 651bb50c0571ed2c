#pragma once

#include <string>
#include <vector>

#include "jackpoly/rational.hpp"

namespace jackpoly {

// Outcome of one identity battery: how many cases were checked and, on the
// first violation, which one.
struct CheckResult {
  std::string name;
  bool pass = true;
  long cases = 0;
  std::string detail;  // first failing case; empty while pass holds
};

// Sekiguchi operator: D(u) P_mu = prod_i (mu_i + (n-i) theta + u) P_mu for
// all |mu| <= max_size with at most n <= max_n parts, u in {0, 1, -theta}.
CheckResult check_sekiguchi_eigenvalue(int max_size, int max_n, const std::vector<Rational>& thetas);

// P_mu(1^n) against the hook/Pochhammer closed form (exact) and against the
// Gamma-function product form (log domain, within rel_tol).
CheckResult check_principal_specialization(int max_size, int max_n,
                                           const std::vector<Rational>& thetas, long double rel_tol);

// The combinatorial and branching constructions of P_mu produce identical
// polynomials.
CheckResult check_cross_implementation(int max_size, int max_n, const std::vector<Rational>& thetas);

// Binomial formula: P_lambda(1+x_1,...,1+x_n) / P_lambda(1^n)
// = sum_{mu in lambda} P*_mu(lambda) Q_mu(x) / (n theta)_mu, exact.
CheckResult check_binomial_theorem(int max_size, int max_n, const std::vector<Rational>& thetas);

// Interpolation property of shifted Jack polynomials: P*_mu(lambda) = 0
// unless mu is contained in lambda, and P*_mu(mu) = H(mu).
CheckResult check_interpolation_vanishing(int max_mu, int max_lambda,
                                          const std::vector<Rational>& thetas);

// Top-degree part of P*_mu equals P_mu, and P*_mu is shifted-symmetric.
CheckResult check_top_term(int max_size, int max_n, const std::vector<Rational>& thetas);

// The three theta-dimension routes (Jack-basis expansion, closed skew form,
// iterated Pieri rule) agree exactly, and thetadim(lambda) P*_lambda(lambda)
// = |lambda|!.
CheckResult check_thetadim_three_way(int max_lambda, const std::vector<Rational>& thetas);

// Summation formula for P*_mu(lambda) over partitions interlacing lambda,
// exact in rational arithmetic.
CheckResult check_discrete_identity(int max_mu, int max_lambda, int max_n,
                                    const std::vector<Rational>& thetas);

// Integral representation at integer theta: the integrand is polynomial, so
// a 12-node Gauss-Legendre rule is exact up to roundoff.
CheckResult check_integral_integer_theta(double rel_tol);

// Integral representation at fractional theta: the Gauss-Jacobi error must
// at least halve when the node count doubles (8 -> 16 -> 32 per dimension).
CheckResult check_integral_fractional_convergence();

// Bessel series battery: one-variable series against exp, l <-> x symmetry
// at a fixed truncation, and decrease of the distance to the exact
// finite-kappa quotient as kappa grows.
CheckResult check_bessel_battery();

// Scaled composition of all batteries; max_size bounds |mu| and |lambda|.
std::vector<CheckResult> run_verification_suite(int max_size);

}  // namespace jackpoly
