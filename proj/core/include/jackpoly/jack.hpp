#pragma once

#include <map>
#include <vector>

#include "jackpoly/multipoly.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"
#include "jackpoly/tableau.hpp"

namespace jackpoly {

// Number of variables and the (inverse) Jack parameter theta = 1/alpha.
struct JackParams {
  int n;
  Rational theta;

  JackParams(int n_, Rational theta_);
};

// Branching weight psi_{lambda/nu} of an interlacing pair nu < lambda: the
// coefficient of P_nu(x_1..x_{n-1}) x_n^{|lambda|-|nu|} in P_lambda(x_1..x_n).
// Collapses the Gamma-function products to an exact rational.
Rational branching_weight(const Partition& lambda, const Partition& nu, const Rational& theta);

// Weight psi_T of a reverse tableau: product of branching weights of the
// chain of level shapes {s : T(s) >= i}.
Rational tableau_weight(const ReverseTableau& t, const Rational& theta);

// Jack polynomial P_mu(x_1..x_n; theta) via the sum over reverse tableaux
// with entries in 1..n, each contributing psi_T times prod_s x_{T(s)}.
// Zero polynomial when mu has more than n rows (no admissible tableaux).
MultiPoly jack_combinatorial(const Partition& mu, const JackParams& params);

// Same polynomial built by peeling one variable at a time with the branching
// rule; independent route used for cross-checks.
MultiPoly jack_by_branching(const Partition& mu, const JackParams& params);

// Sekiguchi operator D(u; theta) applied to a polynomial:
//   V(x)^{-1} det[ x_i^{n-j} (x_i d/dx_i + (n-j) theta + u) ]_{i,j=1..n}.
// Jack polynomials are its eigenfunctions.
MultiPoly sekiguchi_apply(const MultiPoly& p, const Rational& u, const Rational& theta);

// Eigenvalue of D(u; theta) on P_mu: prod_i (mu_i + (n-i) theta + u).
Rational sekiguchi_eigenvalue(const Partition& mu, int n, const Rational& theta, const Rational& u);

// Principal specialization P_mu(1,...,1) = (n theta)_mu / H'(mu).
Rational jack_principal(const Partition& mu, const JackParams& params);

// log P_lambda(1^n) evaluated through the Gamma-product form
//   prod_{i<j<=n} (lambda_i-lambda_j+theta(j-i))_theta * prod_{i<=n} Gamma(theta)/Gamma(theta i),
// with (t)_r = Gamma(t+r)/Gamma(t).  Numeric route used for cross-checks.
long double jack_principal_log_gamma(const Partition& lambda, int n, long double theta);

// H'(mu)/H(mu), the ratio turning P_mu into Q_mu.
Rational q_ratio(const Partition& mu, const Rational& theta);

// Q_mu = (H'(mu)/H(mu)) P_mu.
MultiPoly q_normalize(const Partition& mu, const JackParams& params);

// Jack "polynomial" for a weakly decreasing integer signature, possibly with
// negative entries: P_lambda = (x_1...x_n)^power * P_{lambda - power} with
// power = lambda_n.  Returned as the pair (power, ordinary Jack polynomial).
struct LaurentJack {
  int power;
  MultiPoly poly;
};
LaurentJack jack_laurent(const std::vector<int>& lambda_signed, const JackParams& params);

// Memoized monomial expansions for a fixed (n, theta).
class JackTable {
public:
  explicit JackTable(JackParams params) : params_(std::move(params)) {}
  const JackParams& params() const { return params_; }
  const MultiPoly& poly(const Partition& mu);

private:
  JackParams params_;
  std::map<Partition, MultiPoly, GradedLexLess> cache_;
};

}  // namespace jackpoly
