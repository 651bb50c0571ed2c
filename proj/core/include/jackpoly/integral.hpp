#pragma once

#include <span>
#include <string>
#include <vector>

#include "jackpoly/jack.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/quadrature.hpp"
#include "jackpoly/rational.hpp"

namespace jackpoly {

// Beta-function product C(mu, n) = prod_{i=1}^{n-1} B(mu_i + (n-i) theta, theta),
// with mu padded by zeros; computed through log-Gamma.
qfloat beta_product_c(const Partition& mu, int n, qfloat theta);

// Interlacing kernel Pi(lambda, nu; theta) = prod_{i<=j} (lambda_i - nu_j)^{theta-1}
// * prod_{i>j} (nu_j - lambda_i)^{theta-1} for lambda of length n, nu of length n-1.
// Requires lambda strictly decreasing and nu inside the interlacing box; a
// boundary-touching nu with theta < 1 makes the kernel infinite and raises
// std::range_error.
qfloat interlacing_kernel(std::span<const qfloat> lambda, std::span<const qfloat> nu, qfloat theta);

struct IntegralCheck {
  Partition mu;
  std::vector<double> lambda;
  Rational theta;
  QuadratureSpec spec;
  double lhs = 0;      // exact P_mu(lambda), evaluated in quadruple precision
  double rhs = 0;      // quadrature value of the integral representation
  double rel_err = 0;  // |lhs - rhs| / max(1, |lhs|)
};

// Tensor-product quadrature of the integral representation
//   P_mu(lambda) = (1 / (C(mu,n) V(lambda)^{2 theta - 1}))
//                  * integral over the interlacing box of P_mu(nu) V(nu) Pi(lambda, nu; theta)
// against the exact left-hand side.  For gauss_jacobi the (theta-1)-power
// factors vanishing at box endpoints (the i=j and i=j+1 kernel factors) are
// absorbed into the per-dimension weight; the rest of the kernel stays in the
// integrand.
IntegralCheck verify_integral(const Partition& mu, const std::vector<double>& lambda,
                              const Rational& theta, const QuadratureSpec& spec);

// Exact rational check of the discrete relative of the integral formula:
//   P*_mu(lambda) = ((n theta)_mu / ((n-1) theta)_mu)
//     * sum_{nu interlacing lambda} psi_{lambda/nu} (P_nu(1^{n-1}) / P_lambda(1^n)) P*_mu(nu).
bool verify_discrete_identity(const Partition& mu, const Partition& lam, const JackParams& params);

std::string to_json(const IntegralCheck& check);

}  // namespace jackpoly
