#pragma once

#include <quadmath.h>

#include <vector>

namespace jackpoly {

// Quadruple precision scalar used by the quadrature and integral modules.
// The endpoint-weight convergence checks need headroom far below the double
// noise floor, which this provides (~113-bit mantissa).
using qfloat = __float128;

enum class QuadRule { gauss_legendre, gauss_jacobi };

struct QuadratureSpec {
  int nodes_per_dim = 8;
  QuadRule rule = QuadRule::gauss_legendre;
  double jacobi_exponent = 0.0;  // theta - 1 on both endpoints when rule == gauss_jacobi
};

// Nodes and weights on [-1, 1] for the weight (1-t)^alpha (1+t)^beta,
// ordered by ascending node.
struct QuadratureRule {
  std::vector<qfloat> nodes;
  std::vector<qfloat> weights;
};

// Gaussian rule from the Jacobi three-term recurrence: nodes are bisected
// roots of the orthonormal polynomial, weights come from the Christoffel
// function.  Requires count >= 1 and alpha, beta > -1.
QuadratureRule gauss_jacobi_rule(int count, qfloat alpha, qfloat beta);

inline QuadratureRule gauss_legendre_rule(int count) { return gauss_jacobi_rule(count, 0, 0); }

}  // namespace jackpoly
