#pragma once

#include <span>
#include <vector>

#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"

namespace jackpoly {

// Truncated multivariate Bessel series
//   F(l, x; theta) = sum_mu P_mu(l) Q_mu(x) / (n theta)_mu
// over partitions with |mu| <= degree_cut and at most n parts.
struct BesselEval {
  std::vector<double> l;
  std::vector<double> x;
  double theta = 0;
  int degree_cut = 0;
  long double value = 0;          // partial sum at degree_cut
  long double tail_estimate = 0;  // |contribution of the final degree|
};

BesselEval bessel_series(std::span<const double> l, std::span<const double> x, const Rational& theta,
                         int degree_cut);

// |F(l,x) - F(x,l)| at the same cut.  Every term of the series is already
// symmetric under l <-> x, so with the fixed summation order this measures
// only floating-point asymmetry (zero by construction here).
long double bessel_symmetry_gap(std::span<const double> l, std::span<const double> x,
                                const Rational& theta, int degree_cut);

// Distance between the truncated series and the exact finite-kappa quotient
//   P_{[kappa l]}(1 + x_1/kappa, ..., 1 + x_n/kappa) / P_{[kappa l]}(1,...,1)
// whose limit kappa -> infinity defines F.  The quotient is computed in exact
// rational arithmetic ([kappa l] is the coordinate-wise integral part; the
// points 1 + x_i/kappa are exact since doubles are dyadic rationals).
long double bessel_limit_probe(std::span<const double> l, std::span<const double> x,
                               const Rational& theta, long kappa, int degree_cut);

}  // namespace jackpoly
