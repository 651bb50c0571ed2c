#include "jackpoly/bessel.hpp"

#include <cmath>
#include <stdexcept>

#include "jackpoly/jack.hpp"

namespace jackpoly {

namespace {

// Partial sum with per-grade tail tracking.  Terms are grouped by |mu| and
// multiplied as (P_mu(l) * P_mu(x)) * coeff so the value is exactly invariant
// under swapping l and x.
long double series_value(JackTable& table, std::span<const long double> lp,
                         std::span<const long double> xp, int degree_cut, long double* tail) {
  const int n = table.params().n;
  const Rational ntheta = table.params().theta * Rational(n);
  long double value = 0, grade_sum = 0;
  int grade = 0;
  for_each_partition(degree_cut, n, [&](const Partition& mu) {
    if (mu.size() != grade) {
      value += grade_sum;
      grade_sum = 0;
      grade = mu.size();
    }
    const MultiPoly& p = table.poly(mu);
    const Rational coeff = q_ratio(mu, table.params().theta) / pochhammer(ntheta, mu, table.params().theta);
    grade_sum += (p.evaluate_float<long double>(lp) * p.evaluate_float<long double>(xp)) *
                 coeff.to_long_double();
  });
  value += grade_sum;
  if (tail) *tail = fabsl(grade_sum);
  return value;
}

std::vector<long double> to_long_double(std::span<const double> v) {
  return std::vector<long double>(v.begin(), v.end());
}

}  // namespace

BesselEval bessel_series(std::span<const double> l, std::span<const double> x, const Rational& theta,
                         int degree_cut) {
  if (l.size() != x.size()) throw std::domain_error("bessel_series: l and x have different lengths");
  if (degree_cut < 0) throw std::domain_error("bessel_series: negative degree cut");
  BesselEval out;
  out.l.assign(l.begin(), l.end());
  out.x.assign(x.begin(), x.end());
  out.theta = theta.to_double();
  out.degree_cut = degree_cut;
  JackTable table(JackParams(static_cast<int>(l.size()), theta));
  const auto lp = to_long_double(l), xp = to_long_double(x);
  out.value = series_value(table, lp, xp, degree_cut, &out.tail_estimate);
  return out;
}

long double bessel_symmetry_gap(std::span<const double> l, std::span<const double> x,
                                const Rational& theta, int degree_cut) {
  if (l.size() != x.size()) throw std::domain_error("bessel_symmetry_gap: l and x have different lengths");
  if (degree_cut < 0) throw std::domain_error("bessel_symmetry_gap: negative degree cut");
  JackTable table(JackParams(static_cast<int>(l.size()), theta));
  const auto lp = to_long_double(l), xp = to_long_double(x);
  const long double forward = series_value(table, lp, xp, degree_cut, nullptr);
  const long double backward = series_value(table, xp, lp, degree_cut, nullptr);
  return fabsl(forward - backward);
}

long double bessel_limit_probe(std::span<const double> l, std::span<const double> x,
                               const Rational& theta, long kappa, int degree_cut) {
  if (l.size() != x.size()) throw std::domain_error("bessel_limit_probe: l and x have different lengths");
  if (kappa < 1) throw std::domain_error("bessel_limit_probe: kappa must be a positive integer");
  for (std::size_t i = 1; i < l.size(); ++i)
    if (l[i] > l[i - 1]) throw std::domain_error("bessel_limit_probe: l must be weakly decreasing");

  const int n = static_cast<int>(l.size());
  const JackParams params(n, theta);

  std::vector<int> scaled;
  scaled.reserve(l.size());
  for (double li : l) {
    const double f = std::floor(static_cast<double>(kappa) * li);
    if (std::abs(f) > 1e6) throw std::domain_error("bessel_limit_probe: scaled signature part out of range");
    scaled.push_back(static_cast<int>(f));
  }
  const LaurentJack lj = jack_laurent(scaled, params);

  std::vector<Rational> point;
  Rational point_product(1);
  const Rational kap(kappa);
  for (double xi : x) {
    const Rational pt = Rational(1) + Rational(mpq_class(xi)) / kap;  // doubles are dyadic, so exact
    point_product *= pt;
    point.push_back(pt);
  }

  std::vector<int> shifted = scaled;
  for (int& s : shifted) s -= lj.power;
  const Rational denominator = jack_principal(Partition(shifted), params);
  const Rational quotient = lj.poly.evaluate(point) * point_product.pow(lj.power) / denominator;

  const long double series = bessel_series(l, x, theta, degree_cut).value;
  return fabsl(quotient.to_long_double() - series);
}

}  // namespace jackpoly
