#include "jackpoly/binomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

#include "jackpoly/shifted.hpp"

namespace jackpoly {

SymExpansion binomial_lhs(const Partition& lambda, const JackParams& params) {
  if (lambda.length() > params.n) throw std::domain_error("binomial_lhs: partition longer than variable count");
  const Rational denom = jack_principal(lambda, params);
  MultiPoly shifted = jack_combinatorial(lambda, params).shift_all(Rational(1));
  shifted *= Rational(1) / denom;
  return to_monomial_expansion(shifted);
}

SymExpansion binomial_rhs(const Partition& lambda, const JackParams& params) {
  if (lambda.length() > params.n) throw std::domain_error("binomial_rhs: partition longer than variable count");
  SymExpansion total(params.n, SymBasis::monomial);
  for_each_subpartition(lambda, [&](const Partition& mu) {
    if (mu.length() > params.n) return;  // Q_mu vanishes in fewer variables
    const Rational scale =
        shifted_eval(mu, lambda, params) * q_ratio(mu, params.theta) /
        pochhammer(params.theta * Rational(params.n), mu, params.theta);
    if (scale.is_zero()) return;
    MultiPoly term = jack_combinatorial(mu, params);
    term *= scale;
    total += to_monomial_expansion(term);
  });
  return total;
}

Rational binomial_coefficient(const Partition& lambda, const Partition& mu, const Rational& theta) {
  const int n = std::max(lambda.length(), mu.length());
  return shifted_eval(mu, lambda, JackParams(n, theta)) / hook_h(mu, theta);
}

BinomialReport verify_binomial(const Partition& lambda, const JackParams& params) {
  BinomialReport report;
  report.lambda = lambda;
  report.n = params.n;
  report.theta = params.theta;
  report.lhs = binomial_lhs(lambda, params);
  report.rhs = binomial_rhs(lambda, params);
  report.equal = report.lhs == report.rhs;
  report.max_abs_diff = Rational(0);
  SymExpansion diff = report.lhs;
  diff -= report.rhs;
  for (const auto& [mu, c] : diff.coeffs()) report.max_abs_diff = std::max(report.max_abs_diff, c.abs());
  return report;
}

std::string to_json(const BinomialReport& report) {
  nlohmann::ordered_json j;
  j["lambda"] = report.lambda.parts();
  j["n"] = report.n;
  j["theta"] = report.theta.str();
  j["equal"] = report.equal;
  j["max_abs_diff"] = report.max_abs_diff.str();
  j["lhs"] = nlohmann::ordered_json::parse(report.lhs.to_json());
  j["rhs"] = nlohmann::ordered_json::parse(report.rhs.to_json());
  return j.dump();
}

}  // namespace jackpoly
