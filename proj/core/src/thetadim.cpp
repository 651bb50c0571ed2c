#include "jackpoly/thetadim.hpp"

#include <stdexcept>

#include "jackpoly/shifted.hpp"

namespace jackpoly {

SymExpansion to_jack_expansion(const MultiPoly& p, const Rational& theta) {
  JackTable table(JackParams(p.var_count(), theta));
  return to_jack_expansion(p, table);
}

SymExpansion to_jack_expansion(const MultiPoly& p, JackTable& table) {
  if (table.params().n != p.var_count())
    throw std::domain_error("to_jack_expansion: table and polynomial variable counts differ");
  SymExpansion rest = to_monomial_expansion(p);
  SymExpansion out(p.var_count(), SymBasis::jack);
  // Within each grade the change of basis is unitriangular with respect to
  // dominance, so stripping the graded-lex-first key is always exact.
  while (!rest.is_zero()) {
    const Partition mu = rest.coeffs().begin()->first;
    const Rational c = rest.coeffs().begin()->second;
    out.add_term(mu, c);
    SymExpansion sub = to_monomial_expansion(table.poly(mu));
    sub *= -c;
    rest += sub;
    if (!rest.coeff(mu).is_zero())
      throw std::runtime_error("to_jack_expansion: Jack polynomial for " + mu.str() + " is not monic");
  }
  return out;
}

Rational thetadim_by_expansion(const Partition& lambda, const Partition& mu, const JackParams& params) {
  JackTable table(params);
  return thetadim_by_expansion(lambda, mu, table);
}

Rational thetadim_by_expansion(const Partition& lambda, const Partition& mu, JackTable& table) {
  const JackParams& params = table.params();
  if (lambda.size() < mu.size()) throw std::domain_error("thetadim_by_expansion: |lambda| < |mu|");
  if (lambda.length() > params.n || mu.length() > params.n)
    throw std::domain_error("thetadim_by_expansion: partition longer than variable count");
  MultiPoly p = table.poly(mu);
  const MultiPoly ones = power_sum_one(params.n);
  for (int k = 0; k < lambda.size() - mu.size(); ++k) p *= ones;
  return to_jack_expansion(p, table).coeff(lambda);
}

Rational thetadim_closed(const Partition& lambda, const Rational& theta) {
  Rational factorial(1);
  for (int k = 2; k <= lambda.size(); ++k) factorial *= Rational(k);
  return factorial / hook_h(lambda, theta);
}

Rational thetadim_skew(const Partition& lambda, const Partition& mu, const JackParams& params) {
  if (lambda.length() > params.n || mu.length() > params.n)
    throw std::domain_error("thetadim_skew: partition longer than variable count");
  if (!contains(lambda, mu)) return Rational(0);
  Rational falling(1);
  for (int k = 0; k < mu.size(); ++k) falling *= Rational(lambda.size() - k);
  return thetadim_closed(lambda, params.theta) * shifted_eval(mu, lambda, params) / falling;
}

PieriMap pieri_shifted(const Partition& mu, const JackParams& params) {
  if (params.n < mu.length() + 1)
    throw std::domain_error("pieri_shifted: needs at least length(mu) + 1 variables");
  const int target = mu.size() + 1;
  PieriMap coeffs;  // all grades during interpolation; only grade |mu|+1 survives
  for (const Partition& lam : partitions_up_to(target, params.n)) {
    Rational value = (Rational(lam.size()) - Rational(mu.size())) * shifted_eval(mu, lam, params);
    for (const auto& [nu, c] : coeffs) {
      if (nu.size() >= lam.size()) break;  // same or higher grade cannot contribute at lam
      value -= c * shifted_eval(nu, lam, params);
    }
    if (value.is_zero()) continue;
    if (lam.size() < target)
      throw std::runtime_error("pieri_shifted: unexpected low-degree component at " + lam.str());
    coeffs.emplace(lam, value / hook_h(lam, params.theta));
  }
  return coeffs;
}

Rational thetadim_iterated_pieri(const Partition& lambda, const Partition& mu, const JackParams& params,
                                 const std::function<const PieriMap&(const Partition&)>& lookup) {
  if (lambda.size() < mu.size()) throw std::domain_error("thetadim_iterated_pieri: |lambda| < |mu|");
  if (!contains(lambda, mu)) return Rational(0);
  std::map<Partition, Rational, GradedLexLess> current;
  current.emplace(mu, Rational(1));
  for (int size = mu.size(); size < lambda.size(); ++size) {
    std::map<Partition, Rational, GradedLexLess> next;
    for (const auto& [nu, c] : current) {
      const PieriMap local = lookup ? PieriMap() : pieri_shifted(nu, JackParams(std::max(params.n, nu.length() + 1), params.theta));
      const PieriMap& step = lookup ? lookup(nu) : local;
      for (const auto& [kappa, w] : step) {
        if (!contains(lambda, kappa)) continue;  // boxes only get added, so stay inside lambda
        const auto [it, inserted] = next.emplace(kappa, c * w);
        if (!inserted) it->second += c * w;
      }
    }
    current = std::move(next);
  }
  const auto it = current.find(lambda);
  return it == current.end() ? Rational(0) : it->second;
}

ThetaDim thetadim(const Partition& lambda, const Partition& mu, const Rational& theta) {
  const JackParams params(std::max({lambda.length(), mu.length(), 1}), theta);
  return ThetaDim{lambda, mu, theta, thetadim_skew(lambda, mu, params)};
}

}  // namespace jackpoly
