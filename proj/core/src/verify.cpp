#include "jackpoly/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <utility>

#include "jackpoly/bessel.hpp"
#include "jackpoly/binomial.hpp"
#include "jackpoly/integral.hpp"
#include "jackpoly/jack.hpp"
#include "jackpoly/multipoly.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/shifted.hpp"
#include "jackpoly/thetadim.hpp"

namespace jackpoly {

namespace {

void record(CheckResult& r, bool ok, const std::string& detail) {
  ++r.cases;
  if (!ok && r.pass) {
    r.pass = false;
    r.detail = detail;
  }
}

std::string case_tag(const char* label, const Partition& p, int n, const Rational& theta) {
  return std::string(label) + "=(" + p.str() + ") n=" + std::to_string(n) +
         " theta=" + theta.str();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string vec_str(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += fmt(v[i]);
  }
  return out + "]";
}

}  // namespace

CheckResult check_sekiguchi_eigenvalue(int max_size, int max_n, const std::vector<Rational>& thetas) {
  CheckResult result{.name = "sekiguchi_eigenvalue"};
  for (int n = 1; n <= max_n; ++n)
    for (const Rational& theta : thetas) {
      const JackParams params(n, theta);
      for (const Partition& mu : partitions_up_to(max_size, n)) {
        const MultiPoly p = jack_combinatorial(mu, params);
        for (const Rational& u : {Rational(0), Rational(1), -theta}) {
          const bool ok = sekiguchi_apply(p, u, theta) == p * sekiguchi_eigenvalue(mu, n, theta, u);
          record(result, ok, case_tag("mu", mu, n, theta) + " u=" + u.str());
        }
      }
    }
  return result;
}

CheckResult check_principal_specialization(int max_size, int max_n,
                                           const std::vector<Rational>& thetas, long double rel_tol) {
  CheckResult result{.name = "principal_specialization"};
  for (int n = 1; n <= max_n; ++n)
    for (const Rational& theta : thetas) {
      const JackParams params(n, theta);
      const std::vector<Rational> ones(n, Rational(1));
      for (const Partition& mu : partitions_up_to(max_size, n)) {
        const Rational closed = jack_principal(mu, params);
        record(result, jack_combinatorial(mu, params).evaluate(ones) == closed,
               case_tag("mu", mu, n, theta));
        const long double exact = closed.to_long_double();
        const long double via_gamma = std::exp(jack_principal_log_gamma(mu, n, theta.to_long_double()));
        record(result, std::fabs(via_gamma - exact) <= rel_tol * exact,
               case_tag("mu", mu, n, theta) + " gamma-product form");
      }
    }
  return result;
}

CheckResult check_cross_implementation(int max_size, int max_n, const std::vector<Rational>& thetas) {
  CheckResult result{.name = "combinatorial_vs_branching"};
  for (int n = 1; n <= max_n; ++n)
    for (const Rational& theta : thetas) {
      const JackParams params(n, theta);
      for (const Partition& mu : partitions_up_to(max_size, n))
        record(result, jack_combinatorial(mu, params) == jack_by_branching(mu, params),
               case_tag("mu", mu, n, theta));
    }
  return result;
}

CheckResult check_binomial_theorem(int max_size, int max_n, const std::vector<Rational>& thetas) {
  CheckResult result{.name = "binomial_formula"};
  for (int n = 1; n <= max_n; ++n)
    for (const Rational& theta : thetas) {
      const JackParams params(n, theta);
      for (const Partition& lambda : partitions_up_to(max_size, n))
        record(result, verify_binomial(lambda, params).equal, case_tag("lambda", lambda, n, theta));
    }
  return result;
}

CheckResult check_interpolation_vanishing(int max_mu, int max_lambda,
                                          const std::vector<Rational>& thetas) {
  CheckResult result{.name = "interpolation_vanishing"};
  const std::vector<Partition> mus = partitions_up_to(max_mu, max_mu);
  const std::vector<Partition> lambdas = partitions_up_to(max_lambda, max_lambda);
  for (const Rational& theta : thetas)
    for (const Partition& mu : mus)
      for (const Partition& lambda : lambdas) {
        const int n = std::max({mu.length(), lambda.length(), 1});
        const Rational value = shifted_eval(mu, lambda, JackParams(n, theta));
        if (lambda == mu)
          record(result, value == hook_h(mu, theta),
                 case_tag("mu", mu, n, theta) + " normalization at lambda=mu");
        else if (!contains(lambda, mu))
          record(result, value.is_zero(),
                 case_tag("mu", mu, n, theta) + " vanishing at lambda=(" + lambda.str() + ")");
      }
  return result;
}

CheckResult check_top_term(int max_size, int max_n, const std::vector<Rational>& thetas) {
  CheckResult result{.name = "shifted_top_term"};
  for (int n = 1; n <= max_n; ++n)
    for (const Rational& theta : thetas) {
      const JackParams params(n, theta);
      for (const Partition& mu : partitions_up_to(max_size, n)) {
        const MultiPoly star = shifted_jack(mu, params);
        record(result, star.homogeneous_part(mu.size()) == jack_combinatorial(mu, params),
               case_tag("mu", mu, n, theta) + " top term");
        record(result, is_shifted_symmetric(star, theta),
               case_tag("mu", mu, n, theta) + " shifted symmetry");
      }
    }
  return result;
}

CheckResult check_thetadim_three_way(int max_lambda, const std::vector<Rational>& thetas) {
  CheckResult result{.name = "thetadim_three_routes"};
  const std::vector<Partition> all = partitions_up_to(max_lambda, max_lambda);
  for (const Rational& theta : thetas) {
    JackTable table(JackParams(max_lambda, theta));
    // Pieri maps do not depend on the variable count; build each once at its
    // minimal n and share them across all (lambda, mu) pairs.
    std::map<Partition, PieriMap, GradedLexLess> pieri;
    for (const Partition& nu : all)
      if (nu.size() < max_lambda)
        pieri.emplace(nu, pieri_shifted(nu, JackParams(nu.length() + 1, theta)));
    const auto lookup = [&pieri](const Partition& nu) -> const PieriMap& { return pieri.at(nu); };
    for (const Partition& lambda : all) {
      const JackParams params(std::max(lambda.length(), 1), theta);
      Rational factorial(1);
      for (int k = 2; k <= lambda.size(); ++k) factorial *= Rational(k);
      record(result,
             thetadim_closed(lambda, theta) * shifted_eval(lambda, lambda, params) == factorial,
             case_tag("lambda", lambda, params.n, theta) + " factorial identity");
      for (const Partition& mu : all) {
        if (!contains(lambda, mu)) continue;
        const Rational r1 = thetadim_by_expansion(lambda, mu, table);
        const Rational r2 = thetadim_skew(lambda, mu, params);
        const Rational r3 = thetadim_iterated_pieri(lambda, mu, params, lookup);
        record(result, r1 == r2 && r2 == r3,
               case_tag("lambda", lambda, params.n, theta) + " mu=(" + mu.str() + ")");
      }
    }
  }
  return result;
}

CheckResult check_discrete_identity(int max_mu, int max_lambda, int max_n,
                                    const std::vector<Rational>& thetas) {
  CheckResult result{.name = "discrete_summation_identity"};
  for (int n = 2; n <= max_n; ++n)
    for (const Rational& theta : thetas) {
      const JackParams params(n, theta);
      for (const Partition& mu : partitions_up_to(max_mu, n - 1))
        for (const Partition& lambda : partitions_up_to(max_lambda, n))
          record(result, verify_discrete_identity(mu, lambda, params),
                 case_tag("mu", mu, n, theta) + " lambda=(" + lambda.str() + ")");
    }
  return result;
}

CheckResult check_integral_integer_theta(double rel_tol) {
  CheckResult result{.name = "integral_integer_theta"};
  QuadratureSpec spec;
  spec.nodes_per_dim = 12;
  spec.rule = QuadRule::gauss_legendre;
  for (long t : {1L, 2L, 3L}) {
    const Rational theta(t);
    for (int n = 2; n <= 3; ++n)
      for (const Partition& mu : partitions_up_to(3, n - 1))
        // Strictly decreasing integer lambda = delta + (n-1, ..., 1, 0).
        for (const Partition& delta : partitions_up_to(6 - n * (n - 1) / 2, n)) {
          std::vector<double> lambda(n);
          for (int i = 1; i <= n; ++i) lambda[i - 1] = delta.part(i) + (n - i);
          const IntegralCheck check = verify_integral(mu, lambda, theta, spec);
          record(result, check.rel_err <= rel_tol,
                 case_tag("mu", mu, n, theta) + " lambda=" + vec_str(lambda) +
                     " rel_err=" + fmt(check.rel_err));
        }
  }
  return result;
}

CheckResult check_integral_fractional_convergence() {
  CheckResult result{.name = "integral_fractional_convergence"};
  const std::vector<double> lambda{3.0, 1.5, 0.0};
  const Partition mu(std::vector<int>{1});
  for (const Rational& theta : {Rational(1, 2), Rational(3, 2)}) {
    QuadratureSpec spec;
    spec.rule = QuadRule::gauss_jacobi;
    spec.jacobi_exponent = theta.to_double() - 1;
    bool halves = true;
    double prev = 0;
    std::string trace;
    for (int nodes : {8, 16, 32}) {
      spec.nodes_per_dim = nodes;
      const double err = verify_integral(mu, lambda, theta, spec).rel_err;
      if (!trace.empty() && err > prev / 2) halves = false;
      trace += (trace.empty() ? "" : " -> ") + fmt(err);
      prev = err;
    }
    record(result, halves,
           "theta=" + theta.str() + " lambda=" + vec_str(lambda) + " rel_err " + trace);
  }
  return result;
}

CheckResult check_bessel_battery() {
  CheckResult result{.name = "bessel_series"};
  // One variable: every theta gives F(l, x; theta) = exp(l x).
  for (const Rational& theta : {Rational(1, 2), Rational(1)})
    for (const auto& [l1, x1] :
         {std::pair{1.5, 0.8}, std::pair{2.0, 1.0}, std::pair{0.5, 3.0}}) {
      const std::vector<double> l{l1}, x{x1};
      const long double value = bessel_series(l, x, theta, 30).value;
      const long double ref = std::exp(static_cast<long double>(l1) * x1);
      record(result, std::fabs(value - ref) <= 1e-10L * ref,
             "exp comparison l=" + vec_str(l) + " x=" + vec_str(x) + " theta=" + theta.str());
    }
  // Symmetry of the truncated series under l <-> x (vectors of norm <= 1).
  {
    const std::vector<double> l{0.8, 0.5}, x{0.7, 0.3};
    for (const Rational& theta : {Rational(1, 2), Rational(2)})
      record(result, bessel_symmetry_gap(l, x, theta, 16) < 1e-8L,
             "symmetry gap l=" + vec_str(l) + " x=" + vec_str(x) + " theta=" + theta.str());
    const std::vector<double> l3{0.5, 0.4, 0.3}, x3{0.4, 0.2, 0.1};
    record(result, bessel_symmetry_gap(l3, x3, Rational(1, 2), 10) < 1e-8L,
           "symmetry gap l=" + vec_str(l3) + " x=" + vec_str(x3) + " theta=1/2");
  }
  // The exact finite-kappa quotient approaches the series as kappa grows.
  {
    const std::vector<double> l{2.0, 1.0}, x{0.2, 0.1};
    long double prev = 0;
    bool decreasing = true;
    std::string trace;
    for (long kappa : {5L, 20L, 80L}) {
      const long double dist = bessel_limit_probe(l, x, Rational(1, 2), kappa, 30);
      if (!trace.empty() && dist >= prev) decreasing = false;
      trace += (trace.empty() ? "" : " -> ") + fmt(static_cast<double>(dist));
      prev = dist;
    }
    record(result, decreasing, "quotient distance theta=1/2 " + trace);
  }
  return result;
}

std::vector<CheckResult> run_verification_suite(int max_size) {
  if (max_size < 1) throw std::domain_error("run_verification_suite: max_size must be positive");
  const std::vector<Rational> thetas{Rational(1, 2), Rational(1), Rational(2)};
  const int max_n = std::min(max_size, 3);
  std::vector<CheckResult> results;
  results.push_back(check_sekiguchi_eigenvalue(max_size, max_n, thetas));
  results.push_back(check_principal_specialization(max_size, max_n, thetas, 1e-10L));
  results.push_back(check_cross_implementation(max_size, max_n, thetas));
  results.push_back(check_binomial_theorem(max_size, max_n, thetas));
  results.push_back(check_interpolation_vanishing(std::max(max_size - 1, 1), max_size, thetas));
  results.push_back(check_top_term(max_size, max_n, thetas));
  results.push_back(check_thetadim_three_way(max_size, thetas));
  results.push_back(check_discrete_identity(std::min(max_size, 3), max_size, max_n, thetas));
  results.push_back(check_integral_integer_theta(1e-9));
  results.push_back(check_integral_fractional_convergence());
  results.push_back(check_bessel_battery());
  return results;
}

}  // namespace jackpoly
