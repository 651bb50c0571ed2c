// Acceptance gate: ten criteria, one verdict line each, nonzero exit on any
// failure.  Every tolerance, range, and runtime budget is pinned below; the
// checks themselves live in the library's verification module so the CLI
// battery and this gate cannot drift apart.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <jackpoly/jack.hpp>
#include <jackpoly/partition.hpp>
#include <jackpoly/rational.hpp>
#include <jackpoly/thetadim.hpp>
#include <jackpoly/verify.hpp>

#include "oracles.hpp"

using namespace jackpoly;

namespace {

constexpr long double kPrincipalRelTol = 1e-10L;
constexpr double kIntegralRelTol = 1e-9;
constexpr double kSekiguchiBudgetSeconds = 120.0;
constexpr double kBinomialBudgetSeconds = 300.0;

int failures = 0;

void report(int number, const std::string& what, bool pass, long cases, const std::string& detail) {
  const std::string suffix = detail.empty() ? std::string() : "  [" + detail + "]";
  std::printf("%s criterion %2d: %s (%ld cases)%s\n", pass ? "PASS" : "FAIL", number, what.c_str(),
              cases, suffix.c_str());
  if (!pass) ++failures;
}

void report(int number, const std::string& what, const CheckResult& result) {
  report(number, what, result.pass, result.cases, result.detail);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Folds a runtime budget into a check: exceeding it fails the criterion even
// when every case passed.
void enforce_budget(CheckResult& result, double elapsed, double budget) {
  if (result.pass && elapsed > budget)
    result = {result.name, false, result.cases,
              "runtime " + std::to_string(elapsed) + " s exceeds " + std::to_string(budget) + " s"};
}

CheckResult merge(const CheckResult& a, const CheckResult& b) {
  CheckResult out;
  out.name = a.name + " + " + b.name;
  out.pass = a.pass && b.pass;
  out.cases = a.cases + b.cases;
  out.detail = !a.pass ? a.detail : (!b.pass ? b.detail : std::string());
  return out;
}

// Independent enumerator for the theta = 1 specialization: standard tableau
// counts of every skew shape inside |lambda| <= 6.
CheckResult standard_tableau_agreement() {
  CheckResult result{"standard_tableau_counts", true, 0, ""};
  for (const Partition& lambda : partitions_up_to(6, 6))
    for (const Partition& mu : subpartitions(lambda)) {
      ++result.cases;
      const Rational dim = thetadim(lambda, mu, Rational(1)).value;
      const long count = oracles::count_standard_tableaux(lambda, mu);
      if (dim != Rational(count)) {
        result.pass = false;
        result.detail = "lambda=" + lambda.str() + " mu=" + mu.str() + " dim=" + dim.str() +
                        " tableaux=" + std::to_string(count);
        return result;
      }
    }
  return result;
}

// Independent construction for the theta = 1 specialization of P_mu itself:
// the bialternant form of the Schur polynomial.
CheckResult schur_oracle_agreement() {
  CheckResult result{"schur_bialternant", true, 0, ""};
  for (int n = 1; n <= 4; ++n)
    for (const Partition& mu : partitions_up_to(5, n)) {
      ++result.cases;
      if (jack_combinatorial(mu, JackParams(n, Rational(1))) != oracles::schur_bialternant(mu, n)) {
        result.pass = false;
        result.detail = "mu=" + mu.str() + " n=" + std::to_string(n);
        return result;
      }
    }
  return result;
}

}  // namespace

int main() {
  const std::vector<Rational> wide = {Rational(1, 3), Rational(1, 2), Rational(1), Rational(2),
                                      Rational(5, 2)};
  const std::vector<Rational> narrow = {Rational(1, 3), Rational(1, 2), Rational(1), Rational(2)};
  const std::vector<Rational> core = {Rational(1, 2), Rational(1), Rational(2)};

  auto start = std::chrono::steady_clock::now();
  CheckResult sekiguchi = check_sekiguchi_eigenvalue(6, 4, wide);
  enforce_budget(sekiguchi, seconds_since(start), kSekiguchiBudgetSeconds);
  report(1, "Sekiguchi eigenvalue, exact, |mu|<=6 n<=4 five thetas", sekiguchi);

  report(2, "principal specialization, exact + log-Gamma to 1e-10",
         check_principal_specialization(6, 4, wide, kPrincipalRelTol));

  start = std::chrono::steady_clock::now();
  CheckResult binomial = check_binomial_theorem(5, 4, narrow);
  enforce_budget(binomial, seconds_since(start), kBinomialBudgetSeconds);
  report(3, "binomial formula, exact, |lambda|<=5 n<=4", binomial);

  report(4, "interpolation normalization and vanishing, exact, sizes <= 6",
         check_interpolation_vanishing(6, 6, core));

  report(5, "top term of shifted Jack equals Jack, exact, |mu|<=6 n<=4",
         check_top_term(6, 4, core));

  report(6, "theta-dimension three routes + standard tableau counts at theta=1",
         merge(check_thetadim_three_way(6, core), standard_tableau_agreement()));

  report(7, "discrete interlacing identity, exact, |mu|<=3 |lambda|<=5 n<=3",
         check_discrete_identity(3, 5, 3, core));

  report(8, "integral representation: integer theta to 1e-9, fractional convergence",
         merge(check_integral_integer_theta(kIntegralRelTol), check_integral_fractional_convergence()));

  report(9, "Bessel series: exp collapse, symmetry, finite-kappa probe",
         check_bessel_battery());

  report(10, "cross-implementation: combinatorial vs branching vs Schur bialternant",
         merge(check_cross_implementation(6, 4, wide), schur_oracle_agreement()));

  if (failures > 0) {
    std::printf("%d of 10 criteria failed\n", failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
