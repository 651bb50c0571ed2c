#include "jackpoly/integral.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

#include "jackpoly/shifted.hpp"

namespace jackpoly {

namespace {

qfloat log_beta(qfloat a, qfloat b) { return lgammaq(a) + lgammaq(b) - lgammaq(a + b); }

void check_strictly_decreasing(std::span<const qfloat> lambda) {
  for (std::size_t i = 1; i < lambda.size(); ++i) {
    if (lambda[i] == lambda[i - 1])
      throw std::domain_error("integral: repeated lambda entries collapse the interlacing box");
    if (lambda[i] > lambda[i - 1]) throw std::domain_error("integral: lambda must be strictly decreasing");
  }
}

// One kernel factor base^(theta-1) with the shared boundary policy.
qfloat kernel_factor(qfloat base, qfloat theta) {
  if (base < 0) throw std::domain_error("interlacing_kernel: nu outside the interlacing box");
  if (base == 0) {
    if (theta < 1) throw std::range_error("interlacing_kernel: infinite at the box boundary for theta < 1");
    return theta == 1 ? qfloat(1) : qfloat(0);
  }
  return powq(base, theta - 1);
}

}  // namespace

qfloat beta_product_c(const Partition& mu, int n, qfloat theta) {
  if (theta <= 0) throw std::domain_error("beta_product_c: theta must be positive");
  if (mu.length() >= n) throw std::domain_error("beta_product_c: mu must have fewer than n parts");
  qfloat log_c = 0;
  for (int i = 1; i <= n - 1; ++i) log_c += log_beta(mu.part(i) + (n - i) * theta, theta);
  return expq(log_c);
}

qfloat interlacing_kernel(std::span<const qfloat> lambda, std::span<const qfloat> nu, qfloat theta) {
  if (nu.size() + 1 != lambda.size())
    throw std::domain_error("interlacing_kernel: nu must have one entry fewer than lambda");
  check_strictly_decreasing(lambda);
  const int n = static_cast<int>(lambda.size());
  qfloat value = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - 1; ++j)
      value *= kernel_factor(i <= j ? lambda[i - 1] - nu[j - 1] : nu[j - 1] - lambda[i - 1], theta);
  return value;
}

IntegralCheck verify_integral(const Partition& mu, const std::vector<double>& lambda,
                              const Rational& theta, const QuadratureSpec& spec) {
  const int n = static_cast<int>(lambda.size());
  if (mu.length() >= n) throw std::domain_error("verify_integral: mu must have fewer than n parts");
  if (spec.nodes_per_dim < 1) throw std::domain_error("verify_integral: need at least one node per dimension");
  if (theta.sign() <= 0) throw std::domain_error("verify_integral: theta must be positive");

  const qfloat th = theta.to_float<qfloat>();
  std::vector<qfloat> lam(lambda.begin(), lambda.end());
  check_strictly_decreasing(lam);

  const bool jacobi = spec.rule == QuadRule::gauss_jacobi;
  if (jacobi && std::abs(spec.jacobi_exponent - (theta.to_double() - 1)) > 1e-9)
    throw std::domain_error("verify_integral: jacobi_exponent must equal theta - 1");

  const QuadratureRule rule = jacobi ? gauss_jacobi_rule(spec.nodes_per_dim, th - 1, th - 1)
                                     : gauss_legendre_rule(spec.nodes_per_dim);

  // Prefactor 1 / (C(mu,n) V(lambda)^{2 theta - 1}) and per-dimension affine
  // scale factors (half-length to the power 1 or 2(theta-1)+1 depending on
  // whether the endpoint weight is absorbed into the rule).
  qfloat log_scale = -logq(beta_product_c(mu, n, th));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) log_scale -= (2 * th - 1) * logq(lam[i - 1] - lam[j - 1]);
  for (int j = 1; j <= n - 1; ++j) {
    const qfloat half = (lam[j - 1] - lam[j]) / 2;
    log_scale += (jacobi ? 2 * (th - 1) + 1 : qfloat(1)) * logq(half);
  }

  const MultiPoly p_inner = jack_combinatorial(mu, JackParams(n - 1, theta));

  // Tensor-product sweep over the (n-1)-dimensional interlacing box.
  const int dims = n - 1;
  std::vector<int> index(dims, 0);
  std::vector<qfloat> nu(dims);
  qfloat total = 0;
  for (;;) {
    qfloat weight = 1;
    for (int j = 0; j < dims; ++j) {
      const qfloat mid = (lam[j] + lam[j + 1]) / 2, half = (lam[j] - lam[j + 1]) / 2;
      nu[j] = mid + half * rule.nodes[index[j]];
      weight *= rule.weights[index[j]];
    }
    qfloat integrand = p_inner.evaluate_float<qfloat>(nu);
    for (int i = 0; i < dims; ++i)
      for (int j = i + 1; j < dims; ++j) integrand *= nu[i] - nu[j];  // V(nu)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= dims; ++j) {
        if (jacobi && (i == j || i == j + 1)) continue;  // absorbed into the weight
        integrand *= kernel_factor(i <= j ? lam[i - 1] - nu[j - 1] : nu[j - 1] - lam[i - 1], th);
      }
    total += weight * integrand;

    int d = 0;
    while (d < dims && ++index[d] == spec.nodes_per_dim) index[d++] = 0;
    if (d == dims) break;
  }
  const qfloat rhs = total * expq(log_scale);

  const qfloat lhs = jack_combinatorial(mu, JackParams(n, theta)).evaluate_float<qfloat>(lam);
  const qfloat rel = fabsq(lhs - rhs) / fmaxq(qfloat(1), fabsq(lhs));

  IntegralCheck check;
  check.mu = mu;
  check.lambda = lambda;
  check.theta = theta;
  check.spec = spec;
  check.lhs = static_cast<double>(lhs);
  check.rhs = static_cast<double>(rhs);
  check.rel_err = static_cast<double>(rel);
  return check;
}

bool verify_discrete_identity(const Partition& mu, const Partition& lam, const JackParams& params) {
  const int n = params.n;
  if (mu.length() >= n) throw std::domain_error("verify_discrete_identity: mu must have fewer than n parts");
  if (lam.length() > n) throw std::domain_error("verify_discrete_identity: lambda has more than n parts");
  const JackParams inner(n - 1, params.theta);

  const Rational lhs = shifted_eval(mu, lam, params);
  Rational sum(0);
  for_each_interlacing(lam, n, [&](const Partition& nu) {
    sum += branching_weight(lam, nu, params.theta) * jack_principal(nu, inner) *
           shifted_eval(mu, nu, inner);
  });
  const Rational prefactor = pochhammer(params.theta * Rational(n), mu, params.theta) /
                             pochhammer(params.theta * Rational(n - 1), mu, params.theta);
  const Rational rhs = prefactor * sum / jack_principal(lam, params);
  return lhs == rhs;
}

std::string to_json(const IntegralCheck& check) {
  nlohmann::ordered_json j;
  j["mu"] = check.mu.parts();
  j["lambda"] = check.lambda;
  j["theta"] = check.theta.str();
  j["rule"] = check.spec.rule == QuadRule::gauss_jacobi ? "gauss_jacobi" : "gauss_legendre";
  j["nodes_per_dim"] = check.spec.nodes_per_dim;
  j["lhs"] = check.lhs;
  j["rhs"] = check.rhs;
  j["rel_err"] = check.rel_err;
  return j.dump();
}

}  // namespace jackpoly
