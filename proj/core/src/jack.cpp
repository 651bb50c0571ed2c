#include "jackpoly/jack.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jackpoly {

JackParams::JackParams(int n_, Rational theta_) : n(n_), theta(std::move(theta_)) {
  if (n < 0) throw std::domain_error("JackParams: negative variable count");
  if (theta.sign() <= 0) throw std::domain_error("JackParams: theta must be positive");
}

Rational branching_weight(const Partition& lambda, const Partition& nu, const Rational& theta) {
  if (!interlaces(nu, lambda))
    throw std::domain_error("branching_weight: " + nu.str() + " does not interlace " + lambda.str());
  // Each Gamma-ratio pair telescopes over the row difference m_i = lambda_i - nu_i:
  //   prod_{k<m_i} (a+1+k)/(a+theta+k) * (d+theta+k)/(d+1+k)
  // with a = nu_i - lambda_{j+1} + theta (j-i), d = nu_i - nu_j + theta (j-i).
  Rational w(1);
  const int rows = std::max(lambda.length() - 1, nu.length());
  for (int i = 1; i <= nu.length() + 1 && i <= lambda.length(); ++i) {
    const int m = lambda.part(i) - nu.part(i);
    if (m == 0) continue;
    for (int j = i; j <= rows; ++j) {
      const Rational off = theta * Rational(j - i);
      const Rational a = Rational(nu.part(i) - lambda.part(j + 1)) + off;
      const Rational d = Rational(nu.part(i) - nu.part(j)) + off;
      if (a == d) continue;  // the pair of ratios cancels exactly
      for (int k = 0; k < m; ++k) {
        const Rational kk(k);
        w *= (a + Rational(1) + kk) / (a + theta + kk);
        w *= (d + theta + kk) / (d + Rational(1) + kk);
      }
    }
  }
  return w;
}

Rational tableau_weight(const ReverseTableau& t, const Rational& theta) {
  Rational w(1);
  Partition upper = t.shape();
  for (int level = 2; !upper.empty(); ++level) {
    const Partition lower = t.level_shape(level);
    w *= branching_weight(upper, lower, theta);
    upper = lower;
  }
  return w;
}

MultiPoly jack_combinatorial(const Partition& mu, const JackParams& params) {
  // More rows than variables: no tableau has entries in 1..n, so the sum is
  // empty and the polynomial is zero.
  MultiPoly p(params.n);
  for_each_reverse_tableau(mu, params.n, [&](const ReverseTableau& t) {
    Exponents e(params.n, 0);
    for (int i = 1; i <= mu.length(); ++i)
      for (int j = 1; j <= mu.part(i); ++j) ++e[t.entry(i, j) - 1];
    p.add_term(std::move(e), tableau_weight(t, params.theta));
  });
  return p;
}

MultiPoly jack_by_branching(const Partition& mu, const JackParams& params) {
  if (mu.length() > params.n) return MultiPoly(params.n);  // no admissible tableaux
  if (params.n == 0) return MultiPoly::constant(0, Rational(1));
  const JackParams inner(params.n - 1, params.theta);
  MultiPoly p(params.n);
  for_each_interlacing(mu, params.n, [&](const Partition& nu) {
    const MultiPoly part = jack_by_branching(nu, inner).lift(params.n).mul_power(params.n, mu.size() - nu.size());
    p += part * branching_weight(mu, nu, params.theta);
  });
  return p;
}

namespace {

// One determinant column factor: x_i^{pw} (x_i d/dx_i + c) applied to p.
MultiPoly column_factor(const MultiPoly& p, int i, int pw, const Rational& c) {
  MultiPoly r = p.euler_derivative(i);
  r += p * c;
  return r.mul_power(i, pw);
}

}  // namespace

MultiPoly sekiguchi_apply(const MultiPoly& p, const Rational& u, const Rational& theta) {
  const int n = p.var_count();
  if (n == 0) return p;  // empty determinant over an empty Vandermonde: identity
  // Determinant expanded over permutations; the factors for distinct rows act
  // on disjoint variables and commute.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  MultiPoly det(n);
  do {
    // sign of the permutation
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    MultiPoly term = p;
    for (int i = 1; i <= n; ++i) {
      const int j = perm[i - 1];  // column assigned to row i
      term = column_factor(term, i, n - j, theta * Rational(n - j) + u);
    }
    if (inversions % 2) term *= Rational(-1);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Divide by the Vandermonde one linear factor at a time.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) det = det.divide_linear_difference(i, j);
  return det;
}

Rational sekiguchi_eigenvalue(const Partition& mu, int n, const Rational& theta, const Rational& u) {
  if (mu.length() > n) throw std::domain_error("sekiguchi_eigenvalue: partition longer than variable count");
  Rational v(1);
  for (int i = 1; i <= n; ++i) v *= Rational(mu.part(i)) + theta * Rational(n - i) + u;
  return v;
}

Rational jack_principal(const Partition& mu, const JackParams& params) {
  if (mu.length() > params.n) return Rational(0);
  return pochhammer(params.theta * Rational(params.n), mu, params.theta) / hook_hprime(mu, params.theta);
}

long double jack_principal_log_gamma(const Partition& lambda, int n, long double theta) {
  if (lambda.length() > n) throw std::domain_error("jack_principal_log_gamma: partition longer than variable count");
  long double log_p = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const long double t = (long double)(lambda.part(i) - lambda.part(j)) + theta * (j - i);
      log_p += lgammal(t + theta) - lgammal(t);
    }
    log_p += lgammal(theta) - lgammal(theta * i);
  }
  return log_p;
}

Rational q_ratio(const Partition& mu, const Rational& theta) {
  return hook_hprime(mu, theta) / hook_h(mu, theta);
}

MultiPoly q_normalize(const Partition& mu, const JackParams& params) {
  return jack_combinatorial(mu, params) * q_ratio(mu, params.theta);
}

LaurentJack jack_laurent(const std::vector<int>& lambda_signed, const JackParams& params) {
  std::vector<int> sig = lambda_signed;
  if (static_cast<int>(sig.size()) > params.n)
    throw std::domain_error("jack_laurent: signature longer than variable count");
  sig.resize(params.n, 0);
  for (std::size_t i = 1; i < sig.size(); ++i)
    if (sig[i] > sig[i - 1]) throw std::domain_error("jack_laurent: signature must be weakly decreasing");
  const int power = sig.empty() ? 0 : sig.back();
  for (int& s : sig) s -= power;
  return LaurentJack{power, jack_combinatorial(Partition(sig), params)};
}

const MultiPoly& JackTable::poly(const Partition& mu) {
  const auto it = cache_.find(mu);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(mu, jack_combinatorial(mu, params_)).first->second;
}

}  // namespace jackpoly
