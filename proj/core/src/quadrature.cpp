#include "jackpoly/quadrature.hpp"

#include <stdexcept>

namespace jackpoly {

namespace {

// Monic three-term recurrence pi_{k+1} = (t - a_k) pi_k - b_k pi_{k-1} for
// the Jacobi weight (1-t)^alpha (1+t)^beta on [-1, 1]; b_0 holds the total
// weight mass mu_0.
struct Recurrence {
  std::vector<qfloat> a, b;
};

Recurrence jacobi_recurrence(int count, qfloat alpha, qfloat beta) {
  Recurrence r;
  r.a.resize(count);
  r.b.resize(count);
  const qfloat apb = alpha + beta;
  r.a[0] = (beta - alpha) / (apb + 2);
  r.b[0] = expq((apb + 1) * logq(qfloat(2)) + lgammaq(alpha + 1) + lgammaq(beta + 1) - lgammaq(apb + 2));
  for (int k = 1; k < count; ++k) {
    const qfloat t = 2 * k + apb;
    r.a[k] = (beta * beta - alpha * alpha) / (t * (t + 2));
    if (k == 1)
      r.b[k] = 4 * (alpha + 1) * (beta + 1) / ((apb + 2) * (apb + 2) * (apb + 3));
    else
      r.b[k] = 4 * k * (k + alpha) * (k + beta) * (k + apb) / (t * t * (t + 1) * (t - 1));
  }
  return r;
}

// Value of the orthonormal polynomial of degree `count` at t; optionally the
// Christoffel sum of squares over degrees 0..count-1.  The recurrence table
// must hold coefficients up to index count.
qfloat orthonormal_top(const Recurrence& r, int count, qfloat t, qfloat* sum_sq) {
  qfloat prev = 0;
  qfloat cur = 1 / sqrtq(r.b[0]);
  qfloat sq = cur * cur;
  for (int k = 0; k < count; ++k) {
    const qfloat next =
        ((t - r.a[k]) * cur - (k > 0 ? sqrtq(r.b[k]) : qfloat(0)) * prev) / sqrtq(r.b[k + 1]);
    prev = cur;
    cur = next;
    if (k + 1 < count) sq += cur * cur;
  }
  if (sum_sq) *sum_sq = sq;
  return cur;
}

}  // namespace

QuadratureRule gauss_jacobi_rule(int count, qfloat alpha, qfloat beta) {
  if (count < 1) throw std::domain_error("gauss_jacobi_rule: need at least one node");
  if (alpha <= -1 || beta <= -1) throw std::domain_error("gauss_jacobi_rule: exponents must exceed -1");
  const Recurrence r = jacobi_recurrence(count + 1, alpha, beta);

  // Bracket the roots of the degree-count orthonormal polynomial on a
  // Chebyshev-spaced grid (roots cluster at the endpoints), then bisect.
  const int samples = 40 * count + 40;
  std::vector<qfloat> grid(samples + 1), values(samples + 1);
  for (int j = 0; j <= samples; ++j) {
    grid[j] = -cosq(M_PIq * j / samples);
    values[j] = orthonormal_top(r, count, grid[j], nullptr);
  }

  QuadratureRule rule;
  for (int j = 0; j < samples && static_cast<int>(rule.nodes.size()) < count; ++j) {
    if (values[j] == 0) {
      rule.nodes.push_back(grid[j]);
      continue;
    }
    if ((values[j] < 0) == (values[j + 1] < 0) || values[j + 1] == 0) continue;
    qfloat lo = grid[j], hi = grid[j + 1];
    qfloat flo = values[j];
    for (int iter = 0; iter < 140; ++iter) {
      const qfloat mid = (lo + hi) / 2;
      const qfloat fmid = orthonormal_top(r, count, mid, nullptr);
      if (fmid == 0) {
        lo = hi = mid;
        break;
      }
      if ((fmid < 0) == (flo < 0)) {
        lo = mid;
        flo = fmid;
      } else {
        hi = mid;
      }
    }
    rule.nodes.push_back((lo + hi) / 2);
  }
  if (static_cast<int>(rule.nodes.size()) != count)
    throw std::runtime_error("gauss_jacobi_rule: root bracketing lost a node");

  rule.weights.reserve(count);
  for (const qfloat x : rule.nodes) {
    qfloat sum_sq = 0;
    orthonormal_top(r, count, x, &sum_sq);
    rule.weights.push_back(1 / sum_sq);
  }
  return rule;
}

}  // namespace jackpoly
