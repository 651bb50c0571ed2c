#include "jackpoly/multipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace jackpoly {

MultiPoly::MultiPoly(int n) : n_(n) {
  if (n < 0) throw std::domain_error("MultiPoly: negative variable count");
}

MultiPoly MultiPoly::constant(int n, const Rational& c) {
  MultiPoly p(n);
  p.add_term(Exponents(n, 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(int n, Exponents e, const Rational& c) {
  MultiPoly p(n);
  if (static_cast<int>(e.size()) != n) throw std::domain_error("MultiPoly::monomial: exponent size mismatch");
  for (int k : e)
    if (k < 0) throw std::domain_error("MultiPoly::monomial: negative exponent");
  p.add_term(std::move(e), c);
  return p;
}

MultiPoly MultiPoly::variable(int n, int i) {
  MultiPoly p(n);
  p.check_var_index(i);
  Exponents e(n, 0);
  e[i - 1] = 1;
  p.add_term(std::move(e), Rational(1));
  return p;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // Under the graded order the last term carries the maximal degree.
  const Exponents& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

Rational MultiPoly::coeff(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(Exponents e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_) throw std::domain_error("MultiPoly::add_term: exponent size mismatch");
  if (c.is_zero()) return;
  const auto [it, inserted] = terms_.emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(n_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_vars(b);
  MultiPoly r(a.n_);
  Exponents e(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::mul_power(int i, int k) const {
  check_var_index(i);
  if (k < 0) throw std::domain_error("MultiPoly::mul_power: negative power");
  MultiPoly r(n_);
  for (const auto& [e, c] : terms_) {
    Exponents e2 = e;
    e2[i - 1] += k;
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

MultiPoly MultiPoly::euler_derivative(int i) const {
  check_var_index(i);
  MultiPoly r(n_);
  for (const auto& [e, c] : terms_)
    if (e[i - 1] != 0) r.terms_.emplace(e, c * Rational(e[i - 1]));
  return r;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly r(n_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_.emplace(e, c);
  return r;
}

MultiPoly MultiPoly::swap_vars(int i, int j) const {
  check_var_index(i);
  check_var_index(j);
  MultiPoly r(n_);
  for (const auto& [e, c] : terms_) {
    Exponents e2 = e;
    std::swap(e2[i - 1], e2[j - 1]);
    r.add_term(std::move(e2), c);
  }
  return r;
}

MultiPoly MultiPoly::shift_all(const Rational& c) const {
  std::vector<Rational> cs(n_, c);
  return shift_vars(cs);
}

MultiPoly MultiPoly::shift_vars(std::span<const Rational> c) const {
  check_point_size(c.size());
  // Substitute one variable at a time: x_i^k -> sum_j C(k,j) c_i^{k-j} x_i^j.
  MultiPoly cur = *this;
  for (int i = 0; i < n_; ++i) {
    if (c[i].is_zero()) continue;
    MultiPoly next(n_);
    std::vector<Rational> cpow = {Rational(1)};
    for (const auto& [e, coef] : cur.terms_) {
      const int k = e[i];
      while (static_cast<int>(cpow.size()) <= k) cpow.push_back(cpow.back() * c[i]);
      Rational binom(1);
      Exponents e2 = e;
      for (int j = k; j >= 0; --j) {
        e2[i] = j;
        next.add_term(e2, coef * binom * cpow[k - j]);
        if (j > 0) binom = binom * Rational(j) / Rational(k - j + 1);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

MultiPoly MultiPoly::restrict_last_to_zero() const {
  if (n_ == 0) throw std::domain_error("MultiPoly::restrict_last_to_zero: no variables");
  MultiPoly r(n_ - 1);
  for (const auto& [e, c] : terms_)
    if (e[n_ - 1] == 0) r.terms_.emplace(Exponents(e.begin(), e.end() - 1), c);
  return r;
}

MultiPoly MultiPoly::lift(int new_n) const {
  if (new_n < n_) throw std::domain_error("MultiPoly::lift: cannot drop variables");
  MultiPoly r(new_n);
  for (const auto& [e, c] : terms_) {
    Exponents e2 = e;
    e2.resize(new_n, 0);
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

MultiPoly MultiPoly::divide_linear_difference(int i, int j) const {
  check_var_index(i);
  check_var_index(j);
  if (i == j) throw std::domain_error("MultiPoly::divide_linear_difference: equal variable indices");
  MultiPoly divisor = variable(n_, i) - variable(n_, j);
  // Standard monomial-order division; the divisor's leading term is a single
  // variable, so divisibility of the leading term is just a nonzero exponent.
  const Exponents& lead = divisor.terms_.rbegin()->first;
  const Rational lead_c = divisor.terms_.rbegin()->second;
  int lead_var = 0;
  while (lead[lead_var] == 0) ++lead_var;

  MultiPoly quotient(n_), remainder = *this;
  while (!remainder.terms_.empty()) {
    const auto& [e, c] = *remainder.terms_.rbegin();
    if (e[lead_var] == 0)
      throw std::runtime_error("MultiPoly::divide_linear_difference: not divisible by x" +
                               std::to_string(i) + " - x" + std::to_string(j));
    Exponents q = e;
    q[lead_var] -= 1;
    const Rational qc = c / lead_c;
    quotient.add_term(q, qc);
    remainder -= divisor * MultiPoly::monomial(n_, std::move(q), qc);
  }
  return quotient;
}

bool MultiPoly::is_symmetric() const {
  for (int i = 1; i < n_; ++i)
    if (!(swap_vars(i, i + 1) == *this)) return false;
  return true;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  check_point_size(point.size());
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < n_; ++i)
      if (e[i] != 0) term *= point[i].pow(e[i]);
    total += term;
  }
  return total;
}

void MultiPoly::check_point_size(std::size_t got) const {
  if (static_cast<int>(got) != n_)
    throw std::domain_error("MultiPoly: point has " + std::to_string(got) + " coordinates, expected " +
                            std::to_string(n_));
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
  if (n_ != o.n_) throw std::domain_error("MultiPoly: mixed variable counts");
}

void MultiPoly::check_var_index(int i) const {
  if (i < 1 || i > n_) throw std::domain_error("MultiPoly: variable index out of range");
}

MultiPoly vandermonde(int n) {
  MultiPoly v = MultiPoly::constant(n, Rational(1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) v *= MultiPoly::variable(n, i) - MultiPoly::variable(n, j);
  return v;
}

MultiPoly monomial_symmetric(const Partition& mu, int n) {
  MultiPoly r(n);
  if (mu.length() > n) return r;
  Exponents e(n, 0);
  for (int i = 0; i < mu.length(); ++i) e[i] = mu.part(i + 1);
  std::sort(e.begin(), e.end());
  do {
    r.add_term(e, Rational(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return r;
}

MultiPoly power_sum_one(int n) {
  MultiPoly r(n);
  for (int i = 1; i <= n; ++i) r += MultiPoly::variable(n, i);
  return r;
}

}  // namespace jackpoly
