#pragma once

#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"

namespace jackpoly {

// Exponent vector of a monomial; always of length n for a polynomial in n
// variables.
using Exponents = std::vector<int>;

// Graded lexicographic monomial order matching graded_lex_less on partitions:
// ascending total degree, then lexicographically descending exponents.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a > b;
  }
};

// Multivariate polynomial over Rational with a fixed number of variables.
// Terms are kept sorted by GrlexLess and never store a zero coefficient.
class MultiPoly {
public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  explicit MultiPoly(int n);
  static MultiPoly constant(int n, const Rational& c);
  static MultiPoly monomial(int n, Exponents e, const Rational& c);
  static MultiPoly variable(int n, int i);  // x_i, 1-based

  int var_count() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Exponents& e) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  void add_term(Exponents e, const Rational& c);

  MultiPoly mul_power(int i, int k) const;     // multiply by x_i^k, k >= 0
  MultiPoly euler_derivative(int i) const;     // x_i * d/dx_i
  MultiPoly homogeneous_part(int d) const;
  MultiPoly swap_vars(int i, int j) const;
  MultiPoly shift_all(const Rational& c) const;                 // x_i -> x_i + c
  MultiPoly shift_vars(std::span<const Rational> c) const;      // x_i -> x_i + c_i
  MultiPoly restrict_last_to_zero() const;     // set x_n = 0 and drop the variable
  MultiPoly lift(int new_n) const;             // embed into more variables (zero exponents appended)

  // Exact division by (x_i - x_j); throws std::runtime_error if not divisible.
  MultiPoly divide_linear_difference(int i, int j) const;

  bool is_symmetric() const;  // invariant under all adjacent transpositions

  Rational evaluate(std::span<const Rational> point) const;

  // Horner-free direct evaluation in a floating type (long double, __float128).
  template <class F>
  F evaluate_float(std::span<const F> point) const {
    check_point_size(point.size());
    F total = 0;
    for (const auto& [e, c] : terms_) {
      F term = c.template to_float<F>();
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < e[i]; ++k) term *= point[i];
      total += term;
    }
    return total;
  }

private:
  void check_point_size(std::size_t got) const;
  void check_same_vars(const MultiPoly& o) const;
  void check_var_index(int i) const;

  int n_;
  TermMap terms_;
};

// prod_{i<j} (x_i - x_j).
MultiPoly vandermonde(int n);

// Monomial symmetric polynomial m_mu in n variables (sum over distinct
// permutations of the exponent vector).  Zero when mu has more than n parts.
MultiPoly monomial_symmetric(const Partition& mu, int n);

// x_1 + ... + x_n.
MultiPoly power_sum_one(int n);

}  // namespace jackpoly
