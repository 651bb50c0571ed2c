#pragma once

#include <map>
#include <string>

#include "jackpoly/multipoly.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/rational.hpp"

namespace jackpoly {

enum class SymBasis { monomial, jack };

// A symmetric polynomial in n variables presented as a linear combination of
// basis elements (monomial symmetric m_mu or Jack P_mu) indexed by partitions
// with at most n parts.  Zero coefficients are never stored; iteration is in
// graded-lex order.
class SymExpansion {
public:
  using CoeffMap = std::map<Partition, Rational, GradedLexLess>;

  SymExpansion(int n, SymBasis basis);

  int var_count() const { return n_; }
  SymBasis basis() const { return basis_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  Rational coeff(const Partition& mu) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(const Partition& mu, const Rational& c);

  SymExpansion& operator+=(const SymExpansion& o);
  SymExpansion& operator-=(const SymExpansion& o);
  SymExpansion& operator*=(const Rational& c);
  friend bool operator==(const SymExpansion& a, const SymExpansion& b) = default;

  // Canonical JSON: {"n": ..., "basis": ..., "terms": [{"partition": [...],
  // "coeff": "p/q"}, ...]} with terms in graded-lex order.
  std::string to_json() const;
  static SymExpansion from_json(const std::string& text);

  // Expand a monomial-basis combination back into a raw polynomial.
  MultiPoly to_multipoly() const;

private:
  int n_;
  SymBasis basis_;
  CoeffMap coeffs_;
};

// Collect a symmetric polynomial into the monomial basis.  Throws
// std::domain_error naming a violating transposition if p is not symmetric.
SymExpansion to_monomial_expansion(const MultiPoly& p);

}  // namespace jackpoly
