#include "jackpoly/sym_expansion.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace jackpoly {

SymExpansion::SymExpansion(int n, SymBasis basis) : n_(n), basis_(basis) {
  if (n < 0) throw std::domain_error("SymExpansion: negative variable count");
}

Rational SymExpansion::coeff(const Partition& mu) const {
  const auto it = coeffs_.find(mu);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymExpansion::add_term(const Partition& mu, const Rational& c) {
  if (mu.length() > n_)
    throw std::domain_error("SymExpansion: partition " + mu.str() + " has more than " +
                            std::to_string(n_) + " parts");
  if (c.is_zero()) return;
  const auto [it, inserted] = coeffs_.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymExpansion& SymExpansion::operator+=(const SymExpansion& o) {
  if (n_ != o.n_ || basis_ != o.basis_)
    throw std::domain_error("SymExpansion: mixed bases or variable counts");
  for (const auto& [mu, c] : o.coeffs_) add_term(mu, c);
  return *this;
}

SymExpansion& SymExpansion::operator-=(const SymExpansion& o) {
  if (n_ != o.n_ || basis_ != o.basis_)
    throw std::domain_error("SymExpansion: mixed bases or variable counts");
  for (const auto& [mu, c] : o.coeffs_) add_term(mu, -c);
  return *this;
}

SymExpansion& SymExpansion::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [mu, v] : coeffs_) v *= c;
  return *this;
}

std::string SymExpansion::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["basis"] = basis_ == SymBasis::monomial ? "monomial" : "jack";
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [mu, c] : coeffs_) {
    nlohmann::ordered_json term;
    term["partition"] = mu.parts();
    term["coeff"] = c.str();
    j["terms"].push_back(std::move(term));
  }
  return j.dump();
}

SymExpansion SymExpansion::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("SymExpansion::from_json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("basis") || !j.contains("terms"))
    throw std::invalid_argument("SymExpansion::from_json: missing n/basis/terms");
  const std::string basis_name = j["basis"].get<std::string>();
  SymBasis basis;
  if (basis_name == "monomial")
    basis = SymBasis::monomial;
  else if (basis_name == "jack")
    basis = SymBasis::jack;
  else
    throw std::invalid_argument("SymExpansion::from_json: unknown basis '" + basis_name + "'");
  SymExpansion out(j["n"].get<int>(), basis);
  for (const auto& term : j["terms"]) {
    if (!term.contains("partition") || !term.contains("coeff"))
      throw std::invalid_argument("SymExpansion::from_json: malformed term");
    out.add_term(Partition(term["partition"].get<std::vector<int>>()),
                 Rational::parse(term["coeff"].get<std::string>()));
  }
  return out;
}

MultiPoly SymExpansion::to_multipoly() const {
  if (basis_ != SymBasis::monomial)
    throw std::domain_error("SymExpansion::to_multipoly: only the monomial basis expands directly");
  MultiPoly p(n_);
  for (const auto& [mu, c] : coeffs_) p += monomial_symmetric(mu, n_) * c;
  return p;
}

SymExpansion to_monomial_expansion(const MultiPoly& p) {
  const int n = p.var_count();
  for (int i = 1; i < n; ++i)
    if (!(p.swap_vars(i, i + 1) == p))
      throw std::domain_error("to_monomial_expansion: polynomial is not symmetric (swapping x" +
                              std::to_string(i) + " and x" + std::to_string(i + 1) + " changes it)");
  SymExpansion out(n, SymBasis::monomial);
  for (const auto& [e, c] : p.terms()) {
    Exponents sorted = e;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    if (sorted == e) out.add_term(Partition(sorted), c);
  }
  return out;
}

}  // namespace jackpoly
