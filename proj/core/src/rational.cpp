#include "jackpoly/rational.hpp"

#include <cctype>

namespace jackpoly {

namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view s) {
  const std::string input(s);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
      throw std::invalid_argument("Rational::parse: malformed fraction '" + input + "'");
    int sign = 1;
    for (auto* part : {&num, &den})
      if (part->front() == '+' || part->front() == '-') {
        if (part->front() == '-') sign = -sign;
        part->remove_prefix(1);
      }
    mpq_class v(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
    if (v.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator in '" + input + "'");
    v.canonicalize();
    if (sign < 0) v = -v;
    return Rational(v);
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool neg = false;
    if (!whole.empty() && (whole.front() == '+' || whole.front() == '-')) {
      neg = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !valid_integer_token(whole)) ||
        (!frac.empty() && !valid_integer_token(frac)))
      throw std::invalid_argument("Rational::parse: malformed decimal '" + input + "'");
    mpz_class digits(std::string(whole) + std::string(frac), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpq_class v(digits, scale);
    v.canonicalize();
    if (neg) v = -v;
    return Rational(v);
  }

  if (!valid_integer_token(s)) throw std::invalid_argument("Rational::parse: malformed number '" + input + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Rational(mpq_class(mpz_class(std::string(s), 10)));
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rational::pow: zero to a negative power");
    return Rational(0);
  }
  mpq_class base = e < 0 ? mpq_class(1 / v_) : v_;
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
  return Rational(r);  // base canonical => powers stay coprime
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace jackpoly
