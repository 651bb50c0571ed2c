#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jackpoly {

// Arbitrary-precision rational, always kept canonical (denominator > 0,
// numerator and denominator coprime).  Thin value type over GMP.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(int n) : v_(n) {}
  Rational(long num, long den) : v_(static_cast<signed long>(num), static_cast<signed long>(den)) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "p/q", a plain integer "p", or a decimal like "-3.25" / "0.2".
  static Rational parse(std::string_view s);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  // Integer exponent; negative exponents invert (zero base then rejected).
  Rational pow(long e) const;

  // "p" for integers, "p/q" otherwise.
  std::string str() const;

  double to_double() const { return v_.get_d(); }
  long double to_long_double() const { return to_float<long double>(); }

  // Conversion to any binary float type (long double, __float128) built from
  // 64-bit limbs.  Both halves of the fraction are pre-shifted down together
  // when huge so that finite/finite never degrades to inf/inf.
  template <class F>
  F to_float() const {
    mpz_class num = v_.get_num(), den = v_.get_den();
    const int sign_n = sgn(num);
    if (sign_n == 0) return F(0);
    if (sign_n < 0) num = -num;
    std::size_t bn = mpz_sizeinbase(num.get_mpz_t(), 2);
    std::size_t bd = mpz_sizeinbase(den.get_mpz_t(), 2);
    if (std::max(bn, bd) > 8192 && std::min(bn, bd) > 256) {
      const unsigned long k = static_cast<unsigned long>(std::min(bn, bd) - 256);
      mpz_tdiv_q_2exp(num.get_mpz_t(), num.get_mpz_t(), k);
      mpz_tdiv_q_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
    }
    const F r = mpz_to_float<F>(num) / mpz_to_float<F>(den);
    return sign_n < 0 ? -r : r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  template <class F>
  static F mpz_to_float(const mpz_class& z) {
    static_assert(GMP_NUMB_BITS == 64, "limb loop assumes 64-bit limbs");
    const std::size_t limbs = mpz_size(z.get_mpz_t());
    F acc = 0;
    const F radix = F(18446744073709551616.0L);  // 2^64, exact in any binary float
    for (std::size_t i = limbs; i-- > 0;) acc = acc * radix + F(mpz_getlimbn(z.get_mpz_t(), i));
    return acc;
  }

  mpq_class v_;
};

}  // namespace jackpoly
