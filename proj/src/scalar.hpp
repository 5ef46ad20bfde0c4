#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace apc {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical text form: lowest terms, positive denominator, "-" on the
// numerator only, denominator 1 omitted ("4", "-3/7").
std::string rational_to_string(const Rational& r);
Rational rational_from_string(std::string_view text);

Integer factorial(unsigned long n);

// Ordinary binomial coefficient, n >= 0.
Integer binomial(unsigned long n, unsigned long k);

// Generalized binomial C(n, k) = n(n-1)...(n-k+1)/k!, valid for negative n.
Integer binomial_signed(long long n, unsigned long k);

Integer int_pow(const Integer& base, unsigned long e);

// Exact Gaussian rational a + b*i, the computational model of the complex
// scalars. All arithmetic is exact; equality is exact equality of both
// components.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() : re(0), im(0) {}
  Scalar(int v) : re(v), im(0) {}                      // NOLINT(runtime/explicit)
  Scalar(long v) : re(v), im(0) {}                     // NOLINT(runtime/explicit)
  Scalar(const Rational& r) : re(r), im(0) {}          // NOLINT(runtime/explicit)
  Scalar(const Integer& z) : re(z), im(0) {}           // NOLINT(runtime/explicit)
  Scalar(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return Scalar(re, Rational(-im)); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(Rational(-a.re), Rational(-a.im)); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

// "a/b" for real values, "a/b+c/d i" (or "a/b-c/d i") otherwise.
std::string to_string(const Scalar& s);
Scalar scalar_from_string(std::string_view text);

}  // namespace apc
