#include "scalar.hpp"

#include <cctype>

#include "error.hpp"

namespace apc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) fail(ErrorCode::malformed_input, "empty rational literal");

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    fail(ErrorCode::malformed_input, "bad rational literal: '" + std::string(text) + "'");

  Rational r(std::string(num) + "/" + std::string(den));
  if (r.get_den() == 0) fail(ErrorCode::malformed_input, "zero denominator in rational literal");
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer binomial_signed(long long n, unsigned long k) {
  Integer nz(static_cast<long>(n));
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), nz.get_mpz_t(), k);
  return r;
}

Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational r(re * o.re - im * o.im);
  Rational i(re * o.im + im * o.re);
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) fail(ErrorCode::invalid_argument, "scalar division by zero");
  Rational norm(o.re * o.re + o.im * o.im);
  Rational r((re * o.re + im * o.im) / norm);
  Rational i((im * o.re - re * o.im) / norm);
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string to_string(const Scalar& s) {
  if (s.im == 0) return rational_to_string(s.re);
  std::string out = rational_to_string(s.re);
  if (s.im < 0) {
    out += "-" + rational_to_string(Rational(-s.im));
  } else {
    out += "+" + rational_to_string(s.im);
  }
  out += " i";
  return out;
}

Scalar scalar_from_string(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) fail(ErrorCode::malformed_input, "empty scalar literal");

  if (s.back() != 'i') return Scalar(rational_from_string(s));

  s.remove_suffix(1);
  s = trim(s);
  if (s.empty()) fail(ErrorCode::malformed_input, "bare 'i' is not a canonical scalar");

  // Split at the sign that separates the real and imaginary parts: the last
  // '+'/'-' preceded by a digit.
  std::size_t split = std::string_view::npos;
  for (std::size_t pos = s.size(); pos-- > 1;) {
    if ((s[pos] == '+' || s[pos] == '-') &&
        std::isdigit(static_cast<unsigned char>(s[pos - 1]))) {
      split = pos;
      break;
    }
  }
  if (split == std::string_view::npos) {
    // Purely imaginary literal such as "3/4 i".
    return Scalar(Rational(0), rational_from_string(s));
  }
  Rational re = rational_from_string(s.substr(0, split));
  Rational im = rational_from_string(s.substr(split + 1));
  if (s[split] == '-') im = -im;
  return Scalar(std::move(re), std::move(im));
}

}  // namespace apc
