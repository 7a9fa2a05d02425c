#include "copos/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace copos {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::string_view mant = text;
  long exp10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mant = text.substr(0, e);
    std::string_view ex = text.substr(e + 1);
    mpz_class ez = parse_integer(ex);
    if (!ez.fits_slong_p() || std::abs(ez.get_si()) > 100000)
      throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
    exp10 = ez.get_si();
  }
  bool neg = false;
  if (!mant.empty() && (mant[0] == '+' || mant[0] == '-')) {
    neg = mant[0] == '-';
    mant.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(mant)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    digits = std::string(mant);
  }
  mpz_class num(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exp10)));
  Rational q = exp10 >= 0 ? Rational(num * scale) : Rational(num, scale);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value cannot be made rational");
  return Rational(v);
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace copos
