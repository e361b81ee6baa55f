#include "hodgekp/rational.hpp"

#include <cctype>

#include "hodgekp/error.hpp"

namespace hodgekp {

Rational rat(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw Error("malformed rational '" + std::string(text) + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class zn(n), zd{std::string(den)};
  if (zd == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational r(zn, zd);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational double_factorial(int n) {
  if (n < -1) throw Error("double factorial of " + std::to_string(n));
  mpz_class acc = 1;
  for (int k = n; k > 1; k -= 2) acc *= k;
  return Rational(acc);
}

Rational factorial(int n) {
  if (n < 0) throw Error("factorial of negative integer");
  mpz_class acc;
  mpz_fac_ui(acc.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(acc);
}

Rational power(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error("zero to a negative power");
    Rational inv = 1 / base;
    return power(inv, -exponent);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

}  // namespace hodgekp
