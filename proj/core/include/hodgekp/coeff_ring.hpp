#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hodgekp/rational.hpp"

namespace hodgekp {

// Laurent polynomial in hbar with rational coefficients.
class CoeffRing {
 public:
  using Term = std::pair<int, Rational>;  // (hbar exponent, coefficient)

  CoeffRing() = default;
  CoeffRing(const Rational& c, int exponent = 0);  // NOLINT(implicit)
  CoeffRing(long c) : CoeffRing(Rational(c)) {}    // NOLINT(implicit)

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  Rational coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  void add(int exponent, const Rational& c);
  CoeffRing& operator+=(const CoeffRing& o);
  CoeffRing& operator-=(const CoeffRing& o);
  CoeffRing& operator*=(const Rational& c);
  CoeffRing operator-() const;

  // Multiply by hbar^shift.
  CoeffRing shifted(int shift) const;
  Rational evaluate(const Rational& hbar) const;

  friend CoeffRing operator+(CoeffRing a, const CoeffRing& b) { return a += b; }
  friend CoeffRing operator-(CoeffRing a, const CoeffRing& b) { return a -= b; }
  friend CoeffRing operator*(const CoeffRing& a, const CoeffRing& b);
  friend CoeffRing operator*(CoeffRing a, const Rational& c) { return a *= c; }
  friend CoeffRing operator*(const Rational& c, CoeffRing a) { return a *= c; }
  friend bool operator==(const CoeffRing& a, const CoeffRing& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
};

std::string to_string(const CoeffRing& c);

}  // namespace hodgekp
