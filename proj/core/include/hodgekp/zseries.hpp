#pragma once

#include <string>
#include <vector>

#include "hodgekp/rational.hpp"

namespace hodgekp {

// Truncated Laurent series sum_{k=lowest}^{order} c_k z^k + O(z^{order+1}).
class ZSeries {
 public:
  ZSeries() = default;
  explicit ZSeries(int order, int lowest = 0);

  // coeffs[i] is the coefficient of z^{lowest+i}; entries past order are dropped.
  static ZSeries from(std::vector<Rational> coeffs, int order, int lowest = 0);
  static ZSeries monomial(const Rational& c, int exponent, int order);
  static ZSeries constant(const Rational& c, int order) { return monomial(c, 0, order); }
  static ZSeries identity(int order) { return monomial(1, 1, order); }

  int order() const { return order_; }
  int lowest() const { return lowest_; }
  // First exponent with a nonzero coefficient, or order+1 for the zero series.
  int valuation() const;

  // Coefficient of z^k; zero below the stored range, error past the order.
  Rational operator[](int k) const;
  void set(int k, const Rational& c);

  ZSeries truncated(int order) const;
  ZSeries reflected() const;  // z -> -z
  ZSeries scaled(const Rational& c) const;
  ZSeries derivative() const;

  ZSeries& operator+=(const ZSeries& o);
  ZSeries& operator-=(const ZSeries& o);
  friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
  friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b);

 private:
  int order_ = 0;
  int lowest_ = 0;
  std::vector<Rational> c_;  // z^{lowest_} .. z^{order_}
};

// Equal coefficients for every exponent up to `order`.
bool equal_to_order(const ZSeries& a, const ZSeries& b, int order);

ZSeries recip(const ZSeries& a);    // a(0) != 0
ZSeries inverse(const ZSeries& a);  // Laurent inverse of a nonzero series
ZSeries pow(const ZSeries& a, int n);
ZSeries compose(const ZSeries& outer, const ZSeries& inner);
ZSeries reversion(const ZSeries& a);
ZSeries log1p(const ZSeries& a);
ZSeries expm(const ZSeries& a);
ZSeries sqrt_normalized(const ZSeries& a);
ZSeries antiderivative(const ZSeries& a);

std::string to_string(const ZSeries& a);

}  // namespace hodgekp
