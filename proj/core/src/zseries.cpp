#include "hodgekp/zseries.hpp"

#include <algorithm>

#include "hodgekp/error.hpp"

namespace hodgekp {

ZSeries::ZSeries(int order, int lowest) : order_(order), lowest_(lowest) {
  if (order >= lowest) c_.resize(static_cast<std::size_t>(order - lowest + 1));
}

ZSeries ZSeries::from(std::vector<Rational> coeffs, int order, int lowest) {
  ZSeries s(order, lowest);
  for (std::size_t i = 0; i < coeffs.size() && i < s.c_.size(); ++i) s.c_[i] = std::move(coeffs[i]);
  return s;
}

ZSeries ZSeries::monomial(const Rational& c, int exponent, int order) {
  ZSeries s(order, std::min(0, exponent));
  if (exponent <= order) s.set(exponent, c);
  return s;
}

int ZSeries::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return lowest_ + static_cast<int>(i);
  return order_ + 1;
}

Rational ZSeries::operator[](int k) const {
  if (k > order_) throw Error("coefficient z^" + std::to_string(k) + " beyond series order " + std::to_string(order_));
  if (k < lowest_) return 0;
  return c_[static_cast<std::size_t>(k - lowest_)];
}

void ZSeries::set(int k, const Rational& c) {
  if (k > order_) throw Error("cannot set z^" + std::to_string(k) + " beyond series order");
  if (k < lowest_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(lowest_ - k), Rational(0));
    lowest_ = k;
  }
  c_[static_cast<std::size_t>(k - lowest_)] = c;
}

ZSeries ZSeries::truncated(int order) const {
  if (order > order_) throw Error("cannot extend a series past its known order");
  ZSeries s(order, lowest_);
  for (int k = lowest_; k <= order; ++k) s.c_[static_cast<std::size_t>(k - lowest_)] = (*this)[k];
  return s;
}

ZSeries ZSeries::reflected() const {
  ZSeries s = *this;
  for (int k = lowest_; k <= order_; ++k)
    if (k % 2 != 0) {
      auto& c = s.c_[static_cast<std::size_t>(k - lowest_)];
      c = -c;
    }
  return s;
}

ZSeries ZSeries::scaled(const Rational& c) const {
  ZSeries s = *this;
  for (auto& v : s.c_) v *= c;
  return s;
}

ZSeries ZSeries::derivative() const {
  ZSeries s(order_ - 1, lowest_ < 0 ? lowest_ - 1 : 0);
  for (int k = lowest_; k <= order_; ++k)
    if (k != 0) s.set(k - 1, (*this)[k] * k);
  return s;
}

ZSeries& ZSeries::operator+=(const ZSeries& o) {
  int order = std::min(order_, o.order_);
  int lowest = std::min(lowest_, o.lowest_);
  ZSeries r(order, lowest);
  for (int k = lowest; k <= order; ++k) r.c_[static_cast<std::size_t>(k - lowest)] = (*this)[k] + o[k];
  return *this = std::move(r);
}

ZSeries& ZSeries::operator-=(const ZSeries& o) { return *this += o.scaled(-1); }

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
  int va = a.valuation(), vb = b.valuation();
  int order = std::min(a.order_ + std::min(vb, 0), b.order_ + std::min(va, 0));
  int lowest = a.lowest_ + b.lowest_;
  ZSeries r(order, std::min(lowest, order));
  for (int i = a.lowest_; i <= a.order_; ++i) {
    const Rational& x = a.c_[static_cast<std::size_t>(i - a.lowest_)];
    if (x == 0) continue;
    for (int j = b.lowest_; j <= b.order_ && i + j <= order; ++j) {
      const Rational& y = b.c_[static_cast<std::size_t>(j - b.lowest_)];
      if (y == 0) continue;
      r.c_[static_cast<std::size_t>(i + j - r.lowest_)] += x * y;
    }
  }
  return r;
}

bool equal_to_order(const ZSeries& a, const ZSeries& b, int order) {
  if (order > a.order() || order > b.order()) throw Error("comparison beyond known order");
  for (int k = std::min(a.lowest(), b.lowest()); k <= order; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

ZSeries recip(const ZSeries& a) {
  if (a.valuation() != 0) throw Error("not a unit");
  int K = a.order();
  ZSeries r(K);
  Rational inv0 = 1 / a[0];
  r.set(0, inv0);
  for (int n = 1; n <= K; ++n) {
    Rational s = 0;
    for (int i = 1; i <= n; ++i) {
      Rational ai = a[i];
      if (ai != 0) s += ai * r[n - i];
    }
    r.set(n, -s * inv0);
  }
  return r;
}

namespace {

// z^{-v} a for v = valuation(a): the unit part.
ZSeries unit_part(const ZSeries& a, int v) {
  ZSeries u(a.order() - v);
  for (int k = v; k <= a.order(); ++k) u.set(k - v, a[k]);
  return u;
}

}  // namespace

ZSeries inverse(const ZSeries& a) {
  int v = a.valuation();
  if (v > a.order()) throw Error("inverse of a series that vanishes to its order");
  ZSeries ui = recip(unit_part(a, v));
  ZSeries r(ui.order() - v, std::min(-v, ui.order() - v));
  for (int k = 0; k <= ui.order(); ++k) r.set(k - v, ui[k]);
  return r;
}

ZSeries pow(const ZSeries& a, int n) {
  if (n < 0) return pow(inverse(a), -n);
  ZSeries r = ZSeries::constant(1, a.order());
  ZSeries base = a;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

ZSeries compose(const ZSeries& outer, const ZSeries& inner) {
  if (inner.valuation() < 1) throw Error("composition requires inner series with zero constant term");
  if (outer.valuation() < 0) throw Error("composition requires outer power series");
  int K = std::min(outer.order(), inner.order());
  ZSeries r = ZSeries::constant(outer[K], K);
  ZSeries in = inner.truncated(K);
  for (int k = K - 1; k >= 0; --k) {
    r = (r * in).truncated(K);
    r.set(0, r[0] + outer[k]);
  }
  return r;
}

ZSeries reversion(const ZSeries& a) {
  if (a.valuation() < 1 || a[0] != 0) throw Error("reversion requires zero constant term");
  if (a.order() < 1 || a[1] != 1) throw Error("reversion requires leading coefficient 1");
  int K = a.order();
  // Lagrange inversion: [z^n] b = (1/n) [w^{n-1}] (w / a(w))^n.
  ZSeries phi = recip(unit_part(a, 1));
  ZSeries b(K);
  ZSeries pw = ZSeries::constant(1, K - 1);
  for (int n = 1; n <= K; ++n) {
    pw = (pw * phi).truncated(K - 1);
    b.set(n, pw[n - 1] / n);
  }
  return b;
}

ZSeries log1p(const ZSeries& a) {
  if (a.valuation() < 1) throw Error("log1p requires zero constant term");
  int K = a.order();
  ZSeries L(K);
  for (int n = 1; n <= K; ++n) {
    Rational s = a[n] * n;
    for (int k = 1; k < n; ++k) {
      Rational an = a[n - k];
      if (an != 0) s -= L[k] * k * an;
    }
    L.set(n, s / n);
  }
  return L;
}

ZSeries expm(const ZSeries& a) {
  if (a.valuation() < 1) throw Error("expm requires zero constant term");
  int K = a.order();
  ZSeries E(K);
  E.set(0, 1);
  for (int n = 1; n <= K; ++n) {
    Rational s = 0;
    for (int k = 1; k <= n; ++k) {
      Rational ak = a[k];
      if (ak != 0) s += ak * k * E[n - k];
    }
    E.set(n, s / n);
  }
  return E;
}

ZSeries sqrt_normalized(const ZSeries& a) {
  if (a.valuation() != 2 || a[2] != 1) throw Error("sqrt_normalized requires z^2 (1 + O(z))");
  ZSeries u = unit_part(a, 2);
  int K = u.order();
  ZSeries s(K);
  s.set(0, 1);
  for (int n = 1; n <= K; ++n) {
    Rational acc = u[n];
    for (int i = 1; i < n; ++i) acc -= s[i] * s[n - i];
    s.set(n, acc / 2);
  }
  ZSeries f(K + 1);
  for (int k = 0; k <= K; ++k) f.set(k + 1, s[k]);
  return f;
}

ZSeries antiderivative(const ZSeries& a) {
  if (a.valuation() < 0) throw Error("antiderivative requires a power series");
  ZSeries r(a.order() + 1);
  for (int k = 0; k <= a.order(); ++k) {
    Rational c = a[k];
    if (c != 0) r.set(k + 1, c / (k + 1));
  }
  return r;
}

std::string to_string(const ZSeries& a) {
  std::string out;
  for (int k = a.lowest(); k <= a.order(); ++k) {
    Rational c = a[k];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    if (k != 0) out += "*z^" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  return out + " + O(z^" + std::to_string(a.order() + 1) + ")";
}

}  // namespace hodgekp
