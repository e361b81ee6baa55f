#include "hodgekp/coeff_ring.hpp"

#include <algorithm>
#include <map>

#include "hodgekp/error.hpp"

namespace hodgekp {

CoeffRing::CoeffRing(const Rational& c, int exponent) {
  if (c != 0) terms_.emplace_back(exponent, c);
}

Rational CoeffRing::coefficient(int exponent) const {
  for (const auto& [e, c] : terms_)
    if (e == exponent) return c;
  return 0;
}

int CoeffRing::min_exponent() const {
  if (terms_.empty()) throw Error("min_exponent of zero");
  return terms_.front().first;
}

int CoeffRing::max_exponent() const {
  if (terms_.empty()) throw Error("max_exponent of zero");
  return terms_.back().first;
}

void CoeffRing::add(int exponent, const Rational& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term(exponent, c));
  }
}

CoeffRing& CoeffRing::operator+=(const CoeffRing& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

CoeffRing& CoeffRing::operator-=(const CoeffRing& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

CoeffRing& CoeffRing::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

CoeffRing CoeffRing::operator-() const {
  CoeffRing r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

CoeffRing CoeffRing::shifted(int shift) const {
  CoeffRing r = *this;
  for (auto& t : r.terms_) t.first += shift;
  return r;
}

Rational CoeffRing::evaluate(const Rational& hbar) const {
  Rational out = 0;
  for (const auto& [e, c] : terms_) {
    if (hbar == 0) {
      if (e < 0) throw Error("hbar = 0 with negative hbar exponents present");
      if (e == 0) out += c;
      continue;
    }
    out += c * power(hbar, e);
  }
  return out;
}

CoeffRing operator*(const CoeffRing& a, const CoeffRing& b) {
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    CoeffRing r;
    r.terms_.emplace_back(a.terms_[0].first + b.terms_[0].first, a.terms_[0].second * b.terms_[0].second);
    return r;
  }
  std::map<int, Rational> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  CoeffRing r;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  return r;
}

std::string to_string(const CoeffRing& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [e, v] : c.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(v) + ")";
    if (e != 0) out += "*h^" + std::to_string(e);
  }
  return out;
}

}  // namespace hodgekp
