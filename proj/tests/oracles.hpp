#pragma once

// Test-side reference computations, written independently of the library
// (plain coefficient vectors, brute-force loops).

#include <random>
#include <vector>

#include "hodgekp/rational.hpp"
#include "hodgekp/tpoly.hpp"
#include "hodgekp/zseries.hpp"

namespace oracle {

using hodgekp::Rational;
using Vec = std::vector<Rational>;

inline Vec mul(const Vec& a, const Vec& b, int K) {
  Vec r(static_cast<std::size_t>(K + 1));
  for (int i = 0; i <= K && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= K && j < static_cast<int>(b.size()); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// outer(inner) by summing explicit powers.
inline Vec compose(const Vec& outer, const Vec& inner, int K) {
  Vec r(static_cast<std::size_t>(K + 1)), p(static_cast<std::size_t>(K + 1));
  p[0] = 1;
  for (int k = 0; k <= K; ++k) {
    if (k < static_cast<int>(outer.size()))
      for (int j = 0; j <= K; ++j) r[j] += outer[k] * p[j];
    p = mul(p, inner, K);
  }
  return r;
}

// Solve compose(a, b) = z coefficient by coefficient.
inline Vec reversion(const Vec& a, int K) {
  Vec b(static_cast<std::size_t>(K + 1));
  b[1] = 1;
  for (int n = 2; n <= K; ++n) {
    Vec c = compose(a, b, K);
    b[n] -= c[n];
  }
  return b;
}

inline Vec coeffs(const hodgekp::ZSeries& s, int K) {
  Vec v(static_cast<std::size_t>(K + 1));
  for (int k = 0; k <= K; ++k) v[k] = s[k];
  return v;
}

inline Rational random_rational(std::mt19937& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  return hodgekp::rat(num(rng), den(rng));
}

inline hodgekp::ZSeries random_series(std::mt19937& rng, int K, int first) {
  hodgekp::ZSeries s(K);
  for (int k = first; k <= K; ++k) s.set(k, random_rational(rng));
  return s;
}

// Random sparse polynomial: `terms` random monomials of weight <= W.
inline hodgekp::TPoly random_tpoly(std::mt19937& rng, hodgekp::PolySpace space, int W, int terms,
                                   bool with_hbar = false) {
  auto basis = hodgekp::monomial_basis(space.kind, W);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> hb(-1, 2);
  hodgekp::TPoly p(space);
  for (int i = 0; i < terms; ++i) p.add_term(basis[pick(rng)], random_rational(rng), with_hbar ? hb(rng) : 0);
  return p;
}

}  // namespace oracle
