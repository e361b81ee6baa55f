#include <random>

#include "doctest.h"
#include "hodgekp/coeff_ring.hpp"
#include "hodgekp/error.hpp"
#include "hodgekp/tpoly.hpp"
#include "hodgekp/zseries.hpp"
#include "oracles.hpp"

using namespace hodgekp;

namespace {

ZSeries poly(std::vector<Rational> c, int K) { return ZSeries::from(std::move(c), K); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("6/4") == rat(3, 2));
  CHECK(parse_rational("-5") == -5);
  CHECK(to_string(rat(-10, 4)) == "-5/2");
  CHECK(to_string(rat(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(7) == 105);
}

TEST_CASE("coeff ring arithmetic") {
  CoeffRing a(rat(1, 2), -1);
  a += CoeffRing(3, 2);
  CoeffRing b = a * a;
  CHECK(b.coefficient(-2) == rat(1, 4));
  CHECK(b.coefficient(1) == 3);
  CHECK(b.coefficient(4) == 9);
  CHECK((a - a).is_zero());
  CHECK(a.evaluate(2) == rat(1, 4) + 12);
  CHECK_THROWS_AS(a.evaluate(0), Error);
  CHECK(a.shifted(1).min_exponent() == 0);
}

TEST_CASE("zseries ring operations") {
  auto one_plus = poly({1, 1}, 3), one_minus = poly({1, -1}, 3);
  CHECK(equal_to_order(one_plus * one_minus, poly({1, 0, -1}, 3), 3));
  CHECK(equal_to_order(recip(one_plus), poly({1, -1, 1, -1}, 3), 3));
  CHECK(equal_to_order(poly({0, 1, rat(-5, 2)}, 3) + poly({0, 0, rat(5, 2)}, 3), ZSeries::identity(3), 3));
  CHECK_THROWS_AS(recip(ZSeries::identity(3)), Error);
  // orders: min of operands
  CHECK((poly({1, 1}, 5) * poly({1, 2}, 3)).order() == 3);
}

TEST_CASE("zseries compose and reversion") {
  auto z2 = poly({0, 0, 1}, 4), zz = poly({0, 1, 1}, 4);
  CHECK(equal_to_order(compose(z2, zz), poly({0, 0, 1, 2, 1}, 4), 4));
  CHECK_THROWS_AS(compose(z2, poly({1, 1}, 4)), Error);
  CHECK(equal_to_order(reversion(ZSeries::identity(5)), ZSeries::identity(5), 5));
  CHECK(equal_to_order(reversion(poly({0, 1, 1}, 3)), poly({0, 1, -1, 2}, 3), 3));
  CHECK_THROWS_AS(reversion(poly({0, 2, 1}, 3)), Error);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    ZSeries a = oracle::random_series(rng, 12, 2);
    a.set(1, 1);
    ZSeries b = reversion(a);
    CHECK(equal_to_order(compose(a, b), ZSeries::identity(12), 12));
    CHECK(equal_to_order(compose(b, a), ZSeries::identity(12), 12));
    if (trial < 5) CHECK(oracle::coeffs(b, 12) == oracle::reversion(oracle::coeffs(a, 12), 12));
  }
  // 20 random coefficients
  ZSeries a = oracle::random_series(rng, 20, 2);
  a.set(1, 1);
  CHECK(equal_to_order(reversion(reversion(a)), a, 20));
}

TEST_CASE("zseries compose matches the explicit power oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    ZSeries outer = oracle::random_series(rng, 9, 0), inner = oracle::random_series(rng, 9, 1);
    CHECK(oracle::coeffs(compose(outer, inner), 9) == oracle::compose(oracle::coeffs(outer, 9), oracle::coeffs(inner, 9), 9));
  }
}

TEST_CASE("zseries transcendental functions") {
  CHECK(equal_to_order(log1p(ZSeries::identity(3)), poly({0, 1, rat(-1, 2), rat(1, 3)}, 3), 3));
  CHECK(equal_to_order(expm(ZSeries::identity(3)), poly({1, 1, rat(1, 2), rat(1, 6)}, 3), 3));
  CHECK_THROWS_AS(log1p(poly({1, 1}, 3)), Error);
  CHECK_THROWS_AS(expm(poly({1, 1}, 3)), Error);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    ZSeries a = oracle::random_series(rng, 10, 1);
    CHECK(equal_to_order(expm(log1p(a)), a + ZSeries::constant(1, 10), 10));
    CHECK(equal_to_order(log1p(expm(a) - ZSeries::constant(1, 10)), a, 10));
  }
}

TEST_CASE("zseries sqrt, antiderivative, derivative") {
  CHECK(equal_to_order(sqrt_normalized(poly({0, 0, 1}, 6)), ZSeries::identity(5), 5));
  CHECK_THROWS_AS(sqrt_normalized(poly({0, 1, 1}, 6)), Error);
  CHECK_THROWS_AS(sqrt_normalized(poly({0, 0, 2}, 6)), Error);
  CHECK(equal_to_order(antiderivative(ZSeries::constant(1, 3)), ZSeries::identity(4), 4));
  auto a = poly({0, 1, rat(-5, 2), rat(21, 4)}, 3);
  CHECK(equal_to_order(antiderivative(a), poly({0, 0, rat(1, 2), rat(-5, 6), rat(21, 16)}, 4), 4));
  std::mt19937 rng(5);
  ZSeries r = oracle::random_series(rng, 8, 0);
  CHECK(equal_to_order(antiderivative(r).derivative(), r, 8));
  ZSeries u = oracle::random_series(rng, 10, 1);
  ZSeries sq = poly({0, 0, 1}, 12) * (ZSeries::constant(1, 10) + u);
  ZSeries f = sqrt_normalized(sq);
  CHECK(equal_to_order(f * f, sq, f.order()));
}

TEST_CASE("laurent inverse and powers") {
  ZSeries h = poly({0, 1, 2, rat(1, 3)}, 8);
  ZSeries hi = inverse(h);
  CHECK(hi.lowest() == -1);
  CHECK(hi[-1] == 1);
  CHECK(equal_to_order(hi * h, ZSeries::constant(1, hi.order() - 1), hi.order() - 1));
  ZSeries h3 = pow(h, -3);
  CHECK(h3[-3] == 1);
  CHECK(h3[-2] == -6);
}

TEST_CASE("tpoly multiplication and truncation") {
  PolySpace sp{VarKind::t, 4};
  auto t1 = TPoly::variable(sp, 1), t2 = TPoly::variable(sp, 2), t3 = TPoly::variable(sp, 3);
  auto prod = t1 * t2;
  CHECK(prod.size() == 1);
  CHECK(prod.coefficient(Monomial::variable(1) * Monomial::variable(2)) == CoeffRing(1));
  CHECK((t1 * t1 * t3).is_zero());
  CHECK_THROWS_AS(t1 * TPoly::variable(PolySpace{VarKind::T, 4}, 0), Error);
  CHECK_THROWS_AS(t1 * TPoly::variable(PolySpace{VarKind::t, 5}, 1), Error);

  std::mt19937 rng(1);
  PolySpace s10{VarKind::t, 10};
  for (int trial = 0; trial < 10; ++trial) {
    auto P = oracle::random_tpoly(rng, s10, 6, 6, true), Q = oracle::random_tpoly(rng, s10, 6, 6, true),
         S = oracle::random_tpoly(rng, s10, 6, 6, true);
    CHECK(P * Q == Q * P);
    CHECK((P * Q) * S == P * (Q * S));
    CHECK(P * (Q + S) == P * Q + P * S);
    CHECK((P * Q).max_weight() <= 10);
  }
}

TEST_CASE("tpoly graded truncation") {
  PolySpace sp{VarKind::t, 9, Grading::hodge()};
  TPoly p(sp);
  Monomial t1_3 = Monomial::variable(1, 3);
  p.add_term(t1_3, 1, 1);  // grade 12 - 9 = 3
  p.add_term(t1_3, 1, 2);  // grade 24 - 9 = 15 > 9, dropped
  CHECK(p.coefficient(t1_3) == CoeffRing(1, 1));
  CHECK(p.min_grade() == 3);
}

TEST_CASE("tpoly substitution") {
  PolySpace sp{VarKind::t, 6};
  auto t1 = TPoly::variable(sp, 1);
  Rational c = rat(3, 7);
  auto img = t1 + TPoly::constant(sp, CoeffRing(c));
  auto r = substitute(t1 * t1, {{1, img}}, sp);
  CHECK(r == t1 * t1 + t1 * CoeffRing(2 * c) + TPoly::constant(sp, CoeffRing(c * c)));
  CHECK_THROWS_AS(substitute(t1, {}, sp), Error);

  std::mt19937 rng(9);
  PolySpace s8{VarKind::t, 8};
  for (int trial = 0; trial < 8; ++trial) {
    auto P = oracle::random_tpoly(rng, s8, 5, 5), Q = oracle::random_tpoly(rng, s8, 5, 5);
    std::map<int, TPoly> images, identity;
    for (int i = 1; i <= 8; ++i) {
      identity.emplace(i, TPoly::variable(s8, i));
      // weight-homogeneous images, so truncation commutes with substitution
      TPoly img(s8);
      for (const auto& m : monomial_basis(VarKind::t, i))
        if (monomial_weight(VarKind::t, m) == i) img.add_term(m, oracle::random_rational(rng));
      images.emplace(i, img);
    }
    CHECK(substitute(P, identity, s8) == P);
    CHECK(substitute(P * Q, images, s8) == substitute(P, images, s8) * substitute(Q, images, s8));
  }
}

TEST_CASE("T-side substitution reproduces the lowest Kontsevich-Witten data in t") {
  PolySpace Ts{VarKind::T, 3}, ts{VarKind::t, 3};
  TPoly F(Ts);
  F.add_term(Monomial::variable(0, 3), rat(1, 6), 1);
  F.add_term(Monomial::variable(1), rat(1, 24), 1);
  auto r = substitute(F, {{0, TPoly::variable(ts, 1)}, {1, TPoly::variable(ts, 3, CoeffRing(3))}}, ts);
  CHECK(r.coefficient(Monomial::variable(1, 3)) == CoeffRing(rat(1, 6), 1));
  CHECK(r.coefficient(Monomial::variable(3)) == CoeffRing(rat(1, 8), 1));
}

TEST_CASE("monomial basis enumeration") {
  // partitions of n <= 6 : 1+1+2+3+5+7+11
  CHECK(monomial_basis(VarKind::t, 6).size() == 30);
  // odd parts only, n <= 6: 1,1,1,2,2,3,4
  CHECK(monomial_basis(VarKind::t, 6, true).size() == 14);
  CHECK(monomial_basis(VarKind::T, 6).size() == 14);
  for (const auto& m : monomial_basis(VarKind::T, 9)) CHECK(monomial_weight(VarKind::T, m) <= 9);
}
