#include <random>

#include "doctest.h"
#include "hodgekp/error.hpp"
#include "hodgekp/kp.hpp"
#include "hodgekp/tau.hpp"

using namespace hodgekp;

namespace {

Monomial t(int i, int e = 1) { return Monomial::variable(i, e); }

TPoly poly(std::initializer_list<std::pair<Monomial, Rational>> terms, int bound = kUnbounded) {
  TPoly p(PolySpace{VarKind::t, bound});
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

// exp(sum a_k t_k) up to weight W.
TPoly exp_linear(const std::vector<Rational>& a, int W) {
  TPoly out = TPoly::one(PolySpace{VarKind::t, W});
  TPoly term = out;
  TPoly x(PolySpace{VarKind::t, W});
  for (std::size_t k = 1; k < a.size(); ++k) x.add_term(t(static_cast<int>(k)), a[k]);
  for (int n = 1; n <= W; ++n) {
    term = term * x * CoeffRing(rat(1, n));
    out += term;
  }
  return out;
}

// D_1^4 tau.tau = 2 (tau tau'''' - 4 tau' tau''' + 3 tau''^2), written out by hand.
TPoly d1_fourth(const TPoly& tau) {
  TPoly d1 = tau.derivative(1), d2 = d1.derivative(1), d3 = d2.derivative(1), d4 = d3.derivative(1);
  return (tau * d4 - d1 * d3 * CoeffRing(4) + d2 * d2 * CoeffRing(3)) * CoeffRing(2);
}

}  // namespace

TEST_CASE("specialize hbar") {
  PolySpace sp{VarKind::t, 9};
  TPoly p(sp);
  p.add_term(t(1, 3), rat(1, 6), 1);
  p.add_term(t(2), 1, -1);
  TPoly one = specialize_hbar(p, 1);
  CHECK(one.coefficient(t(1, 3)) == CoeffRing(rat(1, 6)));
  TPoly half = specialize_hbar(p, rat(1, 2));
  CHECK(half.coefficient(t(2)) == CoeffRing(2));
  CHECK(half.coefficient(t(1, 3)) == CoeffRing(rat(1, 12)));
  // ring homomorphism
  TPoly q(sp);
  q.add_term(t(1), 3, 2);
  q.add_term(Monomial(), 1, 0);
  CHECK(specialize_hbar(p * q, rat(2, 3)) == specialize_hbar(p, rat(2, 3)) * specialize_hbar(q, rat(2, 3)));
  CHECK_THROWS_AS(specialize_hbar(p, 0), Error);

  // graded input: the hbar slot carries the grade afterwards
  PolySpace hs{VarKind::t, 12, Grading::hodge()};
  TPoly g(hs);
  g.add_term(t(3), rat(1, 8), 1);  // grade 12 - 9 = 3
  TPoly ge = specialize_hbar(g, 2);
  CHECK(ge.grading() == Grading::epsilon());
  CHECK(ge.coefficient(t(3)) == CoeffRing(rat(1, 4), 3));
}

TEST_CASE("hirota residual against a hand-written oracle") {
  HirotaPoly d14{{t(1, 4), 1}};
  for (const auto& tau : {poly({{Monomial(), 1}, {t(1), 2}, {t(1, 3), rat(1, 3)}, {t(2, 2), -1}}, 12),
                          poly({{t(1, 5), 1}, {t(1) * t(2), rat(3, 7)}}, 12)}) {
    int cov = 0;
    TPoly r = hirota_residual(tau, d14, &cov);
    CHECK(cov == 8);
    CHECK(r == d1_fourth(tau).in_space(PolySpace{VarKind::t, 8}));
  }
  // odd operators vanish identically on tau . tau
  HirotaPoly odd{{t(1, 2) * t(2), 1}, {t(3), 5}};
  CHECK(hirota_residual(poly({{t(1, 2), 1}, {t(2) * t(3), 4}}), odd).is_zero());
}

TEST_CASE("bilinear family") {
  auto fam = kp_bilinear_family(3);
  CHECK(fam.size() == 7);  // partitions of weight <= 3
  // y^0: D_1 only
  CHECK(fam.at(Monomial()) == HirotaPoly{{t(1), 1}});
  // every coefficient of y^beta has D-weight |beta| + 1
  for (const auto& [beta, Q] : fam)
    for (const auto& [m, c] : Q) CHECK(monomial_weight(VarKind::t, m) == monomial_weight(VarKind::t, beta) + 1);
  // y_3 carries the first nontrivial equation
  const HirotaPoly& q3 = fam.at(t(3));
  Rational a = q3.at(t(1, 4));
  CHECK(a != 0);
  CHECK(q3.at(t(2, 2)) == 3 * a);
  CHECK(q3.at(t(1) * t(3)) == -4 * a);
}

TEST_CASE("known tau-functions pass, non-tau polynomials fail") {
  // Schur polynomials are tau-functions.
  TPoly s21 = poly({{t(1, 3), rat(1, 3)}, {t(3), -1}});
  TPoly s2 = poly({{t(1, 2), rat(1, 2)}, {t(2), 1}});
  TPoly s11 = poly({{t(1, 2), rat(1, 2)}, {t(2), -1}});
  for (const auto& tau : {TPoly::one(PolySpace{VarKind::t, 10}), s21, s2, s11, exp_linear({0, 1, rat(1, 2), -3}, 11)}) {
    CHECK(hirota_first_equation(tau).passed());
    CHECK(hirota_full_check(tau, 4).passed());
  }
  // one-soliton 1 + exp(sum (a^k - b^k) t_k)
  Rational a = 2, b = rat(-1, 3);
  std::vector<Rational> xi{0};
  for (int k = 1; k <= 10; ++k) xi.push_back(power(a, k) - power(b, k));
  TPoly sol = exp_linear(xi, 10) + TPoly::one(PolySpace{VarKind::t, 10});
  CHECK(hirota_full_check(sol, 3).passed());

  TPoly bad = poly({{Monomial(), 1}, {t(1), 1}, {t(2, 2), 1}});
  CHECK_FALSE(hirota_first_equation(bad).passed());
  auto rep = hirota_full_check(bad, 3);
  CHECK_FALSE(rep.passed());
  CHECK(rep.failure_count > 0);
  CHECK(!rep.failures.empty());
}

TEST_CASE("input validation") {
  TPoly withh(PolySpace{VarKind::t, 6});
  withh.add_term(t(1), 1, 1);
  CHECK_THROWS_AS(hirota_first_equation(withh), Error);
  CHECK_THROWS_AS(hirota_full_check(TPoly(hodge_space(VarKind::t, 6, HodgeMode::standard)) + TPoly::one(hodge_space(VarKind::t, 6, HodgeMode::standard)), 2), Error);
  CHECK_THROWS_AS(hirota_first_equation(TPoly::one(PolySpace{VarKind::T, 6})), Error);
}

TEST_CASE("base tau-functions satisfy KP") {
  auto kw = specialize_hbar(kw_tau(12).body, 1);
  auto rep = hirota_full_check(kw, 4);
  CHECK(rep.passed());
  CHECK(rep.covered_weight == 7);
  CHECK(rep.equations.size() == 12);
  CHECK(hirota_first_equation(kw).passed());
  CHECK(hirota_full_check(specialize_hbar(kw_tau(12).body, rat(-2, 5)), 4).passed());
  CHECK(hirota_full_check(specialize_hbar(bgw_tau(10).body, 1), 3).passed());
  CHECK(kdv_reduction_check(kw).passed);
}

TEST_CASE("hodge tau-functions satisfy KP in graded form") {
  auto res = theorem_hodge_check(CurveParams::make(1, 3, 2), 9);
  REQUIRE(res.report.passed);
  for (Rational h : {Rational(1), rat(1, 2)}) {
    auto eps = specialize_hbar(res.tau.body, h);
    auto rep = hirota_full_check(eps, 3);
    CHECK(rep.passed());
    CHECK(rep.covered_by == "grade");
    CHECK(hirota_first_equation(eps).passed());
  }
  auto th = theorem_theta_check(CurveParams::make(1, 3, 2), 8);
  CHECK(hirota_full_check(specialize_hbar(th.tau.body, 1), 3).passed());
  CHECK_FALSE(kdv_reduction_check(th.tau.body).passed);
  CHECK(kdv_reduction_check(theorem_hodge_check(CurveParams::make(-1, 2, 1), 9).tau.body).passed);
}

TEST_CASE("mutations of tau_KW are caught") {
  auto kw = specialize_hbar(kw_tau(12).body, 1);
  std::vector<Monomial> pool;
  for (const auto& m : monomial_basis(VarKind::t, 6))
    if (monomial_weight(VarKind::t, m) == 6) pool.push_back(m);
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> num(1, 9), den(1, 9), sign(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    TPoly p = kw;
    const Monomial& m = pool[pick(rng)];
    p.add_term(m, rat(sign(rng) ? num(rng) : -num(rng), den(rng)));
    CAPTURE(to_string(VarKind::t, m));
    CHECK_FALSE(hirota_full_check(p, 4).passed());
  }
}
