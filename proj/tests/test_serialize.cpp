#include "doctest.h"
#include "hodgekp/checks.hpp"
#include "hodgekp/error.hpp"
#include "hodgekp/serialize.hpp"

using namespace hodgekp;

TEST_CASE("json forms of the algebra types") {
  CHECK(to_json(rat(-6, 12)) == "-1/2");
  CHECK(to_json(Rational(7)) == "7");

  CoeffRing c(rat(1, 8), 1);
  c.add(-1, 3);
  Json jc = to_json(c);
  CHECK(jc["h^1"] == "1/8");
  CHECK(jc["h^-1"] == "3");
  CHECK(coeff_from_json(jc) == c);

  Monomial m = Monomial::variable(3, 2) * Monomial::variable(1);
  Json jm = to_json(VarKind::t, m);
  CHECK(jm["t3"] == 2);
  CHECK(jm["t1"] == 1);
  CHECK(jm.size() == 2);

  PolySpace sp{VarKind::t, 9};
  TPoly p(sp);
  p.add_term(m, c);
  p.add_term(Monomial(), Rational(1));
  Json jp = to_json(p);
  CHECK(jp.size() == 2);
  CHECK(tpoly_from_json(jp, sp) == p);
  CHECK_THROWS_AS(tpoly_from_json(Json::parse(R"([{"monomial": {"T1": 1}, "coeff": {"h^0": "1"}}])"), sp), Error);
}

TEST_CASE("tau-series round trip") {
  for (const auto& tau : {kw_tau(7), hodge_partition(CurveParams::make(-1, 2, 1), 5, HodgeMode::standard)}) {
    Json j = to_json(tau);
    CHECK(j["header"]["engineVersion"] == kEngineVersion);
    TauSeries back = tau_from_json(Json::parse(j.dump()));
    CHECK(back.body == tau.body);
    CHECK(back.body.space() == tau.body.space());
    CHECK(back.kind == tau.kind);
    CHECK(back.provenance.pipeline == tau.provenance.pipeline);
    CHECK(back.provenance.params == tau.provenance.params);
  }
}

TEST_CASE("hirota report json") {
  HirotaReport r = hirota_first_equation(TPoly::one(PolySpace{VarKind::t, 8}));
  r.hbar = "1";
  Json j = to_json(r);
  CHECK(j["status"] == "pass");
  CHECK(j["coveredWeight"] == 4);
  CHECK(j["equations"][0]["maxResidualWeightChecked"] == 4);
  CHECK(j["failures"].empty());
}

TEST_CASE("check registry") {
  CHECK(check_registry().size() == 13);
  CHECK_THROWS_AS(find_check("lemma-unknown"), Error);

  const auto pt = CurveParams::make(1, 3, 2);
  CheckOptions opt;
  opt.weight = 8;
  auto g = run_check("lemma-grunsky", pt, opt);
  CHECK(g.passed);
  CHECK(g.report["status"] == "pass");
  CHECK(g.report["point"]["q"] == "1");

  opt.order = 10;  // below 2W + 2
  CHECK_THROWS_AS(run_check("lemma-grunsky", pt, opt), Error);

  CheckOptions neg;
  neg.perturbed = true;
  auto n = run_check("identification", std::nullopt, neg);
  CHECK(n.passed);
  CHECK(!n.point);

  CheckOptions kdv;
  kdv.weight = 7;
  CHECK(run_check("kdv-reduction", pt, kdv).passed);  // even times expected and found
  CHECK(run_check("kdv-reduction", CurveParams::make(-1, 2, 1), kdv).passed);

  CheckOptions kp;
  kp.weight = 9;
  kp.y_weight = 3;
  auto k = run_check("kp-kw", std::nullopt, kp);
  CHECK(k.passed);
  CHECK(k.report["runs"].size() == 2);
  CHECK_THROWS_AS(run_check("lemma-laplace", std::nullopt, CheckOptions{}), Error);
}
