#include "hodgekp/serialize.hpp"

#include "hodgekp/error.hpp"

namespace hodgekp {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const CoeffRing& c) {
  Json j = Json::object();
  for (const auto& [e, v] : c.terms()) j["h^" + std::to_string(e)] = to_string(v);
  return j;
}

Json to_json(VarKind kind, const Monomial& m) {
  Json j = Json::object();
  for (int i = m.max_index(); i >= first_index(kind); --i)
    if (m[i] != 0) j[variable_name(kind, i)] = m[i];
  return j;
}

Json to_json(const TPoly& p) {
  Json j = Json::array();
  for (const auto& [m, c] : p.terms()) j.push_back({{"monomial", to_json(p.kind(), m)}, {"coeff", to_json(c)}});
  return j;
}

Json to_json(const ZSeries& s) {
  Json c = Json::array();
  for (int k = s.lowest(); k <= s.order(); ++k) c.push_back(to_string(s[k]));
  return {{"lowest", s.lowest()}, {"order", s.order()}, {"coeffs", c}};
}

Json to_json(const SquareMatrix& m) {
  Json rows = Json::array();
  for (int i = m.base(); i < m.base() + m.size(); ++i) {
    Json row = Json::array();
    for (int k = m.base(); k < m.base() + m.size(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(row);
  }
  return {{"base", m.base()}, {"rows", rows}};
}

Json to_json(const CurveParams& params) {
  return {{"q", to_string(params.q)}, {"p", to_string(params.p)}, {"s", to_string(params.s)}};
}

Json to_json(const CheckReport& r) {
  return {{"check", r.name},
          {"status", r.passed ? "pass" : "fail"},
          {"checked", r.checked},
          {"failures", r.failures},
          {"notes", r.notes}};
}

Json to_json(const HirotaReport& r) {
  Json eqs = Json::array();
  for (const auto& e : r.equations)
    eqs.push_back({{"label", e.label}, {"maxResidualWeightChecked", e.covered}, {"status", e.passed ? "pass" : "fail"}});
  Json fails = Json::array();
  for (const auto& f : r.failures)
    fails.push_back({{"equation", f.equation}, {"monomial", f.monomial}, {"residual", f.residual}});
  return {{"check", r.check},
          {"hbar", r.hbar},
          {"yWeight", r.y_weight},
          {"coveredWeight", r.covered_weight},
          {"coveredBy", r.covered_by},
          {"status", r.passed() ? "pass" : "fail"},
          {"equations", eqs},
          {"failureCount", r.failure_count},
          {"failures", fails}};
}

namespace {

Json to_json(const PolySpace& sp) {
  return {{"kind", sp.kind == VarKind::t ? "t" : "T"},
          {"bound", sp.bound},
          {"grading", {{"hbar", sp.grading.hbar}, {"weight", sp.grading.weight}}}};
}

PolySpace space_from_json(const Json& j) {
  PolySpace sp;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "t" && kind != "T") throw Error("unknown variable kind " + kind);
  sp.kind = kind == "t" ? VarKind::t : VarKind::T;
  sp.bound = j.at("bound").get<int>();
  sp.grading = Grading{j.at("grading").at("hbar").get<int>(), j.at("grading").at("weight").get<int>()};
  return sp;
}

}  // namespace

Json to_json(const TauSeries& tau) {
  Json header = {{"kind", to_string(tau.kind)}};
  if (tau.provenance.params) {
    header["q"] = to_string(tau.provenance.params->q);
    header["p"] = to_string(tau.provenance.params->p);
    header["s"] = to_string(tau.provenance.params->s);
  }
  header["W"] = tau.provenance.W;
  header["pipeline"] = tau.provenance.pipeline;
  header["engineVersion"] = kEngineVersion;
  return {{"header", header}, {"space", to_json(tau.body.space())}, {"terms", to_json(tau.body)}};
}

CoeffRing coeff_from_json(const Json& j) {
  CoeffRing c;
  for (const auto& [key, v] : j.items()) {
    if (key.rfind("h^", 0) != 0) throw Error("bad coefficient key " + key);
    c.add(std::stoi(key.substr(2)), parse_rational(v.get<std::string>()));
  }
  return c;
}

TPoly tpoly_from_json(const Json& j, PolySpace space) {
  TPoly p(space);
  const char letter = space.kind == VarKind::t ? 't' : 'T';
  for (const auto& rec : j) {
    Monomial m;
    for (const auto& [name, e] : rec.at("monomial").items()) {
      if (name.size() < 2 || name[0] != letter) throw Error("bad variable name " + name);
      const int idx = std::stoi(name.substr(1));
      if (idx < first_index(space.kind) || idx >= kMaxVariables) throw Error("variable index out of range: " + name);
      m.set(idx, e.get<int>());
    }
    p.add_term(m, coeff_from_json(rec.at("coeff")));
  }
  return p;
}

TauSeries tau_from_json(const Json& j) {
  TauSeries tau;
  const Json& h = j.at("header");
  tau.kind = tau_kind_from_string(h.at("kind").get<std::string>());
  if (h.contains("q"))
    tau.provenance.params = CurveParams::make(parse_rational(h.at("q").get<std::string>()),
                                              parse_rational(h.at("p").get<std::string>()),
                                              parse_rational(h.at("s").get<std::string>()));
  tau.provenance.W = h.at("W").get<int>();
  tau.provenance.pipeline = h.at("pipeline").get<std::string>();
  tau.body = tpoly_from_json(j.at("terms"), space_from_json(j.at("space")));
  return tau;
}

}  // namespace hodgekp
