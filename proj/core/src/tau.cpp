#include "hodgekp/tau.hpp"

#include <algorithm>
#include <functional>

#include "hodgekp/error.hpp"
#include "hodgekp/operators.hpp"

namespace hodgekp {

std::string to_string(TauKind kind) {
  switch (kind) {
    case TauKind::KW: return "KW";
    case TauKind::BGW: return "BGW";
    case TauKind::HodgeZ: return "HodgeZ";
    case TauKind::ThetaZ: return "ThetaZ";
    case TauKind::tau_qp: return "tau_qp";
    case TauKind::tau_theta_qp: return "tau_theta_qp";
  }
  return "?";
}

TauKind tau_kind_from_string(const std::string& s) {
  for (auto k : {TauKind::KW, TauKind::BGW, TauKind::HodgeZ, TauKind::ThetaZ, TauKind::tau_qp, TauKind::tau_theta_qp})
    if (to_string(k) == s) return k;
  throw Error("unknown tau kind: " + s);
}

// ---- correlators ----

int Correlators::degree(int g, int n) const {
  int d = theory_ == Theory::KW ? 3 * g - 3 + n : g - 1;
  return d;
}

Rational Correlators::operator()(int g, std::vector<int> a) {
  const int n = static_cast<int>(a.size());
  if (g < 0 || n == 0 || 2 * g - 2 + n <= 0) return 0;
  int sum = 0;
  for (int x : a) {
    if (x < 0) return 0;
    sum += x;
  }
  if (sum != degree(g, n)) return 0;
  std::sort(a.begin(), a.end());
  auto key = std::make_pair(g, a);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Rational v = compute(g, a);
  memo_.emplace(std::move(key), v);
  return v;
}

Rational Correlators::compute(int g, const std::vector<int>& a) {
  if (theory_ == Theory::KW) {
    if (g == 0 && a == std::vector<int>{0, 0, 0}) return 1;
    if (g == 1 && a == std::vector<int>{1}) return rat(1, 24);
  } else {
    if (g == 1 && a == std::vector<int>{0}) return rat(1, 8);
  }
  const int s = theory_ == Theory::KW ? 1 : 0;
  // Recurse on the largest insertion.
  const int k = a.back();
  std::vector<int> S(a.begin(), a.end() - 1);
  const int n = static_cast<int>(S.size());

  Rational total = 0;
  for (int j = 0; j < n; ++j) {
    int idx = k + S[static_cast<std::size_t>(j)] - s;
    if (idx < 0) continue;
    std::vector<int> b = S;
    b[static_cast<std::size_t>(j)] = idx;
    Rational c = (*this)(g, b);
    if (c == 0) continue;
    total += double_factorial(2 * k + 2 * S[static_cast<std::size_t>(j)] + 1 - 2 * s) /
             double_factorial(2 * S[static_cast<std::size_t>(j)] - 1) * c;
  }

  Rational split = 0;
  for (int x = 0; x <= k - 1 - s; ++x) {
    int y = k - 1 - s - x;
    Rational w = double_factorial(2 * x + 1) * double_factorial(2 * y + 1);
    std::vector<int> b = S;
    b.push_back(x);
    b.push_back(y);
    Rational c = (*this)(g - 1, b);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> I{x}, J{y};
      for (int j = 0; j < n; ++j) (mask >> j & 1u ? I : J).push_back(S[static_cast<std::size_t>(j)]);
      for (int g1 = 0; g1 <= g; ++g1) {
        Rational l = (*this)(g1, I);
        if (l == 0) continue;
        Rational r = (*this)(g - g1, J);
        if (r != 0) c += l * r;
      }
    }
    split += w * c;
  }
  total += split / 2;
  return total / double_factorial(2 * k + 1);
}

// ---- base tau-functions ----

namespace {

// Nonincreasing sequences of length n with entries >= 0 summing to d.
void for_each_multiset(int n, int d, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int, int, int)> rec = [&](int left, int remaining, int cap) {
    if (left == 0) {
      if (remaining == 0) fn(cur);
      return;
    }
    for (int v = std::min(cap, remaining); v >= 0; --v) {
      if (static_cast<long>(v) * left < remaining) break;
      cur.push_back(v);
      rec(left - 1, remaining - v, v);
      cur.pop_back();
    }
  };
  rec(n, d, d);
}

const char* theory_pipeline(Correlators::Theory t) {
  return t == Correlators::Theory::KW ? "dvv-recursion" : "theta-virasoro-recursion";
}

}  // namespace

TPoly base_free_energy(Correlators::Theory theory, PolySpace space, int max_weight) {
  if (space.kind != VarKind::T) throw Error("base_free_energy: T-side space expected");
  Correlators corr(theory);
  TPoly F(space);
  for (int n = 1; n <= max_weight; ++n) {
    for (int g = 0;; ++g) {
      const int e = 2 * g - 2 + n;
      const int w = theory == Correlators::Theory::KW ? 3 * e : e;
      if (w > max_weight) break;
      if (e <= 0) continue;
      const int d = corr.degree(g, n);
      if (d < 0) continue;
      for_each_multiset(n, d, [&](const std::vector<int>& a) {
        Rational c = corr(g, a);
        if (c == 0) return;
        Monomial m;
        for (int x : a) {
          if (x >= kMaxVariables) throw Error("base_free_energy: weight too large");
          m.raise(x);
        }
        for (int i = 0; i <= m.max_index(); ++i) c /= factorial(m[i]);
        F.add_term(m, c, e);
      });
    }
  }
  return F;
}

TPoly base_tau_T(Correlators::Theory theory, PolySpace space) {
  TPoly F = base_free_energy(theory, space, space.bound);
  TPoly sum = TPoly::one(space), term = TPoly::one(space);
  for (int n = 1; !term.is_zero(); ++n) {
    term = term * F;
    term *= CoeffRing(rat(1, n));
    sum += term;
  }
  return sum;
}

namespace {

TauSeries base_tau(Correlators::Theory theory, int W) {
  TauSeries t;
  t.body = T_to_t(base_tau_T(theory, PolySpace{VarKind::T, W}));
  t.kind = theory == Correlators::Theory::KW ? TauKind::KW : TauKind::BGW;
  t.provenance.W = W;
  t.provenance.pipeline = theory_pipeline(theory);
  return t;
}

// Multiplies every term by its hbar exponent.
TPoly hbar_euler(const TPoly& p) {
  TPoly out(p.space());
  for (const auto& [m, c] : p.terms())
    for (const auto& [e, v] : c.terms()) out.add_term(m, v * e, e);
  return out;
}

}  // namespace

TauSeries kw_tau(int W) {
  if (W < 3) throw Error("kw_tau: weight must be at least 3");
  return base_tau(Correlators::Theory::KW, W);
}

TauSeries bgw_tau(int W) {
  if (W < 1) throw Error("bgw_tau: weight must be at least 1");
  return base_tau(Correlators::Theory::BGW, W);
}

CheckReport generator_self_check(Correlators::Theory theory, int W) {
  const PolySpace space{VarKind::T, W}, low{VarKind::T, W - 1}, lower{VarKind::T, W - 3};
  const TPoly F = base_free_energy(theory, space, W);
  const CoeffRing hbar(1, 1);
  CheckReport r;
  r.name = std::string("generator-") + (theory == Correlators::Theory::KW ? "kw" : "bgw");
  auto compare = [&](const char* what, const TPoly& a, const TPoly& b) {
    ++r.checked;
    if (!(a == b)) r.fail(std::string(what) + ":\n" + diff_report(a, b));
  };
  if (theory == Correlators::Theory::KW) {
    // d_0 F = hbar (T_0^2 / 2 + sum T_{k+1} d_k F)
    TPoly rhs = TPoly::monomial(space, Monomial::variable(0, 2), CoeffRing(rat(1, 2)));
    for (int k = 0; k + 1 <= (W - 1) / 2; ++k) rhs += F.derivative(k).times_variable(k + 1);
    compare("string equation", F.derivative(0).in_space(low), (rhs * hbar).in_space(low));
    // d_1 F = hbar (hbar d/dhbar F + 1/24)
    TPoly dil = hbar_euler(F) + TPoly::constant(space, CoeffRing(rat(1, 24)));
    compare("dilaton equation", F.derivative(1).in_space(lower), (dil * hbar).in_space(lower));
  } else {
    // d_0 F = hbar (hbar d/dhbar F + 1/8)
    TPoly dil = hbar_euler(F) + TPoly::constant(space, CoeffRing(rat(1, 8)));
    compare("dilaton equation", F.derivative(0).in_space(low), (dil * hbar).in_space(low));
  }
  return r;
}

// ---- Hodge partition functions ----

PolySpace hodge_space(VarKind kind, int W, HodgeMode mode) {
  return PolySpace{kind, W, mode == HodgeMode::standard ? Grading::hodge() : Grading::theta()};
}

namespace {

GiventalMode givental_mode(HodgeMode mode) {
  return mode == HodgeMode::standard ? GiventalMode::standard : GiventalMode::theta;
}

Correlators::Theory base_theory(HodgeMode mode) {
  return mode == HodgeMode::standard ? Correlators::Theory::KW : Correlators::Theory::BGW;
}

TauSeries hodge_partition_for(const CurveSeries& curve, int W, HodgeMode mode) {
  const PolySpace space = hodge_space(VarKind::T, W, mode);
  const TPoly base = base_tau_T(base_theory(mode), space);
  const auto couplings = couplings_from_log_r(curve.logR);
  TPoly direct = givental_direct(couplings, base, givental_mode(mode));
  TPoly factorized = givental_factorized(curve.R, base, givental_mode(mode));
  if (!(direct == factorized))
    throw InvariantViolation("hodge partition: direct and factorized Givental actions disagree",
                             diff_report(direct, factorized));
  TauSeries t;
  t.body = std::move(direct);
  t.kind = mode == HodgeMode::standard ? TauKind::HodgeZ : TauKind::ThetaZ;
  t.provenance.params = curve.params;
  t.provenance.W = W;
  t.provenance.pipeline = "givental-direct=factorized";
  return t;
}

DressingResult theorem_check(const CurveParams& params, int W, HodgeMode mode) {
  params.validate();
  const auto curve = build_curve(params, curve_order_for_weight(W));
  const TauSeries Z = hodge_partition_for(curve, W, mode);
  const PolySpace tspace = hodge_space(VarKind::t, W, mode);

  TPoly lhs = substitute_forms(Z.body, tqp_forms(params, (W - 1) / 2), tspace);
  TPoly base_t = T_to_t(base_tau_T(base_theory(mode), hodge_space(VarKind::T, W, mode)));
  TPoly rhs = rl_rhs(curve, witt_coefficients(curve.f, W), shift_data(curve), base_t, givental_mode(mode));

  DressingResult res;
  res.report.name = mode == HodgeMode::standard ? "theorem-hodge" : "theorem-theta";
  res.report.checked = static_cast<int>(std::max(lhs.size(), rhs.size()));
  if (!(lhs == rhs)) res.report.fail("tau_{q,p} sides differ:\n" + diff_report(lhs, rhs));
  if (params.p == -2 * params.q) {
    if (lhs.depends_on_even_times()) res.report.fail("p = -2q but the result depends on even times");
    else res.report.notes.push_back("p = -2q: no even times present");
  }
  res.tau.body = std::move(lhs);
  res.tau.kind = mode == HodgeMode::standard ? TauKind::tau_qp : TauKind::tau_theta_qp;
  res.tau.provenance.params = params;
  res.tau.provenance.W = W;
  res.tau.provenance.pipeline = "givental-then-change-of-variables";
  return res;
}

}  // namespace

TauSeries hodge_partition(const CurveParams& params, int W, HodgeMode mode) {
  if (W < (mode == HodgeMode::standard ? 3 : 1)) throw Error("hodge_partition: weight too small");
  params.validate();
  return hodge_partition_for(build_curve(params, curve_order_for_weight(W)), W, mode);
}

DressingResult theorem_hodge_check(const CurveParams& params, int W) { return theorem_check(params, W, HodgeMode::standard); }

DressingResult theorem_theta_check(const CurveParams& params, int W) { return theorem_check(params, W, HodgeMode::theta); }

}  // namespace hodgekp
