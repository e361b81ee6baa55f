#include "hodgekp/operators.hpp"

#include <algorithm>
#include <sstream>

#include "hodgekp/error.hpp"
#include "hodgekp/parallel.hpp"

namespace hodgekp {

namespace {

int cap_index(int i) { return std::min(i, kMaxVariables - 1); }

void require_kind(const TPoly& p, VarKind kind, const char* op) {
  if (p.kind() != kind)
    throw Error(std::string(op) + ": " + (kind == VarKind::t ? "T-side input" : "t-side input"));
}

}  // namespace

// ---- OpExpr ----

void OpExpr::add(const CoeffRing& coef, std::vector<int> multiplied, std::vector<int> differentiated) {
  if (coef.is_zero()) return;
  const int lo = first_index(kind_);
  for (int i : multiplied)
    if (i < lo || i >= kMaxVariables) throw Error("operator index out of range: " + std::to_string(i));
  for (int i : differentiated)
    if (i < lo || i >= kMaxVariables) throw Error("operator index out of range: " + std::to_string(i));
  std::sort(multiplied.begin(), multiplied.end());
  std::sort(differentiated.begin(), differentiated.end());
  auto [it, inserted] = terms_.try_emplace({std::move(multiplied), std::move(differentiated)}, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OpExpr& OpExpr::operator+=(const OpExpr& o) {
  if (o.kind_ != kind_) throw Error("operator sum: mixed variable kinds");
  for (const auto& [key, c] : o.terms_) add(c, key.first, key.second);
  return *this;
}

OpExpr OpExpr::scaled(const CoeffRing& c) const {
  OpExpr r(kind_);
  for (const auto& [key, v] : terms_) r.add(v * c, key.first, key.second);
  return r;
}

int OpExpr::weight_drop() const {
  int drop = kUnbounded;
  for (const auto& [key, c] : terms_) {
    int d = 0;
    for (int i : key.second) d += variable_weight(kind_, i);
    for (int i : key.first) d -= variable_weight(kind_, i);
    drop = std::min(drop, d);
  }
  return drop;
}

TPoly OpExpr::apply(const TPoly& p) const {
  if (p.kind() != kind_) throw Error("operator kind does not match polynomial kind");
  TPoly out(p.space());
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [key, coef] : terms_) {
      Monomial r = m;
      long factor = 1;
      bool vanishes = false;
      for (int i : key.second) {
        int e = r[i];
        if (e == 0) {
          vanishes = true;
          break;
        }
        factor *= e;
        r.set(i, e - 1);
      }
      if (vanishes) continue;
      for (int i : key.first) r.raise(i);
      out.add_term(r, (c * coef) * Rational(factor));
    }
  }
  return out;
}

// ---- generators ----

OpExpr virasoro_op(int m, int max_index) {
  OpExpr op(VarKind::t);
  max_index = cap_index(max_index);
  for (int a = 1; a < -m; ++a) {
    int b = -m - a;
    if (a <= max_index && b <= max_index) op.add(CoeffRing(rat(a * b, 2)), {a, b}, {});
  }
  for (int k = 1; k <= max_index; ++k)
    if (k + m >= 1 && k + m <= max_index) op.add(CoeffRing(k), {k}, {k + m});
  for (int a = 1; a < m; ++a) {
    int b = m - a;
    if (a <= max_index && b <= max_index) op.add(CoeffRing(rat(1, 2)), {}, {a, b});
  }
  return op;
}

OpExpr heisenberg_op(int k) {
  if (k == 0) throw Error("heisenberg_apply: k = 0");
  OpExpr op(VarKind::t);
  if (k > 0)
    op.add(CoeffRing(1), {}, {k});
  else
    op.add(CoeffRing(-k), {-k}, {});
  return op;
}

OpExpr witt_op(const WittCoeffs& a, int max_index) {
  OpExpr op(VarKind::t);
  // L_k still acts through its second-derivative part while k <= 2 * max_index.
  for (int k = 1; k <= a.count() && k <= 2 * max_index; ++k)
    if (a[k] != 0) op += virasoro_op(k, max_index).scaled(CoeffRing(a[k]));
  return op;
}

OpExpr linear_witt_op(const WittCoeffs& a, int max_index) {
  OpExpr op(VarKind::t);
  max_index = cap_index(max_index);
  for (int k = 1; k <= a.count() && k <= max_index; ++k) {
    if (a[k] == 0) continue;
    for (int m = 1; m + k <= max_index; ++m) op.add(CoeffRing(a[k] * m), {m}, {k + m});
  }
  return op;
}

OpExpr translation_op(VarKind kind, const std::vector<CoeffRing>& shift) {
  OpExpr op(kind);
  for (int k = first_index(kind); k < static_cast<int>(shift.size()) && k < kMaxVariables; ++k)
    op.add(shift[static_cast<std::size_t>(k)], {}, {k});
  return op;
}

OpExpr w_op(int k, int max_index, GiventalMode mode) {
  if (k <= 0) throw Error("w_apply: k must be positive");
  OpExpr op(VarKind::T);
  max_index = cap_index(max_index);
  const int shift = mode == GiventalMode::standard ? 1 : 0;
  for (int m = 0; m + 2 * k - 1 <= max_index; ++m) op.add(CoeffRing(-1), {m}, {m + 2 * k - 1});
  if (shift + 2 * k - 1 <= max_index) op.add(CoeffRing(1, -1), {}, {shift + 2 * k - 1});
  for (int m = 0; m <= 2 * k - 2; ++m) {
    int n = 2 * k - 2 - m;
    if (m <= max_index && n <= max_index) op.add(CoeffRing(rat(m % 2 == 0 ? 1 : -1, 2)), {}, {m, n});
  }
  return op;
}

OpExpr quadratic_op(const GiventalMatrix& V) {
  OpExpr op(VarKind::T);
  for (int i = 0; i < V.size(); ++i)
    for (int j = 0; j < V.size(); ++j)
      if (V(i, j) != 0) op.add(CoeffRing(V(i, j) / 2), {}, {i, j});
  return op;
}

TPoly virasoro_apply(int m, const TPoly& p) {
  require_kind(p, VarKind::t, "virasoro_apply");
  int cap = std::max(p.max_index(), 0) + std::abs(m);
  return virasoro_op(m, cap).apply(p);
}

TPoly heisenberg_apply(int k, const TPoly& p) {
  require_kind(p, VarKind::t, "heisenberg_apply");
  return heisenberg_op(k).apply(p);
}

TPoly w_apply(int k, const TPoly& p, GiventalMode mode) {
  require_kind(p, VarKind::T, "w_apply");
  return w_op(k, std::max(p.max_index(), 0), mode).apply(p);
}

TPoly exp_apply(const OpExpr& op, const TPoly& p) {
  if (op.is_zero() || p.is_zero()) return p;
  if (op.weight_drop() < 1) throw Error("exponential does not terminate on truncated space");
  TPoly sum = p, term = p;
  const int limit = p.max_weight() / op.weight_drop() + 1;
  for (int n = 1;; ++n) {
    term = op.apply(term);
    if (term.is_zero()) break;
    if (n > limit) throw InvariantViolation("exponential exceeded its nilpotence bound");
    term *= CoeffRing(rat(1, n));
    sum += term;
  }
  return sum;
}

// ---- Givental action ----

std::vector<Rational> couplings_from_log_r(const ZSeries& logR) {
  std::vector<Rational> c(1);
  for (int k = 1; 2 * k - 1 <= logR.order(); ++k) c.push_back(logR[2 * k - 1]);
  return c;
}

TPoly givental_direct(const std::vector<Rational>& couplings, const TPoly& p, GiventalMode mode) {
  require_kind(p, VarKind::T, "givental_direct");
  if (p.is_zero()) return p;
  const int cap = std::max(p.max_index(), 0);
  OpExpr op(VarKind::T);
  for (int k = 1; k < static_cast<int>(couplings.size()) && k <= cap + 1; ++k)
    if (couplings[static_cast<std::size_t>(k)] != 0)
      op += w_op(k, cap, mode).scaled(CoeffRing(couplings[static_cast<std::size_t>(k)]));
  return exp_apply(op, p);
}

TPoly givental_factorized(const ZSeries& R, const TPoly& p, GiventalMode mode) {
  require_kind(p, VarKind::T, "givental_factorized");
  if (R[0] != 1) throw Error("givental_factorized: R(0) must be 1");
  if (p.is_zero()) return p;
  const int cap = std::max(p.max_index(), 0);
  if (R.order() < 2 * cap + 1) throw Error("givental_factorized: R order too small for input");
  const ZSeries Rm = R.reflected();

  std::vector<CoeffRing> delta(static_cast<std::size_t>(cap + 1));
  for (int k = 1; k <= cap; ++k) {
    Rational d = mode == GiventalMode::standard ? (k >= 2 ? -Rm[k - 1] : Rational(0)) : -Rm[k];
    delta[static_cast<std::size_t>(k)] = CoeffRing(d, -1);
  }
  TPoly y = exp_apply(translation_op(VarKind::T, delta), p);
  y = exp_apply(quadratic_op(givental_v_matrix(R, cap + 1)), y);

  std::map<int, TPoly> images;
  for (int k = 0; k <= cap; ++k) {
    TPoly img(p.space());
    for (int j = 0; j <= k; ++j) img.add_term(Monomial::variable(j), Rm[k - j]);
    images.emplace(k, std::move(img));
  }
  return substitute(y, images, p.space());
}

// ---- linear changes of variables ----

TPoly LinearForm::to_tpoly(PolySpace space) const {
  if (space.kind != kind) throw Error("linear form kind differs from target space");
  TPoly r(space);
  for (const auto& [i, c] : coeffs) r.add_term(Monomial::variable(i), c);
  return r;
}

Rational LinearForm::evaluate(const std::vector<Rational>& values) const {
  Rational s = 0;
  for (const auto& [i, c] : coeffs) {
    if (i >= static_cast<int>(values.size())) throw Error("linear form evaluated past the supplied values");
    s += c * values[static_cast<std::size_t>(i)];
  }
  return s;
}

std::vector<LinearForm> tqp_forms(const CurveParams& params, int max_index) {
  params.validate();
  const int cap = 2 * max_index + 1;
  if (cap >= kMaxVariables) throw Error("tqp_forms: index too large");
  const PolySpace space{VarKind::t, kUnbounded};
  OpExpr step = virasoro_op(0, cap).scaled(CoeffRing(params.q));
  step += virasoro_op(-1, cap).scaled(CoeffRing((2 * params.q + params.p) / params.s));
  step += virasoro_op(-2, cap);
  const TPoly half_t1sq = TPoly::monomial(space, Monomial::variable(1, 2), CoeffRing(rat(1, 2)));

  std::vector<LinearForm> forms;
  TPoly T = TPoly::variable(space, 1);
  for (int k = 0; k <= max_index; ++k) {
    if (k > 0) T = step.apply(T) - half_t1sq * T;
    LinearForm f;
    for (const auto& [m, c] : T.terms()) {
      if (m.degree() != 1 || c.min_exponent() != 0 || c.max_exponent() != 0)
        throw InvariantViolation("T^{q,p}_" + std::to_string(k) + " is not linear in t", to_string(T));
      f.coeffs[m.max_index()] = c.coefficient(0);
    }
    forms.push_back(std::move(f));
  }
  return forms;
}

std::vector<LinearForm> tqp_symbol_forms(const CurveParams& params, int max_index) {
  params.validate();
  const Rational b = (params.p + 2 * params.q) / params.s;
  std::map<int, Rational> phi{{1, Rational(1)}};  // exponent j of z^{-j}
  std::vector<LinearForm> forms;
  for (int k = 0; k <= max_index; ++k) {
    if (k > 0) {
      std::map<int, Rational> next;
      // D z^{-j} = j (z^{-j-2} + b z^{-j-1} + q z^{-j})
      for (const auto& [j, c] : phi) {
        next[j + 2] += c * j;
        next[j + 1] += c * j * b;
        next[j] += c * j * params.q;
      }
      phi.clear();
      for (const auto& [j, c] : next)
        if (c != 0) phi.emplace(j, c);
    }
    LinearForm f;
    for (const auto& [j, c] : phi) f.coeffs[j] = c * j;
    forms.push_back(std::move(f));
  }
  return forms;
}

std::vector<LinearForm> composite_forms(const ZSeries& R, const std::vector<LinearForm>& forms) {
  const ZSeries Rm = R.reflected();
  std::vector<LinearForm> out;
  for (int k = 0; k < static_cast<int>(forms.size()); ++k) {
    if (k > Rm.order()) throw Error("composite_forms: R order too small");
    LinearForm f;
    f.kind = forms.empty() ? VarKind::t : forms[0].kind;
    for (int j = 0; j <= k; ++j) {
      Rational r = Rm[k - j];
      if (r == 0) continue;
      for (const auto& [i, c] : forms[static_cast<std::size_t>(j)].coeffs) f.coeffs[i] += r * c;
    }
    std::erase_if(f.coeffs, [](const auto& kv) { return kv.second == 0; });
    out.push_back(std::move(f));
  }
  return out;
}

TPoly T_to_t(const TPoly& p) {
  require_kind(p, VarKind::T, "T_to_t");
  PolySpace target = p.space();
  target.kind = VarKind::t;
  TPoly out(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial r;
    Rational factor = 1;
    for (int k = 0; k <= m.max_index(); ++k) {
      if (m[k] == 0) continue;
      if (2 * k + 1 >= kMaxVariables) throw Error("T_to_t: index too large");
      r.set(2 * k + 1, m[k]);
      factor *= power(double_factorial(2 * k + 1), m[k]);
    }
    out.add_term(r, c * factor);
  }
  return out;
}

TPoly odd_t_to_T(const TPoly& p) {
  require_kind(p, VarKind::t, "odd_t_to_T");
  PolySpace target = p.space();
  target.kind = VarKind::T;
  TPoly out(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial r;
    Rational factor = 1;
    for (int i = 1; i <= m.max_index(); ++i) {
      if (m[i] == 0) continue;
      if (i % 2 == 0) throw Error("odd_t_to_T: input depends on even times");
      r.set((i - 1) / 2, m[i]);
      factor /= power(double_factorial(i), m[i]);
    }
    out.add_term(r, c * factor);
  }
  return out;
}

TPoly substitute_forms(const TPoly& p, const std::vector<LinearForm>& forms, PolySpace target) {
  std::map<int, TPoly> images;
  for (int k = 0; k <= p.max_index(); ++k) {
    if (k >= static_cast<int>(forms.size())) throw Error("substitute_forms: not enough forms");
    images.emplace(k, forms[static_cast<std::size_t>(k)].to_tpoly(target));
  }
  return substitute(p, images, target);
}

// ---- checks ----

CheckReport operator_equality_check(const std::string& name, const TPolyMap& lhs, const TPolyMap& rhs,
                                    const std::vector<Monomial>& basis, PolySpace space) {
  std::vector<std::string> diffs(basis.size());
  parallel_for(basis.size(), [&](std::size_t i) {
    TPoly in = TPoly::monomial(space, basis[i]);
    TPoly a = lhs(in), b = rhs(in);
    if (!(a == b)) diffs[i] = "input " + to_string(space.kind, basis[i]) + ":\n" + diff_report(a, b);
  });
  CheckReport r;
  r.name = name;
  r.checked = static_cast<int>(basis.size());
  for (auto& d : diffs)
    if (!d.empty()) r.fail(std::move(d));
  return r;
}

int curve_order_for_weight(int W) { return 2 * W + 3; }

namespace {

void require_order(const CurveSeries& curve, int K, const char* what) {
  if (curve.K < K) throw Error(std::string(what) + ": curve order " + std::to_string(curve.K) + " below required " +
                               std::to_string(K));
}

// J-mode coefficients c_k of h' J(h): V J_m V^{-1} = sum_k c_k J_k, for -W <= k <= W, k != 0.
std::map<int, Rational> conjugation_modes(const ZSeries& h, int m, int W) {
  std::map<int, Rational> c;
  const ZSeries hp = h.derivative();
  ZSeries u(h.order() - 1);
  for (int i = 0; i <= h.order() - 1; ++i) u.set(i, h[i + 1]);
  for (int k = std::max(m, 1); k <= W; ++k) {
    // [z^{-m-1}] h' h^{-k-1} = [z^{k-m}] h' u^{-k-1}
    ZSeries g = hp * pow(u, -k - 1);
    if (g.order() < k - m) throw Error("conjugation check: h order too small");
    Rational v = g[k - m];
    if (v != 0) c[k] = v;
  }
  if (m < 0) {
    const int n = -m;
    // J_{-j} = j t_j; [z^{n-1}] (h^j)'/j = (n/j)[z^n] h^j
    for (int j = 1; j <= n; ++j) {
      Rational v = pow(h, j)[n] * n / j;
      if (v != 0) c[-j] = v;
    }
  }
  return c;
}

}  // namespace

CheckReport virasoro_conjugation_check(const CurveSeries& curve, int W, const std::optional<WittCoeffs>& override_a) {
  require_order(curve, 2 * W + 1, "conjugation check");
  const WittCoeffs a = override_a ? *override_a : witt_coefficients(curve.f, 2 * W);
  WittCoeffs minus_a = a;
  for (auto& x : minus_a.a) x = -x;
  const auto basis = monomial_basis(VarKind::t, W);
  const PolySpace out_space{VarKind::t, W};

  CheckReport report;
  report.name = "conjugation";
  for (int m = -W; m <= W; ++m) {
    if (m == 0) continue;
    const int bound = W + std::max(0, -m);
    const PolySpace wide{VarKind::t, bound};
    const OpExpr V = witt_op(a, bound), Vinv = witt_op(minus_a, bound);
    const OpExpr Jm = heisenberg_op(m);
    OpExpr rhs(VarKind::t);
    for (const auto& [k, c] : conjugation_modes(curve.h, m, W)) rhs += heisenberg_op(k).scaled(CoeffRing(c));

    auto lhs_map = [&](const TPoly& p) {
      return exp_apply(V, Jm.apply(exp_apply(Vinv, p.in_space(wide)))).in_space(out_space);
    };
    auto rhs_map = [&](const TPoly& p) { return rhs.apply(p.in_space(wide)).in_space(out_space); };
    CheckReport r = operator_equality_check("conjugation m=" + std::to_string(m), lhs_map, rhs_map, basis, out_space);
    for (auto& f : r.failures) f = "m=" + std::to_string(m) + ", " + f;
    report.merge(r);
  }
  return report;
}

CheckReport changevars_check(const CurveSeries& curve, int W) {
  if (!curve.params) throw Error("changevars check needs a parameter point");
  const int kmax = (W - 1) / 2;
  require_order(curve, W + 1, "changevars check");
  const auto lambda = composite_forms(curve.R, tqp_forms(*curve.params, kmax));
  const WittCoeffs a = witt_coefficients(curve.f, W);
  const PolySpace space{VarKind::t, W};
  const OpExpr V0 = linear_witt_op(a, W);

  CheckReport r;
  r.name = "lemma-changevars";
  for (int k = 0; k <= kmax; ++k) {
    TPoly lhs = lambda[static_cast<std::size_t>(k)].to_tpoly(space);
    TPoly rhs = exp_apply(V0, TPoly::variable(space, 2 * k + 1, CoeffRing(double_factorial(2 * k + 1))));
    ++r.checked;
    if (!(lhs == rhs)) r.fail("k=" + std::to_string(k) + ":\n" + diff_report(lhs, rhs));
  }
  return r;
}

CheckReport shift_identity_check(const CurveSeries& curve, int W) {
  if (!curve.params) throw Error("shift identity check needs a parameter point");
  const int kmax = (W - 1) / 2;
  require_order(curve, W + 1, "shift identity check");
  const auto lambda = composite_forms(curve.R, tqp_forms(*curve.params, kmax));
  const ShiftData s = shift_data(curve);
  auto at = [](const std::vector<Rational>& v, int k) {
    return k < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(k)] : Rational(0);
  };
  CheckReport r;
  r.name = "shift-identity";
  for (int k = 0; k <= kmax; ++k) {
    const auto& form = lambda[static_cast<std::size_t>(k)];
    Rational lv = form.evaluate(s.v), lv0 = form.evaluate(s.v0);
    r.checked += 2;
    if (lv != at(s.delta, k))
      r.fail("k=" + std::to_string(k) + ": Lambda(v) = " + to_string(lv) + ", delta = " + to_string(at(s.delta, k)));
    if (lv0 != at(s.delta0, k))
      r.fail("k=" + std::to_string(k) + ": Lambda(v0) = " + to_string(lv0) + ", delta0 = " + to_string(at(s.delta0, k)));
  }
  return r;
}

TPoly rl_lhs(const CurveSeries& curve, const std::vector<LinearForm>& tqp, const TPoly& p, GiventalMode mode) {
  TPoly T = odd_t_to_T(p);
  return substitute_forms(givental_factorized(curve.R, T, mode), tqp, p.space());
}

TPoly rl_rhs(const CurveSeries& /*curve*/, const WittCoeffs& a, const ShiftData& shifts, const TPoly& p,
             GiventalMode mode) {
  require_kind(p, VarKind::t, "rl_rhs");
  const int cap = std::max(p.max_index(), 0);
  const auto& v = mode == GiventalMode::standard ? shifts.v : shifts.v0;
  std::vector<CoeffRing> shift(static_cast<std::size_t>(cap + 1));
  for (int k = 1; k <= cap && k < static_cast<int>(v.size()); ++k)
    shift[static_cast<std::size_t>(k)] = CoeffRing(v[static_cast<std::size_t>(k)], -1);
  TPoly y = exp_apply(witt_op(a, cap), p);
  return exp_apply(translation_op(VarKind::t, shift), y);
}

CheckReport rl_check(const CurveSeries& curve, int W, GiventalMode mode) {
  if (!curve.params) throw Error("identification theorem check needs a parameter point");
  require_order(curve, curve_order_for_weight(W), "identification theorem check");
  const auto tqp = tqp_forms(*curve.params, (W - 1) / 2);
  const WittCoeffs a = witt_coefficients(curve.f, W);
  const ShiftData shifts = shift_data(curve);
  const PolySpace space{VarKind::t, W};
  auto lhs = [&](const TPoly& p) { return rl_lhs(curve, tqp, p, mode); };
  auto rhs = [&](const TPoly& p) { return rl_rhs(curve, a, shifts, p, mode); };
  return operator_equality_check(mode == GiventalMode::standard ? "theorem-rl" : "theorem-rl-theta", lhs, rhs,
                                 monomial_basis(VarKind::t, W, true), space);
}

CheckReport factorization_check(const ZSeries& R, int W, GiventalMode mode) {
  const auto couplings = couplings_from_log_r(log1p(R - ZSeries::constant(1, R.order())));
  const PolySpace space{VarKind::T, W};
  auto lhs = [&](const TPoly& p) { return givental_direct(couplings, p, mode); };
  auto rhs = [&](const TPoly& p) { return givental_factorized(R, p, mode); };
  return operator_equality_check("lemma-factorization", lhs, rhs, monomial_basis(VarKind::T, W), space);
}

}  // namespace hodgekp
