#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hodgekp/curve.hpp"
#include "hodgekp/report.hpp"
#include "hodgekp/tpoly.hpp"

namespace hodgekp {

// Finite sum of elementary actions  coef * (prod of multiplications) o (prod of derivatives).
// Derivatives act first. Terms with equal index lists are merged.
class OpExpr {
 public:
  using Key = std::pair<std::vector<int>, std::vector<int>>;  // (multiplied, differentiated), sorted

  explicit OpExpr(VarKind kind = VarKind::t) : kind_(kind) {}

  VarKind kind() const { return kind_; }
  const std::map<Key, CoeffRing>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const CoeffRing& coef, std::vector<int> multiplied, std::vector<int> differentiated);
  OpExpr& operator+=(const OpExpr& o);
  OpExpr scaled(const CoeffRing& c) const;

  // Minimum over terms of (weight differentiated away) - (weight multiplied in).
  int weight_drop() const;
  TPoly apply(const TPoly& p) const;

 private:
  VarKind kind_;
  std::map<Key, CoeffRing> terms_;
};

// t-side generators. Indices above max_index are left out, which is exact on inputs
// whose variables all have index <= max_index and whose images are truncated there.
OpExpr virasoro_op(int m, int max_index);
OpExpr heisenberg_op(int k);
// sum_k a_k L_k for 1 <= k <= a.count().
OpExpr witt_op(const WittCoeffs& a, int max_index);
// Linear part only: sum_k a_k sum_m m t_m d/dt_{k+m}.
OpExpr linear_witt_op(const WittCoeffs& a, int max_index);
// sum_k c_k d/dt_k (or d/dT_k), coefficient index = variable index.
OpExpr translation_op(VarKind kind, const std::vector<CoeffRing>& shift);

// Dilaton shift position: T_1 for the standard action, T_0 for the theta action.
enum class GiventalMode { standard, theta };

// T-side W_k, k >= 1.
OpExpr w_op(int k, int max_index, GiventalMode mode = GiventalMode::standard);
// (1/2) sum V_ij d/dT_i d/dT_j over 0 <= i, j < V.size().
OpExpr quadratic_op(const GiventalMatrix& V);

TPoly virasoro_apply(int m, const TPoly& p);
TPoly heisenberg_apply(int k, const TPoly& p);
TPoly w_apply(int k, const TPoly& p, GiventalMode mode = GiventalMode::standard);
// sum_n op^n p / n!; requires weight_drop >= 1.
TPoly exp_apply(const OpExpr& op, const TPoly& p);

// c_k = [z^{2k-1}] log R; index 0 unused.
std::vector<Rational> couplings_from_log_r(const ZSeries& logR);
// exp(sum c_k W_k) p. Couplings beyond the vector are zero.
TPoly givental_direct(const std::vector<Rational>& couplings, const TPoly& p,
                      GiventalMode mode = GiventalMode::standard);
// Same action through translation, quadratic exponential and linear change of variables.
TPoly givental_factorized(const ZSeries& R, const TPoly& p, GiventalMode mode = GiventalMode::standard);

// Degree <= 1 polynomial in the variables of one kind (no constant term).
struct LinearForm {
  VarKind kind = VarKind::t;
  std::map<int, Rational> coeffs;

  TPoly to_tpoly(PolySpace space) const;
  Rational evaluate(const std::vector<Rational>& values) const;  // values indexed by variable
  int max_index() const { return coeffs.empty() ? -1 : coeffs.rbegin()->first; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// T^{q,p}_k for 0 <= k <= max_index, from the Virasoro recursion; linearity is asserted.
std::vector<LinearForm> tqp_forms(const CurveParams& params, int max_index);
// The same forms from D^k (1/z), D = -(N(z)/z) d/dz, with z^{-j} read as j t_j.
std::vector<LinearForm> tqp_symbol_forms(const CurveParams& params, int max_index);
// sum_{j <= k} [z^{k-j}] R(-z) * forms[j].
std::vector<LinearForm> composite_forms(const ZSeries& R, const std::vector<LinearForm>& forms);

// T_k -> (2k+1)!! t_{2k+1} and back. odd_t_to_T rejects even times.
TPoly T_to_t(const TPoly& p);
TPoly odd_t_to_T(const TPoly& p);
// Substitutes T_k -> forms[k](t) into a T-side polynomial.
TPoly substitute_forms(const TPoly& p, const std::vector<LinearForm>& forms, PolySpace target);

using TPolyMap = std::function<TPoly(const TPoly&)>;

// Applies both maps to every basis monomial (in parallel) and compares exactly.
CheckReport operator_equality_check(const std::string& name, const TPolyMap& lhs, const TPolyMap& rhs,
                                    const std::vector<Monomial>& basis, PolySpace space);

// Order needed from build_curve for the checks below at weight W.
int curve_order_for_weight(int W);

// V J_m V^{-1} = sum_k [z^{-m-1}](h' h^{-k-1}) J_k on the weight <= W basis, 1 <= |m| <= W.
// `override_a` replaces the Witt coefficients (used for negative controls).
CheckReport virasoro_conjugation_check(const CurveSeries& curve, int W,
                                       const std::optional<WittCoeffs>& override_a = std::nullopt);
// composite_forms(R, T^{q,p})_k = exp(linear_witt_op) (2k+1)!! t_{2k+1} for 2k + 1 <= W.
CheckReport changevars_check(const CurveSeries& curve, int W);
// composite forms evaluated at the translation vectors: Lambda(v) = delta, Lambda(v0) = delta0.
CheckReport shift_identity_check(const CurveSeries& curve, int W);

// Both sides of the Givental / Heisenberg-Virasoro identification on odd-t inputs.
TPoly rl_lhs(const CurveSeries& curve, const std::vector<LinearForm>& tqp, const TPoly& p, GiventalMode mode);
TPoly rl_rhs(const CurveSeries& curve, const WittCoeffs& a, const ShiftData& shifts, const TPoly& p,
             GiventalMode mode);
CheckReport rl_check(const CurveSeries& curve, int W, GiventalMode mode = GiventalMode::standard);
// Direct and factorized Givental actions agree on every T-monomial of weight <= W.
CheckReport factorization_check(const ZSeries& R, int W, GiventalMode mode = GiventalMode::standard);

}  // namespace hodgekp
