#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodgekp/curve.hpp"
#include "hodgekp/report.hpp"
#include "hodgekp/tpoly.hpp"

namespace hodgekp {

inline constexpr const char* kEngineVersion = "0.1.0";

enum class TauKind { KW, BGW, HodgeZ, ThetaZ, tau_qp, tau_theta_qp };
std::string to_string(TauKind kind);
TauKind tau_kind_from_string(const std::string& s);

struct Provenance {
  std::optional<CurveParams> params;
  int W = 0;
  std::string pipeline;
};

struct TauSeries {
  TPoly body;
  TauKind kind = TauKind::KW;
  Provenance provenance;
};

// Intersection numbers <tau_{a_1} ... tau_{a_n}>_g.
//   KW:  psi classes only; <tau_0^3>_0 = 1, <tau_1>_1 = 1/24.
//   BGW: psi classes against the Theta class; <tau_0>_1 = 1/8.
// Both follow the Virasoro recursion
//   (2k+1)!! <tau_k tau_S>_g = sum_j (2k + 2a_j + 1 - 2s)!! / (2a_j - 1)!! <tau_{k + a_j - s} tau_{S\j}>_g
//     + 1/2 sum_{a+b = k-1-s} (2a+1)!!(2b+1)!! (<tau_a tau_b tau_S>_{g-1} + sum <tau_a tau_I>_{g1} <tau_b tau_J>_{g2})
// with s = 1 for KW and s = 0 for BGW. Memoized; one instance per thread.
class Correlators {
 public:
  enum class Theory { KW, BGW };
  explicit Correlators(Theory theory) : theory_(theory) {}

  Theory theory() const { return theory_; }
  Rational operator()(int g, std::vector<int> insertions);
  // sum a_i for a nonzero correlator of genus g with n points, or -1 if none exists.
  int degree(int g, int n) const;

 private:
  Rational compute(int g, const std::vector<int>& a);

  Theory theory_;
  std::map<std::pair<int, std::vector<int>>, Rational> memo_;
};

// log tau = sum hbar^{2g-2+n} <prod tau_{a_i}>_g prod T_{a_i} / n!, every term of weight <= max_weight.
TPoly base_free_energy(Correlators::Theory theory, PolySpace space, int max_weight);
// exp(base_free_energy) in the given T-side space (its grading sees grade = weight on the base).
TPoly base_tau_T(Correlators::Theory theory, PolySpace space);

TauSeries kw_tau(int W);
TauSeries bgw_tau(int W);

// String / dilaton residuals of the generated free energy at weight <= W - 1.
CheckReport generator_self_check(Correlators::Theory theory, int W);

enum class HodgeMode { standard, theta };

// Graded space used for the Hodge (standard) or Theta partition functions.
PolySpace hodge_space(VarKind kind, int W, HodgeMode mode);

// Z_{q,p} = R^ tau_KW (standard) or Z^Theta_{q,p} = R^0 tau_BGW (theta), T-side.
// Both Givental pipelines are run; disagreement throws InvariantViolation with the diff.
TauSeries hodge_partition(const CurveParams& params, int W, HodgeMode mode);

struct DressingResult {
  CheckReport report;
  TauSeries tau;  // tau_{q,p}(t) from the left-hand side
};

// Z_{q,p}(T^{q,p}(t)) = exp(hbar^{-1} sum v_k d_k) exp(sum a_k L_k) tau_KW(t).
DressingResult theorem_hodge_check(const CurveParams& params, int W);
// The Theta analogue with tau_BGW and the v0 shifts.
DressingResult theorem_theta_check(const CurveParams& params, int W);

}  // namespace hodgekp
