#pragma once

#include <map>
#include <string>
#include <vector>

#include "hodgekp/report.hpp"
#include "hodgekp/tpoly.hpp"

namespace hodgekp {

// Evaluates hbar at a nonzero rational.
// Plain-graded input: coefficients become scalars (hbar exponent 0), same weight bound.
// Graded input (grading (A, B), B != 1 or A != 0): a hbar^e t^m becomes a value^e eps^{grade} t^m
// in the epsilon grading; this is tau(eps^B t; hbar = value eps^A), still a KP tau-function.
TPoly specialize_hbar(const TPoly& p, const Rational& value);

// Polynomial in the Hirota derivatives D_1, D_2, ...; Monomial index k is D_k.
using HirotaPoly = std::map<Monomial, Rational>;

// Q(D) tau . tau, truncated to the range where it is exactly determined by the truncated tau.
// Returns the residual and the covered bound (t-weight for plain input, eps-grade for graded input).
TPoly hirota_residual(const TPoly& tau, const HirotaPoly& Q, int* covered = nullptr);

// Coefficients of y^beta (|beta| <= y_weight) in sum_j p_j(-2y) p_{j+1}(D/k) exp(sum y_r D_r).
std::map<Monomial, HirotaPoly> kp_bilinear_family(int y_weight);

struct HirotaEquation {
  std::string label;
  int covered = 0;
  bool passed = true;
};

struct HirotaFailure {
  std::string equation;
  std::string monomial;
  std::string residual;
};

struct HirotaReport {
  std::string check;
  std::string hbar;        // filled by callers that specialized hbar
  int y_weight = 0;
  int covered_weight = 0;  // residual range guaranteed exact by every equation
  std::string covered_by;  // "weight" or "grade"
  std::vector<HirotaEquation> equations;
  std::vector<HirotaFailure> failures;  // capped; failure_count has the total
  int failure_count = 0;

  bool passed() const { return failure_count == 0; }
};

// (D_1^4 + 3 D_2^2 - 4 D_1 D_3) tau . tau = 0.
HirotaReport hirota_first_equation(const TPoly& tau);
// Every y-coefficient of the bilinear identity with |beta| <= y_weight.
HirotaReport hirota_full_check(const TPoly& tau, int y_weight);

// Passes iff no monomial contains an even-index time.
CheckReport kdv_reduction_check(const TPoly& tau);

}  // namespace hodgekp
