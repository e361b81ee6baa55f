#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgekp/rational.hpp"
#include "hodgekp/zseries.hpp"

namespace hodgekp {

// A parameter point (q, p) together with a chosen square root s of p + q.
struct CurveParams {
  Rational q;
  Rational p;
  Rational s;

  static CurveParams make(const Rational& q, const Rational& p, const Rational& s);
  void validate() const;
  std::string label() const;  // "(q,p,s)=(1,3,2)"
  friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

// The shipped catalog: (1,3,2), (-1,2,1), (0,4,2), (4,0,2), (3,1,2).
std::vector<CurveParams> catalog_points();

class SquareMatrix {
 public:
  SquareMatrix() = default;
  // Indices run over base .. base + size - 1 in both directions.
  SquareMatrix(int size, int base) : size_(size), base_(base), a_(static_cast<std::size_t>(size * size)) {}

  int size() const { return size_; }
  int base() const { return base_; }
  Rational& operator()(int i, int j) { return a_[idx(i, j)]; }
  const Rational& operator()(int i, int j) const { return a_[idx(i, j)]; }
  bool is_zero() const;
  bool is_symmetric() const;

 private:
  std::size_t idx(int i, int j) const;
  int size_ = 0;
  int base_ = 0;
  std::vector<Rational> a_;
};

using GrunskyMatrix = SquareMatrix;   // v_{km}, 1 <= k, m <= size
using GiventalMatrix = SquareMatrix;  // V_{kl}, 0 <= k, l < size

struct CurveSeries {
  std::optional<CurveParams> params;  // empty for curves built from an arbitrary denominator
  int K = 0;
  ZSeries N;     // (1 + s z)(1 + q z / s)
  ZSeries x;     // integral of z dz / N
  ZSeries f;     // f^2 / 2 = x, f = z + O(z^2)
  ZSeries h;     // compositional inverse of f
  ZSeries y;     // integral of dz / N
  ZSeries R;     // Bernoulli R-series (or R(z) = I(-z) for non-family curves)
  ZSeries logR;
  ZSeries I;     // Gaussian moments of zeta / h(zeta)
};

struct WittCoeffs {
  std::vector<Rational> a;  // a[k] for 1 <= k <= count; a[0] unused
  int count() const { return static_cast<int>(a.size()) - 1; }
  Rational operator[](int k) const { return k >= 1 && k < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(k)] : Rational(0); }
};

// All vectors are indexed by k; entries outside their natural range are zero.
struct ShiftData {
  std::vector<Rational> delta;   // sum delta_k z^k = z (1 - R(-z))
  std::vector<Rational> delta0;  // sum delta0_k z^k = 1 - R(-z)
  std::vector<Rational> v;       // v_k = [z^k] int (f - y) dx
  std::vector<Rational> v0;      // v0_k = [z^k] (f - y)
};

Rational bernoulli(int k);

ZSeries log_r_series(const CurveParams& params, int K);
ZSeries r_series(const CurveParams& params, int K);

CurveSeries build_curve(const CurveParams& params, int K);
// Curve with x = int z dz / N for an arbitrary denominator N (N(0) = 1); R is defined by R(-z) = I(z).
CurveSeries build_curve_from_denominator(const std::vector<Rational>& denominator, int K);

// Sum_k [zeta^{2k}] G (2k-1)!! z^k for k <= K.
ZSeries gaussian_moments(const ZSeries& G, int K);
// I(z) to order K; needs h to order 2K + 1.
ZSeries i_series(const ZSeries& h, int K);
ZSeries i_series(const CurveSeries& curve, int K);

GrunskyMatrix grunsky_matrix(const ZSeries& h, int size);
GiventalMatrix givental_v_matrix(const ZSeries& R, int size);

// exp(D) z with D = -sum a_k z^{k+1} d/dz, to order K.
ZSeries witt_flow(const WittCoeffs& a, int K);
// Peels a_1 .. a_count off f (count defaults to order(f) - 1).
WittCoeffs witt_coefficients(const ZSeries& f, int count = -1);

ShiftData shift_data(const CurveSeries& curve);

// V_{km} - (2k+1)!!(2m+1)!! v_{2k+1,2m+1} for 0 <= k, m < size.
SquareMatrix identification_residual(const CurveSeries& curve, int size);
// Division-free form: [w^k z^m](1 - R(-w)R(-z)) minus the (w + z)-multiple of the Grunsky side.
// Defined even when R is not symplectic; vanishes exactly when the residual does.
SquareMatrix identification_defect(const CurveSeries& curve, int size);

// Denominator of the out-of-family control curve: 1 + (5/2) z + z^2 + z^4.
std::vector<Rational> perturbed_denominator();

}  // namespace hodgekp
