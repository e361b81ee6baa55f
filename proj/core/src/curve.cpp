#include "hodgekp/curve.hpp"

#include "hodgekp/error.hpp"

namespace hodgekp {

CurveParams CurveParams::make(const Rational& q, const Rational& p, const Rational& s) {
  CurveParams c{q, p, s};
  c.validate();
  return c;
}

void CurveParams::validate() const {
  if (p + q == 0) throw Error("excluded parameter locus p + q = 0");
  if (s == 0 || s * s != p + q) throw Error("s must satisfy s^2 = p + q, got " + label());
}

std::string CurveParams::label() const {
  return "(q,p,s)=(" + to_string(q) + "," + to_string(p) + "," + to_string(s) + ")";
}

std::vector<CurveParams> catalog_points() {
  return {
      CurveParams::make(1, 3, 2),  CurveParams::make(-1, 2, 1), CurveParams::make(0, 4, 2),
      CurveParams::make(4, 0, 2),  CurveParams::make(3, 1, 2),
  };
}

std::size_t SquareMatrix::idx(int i, int j) const {
  int a = i - base_, b = j - base_;
  if (a < 0 || b < 0 || a >= size_ || b >= size_) throw Error("matrix index out of range");
  return static_cast<std::size_t>(a * size_ + b);
}

bool SquareMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool SquareMatrix::is_symmetric() const {
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < i; ++j)
      if (a_[static_cast<std::size_t>(i * size_ + j)] != a_[static_cast<std::size_t>(j * size_ + i)]) return false;
  return true;
}

Rational bernoulli(int k) {
  if (k < 2 || k % 2 != 0) throw Error("bernoulli: index must be even and >= 2");
  // sum_{j=0}^{m} C(m+1, j) B_j = 0; even-index values are convention independent.
  std::vector<Rational> B(static_cast<std::size_t>(k + 1));
  B[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rational s = 0;
    mpz_class binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      s += Rational(binom) * B[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    B[static_cast<std::size_t>(m)] = -s / (m + 1);
  }
  return B[static_cast<std::size_t>(k)];
}

ZSeries log_r_series(const CurveParams& params, int K) {
  params.validate();
  const Rational& p = params.p;
  const Rational& q = params.q;
  Rational third = p * q / (p + q);
  ZSeries L(K);
  for (int k = 1; 2 * k - 1 <= K; ++k) {
    int n = 2 * k - 1;
    Rational c = power(p, n) + power(q, n) - power(third, n);
    L.set(n, -bernoulli(2 * k) / (2 * k * n) * c);
  }
  return L;
}

ZSeries r_series(const CurveParams& params, int K) { return expm(log_r_series(params, K)); }

namespace {

void fill_geometry(CurveSeries& c, const ZSeries& N) {
  const int K = c.K;
  ZSeries inv = recip(N.truncated(K + 1));
  ZSeries xp = ZSeries::identity(K + 1) * inv;
  ZSeries x = antiderivative(xp);  // order K + 2
  ZSeries f = sqrt_normalized(x.scaled(2)).truncated(K);
  c.N = N.truncated(K);
  c.x = x.truncated(K);
  c.f = f;
  c.h = reversion(f);
  c.y = antiderivative(inv).truncated(K);
  if (!equal_to_order((f * f).scaled(rat(1, 2)), c.x, K)) throw InvariantViolation("f^2/2 != x");
  if (!equal_to_order(compose(f, c.h), ZSeries::identity(K), K)) throw InvariantViolation("f(h(z)) != z");
}

}  // namespace

CurveSeries build_curve(const CurveParams& params, int K) {
  params.validate();
  if (K < 4) throw Error("build_curve: order must be >= 4");
  CurveSeries c;
  c.params = params;
  c.K = K;
  ZSeries N(K + 1);
  N.set(0, 1);
  N.set(1, (params.p + 2 * params.q) / params.s);
  N.set(2, params.q);
  fill_geometry(c, N);
  c.logR = log_r_series(params, K);
  c.R = expm(c.logR);
  if (!equal_to_order(c.R * c.R.reflected(), ZSeries::constant(1, K), K))
    throw InvariantViolation("R(z) R(-z) != 1");
  c.I = i_series(c.h, (K - 1) / 2);
  return c;
}

CurveSeries build_curve_from_denominator(const std::vector<Rational>& denominator, int K) {
  if (denominator.empty() || denominator[0] != 1) throw Error("denominator must have constant term 1");
  if (K < 4) throw Error("build_curve: order must be >= 4");
  CurveSeries c;
  c.K = K;
  fill_geometry(c, ZSeries::from(denominator, K + 1));
  c.I = i_series(c.h, (K - 1) / 2);
  c.R = c.I.reflected();
  c.logR = log1p(c.R - ZSeries::constant(1, c.R.order()));
  return c;
}

ZSeries gaussian_moments(const ZSeries& G, int K) {
  if (G.order() < 2 * K) throw Error("gaussian_moments: input order too small");
  ZSeries out(K);
  for (int k = 0; k <= K; ++k) {
    Rational c = G[2 * k];
    if (c != 0) out.set(k, c * double_factorial(2 * k - 1));
  }
  return out;
}

ZSeries i_series(const ZSeries& h, int K) {
  if (h.order() < 2 * K + 1) throw Error("i_series: insufficient input order");
  if (h.valuation() != 1 || h[1] != 1) throw Error("i_series: h must be z + O(z^2)");
  ZSeries u(h.order() - 1);
  for (int k = 1; k <= h.order(); ++k) u.set(k - 1, h[k]);
  return gaussian_moments(recip(u), K);
}

ZSeries i_series(const CurveSeries& curve, int K) { return i_series(curve.h, K); }

namespace {

// Dense bivariate series truncated at total degree D.
class BiSeries {
 public:
  explicit BiSeries(int D) : D_(D), c_(static_cast<std::size_t>((D + 1) * (D + 1))) {}
  int degree() const { return D_; }
  Rational& at(int i, int j) { return c_[static_cast<std::size_t>(i * (D_ + 1) + j)]; }
  const Rational& at(int i, int j) const { return c_[static_cast<std::size_t>(i * (D_ + 1) + j)]; }

  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    BiSeries r(a.D_);
    for (int i = 0; i <= a.D_; ++i)
      for (int j = 0; i + j <= a.D_; ++j) {
        const Rational& x = a.at(i, j);
        if (x == 0) continue;
        for (int k = 0; i + j + k <= a.D_; ++k)
          for (int l = 0; i + j + k + l <= a.D_; ++l) {
            const Rational& y = b.at(k, l);
            if (y != 0) r.at(i + k, j + l) += x * y;
          }
      }
    return r;
  }

 private:
  int D_;
  std::vector<Rational> c_;
};

// log(1 + a) for a without constant term.
BiSeries bilog1p(const BiSeries& a) {
  const int D = a.degree();
  BiSeries r(D), p(D);
  p.at(0, 0) = 1;
  for (int n = 1; n <= D; ++n) {
    p = p * a;
    Rational w(n % 2 == 1 ? 1 : -1, n);
    for (int i = 0; i <= D; ++i)
      for (int j = 0; i + j <= D; ++j)
        if (p.at(i, j) != 0) r.at(i, j) += w * p.at(i, j);
  }
  return r;
}

}  // namespace

GrunskyMatrix grunsky_matrix(const ZSeries& h, int size) {
  const int D = 2 * size;
  if (h.order() < D + 1) throw Error("grunsky_matrix: need h to order 2*size+1");
  if (h.valuation() != 1 || h[1] != 1) throw Error("grunsky_matrix: h must be z + O(z^2)");
  // (h(a) - h(b)) / (a - b) - 1 = sum_{n>=2} h_n sum_{i+j=n-1} a^i b^j
  BiSeries q(D);
  for (int n = 2; n <= D + 1; ++n) {
    Rational hn = h[n];
    if (hn == 0) continue;
    for (int i = 0; i <= n - 1; ++i) q.at(i, n - 1 - i) += hn;
  }
  BiSeries L = bilog1p(q);
  GrunskyMatrix v(size, 1);
  for (int k = 1; k <= size; ++k)
    for (int m = 1; m <= size; ++m) v(k, m) = L.at(k, m);
  return v;
}

namespace {

// [w^i z^j](1 - R(-w) R(-z)) for i + j <= D.
BiSeries symplectic_numerator(const ZSeries& R, int D) {
  ZSeries Rm = R.reflected();
  BiSeries c(D);
  for (int i = 0; i <= D; ++i)
    for (int j = 0; i + j <= D; ++j) c.at(i, j) = (i == 0 && j == 0 ? Rational(1) : Rational(0)) - Rm[i] * Rm[j];
  return c;
}

}  // namespace

GiventalMatrix givental_v_matrix(const ZSeries& R, int size) {
  const int D = 2 * size - 1;
  if (R.order() < D) throw Error("givental_v_matrix: need R to order 2*size-1");
  if (R[0] != 1) throw Error("givental_v_matrix: R(0) must be 1");
  BiSeries c = symplectic_numerator(R, D);
  // Exact division by (w + z): c_{i,j+1} = Q_{i,j} + Q_{i-1,j+1}.
  BiSeries Q(D);
  for (int tot = 0; tot < D; ++tot)
    for (int i = 0; i <= tot; ++i) {
      int j = tot - i;
      Q.at(i, j) = c.at(i, j + 1) - (i > 0 ? Q.at(i - 1, j + 1) : Rational(0));
    }
  if (c.at(0, 0) != 0) throw Error("R violates symplectic condition");
  for (int i = 1; i <= D; ++i)
    if (c.at(i, 0) != Q.at(i - 1, 0)) throw Error("R violates symplectic condition");
  GiventalMatrix V(size, 0);
  for (int k = 0; k < size; ++k)
    for (int l = 0; l < size; ++l) V(k, l) = Q.at(k, l);
  return V;
}

ZSeries witt_flow(const WittCoeffs& a, int K) {
  // D g = z * (u * g') with u = -sum a_k z^k; keeps every factor at order K - 1.
  ZSeries u(K - 1);
  for (int k = 1; k <= a.count() && k <= K - 1; ++k) u.set(k, -a[k]);
  ZSeries result = ZSeries::identity(K);
  ZSeries term = result;
  for (int n = 1; n <= K; ++n) {
    ZSeries prod = u * term.derivative();
    ZSeries next(K);
    for (int k = 0; k <= K - 1; ++k) next.set(k + 1, prod[k] / n);
    term = next;
    if (term.valuation() > K) break;
    result += term;
  }
  return result;
}

WittCoeffs witt_coefficients(const ZSeries& f, int count) {
  if (f.valuation() != 1 || f[1] != 1) throw Error("witt_coefficients: f must be z + O(z^2)");
  if (count < 0) count = f.order() - 1;
  if (count + 1 > f.order()) throw Error("witt_coefficients: f order too small");
  WittCoeffs w;
  w.a.assign(static_cast<std::size_t>(count + 1), Rational(0));
  for (int k = 1; k <= count; ++k) {
    // a_k enters [z^{k+1}] of the flow linearly with coefficient -1.
    ZSeries cur = witt_flow(w, k + 1);
    w.a[static_cast<std::size_t>(k)] = cur[k + 1] - f[k + 1];
  }
  return w;
}

ShiftData shift_data(const CurveSeries& curve) {
  ShiftData d;
  const ZSeries Rm = curve.R.reflected();
  const int KR = Rm.order();
  d.delta.assign(static_cast<std::size_t>(KR + 2), Rational(0));
  d.delta0.assign(static_cast<std::size_t>(KR + 1), Rational(0));
  for (int k = 1; k <= KR; ++k) d.delta0[static_cast<std::size_t>(k)] = -Rm[k];
  for (int k = 2; k <= KR + 1; ++k) d.delta[static_cast<std::size_t>(k)] = -Rm[k - 1];

  const int K = std::min(curve.f.order(), curve.y.order());
  ZSeries fy = curve.f.truncated(K) - curve.y.truncated(K);
  ZSeries G = antiderivative(fy * curve.x.derivative());
  d.v.assign(static_cast<std::size_t>(K + 1), Rational(0));
  d.v0.assign(static_cast<std::size_t>(K + 1), Rational(0));
  for (int k = 1; k <= K; ++k) {
    if (k <= G.order()) d.v[static_cast<std::size_t>(k)] = G[k];
    d.v0[static_cast<std::size_t>(k)] = fy[k];
  }
  for (int k = 1; k < 4 && k <= K; ++k)
    if (d.v[static_cast<std::size_t>(k)] != 0) throw InvariantViolation("translation coefficient v_k nonzero for k < 4");
  return d;
}

namespace {

void check_identification_orders(const CurveSeries& curve, int size, int r_order) {
  if (curve.h.order() < 4 * size - 1) throw Error("identification: curve order too small for matrix size");
  if (curve.R.order() < r_order) throw Error("identification: R order too small for matrix size");
}

}  // namespace

SquareMatrix identification_residual(const CurveSeries& curve, int size) {
  check_identification_orders(curve, size, 2 * size - 1);
  GiventalMatrix V = givental_v_matrix(curve.R, size);
  GrunskyMatrix g = grunsky_matrix(curve.h, 2 * size - 1);
  SquareMatrix res(size, 0);
  for (int k = 0; k < size; ++k)
    for (int m = 0; m < size; ++m)
      res(k, m) = V(k, m) - double_factorial(2 * k + 1) * double_factorial(2 * m + 1) * g(2 * k + 1, 2 * m + 1);
  return res;
}

SquareMatrix identification_defect(const CurveSeries& curve, int size) {
  check_identification_orders(curve, size, 2 * size - 2);
  BiSeries c = symplectic_numerator(curve.R, 2 * size - 2);
  GrunskyMatrix g = grunsky_matrix(curve.h, 2 * size - 1);
  SquareMatrix res(size, 0);
  for (int k = 0; k < size; ++k)
    for (int m = 0; m < size; ++m) {
      if (k + m > 2 * size - 2) continue;
      Rational r = c.at(k, m);
      if (k > 0) r -= double_factorial(2 * k - 1) * double_factorial(2 * m + 1) * g(2 * k - 1, 2 * m + 1);
      if (m > 0) r -= double_factorial(2 * k + 1) * double_factorial(2 * m - 1) * g(2 * k + 1, 2 * m - 1);
      res(k, m) = r;
    }
  return res;
}

std::vector<Rational> perturbed_denominator() { return {1, rat(5, 2), 1, 0, 1}; }

}  // namespace hodgekp
