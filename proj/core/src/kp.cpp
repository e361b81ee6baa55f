#include "hodgekp/kp.hpp"

#include <functional>

#include "hodgekp/error.hpp"
#include "hodgekp/parallel.hpp"

namespace hodgekp {

TPoly specialize_hbar(const TPoly& p, const Rational& value) {
  if (p.grading().is_plain()) {
    TPoly out(p.space());
    for (const auto& [m, c] : p.terms()) out.add_term(m, c.evaluate(value));
    return out;
  }
  if (p.grading() == Grading::epsilon()) throw Error("specialize_hbar: input is already specialized");
  const PolySpace target{p.kind(), p.bound(), Grading::epsilon()};
  TPoly out(target);
  for (const auto& [m, c] : p.terms())
    for (const auto& [e, v] : c.terms()) {
      if (e < 0 && value == 0) throw Error("cannot evaluate negative hbar powers at hbar = 0");
      out.add_term(m, v * power(value, e), p.grade(m, e));
    }
  return out;
}

namespace {

Rational multi_factorial(const Monomial& m) {
  Rational f = 1;
  for (int i = 0; i <= m.max_index(); ++i) f *= factorial(m[i]);
  return f;
}

// Validates the tau input and returns (target space for the residual, covered bound).
PolySpace residual_space(const TPoly& tau, int operator_weight, int& covered) {
  if (tau.kind() != VarKind::t) throw Error("hirota: t-side input expected");
  if (tau.grading().is_plain()) {
    if (!tau.is_zero() && (tau.min_hbar_exponent() != 0 || tau.max_hbar_exponent() != 0))
      throw Error("hirota: non-specialized hbar");
    covered = tau.bound() >= kUnbounded ? kUnbounded : tau.bound() - operator_weight;
    return PolySpace{VarKind::t, covered, Grading::plain()};
  }
  if (!(tau.grading() == Grading::epsilon())) throw Error("hirota: non-specialized hbar");
  if (!tau.is_zero() && tau.min_grade() < 0) throw Error("hirota: graded input has negative grades");
  covered = tau.bound();
  return PolySpace{VarKind::t, covered, Grading::epsilon()};
}

// d(gamma) = (d^gamma tau) / gamma!, kept in the space of tau.
class DerivativeTable {
 public:
  explicit DerivativeTable(const TPoly& tau) : tau_(tau) {}

  const TPoly& get(const Monomial& g) {
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
    TPoly d;
    if (g.is_one()) {
      d = tau_;
    } else {
      const int i = g.max_index();
      Monomial h = g;
      h.set(i, g[i] - 1);
      d = get(h).derivative(i) * CoeffRing(rat(1, g[i]));
    }
    return cache_.emplace(g, std::move(d)).first->second;
  }

  const TPoly& at(const Monomial& g) const { return cache_.at(g); }

 private:
  const TPoly& tau_;
  std::map<Monomial, TPoly> cache_;
};

void for_each_submonomial(const Monomial& a, const std::function<void(const Monomial&)>& fn) {
  Monomial cur;
  const int top = a.max_index();
  std::function<void(int)> rec = [&](int i) {
    if (i > top) {
      fn(cur);
      return;
    }
    for (int e = 0; e <= a[i]; ++e) {
      cur.set(i, e);
      rec(i + 1);
    }
    cur.set(i, 0);
  };
  rec(0);
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i <= a.max_index(); ++i) r.set(i, a[i] - b[i]);
  return r;
}

int hirota_weight(const HirotaPoly& Q) {
  int w = 0;
  for (const auto& [m, c] : Q) w = std::max(w, monomial_weight(VarKind::t, m));
  return w;
}

void for_each_term(const HirotaPoly& Q, const std::function<void(const Monomial&, const Monomial&)>& fn) {
  for (const auto& [alpha, q] : Q)
    for_each_submonomial(alpha, [&](const Monomial& a1) { fn(alpha, a1); });
}

// The table must already hold every submonomial of every alpha in Q.
TPoly residual_with(const DerivativeTable& table, const HirotaPoly& Q, PolySpace target) {
  TPoly out(target);
  std::map<Monomial, TPoly> local;
  auto lookup = [&](const Monomial& g) -> const TPoly& {
    auto it = local.find(g);
    if (it == local.end()) it = local.emplace(g, table.at(g).in_space(target)).first;
    return it->second;
  };
  for (const auto& [alpha, q] : Q) {
    if (q == 0) continue;
    const Rational scale = q * multi_factorial(alpha);
    for_each_submonomial(alpha, [&](const Monomial& a1) {
      const Monomial a2 = quotient(alpha, a1);
      const bool even = a2.degree() % 2 == 0;
      out += (lookup(a1) * lookup(a2)) * CoeffRing(even ? scale : -scale);
    });
  }
  return out;
}

std::string y_label(const Monomial& beta) {
  if (beta.is_one()) return "1";
  std::string s = to_string(VarKind::t, beta);
  for (auto& ch : s)
    if (ch == 't') ch = 'y';
  return s;
}

void record(HirotaReport& rep, const std::string& label, int covered, const TPoly& residual) {
  HirotaEquation eq{label, covered, residual.is_zero()};
  rep.equations.push_back(eq);
  for (const auto& [m, c] : residual.terms()) {
    ++rep.failure_count;
    if (rep.failures.size() < 20) rep.failures.push_back({label, to_string(VarKind::t, m), to_string(c)});
  }
}

// Elementary Schur polynomials p_0..p_n of x_k = scale(k) * v_k, as polynomials in v.
std::vector<HirotaPoly> schur(int n, const std::function<Rational(int)>& scale) {
  std::vector<HirotaPoly> p(static_cast<std::size_t>(n + 1));
  p[0][Monomial()] = 1;
  for (int j = 1; j <= n; ++j) {
    HirotaPoly acc;
    for (int k = 1; k <= j; ++k)
      for (const auto& [m, c] : p[static_cast<std::size_t>(j - k)]) {
        Monomial mm = m;
        mm.raise(k);
        acc[mm] += c * k * scale(k) / j;
      }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    p[static_cast<std::size_t>(j)] = std::move(acc);
  }
  return p;
}

}  // namespace

TPoly hirota_residual(const TPoly& tau, const HirotaPoly& Q, int* covered) {
  int cov = 0;
  PolySpace target = residual_space(tau, hirota_weight(Q), cov);
  if (covered) *covered = cov;
  if (cov < 0) return TPoly(PolySpace{VarKind::t, 0});
  DerivativeTable table(tau);
  for_each_term(Q, [&](const Monomial&, const Monomial& a1) { table.get(a1); });
  return residual_with(table, Q, target);
}

std::map<Monomial, HirotaPoly> kp_bilinear_family(int y_weight) {
  const auto py = schur(y_weight, [](int) { return Rational(-2); });
  const auto pd = schur(y_weight + 1, [](int k) { return rat(1, k); });
  std::map<Monomial, HirotaPoly> family;
  for (const auto& beta : monomial_basis(VarKind::t, y_weight)) {
    HirotaPoly Q;
    const int wb = monomial_weight(VarKind::t, beta);
    for_each_submonomial(beta, [&](const Monomial& gamma) {
      const int j = wb - monomial_weight(VarKind::t, gamma);
      auto it = py[static_cast<std::size_t>(j)].find(quotient(beta, gamma));
      if (it == py[static_cast<std::size_t>(j)].end()) return;
      const Rational c = it->second / multi_factorial(gamma);
      for (const auto& [m, v] : pd[static_cast<std::size_t>(j + 1)]) Q[m * gamma] += c * v;
    });
    std::erase_if(Q, [](const auto& kv) { return kv.second == 0; });
    family.emplace(beta, std::move(Q));
  }
  return family;
}

HirotaReport hirota_first_equation(const TPoly& tau) {
  HirotaPoly Q;
  Q[Monomial::variable(1, 4)] = 1;
  Q[Monomial::variable(2, 2)] = 3;
  Q[Monomial::variable(1) * Monomial::variable(3)] = -4;
  HirotaReport rep;
  rep.check = "hirota-first";
  int cov = 0;
  TPoly r = hirota_residual(tau, Q, &cov);
  rep.covered_weight = cov;
  rep.covered_by = tau.grading().is_plain() ? "weight" : "grade";
  record(rep, "D1^4 + 3 D2^2 - 4 D1 D3", cov, r);
  return rep;
}

HirotaReport hirota_full_check(const TPoly& tau, int y_weight) {
  if (y_weight < 0) throw Error("hirota_full_check: negative y weight");
  const auto family = kp_bilinear_family(y_weight);
  HirotaReport rep;
  rep.check = "hirota-full";
  rep.y_weight = y_weight;
  rep.covered_by = tau.grading().is_plain() ? "weight" : "grade";
  int worst = 0;
  residual_space(tau, y_weight + 1, worst);
  rep.covered_weight = worst;

  std::vector<std::pair<Monomial, const HirotaPoly*>> eqs;
  for (const auto& [beta, Q] : family) eqs.emplace_back(beta, &Q);
  DerivativeTable table(tau);
  for (const auto& [beta, Q] : eqs) for_each_term(*Q, [&](const Monomial&, const Monomial& a1) { table.get(a1); });
  std::vector<TPoly> residuals(eqs.size());
  std::vector<int> covers(eqs.size());
  parallel_for(eqs.size(), [&](std::size_t i) {
    PolySpace target = residual_space(tau, hirota_weight(*eqs[i].second), covers[i]);
    residuals[i] = covers[i] < 0 ? TPoly(target) : residual_with(table, *eqs[i].second, target);
  });
  for (std::size_t i = 0; i < eqs.size(); ++i) record(rep, "y:" + y_label(eqs[i].first), covers[i], residuals[i]);
  return rep;
}

CheckReport kdv_reduction_check(const TPoly& tau) {
  CheckReport r;
  r.name = "kdv-reduction";
  for (const auto& [m, c] : tau.terms()) {
    ++r.checked;
    if (tau.kind() == VarKind::t)
      for (int i = 2; i <= m.max_index(); i += 2)
        if (m[i] != 0) {
          r.fail("even time in " + to_string(VarKind::t, m));
          break;
        }
  }
  return r;
}

}  // namespace hodgekp
