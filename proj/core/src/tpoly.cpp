#include "hodgekp/tpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

#include "hodgekp/error.hpp"

namespace hodgekp {

int variable_weight(VarKind kind, int index) { return kind == VarKind::t ? index : 2 * index + 1; }

std::string variable_name(VarKind kind, int index) {
  return (kind == VarKind::t ? "t" : "T") + std::to_string(index);
}

int first_index(VarKind kind) { return kind == VarKind::t ? 1 : 0; }

Monomial Monomial::variable(int index, int exponent) {
  Monomial m;
  m.set(index, exponent);
  return m;
}

void Monomial::set(int i, int exponent) {
  if (i < 0 || i >= kMaxVariables) throw Error("variable index " + std::to_string(i) + " out of range");
  if (exponent < 0 || exponent > 255) throw Error("exponent out of range");
  e_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(exponent);
}

int Monomial::degree() const {
  int d = 0;
  for (auto x : e_) d += x;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint8_t x) { return x == 0; });
}

int Monomial::max_index() const {
  for (int i = kMaxVariables - 1; i >= 0; --i)
    if (e_[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    int s = a.e_[i] + b.e_[i];
    if (s > 255) throw Error("exponent overflow");
    r.e_[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

int monomial_weight(VarKind kind, const Monomial& m) {
  int w = 0;
  int top = m.max_index();
  for (int i = 0; i <= top; ++i)
    if (m[i] != 0) w += m[i] * variable_weight(kind, i);
  return w;
}

std::string to_string(VarKind kind, const Monomial& m) {
  std::string out;
  for (int i = 0; i <= m.max_index(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += variable_name(kind, i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

using Terms = TPoly::Terms;

void accumulate(Terms& terms, const Monomial& m, const CoeffRing& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

CoeffRing filter_grade(const CoeffRing& c, int hbar_weight, int base_grade, int bound) {
  CoeffRing out;
  for (const auto& [e, v] : c.terms())
    if (hbar_weight * e + base_grade <= bound) out.add(e, v);
  return out;
}

}  // namespace

TPoly TPoly::constant(PolySpace space, const CoeffRing& c) {
  TPoly p(space);
  p.add_term(Monomial(), c);
  return p;
}

TPoly TPoly::variable(PolySpace space, int index, const CoeffRing& c) {
  if (index < first_index(space.kind)) throw Error("invalid variable index " + std::to_string(index));
  return monomial(space, Monomial::variable(index), c);
}

TPoly TPoly::monomial(PolySpace space, const Monomial& m, const CoeffRing& c) {
  if (space.kind == VarKind::t && m[0] != 0) throw Error("t-side monomials have no t0");
  TPoly p(space);
  p.add_term(m, c);
  return p;
}

int TPoly::grade(const Monomial& m, int hbar_exponent) const {
  return space_.grading.hbar * hbar_exponent + space_.grading.weight * weight(m);
}

CoeffRing TPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CoeffRing() : it->second;
}

void TPoly::add_term(const Monomial& m, const CoeffRing& c) {
  if (c.is_zero()) return;
  int base = space_.grading.weight * weight(m);
  if (space_.grading.hbar == 0) {
    if (base <= space_.bound) accumulate(terms_, m, c);
    return;
  }
  accumulate(terms_, m, filter_grade(c, space_.grading.hbar, base, space_.bound));
}

void TPoly::add_term(const Monomial& m, const Rational& c, int hbar_exponent) {
  add_term(m, CoeffRing(c, hbar_exponent));
}

void TPoly::check_compatible(const TPoly& o, const char* op) const {
  if (space_.kind != o.space_.kind) throw Error(std::string(op) + ": mixed variable kinds");
  if (!(space_ == o.space_)) throw Error(std::string(op) + ": operands live in different truncation spaces");
}

TPoly& TPoly::operator+=(const TPoly& o) {
  check_compatible(o, "add");
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  check_compatible(o, "sub");
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
  return *this;
}

TPoly& TPoly::operator*=(const CoeffRing& c) {
  Terms out;
  for (const auto& [m, v] : terms_) {
    int base = space_.grading.weight * weight(m);
    accumulate(out, m, filter_grade(v * c, space_.grading.hbar, base, space_.bound));
  }
  terms_ = std::move(out);
  return *this;
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  a.check_compatible(b, "mul");
  struct Entry {
    const Monomial* m;
    const CoeffRing* c;
    int weight;
  };
  auto entries = [](const TPoly& p) {
    std::vector<Entry> v;
    v.reserve(p.terms_.size());
    for (const auto& [m, c] : p.terms_) v.push_back({&m, &c, p.weight(m)});
    return v;
  };
  const auto ea = entries(a), eb = entries(b);
  const Grading g = a.grading();
  const int bound = a.bound();
  TPoly r(a.space_);
  for (const auto& x : ea) {
    for (const auto& y : eb) {
      int base = g.weight * (x.weight + y.weight);
      if (g.hbar == 0) {
        if (base > bound) continue;
        accumulate(r.terms_, *x.m * *y.m, *x.c * *y.c);
      } else {
        int lo = g.hbar > 0 ? x.c->min_exponent() + y.c->min_exponent() : x.c->max_exponent() + y.c->max_exponent();
        if (g.hbar * lo + base > bound) continue;
        accumulate(r.terms_, *x.m * *y.m, filter_grade(*x.c * *y.c, g.hbar, base, bound));
      }
    }
  }
  return r;
}

bool operator==(const TPoly& a, const TPoly& b) { return a.kind() == b.kind() && a.terms_ == b.terms_; }

TPoly TPoly::derivative(int index) const {
  TPoly r(space_);
  for (const auto& [m, c] : terms_) {
    int k = m[index];
    if (k == 0) continue;
    Monomial d = m;
    d.set(index, k - 1);
    r.add_term(d, c * Rational(k));
  }
  return r;
}

TPoly TPoly::times_variable(int index) const {
  if (index < first_index(space_.kind)) throw Error("invalid variable index");
  TPoly r(space_);
  for (const auto& [m, c] : terms_) {
    Monomial x = m;
    x.raise(index);
    r.add_term(x, c);
  }
  return r;
}

TPoly TPoly::in_space(PolySpace space) const {
  if (space.kind != space_.kind) throw Error("in_space: variable kinds differ");
  TPoly r(space);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

int TPoly::max_weight() const {
  int w = -1;
  for (const auto& [m, c] : terms_) w = std::max(w, weight(m));
  return w;
}

int TPoly::min_grade() const {
  int g = kUnbounded;
  for (const auto& [m, c] : terms_)
    for (const auto& [e, v] : c.terms()) g = std::min(g, grade(m, e));
  return g;
}

int TPoly::max_index() const {
  int i = -1;
  for (const auto& [m, c] : terms_) i = std::max(i, m.max_index());
  return i;
}

int TPoly::max_hbar_exponent() const {
  int e = std::numeric_limits<int>::min();
  for (const auto& [m, c] : terms_) e = std::max(e, c.max_exponent());
  return e;
}

int TPoly::min_hbar_exponent() const {
  int e = std::numeric_limits<int>::max();
  for (const auto& [m, c] : terms_) e = std::min(e, c.min_exponent());
  return e;
}

bool TPoly::depends_on_even_times() const {
  if (space_.kind != VarKind::t) return false;
  for (const auto& [m, c] : terms_)
    for (int i = 2; i <= m.max_index(); i += 2)
      if (m[i] != 0) return true;
  return false;
}

TPoly substitute(const TPoly& p, const std::map<int, TPoly>& images, PolySpace target) {
  for (const auto& [i, img] : images)
    if (img.kind() != target.kind) throw Error("substitute: image kind differs from target kind");

  const Grading g = target.grading;
  auto grade = [&](const Monomial& m, int e) { return g.hbar * e + g.weight * monomial_weight(target.kind, m); };

  // Partial products may be pruned only if no later factor can lower the grade.
  bool prunable = true;
  for (const auto& [i, img] : images)
    for (const auto& [m, c] : img.terms())
      for (const auto& [e, v] : c.terms())
        if (grade(m, e) < 0) prunable = false;

  auto keep = [&](const Monomial& m, CoeffRing c) {
    if (!prunable) return c;
    CoeffRing out;
    for (const auto& [e, v] : c.terms())
      if (grade(m, e) <= target.bound) out.add(e, v);
    return out;
  };
  auto mul = [&](const Terms& a, const Terms& b) {
    Terms r;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        Monomial m = ma * mb;
        accumulate(r, m, keep(m, ca * cb));
      }
    return r;
  };

  std::map<std::pair<int, int>, Terms> powers;
  std::function<const Terms&(int, int)> power = [&](int var, int k) -> const Terms& {
    auto key = std::make_pair(var, k);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Terms val;
    if (k == 1) {
      val = images.at(var).terms();
    } else {
      val = mul(power(var, k - 1), power(var, 1));
    }
    return powers.emplace(key, std::move(val)).first->second;
  };

  TPoly out(target);
  for (const auto& [m, c] : p.terms()) {
    Terms acc;
    acc.emplace(Monomial(), c);
    for (int i = 0; i <= m.max_index(); ++i) {
      if (m[i] == 0) continue;
      if (!images.count(i)) throw Error("substitute: missing image for " + variable_name(p.kind(), i));
      acc = mul(acc, power(i, m[i]));
      if (acc.empty()) break;
    }
    for (const auto& [mm, cc] : acc) out.add_term(mm, cc);
  }
  return out;
}

std::vector<Monomial> monomial_basis(VarKind kind, int max_weight, bool odd_only) {
  std::vector<Monomial> out;
  const int step = (kind == VarKind::t && odd_only) ? 2 : 1;
  std::function<void(int, int, Monomial&)> rec = [&](int index, int remaining, Monomial& cur) {
    int w = variable_weight(kind, index);
    if (w > remaining || index >= kMaxVariables) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k * w <= remaining; ++k) {
      cur.set(index, k);
      rec(index + step, remaining - k * w, cur);
    }
    cur.set(index, 0);
  };
  Monomial m;
  rec(first_index(kind), max_weight, m);
  std::stable_sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    int wa = monomial_weight(kind, a), wb = monomial_weight(kind, b);
    if (wa != wb) return wa < wb;
    return b < a;
  });
  return out;
}

namespace {

std::vector<std::pair<const Monomial*, const CoeffRing*>> sorted_terms(const TPoly& p) {
  std::vector<std::pair<const Monomial*, const CoeffRing*>> v;
  for (const auto& [m, c] : p.terms()) v.emplace_back(&m, &c);
  std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    int wa = p.weight(*a.first), wb = p.weight(*b.first);
    if (wa != wb) return wa < wb;
    return *b.first < *a.first;
  });
  return v;
}

}  // namespace

std::string to_string(const TPoly& p) {
  if (p.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [m, c] : sorted_terms(p)) os << to_string(*c) << " * " << to_string(p.kind(), *m) << "\n";
  return os.str();
}

std::string diff_report(const TPoly& a, const TPoly& b, std::size_t max_lines) {
  TPoly d(a.space());
  for (const auto& [m, c] : a.terms()) d.add_term(m, c);
  for (const auto& [m, c] : b.terms()) d.add_term(m, -c);
  std::ostringstream os;
  std::size_t n = 0;
  for (const auto& [m, c] : sorted_terms(d)) {
    if (n++ == max_lines) {
      os << "... (" << d.size() - max_lines << " more)\n";
      break;
    }
    os << to_string(a.kind(), *m) << ": " << to_string(a.coefficient(*m)) << " vs " << to_string(b.coefficient(*m))
       << "\n";
  }
  return os.str();
}

}  // namespace hodgekp
