#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "hodgekp/coeff_ring.hpp"

namespace hodgekp {

inline constexpr int kMaxVariables = 48;

// t-side: t_1, t_2, ... with weight(t_k) = k.
// T-side: T_0, T_1, ... with weight(T_m) = 2m + 1.
enum class VarKind { t, T };

int variable_weight(VarKind kind, int index);
std::string variable_name(VarKind kind, int index);
// Smallest valid index for the kind (1 for t, 0 for T).
int first_index(VarKind kind);

class Monomial {
 public:
  Monomial() { e_.fill(0); }
  static Monomial variable(int index, int exponent = 1);

  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, int exponent);
  void raise(int i, int by = 1) { set(i, (*this)[i] + by); }
  int degree() const;
  bool is_one() const;
  // Largest index with positive exponent, -1 for the unit monomial.
  int max_index() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kMaxVariables> e_;
};

int monomial_weight(VarKind kind, const Monomial& m);
std::string to_string(VarKind kind, const Monomial& m);

// grade(t-monomial m, hbar^e) = hbar * e + weight * weight(m).
// (0, 1) is plain weight truncation; the other presets make every operator of the
// Hodge / theta constructions grade-nondecreasing so that truncation is exact.
struct Grading {
  int hbar = 0;
  int weight = 1;

  static constexpr Grading plain() { return {0, 1}; }
  static constexpr Grading hodge() { return {12, -3}; }
  static constexpr Grading theta() { return {2, -1}; }
  // Used after specializing hbar in graded form: the hbar slot carries the grade.
  static constexpr Grading epsilon() { return {1, 0}; }

  bool is_plain() const { return hbar == 0 && weight == 1; }
  friend bool operator==(const Grading&, const Grading&) = default;
};

inline constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

struct PolySpace {
  VarKind kind = VarKind::t;
  int bound = kUnbounded;  // maximal grade kept (the max weight W for plain grading)
  Grading grading = Grading::plain();

  friend bool operator==(const PolySpace&, const PolySpace&) = default;
};

class TPoly {
 public:
  using Terms = std::map<Monomial, CoeffRing>;

  TPoly() = default;
  explicit TPoly(PolySpace space) : space_(space) {}

  static TPoly constant(PolySpace space, const CoeffRing& c);
  static TPoly one(PolySpace space) { return constant(space, CoeffRing(1)); }
  static TPoly variable(PolySpace space, int index, const CoeffRing& c = CoeffRing(1));
  static TPoly monomial(PolySpace space, const Monomial& m, const CoeffRing& c = CoeffRing(1));

  const PolySpace& space() const { return space_; }
  VarKind kind() const { return space_.kind; }
  int bound() const { return space_.bound; }
  const Grading& grading() const { return space_.grading; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int weight(const Monomial& m) const { return monomial_weight(space_.kind, m); }
  int grade(const Monomial& m, int hbar_exponent) const;
  bool keeps(const Monomial& m, int hbar_exponent) const { return grade(m, hbar_exponent) <= space_.bound; }

  CoeffRing coefficient(const Monomial& m) const;
  // Accumulate, dropping the parts above the bound.
  void add_term(const Monomial& m, const CoeffRing& c);
  void add_term(const Monomial& m, const Rational& c, int hbar_exponent = 0);

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const CoeffRing& c);
  TPoly operator-() const;
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(TPoly a, const CoeffRing& c) { return a *= c; }
  friend TPoly operator*(const CoeffRing& c, TPoly a) { return a *= c; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  // Same kind and identical terms; bounds are not compared.
  friend bool operator==(const TPoly& a, const TPoly& b);

  TPoly derivative(int index) const;
  TPoly times_variable(int index) const;
  // Re-truncate into another space of the same kind.
  TPoly in_space(PolySpace space) const;

  int max_weight() const;  // -1 for zero
  int min_grade() const;
  int max_index() const;
  int max_hbar_exponent() const;
  int min_hbar_exponent() const;
  bool depends_on_even_times() const;
  bool only_odd_times() const { return !depends_on_even_times(); }

 private:
  void check_compatible(const TPoly& o, const char* op) const;

  PolySpace space_;
  Terms terms_;
};

// Ring homomorphism sending variable i to images.at(i); result lives in `target`.
TPoly substitute(const TPoly& p, const std::map<int, TPoly>& images, PolySpace target);

// All monomials of the kind with weight <= max_weight (odd_only: only odd-index t's).
std::vector<Monomial> monomial_basis(VarKind kind, int max_weight, bool odd_only = false);

// Human-readable listing, one term per line, sorted by weight.
std::string to_string(const TPoly& p);
// Terms present in a or b with different coefficients, formatted for reports.
std::string diff_report(const TPoly& a, const TPoly& b, std::size_t max_lines = 20);

}  // namespace hodgekp
