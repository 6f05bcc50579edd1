#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace llt {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordered variables x1..x_nx, y1..y_ny, then t when present.
struct VarSet {
  int nx = 0;
  int ny = 0;
  bool has_t = false;

  int size() const { return nx + ny + (has_t ? 1 : 0); }
  int x(int i) const;
  int y(int j) const;
  int t() const;
  std::string name(int index) const;
  bool operator==(const VarSet&) const = default;
};

using ExponentVector = std::vector<int>;
using Coefficient = mpz_class;
using Rational = mpq_class;

// Sparse Laurent polynomial with exact integer coefficients. Terms are kept
// in lexicographically decreasing exponent order with no zero coefficients.
class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, Coefficient, std::greater<>>;

  LaurentPoly() = default;
  explicit LaurentPoly(VarSet vars) : vars_(vars) {}

  static LaurentPoly constant(VarSet vars, const Coefficient& c);
  static LaurentPoly monomial(VarSet vars, ExponentVector e, const Coefficient& c = 1);
  static LaurentPoly variable(VarSet vars, int index, int power = 1);

  const VarSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const;

  void add_term(const ExponentVector& e, const Coefficient& c);
  Coefficient coefficient(const ExponentVector& e) const;
  LaurentPoly times_monomial(const ExponentVector& shift, const Coefficient& c = 1) const;
  LaurentPoly pow(int e) const;

  int min_exponent(int index) const;
  int max_exponent(int index) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void check_compatible(const LaurentPoly& other) const;
  void check_exponents(const ExponentVector& e) const;

  VarSet vars_;
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

struct MonomialImage {
  int sign = 1;
  ExponentVector exps;
};

// Variable-to-monomial map from one VarSet into another.
class Substitution {
 public:
  Substitution(VarSet from, VarSet to);
  static Substitution identity(VarSet vars);

  Substitution& set(int var, MonomialImage image);
  Substitution& set(int var, const LaurentPoly& monomial);
  Substitution& swap(int a, int b);
  Substitution& invert(int var);

  const VarSet& from() const { return from_; }
  const VarSet& to() const { return to_; }
  const MonomialImage& image(int var) const { return images_.at(var); }

 private:
  VarSet from_;
  VarSet to_;
  std::vector<MonomialImage> images_;
};

LaurentPoly substitute(const LaurentPoly& p, const Substitution& s);

// Drops terms whose total x-degree exceeds max_x_degree.
LaurentPoly truncate(const LaurentPoly& p, int max_x_degree);

Rational eval_rational(const LaurentPoly& p, const std::vector<Rational>& point);

std::string serialize(const LaurentPoly& p);
LaurentPoly parse_poly(const std::string& json_text);

// Human readable form grouped by power of t.
std::string to_text(const LaurentPoly& p);

}  // namespace llt
