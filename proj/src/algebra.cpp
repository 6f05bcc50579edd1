#include "llt/algebra.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace llt {

int VarSet::x(int i) const {
  if (i < 1 || i > nx) throw AlgebraError("x index out of range");
  return i - 1;
}

int VarSet::y(int j) const {
  if (j < 1 || j > ny) throw AlgebraError("y index out of range");
  return nx + j - 1;
}

int VarSet::t() const {
  if (!has_t) throw AlgebraError("variable set has no t");
  return nx + ny;
}

std::string VarSet::name(int index) const {
  if (index < 0 || index >= size()) throw AlgebraError("variable index out of range");
  if (index < nx) return "x" + std::to_string(index + 1);
  if (index < nx + ny) return "y" + std::to_string(index - nx + 1);
  return "t";
}

LaurentPoly LaurentPoly::constant(VarSet vars, const Coefficient& c) {
  LaurentPoly p(vars);
  p.add_term(ExponentVector(vars.size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(VarSet vars, ExponentVector e, const Coefficient& c) {
  LaurentPoly p(vars);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(VarSet vars, int index, int power) {
  if (index < 0 || index >= vars.size()) throw AlgebraError("variable index out of range");
  ExponentVector e(vars.size(), 0);
  e[index] = power;
  return monomial(vars, std::move(e));
}

bool LaurentPoly::is_monomial() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

void LaurentPoly::check_exponents(const ExponentVector& e) const {
  if (static_cast<int>(e.size()) != vars_.size()) throw AlgebraError("exponent vector length does not match variables");
}

void LaurentPoly::check_compatible(const LaurentPoly& other) const {
  if (!(vars_ == other.vars_)) throw AlgebraError("variable sets differ");
}

void LaurentPoly::add_term(const ExponentVector& e, const Coefficient& c) {
  check_exponents(e);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Coefficient LaurentPoly::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

LaurentPoly LaurentPoly::times_monomial(const ExponentVector& shift, const Coefficient& c) const {
  check_exponents(shift);
  LaurentPoly out(vars_);
  if (c == 0) return out;
  for (const auto& [e, coef] : terms_) {
    ExponentVector f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(f), coef * c);
  }
  return out;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) throw AlgebraError("negative power of a non-monomial");
    const auto& [exps, c] = *terms_.begin();
    ExponentVector f(exps.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = exps[i] * e;
    return monomial(vars_, f, (e % 2 != 0) ? c : Coefficient(1));
  }
  LaurentPoly result = constant(vars_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

int LaurentPoly::min_exponent(int index) const {
  if (terms_.empty()) throw AlgebraError("min_exponent of zero polynomial");
  int m = terms_.begin()->first.at(index);
  for (const auto& [e, c] : terms_) m = std::min(m, e.at(index));
  return m;
}

int LaurentPoly::max_exponent(int index) const {
  if (terms_.empty()) throw AlgebraError("max_exponent of zero polynomial");
  int m = terms_.begin()->first.at(index);
  for (const auto& [e, c] : terms_) m = std::max(m, e.at(index));
  return m;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  LaurentPoly out(a.vars_);
  ExponentVector f(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = ea[i] + eb[i];
      out.add_term(f, ca * cb);
    }
  }
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out(a.vars_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

Substitution::Substitution(VarSet from, VarSet to) : from_(from), to_(to), images_(from.size()) {
  for (auto& img : images_) img.exps.assign(to.size(), 0);
}

Substitution Substitution::identity(VarSet vars) {
  Substitution s(vars, vars);
  for (int i = 0; i < vars.size(); ++i) s.images_[i].exps[i] = 1;
  return s;
}

Substitution& Substitution::set(int var, MonomialImage image) {
  if (var < 0 || var >= from_.size()) throw AlgebraError("substitution variable out of range");
  if (static_cast<int>(image.exps.size()) != to_.size()) throw AlgebraError("substitution image has wrong length");
  if (image.sign != 1 && image.sign != -1) throw AlgebraError("substitution sign must be +1 or -1");
  images_[var] = std::move(image);
  return *this;
}

Substitution& Substitution::set(int var, const LaurentPoly& monomial) {
  if (!(monomial.vars() == to_)) throw AlgebraError("substitution image over wrong variables");
  if (!monomial.is_monomial()) throw AlgebraError("substitution image must be a signed monomial");
  const auto& [e, c] = *monomial.terms().begin();
  return set(var, MonomialImage{c > 0 ? 1 : -1, e});
}

Substitution& Substitution::swap(int a, int b) {
  std::swap(images_.at(a), images_.at(b));
  return *this;
}

Substitution& Substitution::invert(int var) {
  auto& img = images_.at(var);
  for (int& e : img.exps) e = -e;
  return *this;
}

LaurentPoly substitute(const LaurentPoly& p, const Substitution& s) {
  if (!(p.vars() == s.from())) throw AlgebraError("substitution domain does not match polynomial");
  LaurentPoly out(s.to());
  ExponentVector f(s.to().size());
  for (const auto& [e, c] : p.terms()) {
    std::fill(f.begin(), f.end(), 0);
    int sign = 1;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      const auto& img = s.image(static_cast<int>(v));
      for (std::size_t j = 0; j < f.size(); ++j) f[j] += img.exps[j] * e[v];
      if (img.sign < 0 && (e[v] % 2 != 0)) sign = -sign;
    }
    out.add_term(f, sign > 0 ? c : Coefficient(-c));
  }
  return out;
}

LaurentPoly truncate(const LaurentPoly& p, int max_x_degree) {
  LaurentPoly out(p.vars());
  const int nx = p.vars().nx;
  for (const auto& [e, c] : p.terms()) {
    int deg = 0;
    for (int i = 0; i < nx; ++i) deg += e[i];
    if (deg <= max_x_degree) out.add_term(e, c);
  }
  return out;
}

namespace {

Rational rational_pow(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw AlgebraError("negative power of zero during evaluation");
    return Rational(0);
  }
  unsigned long m = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), m);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), m);
  Rational r = e > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

}  // namespace

Rational eval_rational(const LaurentPoly& p, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != p.vars().size()) throw AlgebraError("evaluation point has wrong length");
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = Rational(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= rational_pow(point[i], e[i]);
    }
    total += term;
  }
  return total;
}

std::string serialize(const LaurentPoly& p) {
  nlohmann::ordered_json j;
  j["vars"] = {{"nx", p.vars().nx}, {"ny", p.vars().ny}, {"t", p.vars().has_t}};
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json term;
    term["c"] = c.get_str();
    term["e"] = e;
    j["terms"].push_back(std::move(term));
  }
  return j.dump();
}

LaurentPoly parse_poly(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& ex) {
    throw AlgebraError(std::string("malformed polynomial JSON: ") + ex.what());
  }
  try {
    VarSet vars{j.at("vars").at("nx").get<int>(), j.at("vars").at("ny").get<int>(), j.at("vars").at("t").get<bool>()};
    if (vars.nx < 0 || vars.ny < 0) throw AlgebraError("negative variable count");
    LaurentPoly p(vars);
    for (const auto& term : j.at("terms")) {
      Coefficient c;
      if (c.set_str(term.at("c").get<std::string>(), 10) != 0) throw AlgebraError("bad coefficient");
      auto e = term.at("e").get<ExponentVector>();
      p.add_term(e, c);
    }
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw AlgebraError(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

namespace {

std::string monomial_text(const VarSet& vars, const ExponentVector& e, int skip) {
  std::string out;
  for (int i = 0; i < vars.size(); ++i) {
    if (i == skip || e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(i);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string sum_text(const std::vector<std::pair<std::string, Coefficient>>& terms) {
  std::string out;
  for (const auto& [mono, c] : terms) {
    Coefficient a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace

std::string to_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const VarSet& vars = p.vars();
  if (!vars.has_t) {
    std::vector<std::pair<std::string, Coefficient>> terms;
    for (const auto& [e, c] : p.terms()) terms.emplace_back(monomial_text(vars, e, -1), c);
    return sum_text(terms);
  }
  const int ti = vars.t();
  std::map<int, std::vector<std::pair<std::string, Coefficient>>> groups;
  for (const auto& [e, c] : p.terms()) groups[e[ti]].emplace_back(monomial_text(vars, e, ti), c);
  std::string out;
  for (const auto& [te, terms] : groups) {
    std::string inner = sum_text(terms);
    std::string tpart = te == 0 ? "" : (te == 1 ? "t" : "t^" + std::to_string(te));
    std::string piece;
    if (tpart.empty()) {
      piece = (groups.size() == 1 || terms.size() == 1) ? inner : "(" + inner + ")";
    } else if (terms.size() == 1 && terms[0].first.empty() && terms[0].second == 1) {
      piece = tpart;
    } else {
      piece = tpart + "*(" + inner + ")";
    }
    if (!out.empty()) out += " + ";
    out += piece;
  }
  return out;
}

}  // namespace llt
