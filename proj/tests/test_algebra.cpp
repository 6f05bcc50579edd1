#include "llt/algebra.hpp"
#include "llt/random.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace llt;
using oracle::poly;

TEST_CASE("varset indexing and names") {
  VarSet v{2, 1, true};
  CHECK(v.size() == 4);
  CHECK(v.x(1) == 0);
  CHECK(v.x(2) == 1);
  CHECK(v.y(1) == 2);
  CHECK(v.t() == 3);
  CHECK(v.name(0) == "x1");
  CHECK(v.name(2) == "y1");
  CHECK(v.name(3) == "t");
  CHECK_THROWS_AS(v.x(3), AlgebraError);
  CHECK_THROWS_AS((VarSet{1, 0, false}.t()), AlgebraError);
}

TEST_CASE("zero coefficients are dropped and terms stay canonical") {
  VarSet v{2, 0, true};
  LaurentPoly p(v);
  p.add_term({1, 0, 0}, 2);
  p.add_term({0, 1, 0}, 3);
  p.add_term({1, 0, 0}, -2);
  CHECK(p.size() == 1);
  CHECK(p.coefficient({0, 1, 0}) == 3);
  CHECK(p.coefficient({1, 0, 0}) == 0);
  p.add_term({2, 0, 1}, 1);
  CHECK(p.terms().begin()->first == ExponentVector{2, 0, 1});
  CHECK_THROWS_AS(p.add_term({1, 1}, 1), AlgebraError);
}

TEST_CASE("ring axioms on random polynomials") {
  auto rng = make_rng(7, 0);
  VarSet v{2, 1, true};
  for (int trial = 0; trial < 40; ++trial) {
    auto a = oracle::random_poly(rng, v, 5, -2, 3);
    auto b = oracle::random_poly(rng, v, 5, -2, 3);
    auto c = oracle::random_poly(rng, v, 4, -1, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a + (-a) == LaurentPoly(v));
    CHECK(a * LaurentPoly::constant(v, 1) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  auto rng = make_rng(11, 0);
  VarSet v{2, 1, true};
  for (int trial = 0; trial < 30; ++trial) {
    auto a = oracle::random_poly(rng, v, 4, -2, 2);
    auto b = oracle::random_poly(rng, v, 4, -2, 2);
    std::vector<Rational> pt;
    for (int i = 0; i < v.size(); ++i) pt.push_back(random_rational(rng, 7));
    CHECK(eval_rational(a * b, pt) == eval_rational(a, pt) * eval_rational(b, pt));
    CHECK(eval_rational(a + b, pt) == eval_rational(a, pt) + eval_rational(b, pt));
  }
}

TEST_CASE("monomial powers allow negative exponents") {
  VarSet v{1, 0, true};
  auto m = LaurentPoly::monomial(v, {2, -1}, 1);
  CHECK(m.is_monomial());
  CHECK(m.pow(-2) == LaurentPoly::monomial(v, {-4, 2}));
  CHECK(m.pow(0) == LaurentPoly::constant(v, 1));
  auto p = m + LaurentPoly::constant(v, 1);
  CHECK_FALSE(p.is_monomial());
  CHECK(p.pow(2) == p * p);
  CHECK_THROWS_AS(p.pow(-1), AlgebraError);
}

TEST_CASE("min and max exponents") {
  VarSet v{2, 0, true};
  auto p = poly(v, {{1, {3, -1, 0}}, {2, {0, 2, 5}}});
  CHECK(p.min_exponent(0) == 0);
  CHECK(p.max_exponent(0) == 3);
  CHECK(p.min_exponent(1) == -1);
  CHECK(p.max_exponent(2) == 5);
}

TEST_CASE("substitution inverts and swaps variables") {
  VarSet v{2, 0, true};
  auto p = poly(v, {{1, {2, 1, 1}}, {-3, {0, 1, 2}}});
  auto inv = Substitution::identity(v).invert(v.x(1)).invert(v.x(2));
  auto q = substitute(p, inv);
  CHECK(q == poly(v, {{1, {-2, -1, 1}}, {-3, {0, -1, 2}}}));
  CHECK(substitute(q, inv) == p);
  auto sw = Substitution::identity(v).swap(v.x(1), v.x(2));
  CHECK(substitute(p, sw) == poly(v, {{1, {1, 2, 1}}, {-3, {1, 0, 2}}}));
}

TEST_CASE("substitution into a larger variable set") {
  VarSet from{1, 0, true};
  VarSet to{1, 1, true};
  Substitution s(from, to);
  s.set(from.x(1), MonomialImage{1, {0, 1, 0}});
  s.set(from.t(), MonomialImage{-1, {0, 0, 1}});
  auto p = poly(from, {{2, {3, 1}}});
  CHECK(substitute(p, s) == poly(to, {{-2, {0, 3, 1}}}));
}

TEST_CASE("truncation by x-degree") {
  VarSet v{1, 1, true};
  auto p = poly(v, {{1, {0, 0, 0}}, {1, {1, 1, 0}}, {1, {2, 0, 4}}, {1, {3, 0, 0}}});
  auto q = truncate(p, 2);
  CHECK(q.size() == 3);
  CHECK(q.coefficient({3, 0, 0}) == 0);
}

TEST_CASE("serialization round trip") {
  auto rng = make_rng(3, 1);
  VarSet v{3, 0, true};
  for (int trial = 0; trial < 20; ++trial) {
    auto p = oracle::random_poly(rng, v, 6, -1, 4);
    auto text = serialize(p);
    CHECK(parse_poly(text) == p);
    CHECK(serialize(parse_poly(text)) == text);
  }
  CHECK_THROWS(parse_poly("{not json"));
}

TEST_CASE("big coefficients survive arithmetic and serialization") {
  VarSet v{1, 0, false};
  auto p = poly(v, {{1, {0}}, {1, {1}}});
  auto q = p.pow(80);
  CHECK(q.coefficient({40}) == mpz_class("107507208733336176461620"));
  CHECK(parse_poly(serialize(q)) == q);
}

TEST_CASE("text form groups by power of t") {
  VarSet v{2, 0, true};
  auto p = poly(v, {{1, {3, 2, 1}}, {1, {2, 3, 1}}, {2, {1, 1, 2}}});
  CHECK(to_text(p) == "t*(x1^3*x2^2 + x1^2*x2^3) + t^2*(2*x1*x2)");
  CHECK(to_text(LaurentPoly(v)) == "0");
  CHECK(to_text(LaurentPoly::constant(v, 1)) == "1");
  CHECK(to_text(poly(v, {{1, {0, 0, 0}}, {1, {1, 0, 1}}})) == "1 + t*(x1)");
}

TEST_CASE("incompatible variable sets are rejected") {
  LaurentPoly a = LaurentPoly::constant(VarSet{1, 0, true}, 1);
  LaurentPoly b = LaurentPoly::constant(VarSet{2, 0, true}, 1);
  CHECK_THROWS_AS(a + b, AlgebraError);
  CHECK_THROWS_AS(a * b, AlgebraError);
}
