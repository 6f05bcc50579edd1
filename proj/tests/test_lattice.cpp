#include "llt/identities.hpp"
#include "llt/lattice.hpp"
#include "llt/random.hpp"
#include "oracles.hpp"
#include "tables.hpp"

#include <doctest.h>

using namespace llt;

namespace {

ShapeTuple T(std::string_view s) { return parse_shape_tuple(s); }

// "100" -> color 1 present out of three.
EdgeLabel lab(std::string_view bits) {
  std::uint32_t b = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] == '1') b |= 1u << i;
  return EdgeLabel(static_cast<int>(bits.size()), b);
}

}  // namespace

TEST_CASE("three-color face weight") {
  auto f = l_face({lab("100"), lab("011"), lab("001"), lab("110")});
  REQUIRE(f.has_value());
  CHECK(f->x_power == 2);
  CHECK(f->t_power == 3);
}

TEST_CASE("two-by-two configuration weight") {
  VarSet v{3, 0, true};
  auto x = [&](int i) { return LaurentPoly::variable(v, v.x(i)); };
  auto w = l_weight({lab("100"), lab("011"), lab("001"), lab("110")}, x(1)) *
           l_weight({lab("000"), lab("110"), lab("010"), lab("100")}, x(1)) *
           l_weight({lab("001"), lab("110"), lab("010"), lab("101")}, x(2)) *
           l_weight({lab("010"), lab("101"), lab("010"), lab("101")}, x(3));
  CHECK(w == LaurentPoly::monomial(v, {3, 2, 2, 8}));
}

TEST_CASE("two-color L table") {
  VarSet v{1, 0, true};
  auto x = LaurentPoly::variable(v, 0);
  auto entries = tables::l_two_colors();
  CHECK(entries.size() == 25);
  for (const auto& e : entries) {
    CHECK(l_weight(e.face, x) == LaurentPoly::monomial(v, {e.x_power, e.t_power}));
    auto f = l_face(e.face);
    REQUIRE(f.has_value());
    CHECK(f->x_power == e.x_power);
    CHECK(f->t_power == e.t_power);
  }
}

TEST_CASE("inadmissible faces have weight zero") {
  VarSet v{1, 0, true};
  auto x = LaurentPoly::variable(v, 0);
  // path enters from the left and leaves through the bottom
  CHECK_FALSE(l_face({lab("1"), lab("1"), lab("0"), lab("0")}).has_value());
  // two paths of one color leave the face
  CHECK_FALSE(l_face({lab("1"), lab("1"), lab("1"), lab("1")}).has_value());
  // conservation fails
  CHECK_FALSE(l_face({lab("1"), lab("0"), lab("0"), lab("0")}).has_value());
  CHECK(l_weight({lab("1"), lab("0"), lab("0"), lab("0")}, x).is_zero());
}

TEST_CASE("dual face weights") {
  VarSet v{1, 0, true};
  auto x = LaurentPoly::variable(v, 0);
  // All-empty face: x^k t^C(k,2).
  CHECK(lstar_weight({lab("00"), lab("00"), lab("00"), lab("00")}, x) == LaurentPoly::monomial(v, {2, 1}));
  // Both colors pass horizontally: L = x^2 t, and x^2 t (x t)^-2 t = 1.
  auto full = lstar_weight({lab("00"), lab("11"), lab("00"), lab("11")}, x);
  CHECK(full == LaurentPoly::monomial(v, {0, 0}));
  CHECK(lstar_weight({lab("10"), lab("00"), lab("00"), lab("00")}, x).is_zero());
}

TEST_CASE("golden polynomials through the lattice") {
  auto v = llt_vars(2);
  auto a = partition_function(build_lattice(SkewShapeTuple::straight(T("3;2")), 2));
  auto expect_a = oracle::poly(v, {{1, {2, 3, 1}}, {1, {3, 2, 1}}, {1, {1, 4, 2}}, {1, {2, 3, 2}}, {1, {3, 2, 2}},
                                   {1, {4, 1, 2}}, {1, {0, 5, 3}}, {1, {1, 4, 3}}, {1, {2, 3, 3}}, {1, {3, 2, 3}},
                                   {1, {4, 1, 3}}, {1, {5, 0, 3}}});
  CHECK(a == expect_a);
  auto b = partition_function(build_lattice(SkewShapeTuple(T("3,3;3,1"), T("2,1;1,0")), 2));
  auto expect_b = oracle::poly(v, {{1, {2, 4, 1}}, {1, {3, 3, 1}}, {1, {4, 2, 1}}, {1, {1, 5, 2}}, {2, {2, 4, 2}},
                                   {3, {3, 3, 2}}, {2, {4, 2, 2}}, {1, {5, 1, 2}}});
  CHECK(b == expect_b);
}

TEST_CASE("lattice boundaries of the skew golden") {
  auto spec = build_lattice(SkewShapeTuple(T("3,3;3,1"), T("2,1;1,0")), 2);
  CHECK(spec.col_min == -1);
  CHECK(spec.col_max == 3);
  CHECK(spec.width() == 5);
  CHECK(spec.bottom.size() == 5);
  CHECK(spec.left.size() == 2);
}

TEST_CASE("configuration bijection with tableaux") {
  auto rng = make_rng(404, 1);
  for (int trial = 0; trial < 25; ++trial) {
    auto s = random_skew_tuple(rng, {3, 2, 2});
    for (int n = 1; n <= 3; ++n) {
      auto spec = build_lattice(s, n);
      auto tabs = enumerate_ssyt(s, n);
      auto configs = enumerate_configs(spec);
      REQUIRE(tabs.size() == configs.size());
      for (const auto& t : tabs) {
        auto c = ssyt_to_config(t, spec);
        REQUIRE(is_valid(spec, c));
        CHECK(config_to_ssyt(c, spec, s) == t);
        ExponentVector e = t.x_exponents(n);
        e.push_back(static_cast<int>(coinv(t)));
        CHECK(config_weight(spec, c) == LaurentPoly::monomial(llt_vars(n), e));
      }
    }
  }
}

TEST_CASE("the all-ones single-row tableau") {
  auto r = SkewShapeTuple::straight(T("3;2"));
  TableauTuple t(r, {{{1, 1, 1}}, {{1, 1}}});
  auto spec = build_lattice(r, 2);
  CHECK(config_weight(spec, ssyt_to_config(t, spec)) == LaurentPoly::monomial(llt_vars(2), {5, 0, 3}));
}

TEST_CASE("rotation of configurations is an involution") {
  auto s = SkewShapeTuple::straight(T("2,1;1,0"));
  auto spec = build_lattice(s, 2, -1, 2);
  for (const auto& c : enumerate_configs(spec)) CHECK(rotate_config(rotate_config(c)) == c);
}

TEST_CASE("dual lattice exits agree up to a monomial") {
  auto lam = T("1,0;0,0");
  auto right = partition_function(build_lstar_lattice(lam, 2, 4, LStarExit::Right));
  auto top = partition_function(build_lstar_lattice(lam, 2, 4, LStarExit::Top));
  CHECK_FALSE(right.is_zero());
  CHECK_FALSE(top.is_zero());
  CHECK(right.size() == top.size());
}

TEST_CASE("configuration output formats") {
  auto s = SkewShapeTuple::straight(T("1;1"));
  auto spec = build_lattice(s, 1);
  auto cs = enumerate_configs(spec);
  REQUIRE(cs.size() == 1);
  auto j = nlohmann::json::parse(config_to_json(spec, cs[0]));
  CHECK(j.is_object());
  CHECK_FALSE(config_to_ascii(spec, cs[0]).empty());
}
