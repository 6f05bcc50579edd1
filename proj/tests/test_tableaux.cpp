#include "llt/identities.hpp"
#include "llt/random.hpp"
#include "llt/tableaux.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <set>
#include <tuple>

using namespace llt;

namespace {

ShapeTuple T(std::string_view s) { return parse_shape_tuple(s); }

SkewShapeTuple example_four_shapes() {
  ShapeTuple beta{{Partition({3, 1}), Partition({2, 2, 2}), Partition({1}), Partition({2, 1})}};
  ShapeTuple gamma{{Partition({0, 0}), Partition({1, 1, 1}), Partition({0}), Partition({2, 0})}};
  return SkewShapeTuple(beta, gamma);
}

TableauTuple example_four_filling() {
  return TableauTuple(example_four_shapes(), {{{2, 5, 9}, {8}}, {{1}, {4}, {6}}, {{7}}, {{}, {3}}});
}

oracle::Filling as_filling(const TableauTuple& t) {
  oracle::Filling f;
  for (const auto& c : cells(t.shape())) f[{c.shape, c.row, c.col}] = t.entry(c);
  return f;
}

}  // namespace

TEST_CASE("tableau validation") {
  auto s = SkewShapeTuple::straight(T("2,1"));
  CHECK_NOTHROW(TableauTuple(s, {{{1, 1}, {2}}}));
  CHECK_THROWS(TableauTuple(s, {{{2, 1}, {3}}}));
  CHECK_THROWS(TableauTuple(s, {{{1, 1}, {1}}}));
  CHECK_THROWS(TableauTuple(s, {{{1}, {2}}}));
}

// The published list of seven coinversion triples omits (3,7,inf): u is cell (2,1)
// of shape 4, v the single cell of shape 3, w the cell right of row 2 of shape 4.
TEST_CASE("coinversions of the four-shape example") {
  auto t = example_four_filling();
  CHECK(coinv(t) == 8);
  CHECK(oracle::coinv_by_definition(t.shape(), as_filling(t)) == 8);
  CHECK(m_bruteforce(t.shape()) == 16);
  CHECK(inv(t) == 8);
  CHECK(t.max_entry() == 9);
}

TEST_CASE("coinversion triples of the four-shape example by entries") {
  auto t = example_four_filling();
  const long inf = 1000;
  std::multiset<std::tuple<long, long, long>> got;
  for (const auto& tr : triples(t.shape())) {
    long a = tr.u.in_shape ? t.entry(tr.u.cell) : 0;
    long b = t.entry(tr.v);
    long c = tr.w.in_shape ? t.entry(tr.w.cell) : inf;
    if (a <= b && b <= c) got.insert({a, b, c});
  }
  std::multiset<std::tuple<long, long, long>> expected{{0, 2, 4}, {0, 2, 7}, {3, 4, inf}, {0, 4, 7},
                                                       {4, 5, inf}, {1, 9, inf}, {0, 9, inf}, {3, 7, inf}};
  CHECK(got == expected);
}

TEST_CASE("single-row golden: twelve tableaux with listed weights") {
  auto s = SkewShapeTuple::straight(T("3;2"));
  auto all = enumerate_ssyt(s, 2);
  CHECK(all.size() == 12);
  // (first row, second row) -> power of t
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> table{
      {{{1, 1, 1}, {1, 1}}, 3}, {{{1, 1, 1}, {1, 2}}, 2}, {{{1, 1, 1}, {2, 2}}, 1},
      {{{1, 1, 2}, {1, 1}}, 3}, {{{1, 1, 2}, {1, 2}}, 3}, {{{1, 1, 2}, {2, 2}}, 2},
      {{{1, 2, 2}, {1, 1}}, 2}, {{{1, 2, 2}, {1, 2}}, 3}, {{{1, 2, 2}, {2, 2}}, 3},
      {{{2, 2, 2}, {1, 1}}, 1}, {{{2, 2, 2}, {1, 2}}, 2}, {{{2, 2, 2}, {2, 2}}, 3}};
  for (const auto& t : all) {
    auto key = std::make_pair(t.rows()[0][0], t.rows()[1][0]);
    REQUIRE(table.count(key) == 1);
    CHECK(coinv(t) == table.at(key));
  }
}

TEST_CASE("skew golden: twelve tableaux with listed weights") {
  auto s = SkewShapeTuple(T("3,3;3,1"), T("2,1;1,0"));
  auto all = enumerate_ssyt(s, 2);
  CHECK(all.size() == 12);
  // (a, b, c, d, e, f) -> power of t, where shape 1 has a in row 1 and (b, c) in row 2,
  // shape 2 has (d, e) in row 1 and f in row 2.
  std::map<std::vector<int>, int> table{
      {{1, 1, 2, 1, 1, 1}, 2}, {{1, 1, 2, 1, 2, 1}, 2}, {{1, 1, 2, 2, 2, 1}, 2},
      {{1, 1, 2, 1, 1, 2}, 1}, {{1, 1, 2, 1, 2, 2}, 1}, {{1, 1, 2, 2, 2, 2}, 1},
      {{1, 2, 2, 1, 1, 1}, 2}, {{1, 2, 2, 1, 2, 1}, 2}, {{1, 2, 2, 2, 2, 1}, 2},
      {{1, 2, 2, 1, 1, 2}, 2}, {{1, 2, 2, 1, 2, 2}, 2}, {{1, 2, 2, 2, 2, 2}, 2}};
  for (const auto& t : all) {
    const auto& r = t.rows();
    std::vector<int> key{r[0][0][0], r[0][1][0], r[0][1][1], r[1][0][0], r[1][0][1], r[1][1][0]};
    REQUIRE(table.count(key) == 1);
    CHECK(coinv(t) == table.at(key));
  }
}

TEST_CASE("tableau engine agrees with brute-force definition oracle") {
  auto rng = make_rng(99, 3);
  for (int trial = 0; trial < 40; ++trial) {
    auto s = random_skew_tuple(rng, {3, 2, 2});
    for (int n = 1; n <= 3; ++n) {
      if (s.cell_count() * n > 10) continue;
      CHECK(llt_coinv(s, n) == oracle::brute_llt(s, n));
    }
  }
}

TEST_CASE("enumeration is sorted and free of duplicates") {
  auto s = SkewShapeTuple(T("2,1;2,0"), T("1,0;0,0"));
  auto all = enumerate_ssyt(s, 3);
  long count = 0;
  for_each_ssyt(s, 3, [&](const TableauTuple&) { ++count; });
  CHECK(static_cast<long>(all.size()) == count);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK_FALSE(all[i] == all[i - 1]);
}

TEST_CASE("coinversion plus inversion equals the triple count") {
  auto rng = make_rng(17, 2);
  for (int trial = 0; trial < 30; ++trial) {
    auto s = random_skew_tuple(rng, {3, 2, 2});
    long m = m_bruteforce(s);
    for_each_ssyt(s, 2, [&](const TableauTuple& t) { CHECK(coinv(t) + inv(t) == m); });
  }
}

TEST_CASE("inversions count attacking pairs") {
  // Two single cells on the same content line, larger entry first in reading order.
  auto s = SkewShapeTuple::straight(T("1;1"));
  CHECK(inv(TableauTuple(s, {{{2}}, {{1}}})) == 1);
  CHECK(inv(TableauTuple(s, {{{1}}, {{2}}})) == 0);
  CHECK(inv(TableauTuple(s, {{{1}}, {{1}}})) == 0);
}

TEST_CASE("reading order follows adjusted content") {
  auto s = SkewShapeTuple::straight(T("2;1"));
  auto order = reading_order(s);
  REQUIRE(order.size() == 3);
  for (std::size_t i = 1; i < order.size(); ++i)
    CHECK(order[i - 1].adjusted_content(2) <= order[i].adjusted_content(2));
}

TEST_CASE("Hall-Littlewood small cases") {
  auto v = llt_vars(2);
  // H_(1,1) = t s_2 + s_11 in two variables.
  auto h11 = oracle::poly(v, {{1, {2, 0, 1}}, {1, {0, 2, 1}}, {1, {1, 1, 1}}, {1, {1, 1, 0}}});
  CHECK(hl_transformed(Partition({1, 1}), 2) == h11);
  // H_(2) = s_2.
  auto h2 = oracle::poly(v, {{1, {2, 0, 0}}, {1, {1, 1, 0}}, {1, {0, 2, 0}}});
  CHECK(hl_transformed(Partition({2}), 2) == h2);
  CHECK(hl_transformed(Partition({1}), 2) == oracle::poly(v, {{1, {1, 0, 0}}, {1, {0, 1, 0}}}));
}

TEST_CASE("single rows reproduce Hall-Littlewood polynomials") {
  for (int w = 1; w <= 4; ++w)
    for (const auto& mu : partitions_of(w))
      for (int n = 1; n <= 3; ++n) {
        auto h = hl_transformed(mu, n);
        for (const auto& beta : distinct_rearrangements(mu)) {
          auto shifted = h.times_monomial([&] {
            ExponentVector e(n + 1, 0);
            e[n] = static_cast<int>(inv_stat(beta));
            return e;
          }());
          CHECK(llt_coinv(row_tuple(beta), n) == shifted);
        }
      }
}

TEST_CASE("complement bijection on a single tableau") {
  auto s = SkewShapeTuple::straight(ShapeTuple{{Partition({3, 3, 1, 0})}});
  TableauTuple t(s, {{{1, 1, 2}, {2, 3, 4}, {4}, {}}});
  auto c = complement_bijection(t, 7, 4);
  CHECK(c.shape().beta() == ShapeTuple{{Partition({3, 2, 0, 0})}});
  CHECK(c.rows()[0][0] == std::vector<int>{1, 2, 3});
  CHECK(c.rows()[0][1] == std::vector<int>{3, 4});
  CHECK(complement_bijection(c, 7, 4) == t);
}

TEST_CASE("weights of tableaux") {
  auto t = example_four_filling();
  auto e = t.x_exponents(9);
  CHECK(e == ExponentVector{1, 1, 1, 1, 1, 1, 1, 1, 1});
}
