#pragma once

// Test-side reference computations, written directly from the definitions
// and sharing no enumeration code with the library.

#include "llt/algebra.hpp"
#include "llt/shapes.hpp"

#include <map>
#include <tuple>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using llt::ExponentVector;
using llt::LaurentPoly;
using llt::VarSet;

inline LaurentPoly poly(VarSet v, const std::vector<std::pair<long, ExponentVector>>& terms) {
  LaurentPoly p(v);
  for (const auto& [c, e] : terms) p.add_term(e, c);
  return p;
}

inline LaurentPoly random_poly(std::mt19937_64& rng, VarSet v, int terms, int lo, int hi) {
  std::uniform_int_distribution<int> ed(lo, hi), cd(-5, 5);
  LaurentPoly p(v);
  for (int i = 0; i < terms; ++i) {
    ExponentVector e(v.size());
    for (int& x : e) x = ed(rng);
    p.add_term(e, cd(rng));
  }
  return p;
}

struct Box {
  int shape, row, col;
};

// Entry lookup for a filling stored per (shape,row,col).
using Filling = std::map<std::tuple<int, int, int>, int>;

inline bool inside(const llt::SkewShapeTuple& s, int shape, int row, int col) {
  const auto& b = s.beta()[shape];
  const auto& g = s.gamma()[shape];
  return row >= 1 && row <= b.length() && col > g.part(row) && col <= b.part(row);
}

// Coinversion count straight from the triple definition.
inline long coinv_by_definition(const llt::SkewShapeTuple& s, const Filling& T) {
  long count = 0;
  for (const auto& [key, b] : T) {
    const auto [i, r0, c0] = key;
    const int content = c0 - r0;
    for (int j = i + 1; j <= s.k(); ++j) {
      const auto& beta = s.beta()[j];
      const auto& gamma = s.gamma()[j];
      for (int r = 1; r <= beta.length(); ++r) {
        const int wc = content + r;  // w on the same content line
        if (wc < gamma.part(r) + 1 || wc > beta.part(r) + 1) continue;
        const bool u_in = inside(s, j, r, wc - 1);
        const bool w_in = inside(s, j, r, wc);
        const long a = u_in ? T.at({j, r, wc - 1}) : 0;
        const long c = w_in ? T.at({j, r, wc}) : (1L << 40);
        if (a <= b && b <= c) ++count;
      }
    }
  }
  return count;
}

// Sum over all fillings in [1,n] that happen to be semistandard.
inline LaurentPoly brute_llt(const llt::SkewShapeTuple& s, int n) {
  std::vector<Box> boxes;
  for (int i = 1; i <= s.k(); ++i)
    for (int r = 1; r <= s.beta()[i].length(); ++r)
      for (int c = s.gamma()[i].part(r) + 1; c <= s.beta()[i].part(r); ++c) boxes.push_back({i, r, c});
  const VarSet v{n, 0, true};
  LaurentPoly out(v);
  std::vector<int> vals(boxes.size(), 1);
  if (n < 1) return boxes.empty() ? LaurentPoly::constant(v, 1) : out;
  while (true) {
    Filling T;
    for (std::size_t q = 0; q < boxes.size(); ++q) T[{boxes[q].shape, boxes[q].row, boxes[q].col}] = vals[q];
    bool ok = true;
    for (const auto& [key, e] : T) {
      const auto [i, r, c] = key;
      if (inside(s, i, r, c - 1) && T.at({i, r, c - 1}) > e) ok = false;
      if (inside(s, i, r - 1, c) && T.at({i, r - 1, c}) >= e) ok = false;
    }
    if (ok) {
      ExponentVector e(v.size(), 0);
      for (int x : vals) ++e[x - 1];
      e[n] = static_cast<int>(coinv_by_definition(s, T));
      out.add_term(e, 1);
    }
    std::size_t q = 0;
    while (q < vals.size() && ++vals[q] > n) vals[q++] = 1;
    if (q == vals.size()) break;
  }
  return out;
}

}  // namespace oracle
