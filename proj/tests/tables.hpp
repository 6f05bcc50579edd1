#pragma once

// Two-color face weight tables, transcribed entry by entry.
// Color 1 is blue, color 2 is red.

#include "llt/lattice.hpp"
#include "llt/yangbaxter.hpp"

#include <vector>

namespace tables {

using llt::EdgeLabel;
using llt::LaurentPoly;

struct LEntry {
  llt::LFace face;
  int x_power;
  int t_power;
};

struct REntry {
  llt::RFace face;
  LaurentPoly weight;  // in ybe_vars()
};

// Single color L pictures as (bottom, left, top, right).
struct Pic {
  bool i, j, k, l;
};

inline std::vector<LEntry> l_two_colors() {
  const Pic empty{false, false, false, false}, vertical{true, false, true, false},
      horizontal{false, true, false, true}, bottom_right{true, false, false, true}, left_top{false, true, true, false};
  const Pic order[5] = {empty, vertical, horizontal, bottom_right, left_top};
  // rows: blue picture, columns: red picture
  const int xp[5][5] = {{0, 0, 1, 1, 0}, {0, 0, 1, 1, 0}, {1, 1, 2, 2, 1}, {1, 1, 2, 2, 1}, {0, 0, 1, 1, 0}};
  const int tp[5][5] = {{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 1, 1, 1, 1}, {0, 1, 1, 1, 1}, {0, 0, 0, 0, 0}};
  auto mk = [](bool b, bool r) { return EdgeLabel(2, (b ? 1u : 0u) | (r ? 2u : 0u)); };
  std::vector<LEntry> out;
  for (int b = 0; b < 5; ++b)
    for (int r = 0; r < 5; ++r) {
      const Pic& pb = order[b];
      const Pic& pr = order[r];
      out.push_back({{mk(pb.i, pr.i), mk(pb.j, pr.j), mk(pb.k, pr.k), mk(pb.l, pr.l)}, xp[b][r], tp[b][r]});
    }
  return out;
}

inline llt::RFace r_face(const std::vector<llt::CrossingType>& types) {
  int k = static_cast<int>(types.size());
  std::uint32_t I = 0, J = 0, K = 0, L = 0;
  for (int c = 0; c < k; ++c) {
    std::uint32_t b = 1u << c;
    switch (types[c]) {
      case llt::CrossingType::T1: J |= b, L |= b; break;
      case llt::CrossingType::T2: J |= b, K |= b; break;
      case llt::CrossingType::T3: I |= b, L |= b; break;
      case llt::CrossingType::T4: I |= b, J |= b, K |= b, L |= b; break;
      case llt::CrossingType::T5: break;
    }
  }
  return {EdgeLabel(k, I), EdgeLabel(k, J), EdgeLabel(k, K), EdgeLabel(k, L)};
}

// Ratio z = y/x.
inline std::vector<REntry> r_two_colors() {
  using C = llt::CrossingType;
  auto one = LaurentPoly::constant(llt::ybe_vars(), 1);
  auto z = llt::ybe_y() * llt::ybe_x().pow(-1);
  auto zt = z * llt::ybe_t().pow(-1);
  auto oz = one - z;
  // T5 empty, T1 left to right, T3 bottom to right, T2 left to top, T4 both.
  const C order[5] = {C::T5, C::T1, C::T3, C::T2, C::T4};
  const LaurentPoly w[5][5] = {
      {one, oz, one, z, z},
      {oz, oz * (one - zt), oz, z * oz, z * oz},
      {one, oz, one, z, z},
      {z, zt * oz, z, z * z, z * z},
      {z, zt * oz, z, z * z, z * z},
  };
  std::vector<REntry> out;
  for (int b = 0; b < 5; ++b)
    for (int r = 0; r < 5; ++r) out.push_back({r_face({order[b], order[r]}), w[b][r]});
  return out;
}

}  // namespace tables
