#pragma once

#include "llt/algebra.hpp"
#include "llt/edge_label.hpp"
#include "llt/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace llt {

// I southwest, J northwest, K northeast, L southeast.
struct RFace {
  EdgeLabel I, J, K, L;
};

// Single-color crossing types of the R vertex.
enum class CrossingType { T1 = 1, T2, T3, T4, T5 };

// Per-color types, or nullopt when some color is not one of the five.
std::optional<std::vector<CrossingType>> crossing_types(const RFace& f);
// Number of higher colors of type 1, for each color 1..k.
std::vector<int> r_delta(const RFace& f);

// Variables x, y, t used by all Yang-Baxter computations.
VarSet ybe_vars();
LaurentPoly ybe_x();
LaurentPoly ybe_y();
LaurentPoly ybe_t();

// z is a monomial spectral ratio, normally y/x.
LaurentPoly r_weight(const RFace& f, const LaurentPoly& z);

enum class EFKind { E, F, ETilde, FTilde };

// Single-color L pictures, in table order.
enum class LPicture { Empty = 0, BottomRight, LeftRight, BottomTop, LeftTop };

std::optional<LPicture> l_picture(bool i, bool j, bool k, bool l);
// For E and F the picture index is an LPicture; for the tilde kinds it is a CrossingType.
LaurentPoly ef_weight(EFKind kind, int picture, const LaurentPoly& param);

// Recursive construction color by color, from the highest color down.
LaurentPoly l_recursive(const LFace& f, const LaurentPoly& x);
LaurentPoly r_recursive(const RFace& f, const LaurentPoly& z);

struct YbeBoundary {
  EdgeLabel I1, I2, I3, J1, J2, J3;
  std::string to_string() const;
};

YbeBoundary boundary_from_index(int k, std::uint64_t index);

enum class YbeVariant { Plain, LStar };

// gauche: sum over K of L_y(K3,K2;J3,J2) L_x(I3,K1;K3,J1) R(I2,I1;K2,K1)
// droite: sum over L of R(L2,L1;J2,J1) L_x(L3,I1;J3,L1) L_y(I3,I2;L3,L2)
// In the LStar variant the x faces are L* faces and the ratio is y x t^(k-1).
LaurentPoly ybe_gauche(const YbeBoundary& b, YbeVariant variant = YbeVariant::Plain);
LaurentPoly ybe_droite(const YbeBoundary& b, YbeVariant variant = YbeVariant::Plain);

struct YbeMode {
  bool numeric = false;
  std::uint64_t seed = 1;
  int points = 3;
};

struct YbeFailure {
  YbeBoundary boundary;
  std::string gauche;
  std::string droite;
};

struct YbeReport {
  std::string name;
  int k = 0;
  bool numeric = false;
  long checked = 0;
  long failed = 0;
  std::optional<YbeFailure> first_failure;

  bool passed() const { return failed == 0 && checked > 0; }
  std::string to_json() const;
};

YbeReport ybe_check(int k, const YbeMode& mode);
YbeReport lstar_ybe_check(int k, const YbeMode& mode);

}  // namespace llt
