#pragma once

#include "llt/algebra.hpp"
#include "llt/edge_label.hpp"
#include "llt/shapes.hpp"
#include "llt/tableaux.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace llt {

// I bottom, J left, K top, L right.
struct LFace {
  EdgeLabel I, J, K, L;
};

// Weight x^x_power t^t_power of an admissible L face.
struct FaceExponents {
  int x_power = 0;
  int t_power = 0;
};

std::optional<FaceExponents> l_face(const LFace& f);
// x must be a monomial; returns zero for inadmissible faces.
LaurentPoly l_weight(const LFace& f, const LaurentPoly& x);
// x^k t^C(k,2) L evaluated at 1/(x t^(k-1)).
LaurentPoly lstar_weight(const LFace& f, const LaurentPoly& x);

enum class FaceKind { L, LStar };

// Rows are numbered 1..n from the bottom; row i carries x_i.
struct LatticeSpec {
  int k = 0;
  int n = 0;
  int col_min = 0;
  int col_max = -1;
  std::vector<EdgeLabel> bottom;  // per column, col_min..col_max
  std::vector<EdgeLabel> top;
  std::vector<EdgeLabel> left;    // per row, 1..n
  std::vector<EdgeLabel> right;
  FaceKind kind = FaceKind::L;

  int width() const { return col_max - col_min + 1; }
};

LatticeSpec build_lattice(const SkewShapeTuple& s, int n);
// Same model on an explicit column span containing the natural one.
LatticeSpec build_lattice(const SkewShapeTuple& s, int n, int col_min, int col_max);

enum class LStarExit { Right, Top };

// L* lattice on columns 1-n..M-n with bottom labels from lam.
// Right: paths leave through the right edge, one of each color per row.
// Top: paths leave through the top along the labels of the full box.
LatticeSpec build_lstar_lattice(const ShapeTuple& lam, int n, int M, LStarExit exit);

LaurentPoly partition_function(const LatticeSpec& spec);

struct LatticeConfig {
  // vertical[h][p]: edge on top of face row h in column col_min + p; h = 0 is the bottom boundary.
  std::vector<std::vector<EdgeLabel>> vertical;
  // horizontal[i - 1][q]: edge on the left of column col_min + q in row i; q = width is the right boundary.
  std::vector<std::vector<EdgeLabel>> horizontal;

  bool operator==(const LatticeConfig&) const = default;
};

LFace face_of(const LatticeConfig& c, int row, int p);
bool is_valid(const LatticeSpec& spec, const LatticeConfig& c);
LaurentPoly config_weight(const LatticeSpec& spec, const LatticeConfig& c);

void for_each_config(const LatticeSpec& spec, const std::function<void(const LatticeConfig&)>& visit);
std::vector<LatticeConfig> enumerate_configs(const LatticeSpec& spec);

LatticeConfig ssyt_to_config(const TableauTuple& T, const LatticeSpec& spec);
TableauTuple config_to_ssyt(const LatticeConfig& c, const LatticeSpec& spec, const SkewShapeTuple& shape);

// Rotation by 180 degrees with colors reversed: row i -> n+1-i,
// column p -> col_min + col_max - p.
LatticeConfig rotate_config(const LatticeConfig& c);

std::string config_to_json(const LatticeSpec& spec, const LatticeConfig& c);
std::string config_to_ascii(const LatticeSpec& spec, const LatticeConfig& c);

}  // namespace llt
