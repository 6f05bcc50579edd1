#pragma once

#include "llt/edge_label.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace llt {

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Weakly decreasing sequence of nonnegative parts. Trailing zeros are kept:
// the declared length matters for boundary vectors and statistics.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition zeros(int length);

  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;  // 1-based, 0 beyond the declared length
  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int nonzero_length() const;
  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
  bool contains(const Partition& other) const;
  Partition conjugate() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

using Composition = std::vector<int>;

struct ShapeTuple {
  std::vector<Partition> shapes;

  int k() const { return static_cast<int>(shapes.size()); }
  int weight() const;
  int max_part() const;
  // Common length of all partitions; throws if they differ.
  int common_length() const;
  const Partition& operator[](int i) const { return shapes.at(i - 1); }  // 1-based

  static ShapeTuple zeros(int k, int n);
  bool operator==(const ShapeTuple&) const = default;
  auto operator<=>(const ShapeTuple&) const = default;
};

class SkewShapeTuple {
 public:
  SkewShapeTuple() = default;
  SkewShapeTuple(ShapeTuple beta, ShapeTuple gamma);
  static SkewShapeTuple straight(ShapeTuple beta);

  int k() const { return beta_.k(); }
  const ShapeTuple& beta() const { return beta_; }
  const ShapeTuple& gamma() const { return gamma_; }
  bool is_straight() const;
  int cell_count() const { return beta_.weight() - gamma_.weight(); }

  bool operator==(const SkewShapeTuple&) const = default;

 private:
  ShapeTuple beta_;
  ShapeTuple gamma_;
};

struct Cell {
  int row = 0;
  int col = 0;
  int shape = 0;

  int content() const { return col - row; }
  int adjusted_content(int k) const { return content() * k + (shape - 1); }
  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

bool in_skew(const SkewShapeTuple& s, const Cell& c);

// Cells of each shape, rows bottom to top, columns left to right.
std::vector<Cell> cells(const SkewShapeTuple& s);

EdgeLabel boundary_vector(const ShapeTuple& mu, int i);

struct ColumnRange {
  int r = 0;
  int s = 0;
  int band() const { return s - r; }
};

// Column span of the lattice model attached to the skew tuple.
ColumnRange column_range(const SkewShapeTuple& s);

// A triple endpoint. When in_shape is false the endpoint lies outside the
// skew shape: for u this means a = 0, for w this means c = infinity.
struct TripleCell {
  Cell cell;
  bool in_shape = false;
};

struct Triple {
  TripleCell u;
  Cell v;
  TripleCell w;
};

std::vector<Triple> triples(const SkewShapeTuple& s);
long m_bruteforce(const SkewShapeTuple& s);
long m_formula(const ShapeTuple& beta);

long n_stat(const Partition& mu);
long inv_stat(const Composition& beta);

// Componentwise complement in the (M - n) x n box, tuple order reversed.
ShapeTuple complement(const ShapeTuple& lam, int M, int n);

// Rotation by 180 degrees inside the smallest box containing beta.
SkewShapeTuple rotate(const SkewShapeTuple& s);

long d_stat(const ShapeTuple& lam);
long dtilde_stat(const ShapeTuple& lam, int M);

// "3,3;3,1" -> ((3,3),(3,1)). Each ';'-separated block is one partition.
ShapeTuple parse_shape_tuple(std::string_view text);
std::string format_shape_tuple(const ShapeTuple& t);
std::string format_skew(const SkewShapeTuple& s);

std::vector<Partition> partitions_of(int total);
std::vector<Partition> partitions_up_to(int max_weight);
// Partitions with exactly `length` declared parts (zeros allowed) and weight <= max_weight.
std::vector<Partition> bounded_partitions(int length, int max_weight);
// All k-tuples of partitions with n declared parts and total weight <= max_weight.
std::vector<ShapeTuple> tuples_up_to(int k, int n, int max_weight);
std::vector<Composition> distinct_rearrangements(const Partition& mu);

// One single-row shape per part of beta.
SkewShapeTuple row_tuple(const Composition& beta);

}  // namespace llt
