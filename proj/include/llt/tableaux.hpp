#pragma once

#include "llt/algebra.hpp"
#include "llt/shapes.hpp"

#include <functional>
#include <vector>

namespace llt {

// Tuple of semistandard tableaux. rows[i-1][r-1] lists the entries of row r
// of shape i, from column gamma_r + 1 to beta_r.
class TableauTuple {
 public:
  using Rows = std::vector<std::vector<std::vector<int>>>;

  TableauTuple(SkewShapeTuple shape, Rows rows);

  const SkewShapeTuple& shape() const { return shape_; }
  const Rows& rows() const { return rows_; }
  int entry(const Cell& c) const;
  int max_entry() const;
  // Exponents of x_1..x_n.
  ExponentVector x_exponents(int n) const;

  bool operator==(const TableauTuple&) const = default;

 private:
  SkewShapeTuple shape_;
  Rows rows_;
};

// Cells ordered by adjusted content, ties by row.
std::vector<Cell> reading_order(const SkewShapeTuple& s);

void for_each_ssyt(const SkewShapeTuple& s, int n, const std::function<void(const TableauTuple&)>& visit);
// All tuples with entries in [1, n], sorted by reading word.
std::vector<TableauTuple> enumerate_ssyt(const SkewShapeTuple& s, int n);

long coinv(const TableauTuple& T);
long inv(const TableauTuple& T);

VarSet llt_vars(int n);
LaurentPoly llt_coinv(const SkewShapeTuple& s, int n);
LaurentPoly llt_inv(const SkewShapeTuple& s, int n);

// Transformed Hall-Littlewood polynomial via fillings of the conjugate.
LaurentPoly hl_transformed(const Partition& mu, int n);
LaurentPoly hl_modified(const Partition& mu, int n);

// Column-complement bijection between tuples of shape lam and lam^c.
TableauTuple complement_bijection(const TableauTuple& T, int M, int n);

}  // namespace llt
