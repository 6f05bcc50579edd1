#include "llt/tableaux.hpp"

#include <algorithm>
#include <map>

namespace llt {

TableauTuple::TableauTuple(SkewShapeTuple shape, Rows rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.k()) throw ShapeError("tableau tuple has wrong number of shapes");
  for (int i = 1; i <= shape_.k(); ++i) {
    const auto& b = shape_.beta()[i];
    const auto& g = shape_.gamma()[i];
    const auto& R = rows_[i - 1];
    if (static_cast<int>(R.size()) != b.length()) throw ShapeError("tableau has wrong number of rows");
    for (int r = 1; r <= b.length(); ++r) {
      if (static_cast<int>(R[r - 1].size()) != b.part(r) - g.part(r)) throw ShapeError("tableau row has wrong length");
      for (std::size_t j = 0; j < R[r - 1].size(); ++j) {
        const int e = R[r - 1][j];
        if (e < 1) throw ShapeError("tableau entries must be positive");
        if (j > 0 && R[r - 1][j - 1] > e) throw ShapeError("tableau rows must weakly increase");
        const int col = g.part(r) + 1 + static_cast<int>(j);
        if (r > 1 && col > g.part(r - 1) && col <= b.part(r - 1)) {
          if (R[r - 2][col - g.part(r - 1) - 1] >= e) throw ShapeError("tableau columns must strictly increase");
        }
      }
    }
  }
}

int TableauTuple::entry(const Cell& c) const {
  if (!in_skew(shape_, c)) throw ShapeError("cell not in tableau shape");
  const int g = shape_.gamma()[c.shape].part(c.row);
  return rows_[c.shape - 1][c.row - 1][c.col - g - 1];
}

int TableauTuple::max_entry() const {
  int m = 0;
  for (const auto& shape : rows_)
    for (const auto& row : shape)
      for (int e : row) m = std::max(m, e);
  return m;
}

ExponentVector TableauTuple::x_exponents(int n) const {
  ExponentVector e(n, 0);
  for (const auto& shape : rows_)
    for (const auto& row : shape)
      for (int v : row) {
        if (v > n) throw ShapeError("tableau entry exceeds number of variables");
        ++e[v - 1];
      }
  return e;
}

std::vector<Cell> reading_order(const SkewShapeTuple& s) {
  auto cs = cells(s);
  const int k = s.k();
  std::sort(cs.begin(), cs.end(), [k](const Cell& a, const Cell& b) {
    const int ca = a.adjusted_content(k);
    const int cb = b.adjusted_content(k);
    if (ca != cb) return ca < cb;
    return a.row < b.row;
  });
  return cs;
}

namespace {

// Flattened view of a skew tuple for fast enumeration.
struct Layout {
  SkewShapeTuple shape;
  std::vector<Cell> cells;
  std::vector<int> offset;  // per shape, size k + 1
  std::map<Cell, int> index;

  explicit Layout(const SkewShapeTuple& s) : shape(s), cells(llt::cells(s)) {
    offset.assign(s.k() + 1, 0);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      index[cells[i]] = static_cast<int>(i);
      offset[cells[i].shape] = static_cast<int>(i) + 1;
    }
    for (int i = 1; i <= s.k(); ++i) offset[i] = std::max(offset[i], offset[i - 1]);
  }

  int find(const Cell& c) const {
    auto it = index.find(c);
    return it == index.end() ? -1 : it->second;
  }
};

void fill_shape(const Layout& L, int shape, int n, std::size_t pos, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  const int begin = shape == 1 ? 0 : L.offset[shape - 1];
  const int end = L.offset[shape];
  if (static_cast<int>(pos) == end - begin) {
    out.push_back(cur);
    return;
  }
  const Cell& c = L.cells[begin + pos];
  int lo = 1;
  const int left = L.find(Cell{c.row, c.col - 1, c.shape});
  if (left >= 0) lo = std::max(lo, cur[left - begin]);
  const int below = L.find(Cell{c.row - 1, c.col, c.shape});
  if (below >= 0) lo = std::max(lo, cur[below - begin] + 1);
  for (int e = lo; e <= n; ++e) {
    cur[pos] = e;
    fill_shape(L, shape, n, pos + 1, cur, out);
  }
}

std::vector<std::vector<std::vector<int>>> shape_fillings(const Layout& L, int n) {
  std::vector<std::vector<std::vector<int>>> out(L.shape.k());
  for (int i = 1; i <= L.shape.k(); ++i) {
    const int size = L.offset[i] - (i == 1 ? 0 : L.offset[i - 1]);
    std::vector<int> cur(size, 0);
    fill_shape(L, i, n, 0, cur, out[i - 1]);
  }
  return out;
}

// Visits every tuple as a flat entry array aligned with Layout::cells.
template <class F>
void for_each_flat(const Layout& L, int n, F&& visit) {
  if (n < 0) throw ShapeError("number of variables must be nonnegative");
  auto fills = shape_fillings(L, n);
  const int k = L.shape.k();
  for (const auto& f : fills)
    if (f.empty()) return;
  std::vector<std::size_t> idx(k, 0);
  std::vector<int> flat(L.cells.size(), 0);
  auto load = [&](int i) {
    const int begin = i == 0 ? 0 : L.offset[i];
    const auto& f = fills[i][idx[i]];
    std::copy(f.begin(), f.end(), flat.begin() + begin);
  };
  for (int i = 0; i < k; ++i) load(i);
  while (true) {
    visit(flat);
    int i = k - 1;
    while (i >= 0) {
      if (++idx[i] < fills[i].size()) {
        load(i);
        break;
      }
      idx[i] = 0;
      load(i);
      --i;
    }
    if (i < 0) return;
  }
}

TableauTuple from_flat(const Layout& L, const std::vector<int>& flat) {
  TableauTuple::Rows rows(L.shape.k());
  for (int i = 1; i <= L.shape.k(); ++i) rows[i - 1].resize(L.shape.beta()[i].length());
  for (std::size_t j = 0; j < L.cells.size(); ++j) {
    const Cell& c = L.cells[j];
    rows[c.shape - 1][c.row - 1].push_back(flat[j]);
  }
  return TableauTuple(L.shape, std::move(rows));
}

struct FlatTriple {
  int u;
  int v;
  int w;
};

std::vector<FlatTriple> flat_triples(const Layout& L) {
  std::vector<FlatTriple> out;
  for (const auto& t : triples(L.shape)) {
    out.push_back(FlatTriple{t.u.in_shape ? L.find(t.u.cell) : -1, L.find(t.v), t.w.in_shape ? L.find(t.w.cell) : -1});
  }
  return out;
}

long flat_coinv(const std::vector<FlatTriple>& ts, const std::vector<int>& e) {
  long n = 0;
  for (const auto& t : ts) {
    const int b = e[t.v];
    const bool a_le_b = t.u < 0 || e[t.u] <= b;
    const bool b_le_c = t.w < 0 || b <= e[t.w];
    if (a_le_b && b_le_c) ++n;
  }
  return n;
}

// Attacking pairs (p, q) with p before q in reading order.
std::vector<std::pair<int, int>> attacking_pairs(const Layout& L) {
  const int k = L.shape.k();
  std::vector<std::pair<int, int>> out;
  auto order = reading_order(L.shape);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (std::abs(order[i].adjusted_content(k) - order[j].adjusted_content(k)) < k)
        out.emplace_back(L.find(order[i]), L.find(order[j]));
    }
  }
  return out;
}

long flat_inv(const std::vector<std::pair<int, int>>& pairs, const std::vector<int>& e) {
  long n = 0;
  for (const auto& [p, q] : pairs)
    if (e[p] > e[q]) ++n;
  return n;
}

std::vector<int> to_flat(const Layout& L, const TableauTuple& T) {
  std::vector<int> flat(L.cells.size());
  for (std::size_t j = 0; j < L.cells.size(); ++j) flat[j] = T.entry(L.cells[j]);
  return flat;
}

template <class Stat>
LaurentPoly llt_sum(const SkewShapeTuple& s, int n, Stat&& stat) {
  Layout L(s);
  const VarSet vars = llt_vars(n);
  std::map<ExponentVector, long> counts;
  ExponentVector e(vars.size(), 0);
  for_each_flat(L, n, [&](const std::vector<int>& flat) {
    std::fill(e.begin(), e.end(), 0);
    for (int v : flat) ++e[v - 1];
    e[n] = static_cast<int>(stat(flat));
    ++counts[e];
  });
  LaurentPoly p(vars);
  for (const auto& [exps, c] : counts) p.add_term(exps, Coefficient(c));
  return p;
}

}  // namespace

void for_each_ssyt(const SkewShapeTuple& s, int n, const std::function<void(const TableauTuple&)>& visit) {
  Layout L(s);
  for_each_flat(L, n, [&](const std::vector<int>& flat) { visit(from_flat(L, flat)); });
}

std::vector<TableauTuple> enumerate_ssyt(const SkewShapeTuple& s, int n) {
  Layout L(s);
  std::vector<int> perm;
  for (const Cell& c : reading_order(s)) perm.push_back(L.find(c));
  std::vector<std::pair<std::vector<int>, std::vector<int>>> keyed;
  for_each_flat(L, n, [&](const std::vector<int>& flat) {
    std::vector<int> word(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) word[i] = flat[perm[i]];
    keyed.emplace_back(std::move(word), flat);
  });
  std::sort(keyed.begin(), keyed.end());
  std::vector<TableauTuple> out;
  out.reserve(keyed.size());
  for (const auto& [word, flat] : keyed) out.push_back(from_flat(L, flat));
  return out;
}

long coinv(const TableauTuple& T) {
  Layout L(T.shape());
  return flat_coinv(flat_triples(L), to_flat(L, T));
}

long inv(const TableauTuple& T) {
  Layout L(T.shape());
  return flat_inv(attacking_pairs(L), to_flat(L, T));
}

VarSet llt_vars(int n) { return VarSet{n, 0, true}; }

LaurentPoly llt_coinv(const SkewShapeTuple& s, int n) {
  Layout L(s);
  auto ts = flat_triples(L);
  return llt_sum(s, n, [&](const std::vector<int>& e) { return flat_coinv(ts, e); });
}

LaurentPoly llt_inv(const SkewShapeTuple& s, int n) {
  Layout L(s);
  auto pairs = attacking_pairs(L);
  return llt_sum(s, n, [&](const std::vector<int>& e) { return flat_inv(pairs, e); });
}

namespace {

void decreasing_columns(int height, int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == height) {
    out.push_back(cur);
    return;
  }
  const int hi = cur.empty() ? n : cur.back();
  for (int e = 1; e <= hi; ++e) {
    cur.push_back(e);
    decreasing_columns(height, n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

LaurentPoly hl_transformed(const Partition& mu, int n) {
  if (n < 1) throw ShapeError("need at least one variable");
  std::vector<int> heights;
  for (int p : mu.parts())
    if (p > 0) heights.push_back(p);
  const int ncols = static_cast<int>(heights.size());
  std::vector<std::vector<std::vector<int>>> options(ncols);
  for (int q = 0; q < ncols; ++q) {
    std::vector<int> cur;
    decreasing_columns(heights[q], n, cur, options[q]);
  }
  const VarSet vars = llt_vars(n);
  LaurentPoly result(vars);
  std::map<ExponentVector, long> counts;
  std::vector<std::size_t> idx(ncols, 0);
  ExponentVector e(vars.size(), 0);
  auto at = [&](int row, int col) { return options[col][idx[col]][row]; };
  while (true) {
    std::fill(e.begin(), e.end(), 0);
    long stat = 0;
    for (int q = 0; q < ncols; ++q) {
      for (int r = 0; r < heights[q]; ++r) {
        const int x = at(r, q);
        ++e[x - 1];
        for (int q2 = q + 1; q2 < ncols; ++q2) {
          if (heights[q2] <= r) continue;
          const int z = at(r, q2);
          const bool y_ok = r == 0 || z <= at(r - 1, q);
          if (x <= z && y_ok) ++stat;
        }
      }
    }
    e[n] = static_cast<int>(stat);
    ++counts[e];
    int q = ncols - 1;
    while (q >= 0 && ++idx[q] == options[q].size()) idx[q--] = 0;
    if (q < 0) break;
  }
  for (const auto& [exps, c] : counts) result.add_term(exps, Coefficient(c));
  return result;
}

LaurentPoly hl_modified(const Partition& mu, int n) {
  const LaurentPoly H = hl_transformed(mu, n);
  const VarSet vars = H.vars();
  Substitution s = Substitution::identity(vars);
  s.invert(vars.t());
  ExponentVector shift(vars.size(), 0);
  shift[vars.t()] = static_cast<int>(n_stat(mu));
  return substitute(H, s).times_monomial(shift);
}

TableauTuple complement_bijection(const TableauTuple& T, int M, int n) {
  const SkewShapeTuple& s = T.shape();
  if (!s.is_straight()) throw ShapeError("complement bijection needs straight shapes");
  const int width = M - n;
  const ShapeTuple lamc = complement(s.beta(), M, n);
  const int k = s.k();
  TableauTuple::Rows rows(k);
  for (int i = 1; i <= k; ++i) {
    const Partition& lam = s.beta()[i];
    const int target = k + 1 - i;
    auto& out_rows = rows[target - 1];
    out_rows.assign(n, {});
    for (int c = 1; c <= width; ++c) {
      std::vector<bool> present(n + 1, false);
      for (int r = 1; r <= lam.length() && lam.part(r) >= c; ++r) {
        const int e = T.entry(Cell{r, c, i});
        if (e > n) throw ShapeError("tableau entry exceeds n");
        present[e] = true;
      }
      int r = 0;
      for (int e = 1; e <= n; ++e) {
        if (present[e]) continue;
        // Columns are produced right to left, so prepend.
        auto& row = out_rows[r++];
        row.insert(row.begin(), e);
      }
    }
  }
  return TableauTuple(SkewShapeTuple::straight(lamc), std::move(rows));
}

}  // namespace llt
