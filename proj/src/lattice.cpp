#include "llt/lattice.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace llt {

std::optional<FaceExponents> l_face(const LFace& f) {
  const int k = f.I.k();
  if (f.J.k() != k || f.K.k() != k || f.L.k() != k) throw std::invalid_argument("face labels have different color counts");
  const std::uint32_t I = f.I.bits(), J = f.J.bits(), K = f.K.bits(), L = f.L.bits();
  if (I & J) return std::nullopt;
  if ((I | J) != (K | L) || (K & L)) return std::nullopt;
  const std::uint32_t in = I | J;
  FaceExponents out;
  out.x_power = std::popcount(L);
  for (int c = 0; c < k; ++c)
    if ((L >> c) & 1u) out.t_power += std::popcount(in >> (c + 1));
  return out;
}

namespace {

int choose2(int k) { return k * (k - 1) / 2; }

LaurentPoly t_power(const VarSet& vars, int e) {
  ExponentVector v(vars.size(), 0);
  v[vars.t()] = e;
  return LaurentPoly::monomial(vars, v);
}

void require_monomial(const LaurentPoly& x) {
  if (!x.is_monomial()) throw AlgebraError("spectral parameter must be a monomial");
  if (!x.vars().has_t) throw AlgebraError("spectral parameter needs t in its variable set");
}

}  // namespace

LaurentPoly l_weight(const LFace& f, const LaurentPoly& x) {
  require_monomial(x);
  auto fe = l_face(f);
  if (!fe) return LaurentPoly(x.vars());
  return x.pow(fe->x_power) * t_power(x.vars(), fe->t_power);
}

LaurentPoly lstar_weight(const LFace& f, const LaurentPoly& x) {
  require_monomial(x);
  auto fe = l_face(f);
  if (!fe) return LaurentPoly(x.vars());
  const int k = f.I.k();
  return x.pow(k - fe->x_power) * t_power(x.vars(), choose2(k) - (k - 1) * fe->x_power + fe->t_power);
}

LatticeSpec build_lattice(const SkewShapeTuple& s, int n) {
  const ColumnRange cr = column_range(s);
  return build_lattice(s, n, cr.r, cr.s);
}

LatticeSpec build_lattice(const SkewShapeTuple& s, int n, int col_min, int col_max) {
  if (n < 0) throw ShapeError("number of rows must be nonnegative");
  const ColumnRange cr = column_range(s);
  if (col_min > cr.r || col_max < cr.s) throw ShapeError("column span does not contain the shape labels");
  LatticeSpec spec;
  spec.k = s.k();
  spec.n = n;
  spec.col_min = col_min;
  spec.col_max = col_max;
  for (int p = col_min; p <= col_max; ++p) {
    spec.bottom.push_back(boundary_vector(s.gamma(), p));
    spec.top.push_back(boundary_vector(s.beta(), p));
  }
  spec.left.assign(n, EdgeLabel::empty(spec.k));
  spec.right.assign(n, EdgeLabel::empty(spec.k));
  return spec;
}

LatticeSpec build_lstar_lattice(const ShapeTuple& lam, int n, int M, LStarExit exit) {
  if (lam.common_length() != n) throw ShapeError("L* lattice needs partitions with n parts");
  if (lam.max_part() > M - n) throw ShapeError("partition does not fit below M");
  LatticeSpec spec;
  spec.k = lam.k();
  spec.n = n;
  spec.col_min = 1 - n;
  spec.col_max = M - n;
  spec.kind = FaceKind::LStar;
  ShapeTuple box;
  for (int i = 0; i < spec.k; ++i) box.shapes.push_back(Partition(std::vector<int>(n, M - n)));
  for (int p = spec.col_min; p <= spec.col_max; ++p) {
    spec.bottom.push_back(boundary_vector(lam, p));
    spec.top.push_back(exit == LStarExit::Top ? boundary_vector(box, p) : EdgeLabel::empty(spec.k));
  }
  spec.left.assign(n, EdgeLabel::empty(spec.k));
  spec.right.assign(n, exit == LStarExit::Right ? EdgeLabel::full(spec.k) : EdgeLabel::empty(spec.k));
  return spec;
}

namespace {

using State = std::vector<std::uint32_t>;

struct RowResult {
  State top;
  State horizontal;  // size width + 1
  int x_power;
  int t_power;
};

void check_spec(const LatticeSpec& spec) {
  const std::size_t w = static_cast<std::size_t>(spec.width());
  if (spec.k < 0 || spec.k > kMaxColors) throw std::invalid_argument("bad color count");
  if (spec.width() < 0 || spec.bottom.size() != w || spec.top.size() != w) throw std::invalid_argument("lattice boundary has wrong width");
  if (static_cast<int>(spec.left.size()) != spec.n || static_cast<int>(spec.right.size()) != spec.n)
    throw std::invalid_argument("lattice boundary has wrong height");
}

// Enumerates all fillings of one row given the labels below it.
template <class F>
void row_fillings(const LatticeSpec& spec, int row, const State& below, F&& emit) {
  const int w = spec.width();
  const int k = spec.k;
  const std::uint32_t right = spec.right[row - 1].bits();
  State top(w, 0);
  State horiz(w + 1, 0);
  horiz[0] = spec.left[row - 1].bits();
  auto rec = [&](auto&& self, int p, int xp, int tp) -> void {
    if (p == w) {
      if (horiz[w] == right) emit(RowResult{top, horiz, xp, tp});
      return;
    }
    const std::uint32_t I = below[p];
    const std::uint32_t J = horiz[p];
    if (I & J) return;
    const std::uint32_t U = I | J;
    std::uint32_t sub = U;
    while (true) {
      const std::uint32_t L = sub;
      int tsum = 0;
      for (int c = 0; c < k; ++c)
        if ((L >> c) & 1u) tsum += std::popcount(U >> (c + 1));
      const int nl = std::popcount(L);
      top[p] = U & ~L;
      horiz[p + 1] = L;
      if (spec.kind == FaceKind::L) {
        self(self, p + 1, xp + nl, tp + tsum);
      } else {
        self(self, p + 1, xp + k - nl, tp + choose2(k) - (k - 1) * nl + tsum);
      }
      if (sub == 0) break;
      sub = (sub - 1) & U;
    }
  };
  rec(rec, 0, 0, 0);
}

bool boundary_closed(const LatticeSpec& spec) {
  for (int i = 0; i < spec.n; ++i)
    if (!spec.left[i].is_empty() || !spec.right[i].is_empty()) return false;
  return true;
}

// With no side entries or exits, paths only move right, so each color's
// sorted positions must stay weakly left of the targets.
bool can_reach(const State& cur, const State& target, int k) {
  for (int c = 0; c < k; ++c) {
    std::vector<int> a, b;
    for (std::size_t p = 0; p < cur.size(); ++p) {
      if ((cur[p] >> c) & 1u) a.push_back(static_cast<int>(p));
      if ((target[p] >> c) & 1u) b.push_back(static_cast<int>(p));
    }
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
  }
  return true;
}

State bits_of(const std::vector<EdgeLabel>& labels) {
  State s;
  for (const auto& l : labels) s.push_back(l.bits());
  return s;
}

}  // namespace

LaurentPoly partition_function(const LatticeSpec& spec) {
  check_spec(spec);
  const VarSet vars = llt_vars(spec.n);
  const State target = bits_of(spec.top);
  const bool closed = boundary_closed(spec);
  std::map<State, LaurentPoly> current;
  current.emplace(bits_of(spec.bottom), LaurentPoly::constant(vars, 1));
  if (closed && !can_reach(current.begin()->first, target, spec.k)) return LaurentPoly(vars);
  for (int row = 1; row <= spec.n; ++row) {
    std::map<State, LaurentPoly> next;
    for (const auto& [below, poly] : current) {
      std::map<State, std::map<std::pair<int, int>, long>> grouped;
      row_fillings(spec, row, below, [&](const RowResult& r) {
        if (closed && !can_reach(r.top, target, spec.k)) return;
        if (row == spec.n && r.top != target) return;
        ++grouped[r.top][{r.x_power, r.t_power}];
      });
      for (const auto& [top, monos] : grouped) {
        LaurentPoly mult(vars);
        ExponentVector e(vars.size(), 0);
        for (const auto& [xt, count] : monos) {
          e[row - 1] = xt.first;
          e[spec.n] = xt.second;
          mult.add_term(e, Coefficient(count));
        }
        auto [it, inserted] = next.try_emplace(top, vars);
        it->second += poly * mult;
      }
    }
    current = std::move(next);
  }
  auto it = current.find(target);
  return it == current.end() ? LaurentPoly(vars) : it->second;
}

LFace face_of(const LatticeConfig& c, int row, int p) {
  return LFace{c.vertical.at(row - 1).at(p), c.horizontal.at(row - 1).at(p), c.vertical.at(row).at(p), c.horizontal.at(row - 1).at(p + 1)};
}

namespace {

bool shape_ok(const LatticeSpec& spec, const LatticeConfig& c) {
  const std::size_t w = static_cast<std::size_t>(spec.width());
  if (c.vertical.size() != static_cast<std::size_t>(spec.n + 1) || c.horizontal.size() != static_cast<std::size_t>(spec.n)) return false;
  for (const auto& v : c.vertical)
    if (v.size() != w) return false;
  for (const auto& h : c.horizontal)
    if (h.size() != w + 1) return false;
  return true;
}

}  // namespace

bool is_valid(const LatticeSpec& spec, const LatticeConfig& c) {
  check_spec(spec);
  if (!shape_ok(spec, c)) return false;
  if (c.vertical.front() != spec.bottom || c.vertical.back() != spec.top) return false;
  for (int i = 1; i <= spec.n; ++i) {
    if (c.horizontal[i - 1].front() != spec.left[i - 1] || c.horizontal[i - 1].back() != spec.right[i - 1]) return false;
    for (int p = 0; p < spec.width(); ++p)
      if (!l_face(face_of(c, i, p))) return false;
  }
  return true;
}

LaurentPoly config_weight(const LatticeSpec& spec, const LatticeConfig& c) {
  if (!is_valid(spec, c)) throw std::invalid_argument("configuration does not fit the lattice");
  const VarSet vars = llt_vars(spec.n);
  LaurentPoly w = LaurentPoly::constant(vars, 1);
  for (int i = 1; i <= spec.n; ++i) {
    const LaurentPoly xi = LaurentPoly::variable(vars, vars.x(i));
    for (int p = 0; p < spec.width(); ++p) {
      const LFace f = face_of(c, i, p);
      w *= spec.kind == FaceKind::L ? l_weight(f, xi) : lstar_weight(f, xi);
    }
  }
  return w;
}

void for_each_config(const LatticeSpec& spec, const std::function<void(const LatticeConfig&)>& visit) {
  check_spec(spec);
  const int k = spec.k;
  const State target = bits_of(spec.top);
  const bool closed = boundary_closed(spec);
  LatticeConfig cfg;
  cfg.vertical.assign(spec.n + 1, std::vector<EdgeLabel>(spec.width()));
  cfg.horizontal.assign(spec.n, std::vector<EdgeLabel>(spec.width() + 1));
  cfg.vertical[0] = spec.bottom;
  auto to_labels = [k](const State& s) {
    std::vector<EdgeLabel> out;
    for (auto b : s) out.emplace_back(k, b);
    return out;
  };
  auto rec = [&](auto&& self, int row, const State& below) -> void {
    if (row > spec.n) {
      if (below == target) visit(cfg);
      return;
    }
    std::vector<RowResult> results;
    row_fillings(spec, row, below, [&](const RowResult& r) {
      if (closed && !can_reach(r.top, target, k)) return;
      results.push_back(r);
    });
    for (const auto& r : results) {
      cfg.vertical[row] = to_labels(r.top);
      cfg.horizontal[row - 1] = to_labels(r.horizontal);
      self(self, row + 1, r.top);
    }
  };
  const State start = bits_of(spec.bottom);
  if (closed && !can_reach(start, target, k)) return;
  rec(rec, 1, start);
}

std::vector<LatticeConfig> enumerate_configs(const LatticeSpec& spec) {
  std::vector<LatticeConfig> out;
  for_each_config(spec, [&](const LatticeConfig& c) { out.push_back(c); });
  return out;
}

LatticeConfig ssyt_to_config(const TableauTuple& T, const LatticeSpec& spec) {
  check_spec(spec);
  const SkewShapeTuple& s = T.shape();
  const int n = spec.n;
  const int k = spec.k;
  if (s.k() != k) throw std::invalid_argument("tableau and lattice have different color counts");
  if (T.max_entry() > n) throw std::invalid_argument("tableau entry exceeds lattice height");
  LatticeConfig cfg;
  cfg.vertical.assign(n + 1, std::vector<EdgeLabel>(spec.width(), EdgeLabel::empty(k)));
  cfg.horizontal.assign(n, std::vector<EdgeLabel>(spec.width() + 1, EdgeLabel::empty(k)));
  auto col_index = [&](int col) {
    if (col < spec.col_min || col > spec.col_max) throw std::invalid_argument("path leaves the lattice columns");
    return col - spec.col_min;
  };
  for (int i = 1; i <= k; ++i) {
    const auto& g = s.gamma()[i];
    for (int m = 1; m <= g.length(); ++m) {
      const auto& e = T.rows()[i - 1][m - 1];
      const int j = static_cast<int>(e.size());
      const int c = g.part(m) - m + 1;
      for (int jj = 0; jj <= j; ++jj) {
        const int p = col_index(c + jj);
        const int start = jj == 0 ? 0 : e[jj - 1];
        const int end = jj < j ? e[jj] : n + 1;
        for (int h = start; h < end; ++h) {
          auto& lab = cfg.vertical[h][p];
          if (lab.has(i)) throw std::invalid_argument("paths of one color collide");
          lab = lab.with(i, true);
        }
        if (jj >= 1) {
          auto& lab = cfg.horizontal[e[jj - 1] - 1][p];
          lab = lab.with(i, true);
        }
      }
    }
  }
  if (!is_valid(spec, cfg)) throw std::invalid_argument("tableau does not map to a valid configuration");
  return cfg;
}

TableauTuple config_to_ssyt(const LatticeConfig& c, const LatticeSpec& spec, const SkewShapeTuple& shape) {
  if (!is_valid(spec, c)) throw std::invalid_argument("invalid configuration");
  if (!boundary_closed(spec)) throw std::invalid_argument("configuration has side boundary paths");
  const int n = spec.n;
  const int w = spec.width();
  TableauTuple::Rows rows(shape.k());
  for (int i = 1; i <= shape.k(); ++i) {
    const auto& g = shape.gamma()[i];
    const auto& b = shape.beta()[i];
    rows[i - 1].resize(g.length());
    for (int m = 1; m <= g.length(); ++m) {
      const int start = g.part(m) - m + 1;
      int p = start - spec.col_min;
      if (p < 0 || p >= w || !c.vertical[0][p].has(i)) throw std::invalid_argument("configuration does not match the shape");
      int h = 1;
      std::vector<int> entries;
      while (h <= n) {
        if (c.horizontal[h - 1][p + 1].has(i)) {
          entries.push_back(h);
          ++p;
          if (p >= w) throw std::invalid_argument("path leaves through the right edge");
        } else if (c.vertical[h][p].has(i)) {
          ++h;
        } else {
          throw std::invalid_argument("broken path in configuration");
        }
      }
      if (p + spec.col_min != b.part(m) - m + 1) throw std::invalid_argument("path ends at the wrong column");
      rows[i - 1][m - 1] = std::move(entries);
    }
  }
  return TableauTuple(shape, std::move(rows));
}

LatticeConfig rotate_config(const LatticeConfig& c) {
  const int n = static_cast<int>(c.horizontal.size());
  const int w = c.vertical.empty() ? 0 : static_cast<int>(c.vertical.front().size());
  LatticeConfig out = c;
  for (int h = 0; h <= n; ++h)
    for (int p = 0; p < w; ++p) out.vertical[n - h][w - 1 - p] = c.vertical[h][p].reversed();
  for (int i = 1; i <= n; ++i)
    for (int b = 0; b <= w; ++b) out.horizontal[n - i][w - b] = c.horizontal[i - 1][b].reversed();
  return out;
}

std::string config_to_json(const LatticeSpec& spec, const LatticeConfig& c) {
  nlohmann::ordered_json j;
  j["k"] = spec.k;
  j["n"] = spec.n;
  j["col_min"] = spec.col_min;
  j["col_max"] = spec.col_max;
  auto labels = [](const std::vector<std::vector<EdgeLabel>>& grid) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& row : grid) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const auto& l : row) r.push_back(l.to_string());
      a.push_back(std::move(r));
    }
    return a;
  };
  j["vertical"] = labels(c.vertical);
  j["horizontal"] = labels(c.horizontal);
  return j.dump();
}

std::string config_to_ascii(const LatticeSpec& spec, const LatticeConfig& c) {
  const int w = spec.width();
  const std::string blank(static_cast<std::size_t>(spec.k), ' ');
  std::ostringstream out;
  auto vertical_line = [&](int h) {
    out << std::string(static_cast<std::size_t>(spec.k) + 1, ' ');
    for (int p = 0; p < w; ++p) out << " " << c.vertical[h][p].to_string() << " " << blank;
    out << "\n";
  };
  vertical_line(spec.n);
  for (int i = spec.n; i >= 1; --i) {
    for (int b = 0; b <= w; ++b) {
      out << c.horizontal[i - 1][b].to_string();
      if (b < w) out << " [" << blank << "] ";
    }
    out << "  x" << i << "\n";
    vertical_line(i - 1);
  }
  out << "columns " << spec.col_min << ".." << spec.col_max << "\n";
  return out.str();
}

}  // namespace llt
