#include "llt/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace llt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ShapeError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ShapeError("partition parts must be weakly decreasing");
  }
}

Partition Partition::zeros(int length) {
  if (length < 0) throw ShapeError("negative partition length");
  return Partition(std::vector<int>(length, 0));
}

int Partition::part(int i) const {
  if (i < 1) throw ShapeError("partition index must be positive");
  return i <= length() ? parts_[i - 1] : 0;
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::nonzero_length() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

bool Partition::contains(const Partition& other) const {
  int len = std::max(length(), other.length());
  for (int i = 1; i <= len; ++i)
    if (other.part(i) > part(i)) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> c(max_part(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

int ShapeTuple::weight() const {
  int w = 0;
  for (const auto& p : shapes) w += p.weight();
  return w;
}

int ShapeTuple::max_part() const {
  int m = 0;
  for (const auto& p : shapes) m = std::max(m, p.max_part());
  return m;
}

int ShapeTuple::common_length() const {
  if (shapes.empty()) throw ShapeError("empty shape tuple");
  int n = shapes.front().length();
  for (const auto& p : shapes)
    if (p.length() != n) throw ShapeError("partitions in tuple have different lengths");
  return n;
}

ShapeTuple ShapeTuple::zeros(int k, int n) { return ShapeTuple{std::vector<Partition>(k, Partition::zeros(n))}; }

SkewShapeTuple::SkewShapeTuple(ShapeTuple beta, ShapeTuple gamma) : beta_(std::move(beta)), gamma_(std::move(gamma)) {
  if (beta_.k() == 0) throw ShapeError("shape tuple must have at least one shape");
  if (beta_.k() > kMaxColors) throw ShapeError("too many shapes");
  if (beta_.k() != gamma_.k()) throw ShapeError("beta and gamma have different numbers of shapes");
  for (int i = 1; i <= k(); ++i) {
    if (beta_[i].length() != gamma_[i].length()) throw ShapeError("beta and gamma parts differ in length");
    if (!beta_[i].contains(gamma_[i])) throw ShapeError("gamma is not contained in beta");
  }
}

SkewShapeTuple SkewShapeTuple::straight(ShapeTuple beta) {
  ShapeTuple gamma;
  for (const auto& p : beta.shapes) gamma.shapes.push_back(Partition::zeros(p.length()));
  return SkewShapeTuple(std::move(beta), std::move(gamma));
}

bool SkewShapeTuple::is_straight() const {
  for (const auto& p : gamma_.shapes)
    if (p.weight() != 0) return false;
  return true;
}

bool in_skew(const SkewShapeTuple& s, const Cell& c) {
  if (c.shape < 1 || c.shape > s.k()) return false;
  const auto& b = s.beta()[c.shape];
  const auto& g = s.gamma()[c.shape];
  if (c.row < 1 || c.row > b.length()) return false;
  return c.col > g.part(c.row) && c.col <= b.part(c.row);
}

std::vector<Cell> cells(const SkewShapeTuple& s) {
  std::vector<Cell> out;
  for (int i = 1; i <= s.k(); ++i) {
    const auto& b = s.beta()[i];
    const auto& g = s.gamma()[i];
    for (int r = 1; r <= b.length(); ++r)
      for (int c = g.part(r) + 1; c <= b.part(r); ++c) out.push_back(Cell{r, c, i});
  }
  return out;
}

EdgeLabel boundary_vector(const ShapeTuple& mu, int i) {
  EdgeLabel label = EdgeLabel::empty(mu.k());
  for (int j = 1; j <= mu.k(); ++j) {
    const auto& p = mu[j];
    for (int m = 1; m <= p.length(); ++m)
      if (p.part(m) - m + 1 == i) label = label.with(j, true);
  }
  return label;
}

ColumnRange column_range(const SkewShapeTuple& s) {
  bool any = false;
  int r = 0;
  int hi = 0;
  for (int j = 1; j <= s.k(); ++j) {
    const auto& g = s.gamma()[j];
    const auto& b = s.beta()[j];
    for (int m = 1; m <= g.length(); ++m) {
      int cg = g.part(m) - m + 1;
      int cb = b.part(m) - m + 1;
      if (!any) {
        r = cg;
        hi = cb;
        any = true;
      }
      r = std::min(r, cg);
      hi = std::max(hi, cb);
    }
  }
  if (!any) throw ShapeError("shape tuple has no declared parts");
  return ColumnRange{r, hi};
}

std::vector<Triple> triples(const SkewShapeTuple& s) {
  std::vector<Triple> out;
  for (const Cell& v : cells(s)) {
    const int p = v.content();
    for (int j = v.shape + 1; j <= s.k(); ++j) {
      const auto& b = s.beta()[j];
      const auto& g = s.gamma()[j];
      for (int r = 1; r <= b.length(); ++r) {
        const int ucol = p + r - 1;
        if (ucol < g.part(r) || ucol > b.part(r)) continue;
        Cell u{r, ucol, j};
        Cell w{r, ucol + 1, j};
        out.push_back(Triple{TripleCell{u, in_skew(s, u)}, v, TripleCell{w, in_skew(s, w)}});
      }
    }
  }
  return out;
}

long m_bruteforce(const SkewShapeTuple& s) { return static_cast<long>(triples(s).size()); }

long m_formula(const ShapeTuple& beta) {
  long first = 0;
  long second = 0;
  for (int a = 1; a <= beta.k(); ++a) {
    for (int b = a + 1; b <= beta.k(); ++b) {
      const auto& pa = beta[a];
      const auto& pb = beta[b];
      for (int i = 1; i <= pa.length(); ++i) {
        for (int j = 1; j <= pb.length(); ++j) {
          const int x = pb.part(j) - j + i;
          if (0 <= x && x < pa.part(i)) ++first;
          second += std::max(std::min(pa.part(i) - i, pb.part(j) - j) + std::min(i, j), 0);
        }
      }
    }
  }
  return first + second;
}

long n_stat(const Partition& mu) {
  long n = 0;
  for (int i = 1; i <= mu.length(); ++i) n += static_cast<long>(i - 1) * mu.part(i);
  return n;
}

long inv_stat(const Composition& beta) {
  long n = 0;
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (std::size_t j = i + 1; j < beta.size(); ++j)
      if (beta[i] > beta[j]) ++n;
  return n;
}

ShapeTuple complement(const ShapeTuple& lam, int M, int n) {
  if (n < 0 || M < n) throw ShapeError("complement needs 0 <= n <= M");
  const int width = M - n;
  ShapeTuple out;
  for (int i = lam.k(); i >= 1; --i) {
    const auto& p = lam[i];
    if (p.length() != n) throw ShapeError("complement needs partitions with exactly n parts");
    if (p.max_part() > width) throw ShapeError("partition does not fit in the box");
    std::vector<int> c(n);
    for (int j = 1; j <= n; ++j) c[j - 1] = width - p.part(n + 1 - j);
    out.shapes.emplace_back(std::move(c));
  }
  return out;
}

SkewShapeTuple rotate(const SkewShapeTuple& s) {
  const int n = s.beta().common_length();
  const int width = s.beta().max_part();
  return SkewShapeTuple(complement(s.gamma(), width + n, n), complement(s.beta(), width + n, n));
}

long d_stat(const ShapeTuple& lam) {
  const int n = lam.common_length();
  const long k = lam.k();
  long count = 0;
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (lam[b].part(i) - i < lam[a].part(j) - j) ++count;
  const long pairs_n = static_cast<long>(n) * (n - 1) / 2;
  return pairs_n * (k * (k - 1) / 2) - count;
}

long dtilde_stat(const ShapeTuple& lam, int M) {
  const long n = lam.common_length();
  const long k = lam.k();
  return (k - 1) * lam.weight() - n * (M - n) * (k * (k - 1) / 2);
}

namespace {

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw ShapeError("bad integer in shape text: '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

ShapeTuple parse_shape_tuple(std::string_view text) {
  if (text.empty()) throw ShapeError("empty shape text");
  ShapeTuple out;
  for (auto block : split(text, ';')) {
    std::vector<int> parts;
    for (auto item : split(block, ',')) parts.push_back(parse_int(item));
    out.shapes.emplace_back(std::move(parts));
  }
  return out;
}

std::string format_shape_tuple(const ShapeTuple& t) {
  std::string out;
  for (int i = 1; i <= t.k(); ++i) {
    if (i > 1) out += ";";
    const auto& p = t[i].parts();
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j > 0) out += ",";
      out += std::to_string(p[j]);
    }
  }
  return out;
}

std::string format_skew(const SkewShapeTuple& s) {
  return format_shape_tuple(s.beta()) + " / " + format_shape_tuple(s.gamma());
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void bounded_rec(int length, int budget, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (static_cast<int>(cur.size()) == length) {
    out.emplace_back(cur);
    return;
  }
  for (int p = 0; p <= std::min(budget, max_part); ++p) {
    cur.push_back(p);
    bounded_rec(length, budget - p, p, cur, out);
    cur.pop_back();
  }
}

void tuples_rec(int k, int n, int budget, const std::vector<std::vector<Partition>>& by_weight, ShapeTuple& cur, std::vector<ShapeTuple>& out) {
  if (cur.k() == k) {
    out.push_back(cur);
    return;
  }
  for (int w = 0; w <= budget; ++w) {
    for (const auto& p : by_weight[w]) {
      cur.shapes.push_back(p);
      tuples_rec(k, n, budget - w, by_weight, cur, out);
      cur.shapes.pop_back();
    }
  }
}

}  // namespace

std::vector<Partition> partitions_of(int total) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(total, total, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto ps = partitions_of(w);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> bounded_partitions(int length, int max_weight) {
  std::vector<Partition> out;
  std::vector<int> cur;
  bounded_rec(length, max_weight, max_weight, cur, out);
  return out;
}

std::vector<ShapeTuple> tuples_up_to(int k, int n, int max_weight) {
  std::vector<std::vector<Partition>> by_weight(max_weight + 1);
  for (const auto& p : bounded_partitions(n, max_weight)) by_weight[p.weight()].push_back(p);
  std::vector<ShapeTuple> out;
  ShapeTuple cur;
  tuples_rec(k, n, max_weight, by_weight, cur, out);
  return out;
}

std::vector<Composition> distinct_rearrangements(const Partition& mu) {
  Composition c = mu.parts();
  std::sort(c.begin(), c.end());
  std::vector<Composition> out;
  do {
    out.push_back(c);
  } while (std::next_permutation(c.begin(), c.end()));
  return out;
}

SkewShapeTuple row_tuple(const Composition& beta) {
  ShapeTuple b;
  for (int p : beta) {
    if (p < 0) throw ShapeError("negative part in composition");
    b.shapes.emplace_back(std::vector<int>{p});
  }
  return SkewShapeTuple::straight(std::move(b));
}

}  // namespace llt
