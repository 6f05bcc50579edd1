#include "llt/yangbaxter.hpp"

#include "llt/parallel.hpp"
#include "llt/random.hpp"

#include <json.hpp>

#include <bit>

namespace llt {

std::optional<std::vector<CrossingType>> crossing_types(const RFace& f) {
  const int k = f.I.k();
  std::vector<CrossingType> out;
  for (int c = 1; c <= k; ++c) {
    const int code = (f.I.has(c) ? 8 : 0) | (f.J.has(c) ? 4 : 0) | (f.K.has(c) ? 2 : 0) | (f.L.has(c) ? 1 : 0);
    switch (code) {
      case 0b0101: out.push_back(CrossingType::T1); break;
      case 0b0110: out.push_back(CrossingType::T2); break;
      case 0b1001: out.push_back(CrossingType::T3); break;
      case 0b1111: out.push_back(CrossingType::T4); break;
      case 0b0000: out.push_back(CrossingType::T5); break;
      default: return std::nullopt;
    }
  }
  return out;
}

std::vector<int> r_delta(const RFace& f) {
  const int k = f.I.k();
  std::vector<int> out(k, 0);
  for (int c = 1; c <= k; ++c) {
    const int twice = f.J.count_above(c) - f.I.count_above(c) + f.L.count_above(c) - f.K.count_above(c);
    if (twice % 2 != 0) throw std::logic_error("odd label difference in R face");
    out[c - 1] = twice / 2;
  }
  return out;
}

VarSet ybe_vars() { return VarSet{1, 1, true}; }
LaurentPoly ybe_x() { return LaurentPoly::variable(ybe_vars(), 0); }
LaurentPoly ybe_y() { return LaurentPoly::variable(ybe_vars(), 1); }
LaurentPoly ybe_t() { return LaurentPoly::variable(ybe_vars(), 2); }

namespace {

LaurentPoly one(const VarSet& v) { return LaurentPoly::constant(v, 1); }

LaurentPoly t_pow(const VarSet& v, int e) { return LaurentPoly::variable(v, v.t(), e); }

int choose2(int k) { return k * (k - 1) / 2; }

}  // namespace

LaurentPoly r_weight(const RFace& f, const LaurentPoly& z) {
  if (!z.is_monomial()) throw AlgebraError("spectral ratio must be a monomial");
  const VarSet& vars = z.vars();
  auto types = crossing_types(f);
  if (!types) return LaurentPoly(vars);
  const int k = f.I.k();
  const auto delta = r_delta(f);
  LaurentPoly w = one(vars);
  for (int c = 1; c <= k; ++c) {
    int type1_above = 0;
    for (int d = c + 1; d <= k; ++d)
      if ((*types)[d - 1] == CrossingType::T1) ++type1_above;
    if (type1_above != delta[c - 1]) throw std::logic_error("delta mismatch between type count and label algebra");
    const LaurentPoly zc = z * t_pow(vars, -delta[c - 1]);
    switch ((*types)[c - 1]) {
      case CrossingType::T1: w *= one(vars) - zc; break;
      case CrossingType::T2:
      case CrossingType::T4: w *= zc; break;
      case CrossingType::T3:
      case CrossingType::T5: break;
    }
  }
  return w;
}

std::optional<LPicture> l_picture(bool i, bool j, bool k, bool l) {
  const int code = (i ? 8 : 0) | (j ? 4 : 0) | (k ? 2 : 0) | (l ? 1 : 0);
  switch (code) {
    case 0b0000: return LPicture::Empty;
    case 0b1001: return LPicture::BottomRight;
    case 0b0101: return LPicture::LeftRight;
    case 0b1010: return LPicture::BottomTop;
    case 0b0110: return LPicture::LeftTop;
    default: return std::nullopt;
  }
}

LaurentPoly ef_weight(EFKind kind, int picture, const LaurentPoly& param) {
  const VarSet& v = param.vars();
  switch (kind) {
    case EFKind::E:
      return picture == static_cast<int>(LPicture::Empty) ? one(v) : LaurentPoly(v);
    case EFKind::F:
      switch (static_cast<LPicture>(picture)) {
        case LPicture::Empty: return LaurentPoly(v);
        case LPicture::BottomRight:
        case LPicture::LeftRight: return param;
        case LPicture::BottomTop:
        case LPicture::LeftTop: return one(v);
      }
      break;
    case EFKind::ETilde:
      return picture == static_cast<int>(CrossingType::T1) ? one(v) - param : LaurentPoly(v);
    case EFKind::FTilde:
      switch (static_cast<CrossingType>(picture)) {
        case CrossingType::T1: return LaurentPoly(v);
        case CrossingType::T2:
        case CrossingType::T4: return param;
        case CrossingType::T3:
        case CrossingType::T5: return one(v);
      }
      break;
  }
  throw std::invalid_argument("unknown picture");
}

LaurentPoly l_recursive(const LFace& f, const LaurentPoly& x) {
  const int k = f.I.k();
  const VarSet& v = x.vars();
  if (k == 0) return one(v);
  auto pic = l_picture(f.I.has(k), f.J.has(k), f.K.has(k), f.L.has(k));
  if (!pic) return LaurentPoly(v);
  const LFace rest{f.I.restrict_to(k - 1), f.J.restrict_to(k - 1), f.K.restrict_to(k - 1), f.L.restrict_to(k - 1)};
  LaurentPoly out(v);
  const LaurentPoly e = ef_weight(EFKind::E, static_cast<int>(*pic), x);
  if (!e.is_zero()) out += l_recursive(rest, x) * e;
  const LaurentPoly fw = ef_weight(EFKind::F, static_cast<int>(*pic), x);
  if (!fw.is_zero()) out += l_recursive(rest, x * t_pow(v, 1)) * fw;
  return out;
}

LaurentPoly r_recursive(const RFace& f, const LaurentPoly& z) {
  const int k = f.I.k();
  const VarSet& v = z.vars();
  if (k == 0) return one(v);
  const RFace top{EdgeLabel(1, f.I.has(k)), EdgeLabel(1, f.J.has(k)), EdgeLabel(1, f.K.has(k)), EdgeLabel(1, f.L.has(k))};
  auto type = crossing_types(top);
  if (!type) return LaurentPoly(v);
  const int pic = static_cast<int>(type->front());
  const RFace rest{f.I.restrict_to(k - 1), f.J.restrict_to(k - 1), f.K.restrict_to(k - 1), f.L.restrict_to(k - 1)};
  LaurentPoly out(v);
  const LaurentPoly et = ef_weight(EFKind::ETilde, pic, z);
  if (!et.is_zero()) out += r_recursive(rest, z * t_pow(v, -1)) * et;
  const LaurentPoly ft = ef_weight(EFKind::FTilde, pic, z);
  if (!ft.is_zero()) out += r_recursive(rest, z) * ft;
  return out;
}

std::string YbeBoundary::to_string() const {
  return "I1=" + I1.to_string() + " I2=" + I2.to_string() + " I3=" + I3.to_string() + " J1=" + J1.to_string() +
         " J2=" + J2.to_string() + " J3=" + J3.to_string();
}

YbeBoundary boundary_from_index(int k, std::uint64_t index) {
  const std::uint32_t mask = (1u << k) - 1;
  auto part = [&](int j) { return EdgeLabel(k, static_cast<std::uint32_t>(index >> (j * k)) & mask); };
  return YbeBoundary{part(0), part(1), part(2), part(3), part(4), part(5)};
}

namespace {

// Face weights indexed by I | J << k | K << 2k | L << 3k.
template <class V>
struct WeightTables {
  int k = 0;
  std::vector<V> lx, ly, r;

  std::size_t code(std::uint32_t i, std::uint32_t j, std::uint32_t kk, std::uint32_t l) const {
    return i | (j << k) | (kk << (2 * k)) | (static_cast<std::size_t>(l) << (3 * k));
  }
};

LFace lface(int k, std::size_t code) {
  const std::uint32_t m = (1u << k) - 1;
  return LFace{EdgeLabel(k, code & m), EdgeLabel(k, (code >> k) & m), EdgeLabel(k, (code >> (2 * k)) & m), EdgeLabel(k, (code >> (3 * k)) & m)};
}

RFace rface(int k, std::size_t code) {
  LFace f = lface(k, code);
  return RFace{f.I, f.J, f.K, f.L};
}

struct Spectral {
  LaurentPoly x, y, z;
  bool lstar;
};

Spectral spectral(int k, YbeVariant variant) {
  const LaurentPoly x = ybe_x();
  const LaurentPoly y = ybe_y();
  if (variant == YbeVariant::Plain) return Spectral{x, y, y * x.pow(-1), false};
  return Spectral{x, y, y * x * ybe_t().pow(k - 1), true};
}

LaurentPoly x_face_weight(const LFace& f, const Spectral& s) {
  return s.lstar ? lstar_weight(f, s.x) : l_weight(f, s.x);
}

WeightTables<LaurentPoly> symbolic_tables(int k, YbeVariant variant) {
  const Spectral s = spectral(k, variant);
  WeightTables<LaurentPoly> w;
  w.k = k;
  const std::size_t size = std::size_t{1} << (4 * k);
  w.lx.reserve(size);
  w.ly.reserve(size);
  w.r.reserve(size);
  for (std::size_t c = 0; c < size; ++c) {
    const LFace f = lface(k, c);
    w.lx.push_back(x_face_weight(f, s));
    w.ly.push_back(l_weight(f, s.y));
    w.r.push_back(r_weight(rface(k, c), s.z));
  }
  return w;
}

WeightTables<Rational> numeric_tables(const WeightTables<LaurentPoly>& sym, const std::vector<Rational>& point) {
  WeightTables<Rational> w;
  w.k = sym.k;
  for (const auto& p : sym.lx) w.lx.push_back(eval_rational(p, point));
  for (const auto& p : sym.ly) w.ly.push_back(eval_rational(p, point));
  for (const auto& p : sym.r) w.r.push_back(eval_rational(p, point));
  return w;
}

// Per color value a + b - c when it is 0 or 1.
std::optional<std::uint32_t> determined(std::uint32_t a, std::uint32_t b, std::uint32_t c, int k) {
  std::uint32_t out = 0;
  for (int i = 0; i < k; ++i) {
    const int v = static_cast<int>((a >> i) & 1u) + static_cast<int>((b >> i) & 1u) - static_cast<int>((c >> i) & 1u);
    if (v < 0 || v > 1) return std::nullopt;
    out |= static_cast<std::uint32_t>(v) << i;
  }
  return out;
}

bool conserves(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
  return (a & b) == (c & d) && (a ^ b) == (c ^ d);
}

template <class V>
V gauche_sum(const WeightTables<V>& w, const YbeBoundary& b, const V& zero) {
  const int k = w.k;
  const std::uint32_t I1 = b.I1.bits(), I2 = b.I2.bits(), I3 = b.I3.bits();
  const std::uint32_t J1 = b.J1.bits(), J2 = b.J2.bits(), J3 = b.J3.bits();
  V total = zero;
  const std::uint32_t n = 1u << k;
  for (std::uint32_t K1 = 0; K1 < n; ++K1) {
    auto K3 = determined(I3, K1, J1, k);
    if (!K3) continue;
    for (std::uint32_t K2 = 0; K2 < n; ++K2) {
      if (!conserves(I2, I1, K2, K1)) continue;
      const V& ly = w.ly[w.code(*K3, K2, J3, J2)];
      const V& lx = w.lx[w.code(I3, K1, *K3, J1)];
      const V& r = w.r[w.code(I2, I1, K2, K1)];
      if (ly == zero || lx == zero || r == zero) continue;
      total += ly * lx * r;
    }
  }
  return total;
}

template <class V>
V droite_sum(const WeightTables<V>& w, const YbeBoundary& b, const V& zero) {
  const int k = w.k;
  const std::uint32_t I1 = b.I1.bits(), I2 = b.I2.bits(), I3 = b.I3.bits();
  const std::uint32_t J1 = b.J1.bits(), J2 = b.J2.bits(), J3 = b.J3.bits();
  V total = zero;
  const std::uint32_t n = 1u << k;
  for (std::uint32_t L1 = 0; L1 < n; ++L1) {
    auto L3 = determined(J3, L1, I1, k);
    if (!L3) continue;
    for (std::uint32_t L2 = 0; L2 < n; ++L2) {
      if (!conserves(L2, L1, J2, J1)) continue;
      const V& r = w.r[w.code(L2, L1, J2, J1)];
      const V& lx = w.lx[w.code(*L3, I1, J3, L1)];
      const V& ly = w.ly[w.code(I3, I2, *L3, L2)];
      if (ly == zero || lx == zero || r == zero) continue;
      total += r * lx * ly;
    }
  }
  return total;
}

// Single-boundary tables are built on demand; these caches are per call.
LaurentPoly side(const YbeBoundary& b, YbeVariant variant, bool gauche) {
  const int k = b.I1.k();
  const auto w = symbolic_tables(k, variant);
  const LaurentPoly zero(ybe_vars());
  return gauche ? gauche_sum(w, b, zero) : droite_sum(w, b, zero);
}

std::vector<Rational> random_point(std::mt19937_64& rng, int k) {
  while (true) {
    Rational x = random_rational(rng, 97);
    Rational y = random_rational(rng, 97);
    Rational t = random_rational(rng, 97);
    if (t == 1 || t == -1 || x == y) continue;
    bool degenerate = false;
    Rational tp = 1;
    for (int j = 0; j <= 2 * k && !degenerate; ++j) {
      if (y == x * tp || x == y * tp) degenerate = true;
      tp *= t;
    }
    if (!degenerate) return {x, y, t};
  }
}

YbeReport run_check(const std::string& name, int k, const YbeMode& mode, YbeVariant variant) {
  if (k < 1 || k > 4) throw std::invalid_argument("YBE check supports 1 <= k <= 4");
  if (mode.numeric && mode.points < 1) throw std::invalid_argument("numeric mode needs at least one point");
  YbeReport report;
  report.name = name;
  report.k = k;
  report.numeric = mode.numeric;
  const auto sym = symbolic_tables(k, variant);
  const std::uint64_t total = std::uint64_t{1} << (6 * k);

  std::vector<WeightTables<Rational>> numeric;
  std::vector<std::vector<Rational>> points;
  if (mode.numeric) {
    auto rng = make_rng(mode.seed, static_cast<std::uint64_t>(k));
    for (int p = 0; p < mode.points; ++p) {
      points.push_back(random_point(rng, k));
      numeric.push_back(numeric_tables(sym, points.back()));
    }
  }

  // The plain side under x -> 1/(x t^(k-1)), for the consistency check of L*.
  std::optional<WeightTables<LaurentPoly>> plain;
  std::optional<Substitution> xbar;
  LaurentPoly prefactor(ybe_vars());
  if (variant == YbeVariant::LStar && !mode.numeric) {
    plain = symbolic_tables(k, YbeVariant::Plain);
    Substitution s = Substitution::identity(ybe_vars());
    ExponentVector img{-1, 0, 1 - k};
    s.set(0, MonomialImage{1, img});
    xbar = s;
    prefactor = ybe_x().pow(k) * ybe_t().pow(choose2(k));
  }

  const std::size_t chunks = 64;
  std::vector<long> failed(chunks, 0);
  std::vector<std::optional<YbeFailure>> first(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const YbeBoundary b = boundary_from_index(k, idx);
      bool ok = true;
      std::string g_text, d_text;
      if (mode.numeric) {
        for (std::size_t p = 0; p < numeric.size() && ok; ++p) {
          const Rational zero = 0;
          const Rational g = gauche_sum(numeric[p], b, zero);
          const Rational d = droite_sum(numeric[p], b, zero);
          if (g != d) {
            ok = false;
            g_text = g.get_str();
            d_text = d.get_str();
          }
        }
      } else {
        const LaurentPoly zero(ybe_vars());
        const LaurentPoly g = gauche_sum(sym, b, zero);
        const LaurentPoly d = droite_sum(sym, b, zero);
        if (!(g == d)) {
          ok = false;
          g_text = to_text(g);
          d_text = to_text(d);
        } else if (plain) {
          const LaurentPoly pg = prefactor * substitute(gauche_sum(*plain, b, zero), *xbar);
          if (!(pg == g)) {
            ok = false;
            g_text = to_text(g);
            d_text = "x^k t^C(k,2) * plain side at xbar = " + to_text(pg);
          }
        }
      }
      if (!ok) {
        ++failed[c];
        if (!first[c]) first[c] = YbeFailure{b, g_text, d_text};
      }
    }
  });
  report.checked = static_cast<long>(total);
  for (std::size_t c = 0; c < chunks; ++c) {
    report.failed += failed[c];
    if (!report.first_failure && first[c]) report.first_failure = first[c];
  }
  return report;
}

}  // namespace

LaurentPoly ybe_gauche(const YbeBoundary& b, YbeVariant variant) { return side(b, variant, true); }
LaurentPoly ybe_droite(const YbeBoundary& b, YbeVariant variant) { return side(b, variant, false); }

std::string YbeReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["k"] = k;
  j["mode"] = numeric ? "numeric" : "symbolic";
  j["checked"] = checked;
  j["failed"] = failed;
  if (first_failure) {
    j["first_failure"] = {{"boundary", first_failure->boundary.to_string()},
                          {"gauche", first_failure->gauche},
                          {"droite", first_failure->droite}};
  } else {
    j["first_failure"] = nullptr;
  }
  j["status"] = passed() ? "PASS" : "FAIL";
  return j.dump();
}

YbeReport ybe_check(int k, const YbeMode& mode) { return run_check("ybe", k, mode, YbeVariant::Plain); }
YbeReport lstar_ybe_check(int k, const YbeMode& mode) { return run_check("lstar-ybe", k, mode, YbeVariant::LStar); }

}  // namespace llt
