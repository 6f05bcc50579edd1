#include "llt/identities.hpp"

#include "llt/lattice.hpp"
#include "llt/parallel.hpp"
#include "llt/random.hpp"
#include "llt/tableaux.hpp"

#include <algorithm>
#include <numeric>

namespace llt {

LaurentPoly llt_poly(const SkewShapeTuple& s, int n, Engine engine) {
  if (engine == Engine::Tableaux) return llt_coinv(s, n);
  return partition_function(build_lattice(s, n));
}

nlohmann::ordered_json IdentityReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["params"] = params;
  j["status"] = passed() ? "PASS" : "FAIL";
  j["instances"] = instances;
  if (witness) {
    j["witness"] = {{"lhs", nlohmann::ordered_json::parse(serialize(witness->first))},
                    {"rhs", nlohmann::ordered_json::parse(serialize(witness->second))}};
  } else {
    j["witness"] = nullptr;
  }
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

namespace {

const char* engine_name(Engine e) { return e == Engine::Tableaux ? "tableaux" : "lattice"; }

int choose2(int k) { return k * (k - 1) / 2; }

// Records one comparison; keeps the first failure as the witness.
void compare(IdentityReport& r, const LaurentPoly& lhs, const LaurentPoly& rhs, const std::string& where) {
  ++r.instances;
  if (lhs == rhs) return;
  if (r.status == Status::Pass) {
    r.status = Status::Fail;
    r.witness = std::make_pair(lhs, rhs);
    r.detail = where;
  }
}

void check(IdentityReport& r, bool ok, const std::string& where) {
  ++r.instances;
  if (ok || r.status == Status::Fail) return;
  r.status = Status::Fail;
  r.detail = where;
}

LaurentPoly t_mono(const VarSet& v, long e) { return LaurentPoly::variable(v, v.t(), static_cast<int>(e)); }

// x^exps t^te over the variables of v.
LaurentPoly x_mono(const VarSet& v, const std::vector<int>& exps, long te) {
  ExponentVector e(v.size(), 0);
  for (std::size_t i = 0; i < exps.size(); ++i) e[i] = exps[i];
  e[v.t()] = static_cast<int>(te);
  return LaurentPoly::monomial(v, e);
}

Substitution invert_x(const VarSet& v) {
  Substitution s = Substitution::identity(v);
  for (int i = 1; i <= v.nx; ++i) s.invert(v.x(i));
  return s;
}

Substitution invert_t(const VarSet& v) {
  Substitution s = Substitution::identity(v);
  s.invert(v.t());
  return s;
}

// Embeds a polynomial in x_1..x_n, t into x_1..x_n, y_1..y_n, t, sending x to y when to_y.
LaurentPoly embed(const LaurentPoly& p, int n, bool to_y) {
  const VarSet from = p.vars();
  const VarSet to{n, n, true};
  Substitution s(from, to);
  for (int i = 1; i <= n; ++i) {
    ExponentVector e(to.size(), 0);
    e[to_y ? to.y(i) : to.x(i)] = 1;
    s.set(from.x(i), MonomialImage{1, e});
  }
  ExponentVector et(to.size(), 0);
  et[to.t()] = 1;
  s.set(from.t(), MonomialImage{1, et});
  return substitute(p, s);
}

nlohmann::ordered_json shape_json(const ShapeTuple& t) { return format_shape_tuple(t); }

}  // namespace

IdentityReport verify_symmetry(const SkewShapeTuple& s, int n, Engine engine) {
  IdentityReport r;
  r.name = "symmetry";
  r.params = {{"beta", format_shape_tuple(s.beta())}, {"gamma", format_shape_tuple(s.gamma())}, {"n", n}, {"engine", engine_name(engine)}};
  const LaurentPoly L = llt_poly(s, n, engine);
  for (int i = 1; i < n; ++i) {
    Substitution sw = Substitution::identity(L.vars());
    sw.swap(L.vars().x(i), L.vars().x(i + 1));
    compare(r, L, substitute(L, sw), "swap x" + std::to_string(i) + ", x" + std::to_string(i + 1));
  }
  if (n < 2) ++r.instances;
  return r;
}

IdentityReport verify_inv_coinv(const SkewShapeTuple& s, int n) {
  IdentityReport r;
  r.name = "inv-coinv";
  r.params = {{"beta", format_shape_tuple(s.beta())}, {"gamma", format_shape_tuple(s.gamma())}, {"n", n}};
  const LaurentPoly L = llt_coinv(s, n);
  const LaurentPoly G = llt_inv(s, n);
  const long m = m_bruteforce(s);
  compare(r, G, substitute(L, invert_t(L.vars())) * t_mono(L.vars(), m), "G = t^m L(1/t)");
  if (s.is_straight()) check(r, m == m_formula(s.beta()), "triple count formula");
  return r;
}

IdentityReport verify_hl(const Partition& mu, int n, Engine engine) {
  IdentityReport r;
  r.name = "hl";
  r.params = {{"mu", format_shape_tuple(ShapeTuple{{mu}})}, {"n", n}, {"engine", engine_name(engine)}};
  const LaurentPoly H = hl_transformed(mu, n);
  for (const auto& beta : distinct_rearrangements(mu)) {
    const LaurentPoly L = llt_poly(row_tuple(beta), n, engine);
    std::string where = "beta=";
    for (std::size_t i = 0; i < beta.size(); ++i) where += (i ? "," : "") + std::to_string(beta[i]);
    compare(r, L, H * t_mono(H.vars(), inv_stat(beta)), where);
  }
  return r;
}

IdentityReport verify_modified_hl(const Partition& mu, int n) {
  IdentityReport r;
  r.name = "modified-hl";
  r.params = {{"mu", format_shape_tuple(ShapeTuple{{mu}})}, {"n", n}};
  const LaurentPoly G = llt_inv(row_tuple(mu.parts()), n);
  compare(r, G, hl_modified(mu, n), "G_mu = modified H_mu");
  return r;
}

namespace {

ShapeTuple box_tuple(int k, int n, int width) {
  return ShapeTuple{std::vector<Partition>(k, Partition(std::vector<int>(n, width)))};
}

}  // namespace

IdentityReport verify_box_skew(const ShapeTuple& lam, int M, int n, Engine engine) {
  IdentityReport r;
  r.name = "box-skew";
  r.params = {{"lambda", shape_json(lam)}, {"M", M}, {"n", n}, {"engine", engine_name(engine)}};
  const ShapeTuple lamc = complement(lam, M, n);
  const SkewShapeTuple boxed(box_tuple(lam.k(), n, M - n), lam);
  const LaurentPoly lhs = llt_poly(boxed, n, engine);
  const LaurentPoly rc = llt_poly(SkewShapeTuple::straight(lamc), n, engine);
  compare(r, lhs, rc * t_mono(rc.vars(), d_stat(lam)), "L_{B/lam} = t^d L_{lam^c}");
  check(r, d_stat(lamc) == d_stat(lam), "d(lam^c) = d(lam)");
  return r;
}

IdentityReport verify_complement(const ShapeTuple& lam, int M, int n, Engine engine) {
  IdentityReport r;
  r.name = "complement";
  r.params = {{"lambda", shape_json(lam)}, {"M", M}, {"n", n}, {"engine", engine_name(engine)}};
  const ShapeTuple lamc = complement(lam, M, n);
  const LaurentPoly lhs = llt_poly(SkewShapeTuple::straight(lam), n, engine);
  const LaurentPoly rc = llt_poly(SkewShapeTuple::straight(lamc), n, engine);
  const VarSet v = rc.vars();
  const LaurentPoly pre = x_mono(v, std::vector<int>(n, lam.k() * (M - n)), dtilde_stat(lam, M));
  compare(r, lhs, pre * substitute(rc, invert_x(v)), "L_lam(X) = (x1..xn)^(k(M-n)) t^dtilde L_{lam^c}(1/X)");
  return r;
}

IdentityReport verify_lstar(const ShapeTuple& lam, int n, const std::vector<int>& Ms) {
  IdentityReport r;
  r.name = "lstar";
  r.params = {{"lambda", shape_json(lam)}, {"n", n}, {"M", Ms}};
  const int k = lam.k();
  const LaurentPoly L = llt_poly(SkewShapeTuple::straight(lam), n, Engine::Lattice);
  const VarSet v = L.vars();
  std::vector<int> rho(n);
  for (int i = 1; i <= n; ++i) rho[i - 1] = k * (n - i);
  const long d = d_stat(lam);
  const LaurentPoly expected = x_mono(v, rho, static_cast<long>(choose2(n)) * choose2(k) + d) * L;
  std::optional<LaurentPoly> previous;
  for (int M : Ms) {
    const std::string at = "M=" + std::to_string(M);
    const LaurentPoly right = partition_function(build_lstar_lattice(lam, n, M, LStarExit::Right));
    compare(r, right, expected, at + ": right-exit lattice = (x^rho)^k t^(C(n,2)C(k,2)+d) L_lam");
    if (previous) compare(r, right, *previous, at + ": independent of M");
    previous = right;

    const LaurentPoly top = partition_function(build_lstar_lattice(lam, n, M, LStarExit::Top));
    const ShapeTuple lamc = complement(lam, M, n);
    const LaurentPoly Lc = llt_poly(SkewShapeTuple::straight(lamc), n, Engine::Lattice);
    const long te = static_cast<long>(n) * n * choose2(k) + dtilde_stat(lam, M) + d;
    compare(r, top, x_mono(v, std::vector<int>(n, k * M), te) * substitute(Lc, invert_x(v)),
            at + ": top-exit lattice = (x1..xn)^(kM) t^(n^2 C(k,2)+dtilde+d) L_{lam^c}(1/X)");
    std::vector<int> ratio(n);
    for (int i = 1; i <= n; ++i) ratio[i - 1] = rho[i - 1] - n * k;
    compare(r, right, x_mono(v, ratio, -static_cast<long>(choose2(n + 1)) * choose2(k)) * top, at + ": right/top ratio");
  }
  return r;
}

LaurentPoly cauchy_kernel(int n, int k, int D) {
  const VarSet v{n, n, true};
  LaurentPoly result = LaurentPoly::constant(v, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int m = 0; m < k; ++m) {
        LaurentPoly series(v);
        for (int e = 0; e <= D; ++e) {
          ExponentVector ex(v.size(), 0);
          ex[v.x(i)] = e;
          ex[v.y(j)] = e;
          ex[v.t()] = e * m;
          series.add_term(ex, 1);
        }
        result = truncate(result * series, D);
      }
  return result;
}

namespace {

LaurentPoly sum_in_order(const std::vector<LaurentPoly>& parts, const VarSet& v) {
  LaurentPoly total(v);
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace

IdentityReport verify_cauchy(int n, int k, int D, Engine engine) {
  IdentityReport r;
  r.name = "cauchy";
  r.params = {{"n", n}, {"k", k}, {"degree", D}, {"engine", engine_name(engine)}};
  const auto lams = tuples_up_to(k, n, D);
  std::vector<LaurentPoly> parts(lams.size());
  parallel_for(lams.size(), [&](std::size_t i) {
    const LaurentPoly L = llt_poly(SkewShapeTuple::straight(lams[i]), n, engine);
    const LaurentPoly tx = embed(L, n, false);
    parts[i] = tx * embed(L, n, true) * t_mono(tx.vars(), d_stat(lams[i]));
  });
  const LaurentPoly lhs = sum_in_order(parts, VarSet{n, n, true});
  compare(r, lhs, cauchy_kernel(n, k, D), "sum over |lam| <= " + std::to_string(D));
  r.instances = static_cast<long>(lams.size());
  return r;
}

IdentityReport verify_skew_cauchy(const ShapeTuple& mu, int n, int k, int D, Engine engine) {
  IdentityReport r;
  r.name = "skew-cauchy";
  r.params = {{"mu", shape_json(mu)}, {"n", n}, {"k", k}, {"degree", D}, {"engine", engine_name(engine)}};
  if (mu.k() != k || mu.common_length() != n) throw ShapeError("mu must be a k-tuple with n parts");
  std::vector<ShapeTuple> lams;
  for (auto& lam : tuples_up_to(k, n, D)) {
    bool contains = true;
    for (int i = 1; i <= k; ++i) contains = contains && lam[i].contains(mu[i]);
    if (contains) lams.push_back(std::move(lam));
  }
  std::vector<LaurentPoly> parts(lams.size());
  parallel_for(lams.size(), [&](std::size_t i) {
    const LaurentPoly L = llt_poly(SkewShapeTuple::straight(lams[i]), n, engine);
    const LaurentPoly S = llt_poly(SkewShapeTuple(lams[i], mu), n, engine);
    const LaurentPoly tx = embed(L, n, false);
    parts[i] = tx * embed(S, n, true) * t_mono(tx.vars(), d_stat(lams[i]));
  });
  const VarSet v{n, n, true};
  const LaurentPoly lhs = sum_in_order(parts, v);
  const LaurentPoly Lmu = embed(llt_poly(SkewShapeTuple::straight(mu), n, engine), n, false);
  const LaurentPoly rhs = truncate(Lmu * t_mono(v, d_stat(mu)) * cauchy_kernel(n, k, D - mu.weight()), D);
  compare(r, lhs, rhs, "sum over lam containing mu with |lam| <= " + std::to_string(D));
  r.instances = static_cast<long>(lams.size());
  return r;
}

IdentityReport verify_cauchy_rot(int n, int k, int D, Engine engine) {
  IdentityReport r;
  r.name = "cauchy-rot";
  r.params = {{"n", n}, {"k", k}, {"degree", D}, {"engine", engine_name(engine)}};
  const auto lams = tuples_up_to(k, n, D);
  std::vector<LaurentPoly> parts(lams.size());
  std::vector<int> rot_ok(lams.size(), 1);
  parallel_for(lams.size(), [&](std::size_t i) {
    const SkewShapeTuple straight = SkewShapeTuple::straight(lams[i]);
    const SkewShapeTuple rot = rotate(straight);
    const LaurentPoly L = llt_poly(straight, n, engine);
    const LaurentPoly Lr = llt_poly(rot, n, engine);
    const ShapeTuple lamc = complement(lams[i], lams[i].max_part() + n, n);
    rot_ok[i] = Lr == L * t_mono(L.vars(), d_stat(lamc)) && d_stat(lamc) == d_stat(lams[i]);
    parts[i] = embed(L, n, false) * embed(Lr, n, true);
  });
  for (std::size_t i = 0; i < lams.size(); ++i)
    check(r, rot_ok[i] != 0, "L_rot = t^d(lam^c) L_lam at lambda=" + format_shape_tuple(lams[i]));
  const LaurentPoly lhs = sum_in_order(parts, VarSet{n, n, true});
  compare(r, lhs, cauchy_kernel(n, k, D), "sum over |lam| <= " + std::to_string(D));
  return r;
}

namespace {

std::vector<std::size_t> sample_indices(std::size_t total, int samples, std::uint64_t seed) {
  std::vector<std::size_t> idx(total);
  std::iota(idx.begin(), idx.end(), 0);
  if (samples < 0 || static_cast<std::size_t>(samples) >= total) return idx;
  auto rng = make_rng(seed, total);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(static_cast<std::size_t>(samples));
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

IdentityReport verify_complement_bijection(const ShapeTuple& lam, int M, int n, std::uint64_t seed, int samples) {
  IdentityReport r;
  r.name = "complement-bijection";
  r.params = {{"lambda", shape_json(lam)}, {"M", M}, {"n", n}, {"seed", seed}, {"samples", samples}};
  const auto all = enumerate_ssyt(SkewShapeTuple::straight(lam), n);
  const long dt = dtilde_stat(lam, M);
  const int full = lam.k() * (M - n);
  for (std::size_t i : sample_indices(all.size(), samples, seed)) {
    const TableauTuple& T = all[i];
    const TableauTuple P = complement_bijection(T, M, n);
    const auto a = T.x_exponents(n);
    const auto b = P.x_exponents(n);
    bool ok = true;
    for (int j = 0; j < n; ++j) ok = ok && a[j] + b[j] == full;
    check(r, ok, "x-weights are complementary for tableau #" + std::to_string(i));
    check(r, coinv(T) - coinv(P) == dt, "coinv(T) - coinv(Phi T) = dtilde for tableau #" + std::to_string(i));
  }
  return r;
}

IdentityReport verify_rotation_bijection(const ShapeTuple& lam, int M, int n, std::uint64_t seed, int samples) {
  IdentityReport r;
  r.name = "rotation-bijection";
  r.params = {{"lambda", shape_json(lam)}, {"M", M}, {"n", n}, {"seed", seed}, {"samples", samples}};
  const int k = lam.k();
  const SkewShapeTuple boxed(box_tuple(k, n, M - n), lam);
  const ShapeTuple lamc = complement(lam, M, n);
  const SkewShapeTuple target = SkewShapeTuple::straight(lamc);
  const LatticeSpec from = build_lattice(boxed, n, 1 - n, M - n);
  const LatticeSpec to = build_lattice(target, n, 1 - n, M - n);
  const auto all = enumerate_ssyt(boxed, n);
  const long d = d_stat(lam);
  const VarSet v = llt_vars(n);
  Substitution reverse = Substitution::identity(v);
  for (int i = 1; i <= n / 2; ++i) reverse.swap(v.x(i), v.x(n + 1 - i));
  for (std::size_t i : sample_indices(all.size(), samples, seed)) {
    const LatticeConfig c = ssyt_to_config(all[i], from);
    const LatticeConfig rc = rotate_config(c);
    const bool valid = is_valid(to, rc);
    check(r, valid, "rotated configuration is valid for tableau #" + std::to_string(i));
    if (!valid) continue;
    const TableauTuple back = config_to_ssyt(rc, to, target);
    check(r, ssyt_to_config(back, to) == rc, "rotated configuration maps to a tableau");
    compare(r, config_weight(from, c), substitute(config_weight(to, rc), reverse) * t_mono(v, d),
            "weight(C) = t^d weight(rot C) with x reversed, tableau #" + std::to_string(i));
  }
  return r;
}

}  // namespace llt
