#include "llt/identities.hpp"
#include "llt/random.hpp"
#include "llt/shapes.hpp"
#include "llt/tableaux.hpp"
#include "llt/yangbaxter.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace llt;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitMismatch = 3;

struct Options {
  std::string beta;
  std::string gamma;
  std::string lambda;
  std::string mu;
  int n = 2;
  int k = 1;
  int degree = 3;
  std::vector<int> Ms;
  std::string engine = "lattice";
  std::string format = "json";
  std::string mode = "symbolic";
  std::uint64_t seed = 1;
  int points = 3;
  int random = 0;
  bool quick = false;
  std::string identity;
};

SkewShapeTuple read_skew(const Options& o) {
  if (o.beta.empty()) throw ShapeError("--beta is required");
  ShapeTuple beta = parse_shape_tuple(o.beta);
  if (o.gamma.empty()) return SkewShapeTuple::straight(std::move(beta));
  return SkewShapeTuple(std::move(beta), parse_shape_tuple(o.gamma));
}

Engine read_engine(const std::string& e) { return e == "tableaux" ? Engine::Tableaux : Engine::Lattice; }

void print_poly(const LaurentPoly& p, const std::string& format) {
  if (format == "text") {
    std::cout << to_text(p) << "\n";
  } else {
    std::cout << serialize(p) << "\n";
  }
}

int cmd_compute(const Options& o) {
  const SkewShapeTuple s = read_skew(o);
  if (o.n < 0) throw ShapeError("--n must be nonnegative");
  if (o.engine == "both") {
    const LaurentPoly a = llt_poly(s, o.n, Engine::Tableaux);
    const LaurentPoly b = llt_poly(s, o.n, Engine::Lattice);
    if (!(a == b)) {
      std::cout << "tableaux: ";
      print_poly(a, o.format);
      std::cout << "lattice:  ";
      print_poly(b, o.format);
      std::cerr << "engine mismatch\n";
      return kExitMismatch;
    }
    print_poly(a, o.format);
    return kExitOk;
  }
  print_poly(llt_poly(s, o.n, read_engine(o.engine)), o.format);
  return kExitOk;
}

class Reporter {
 public:
  explicit Reporter(std::string format) : format_(std::move(format)) {}

  void add(const IdentityReport& r) {
    count(r.passed());
    if (format_ == "text") {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " " << r.params.dump();
      if (!r.passed() && !r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
      if (!r.passed() && r.witness) {
        std::cout << "  lhs: " << to_text(r.witness->first) << "\n  rhs: " << to_text(r.witness->second) << "\n";
      }
    } else {
      std::cout << r.to_json().dump() << "\n";
    }
  }

  void add(const YbeReport& r) {
    count(r.passed());
    if (format_ == "text") {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " k=" << r.k << " " << (r.numeric ? "numeric" : "symbolic")
                << " checked=" << r.checked << " failed=" << r.failed << "\n";
      if (r.first_failure) {
        std::cout << "  " << r.first_failure->boundary.to_string() << "\n  gauche: " << r.first_failure->gauche
                  << "\n  droite: " << r.first_failure->droite << "\n";
      }
    } else {
      std::cout << r.to_json() << "\n";
    }
  }

  void summary() const {
    if (format_ == "text") {
      std::cout << "reports=" << total_ << " passed=" << total_ - failed_ << " failed=" << failed_ << "\n";
    } else {
      nlohmann::ordered_json j;
      j["summary"] = {{"reports", total_}, {"passed", total_ - failed_}, {"failed", failed_}};
      std::cout << j.dump() << "\n";
    }
  }

  int exit_code() const { return failed_ > 0 ? kExitFail : kExitOk; }

 private:
  void count(bool passed) {
    ++total_;
    if (!passed) ++failed_;
  }

  std::string format_;
  long total_ = 0;
  long failed_ = 0;
};

std::vector<std::pair<SkewShapeTuple, int>> shape_cases(const Options& o, int default_count) {
  std::vector<std::pair<SkewShapeTuple, int>> out;
  if (!o.beta.empty()) {
    out.emplace_back(read_skew(o), o.n);
    return out;
  }
  const int count = o.random > 0 ? o.random : default_count;
  for (int i = 0; i < count; ++i) {
    auto rng = make_rng(o.seed, static_cast<std::uint64_t>(i));
    SkewShapeTuple s = random_skew_tuple(rng, RandomShapeLimits{});
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    out.emplace_back(std::move(s), n);
  }
  return out;
}

std::vector<Partition> mu_cases(const Options& o, int max_weight) {
  if (!o.mu.empty()) {
    ShapeTuple t = parse_shape_tuple(o.mu);
    if (t.k() != 1) throw ShapeError("--mu must be a single partition");
    return {t[1]};
  }
  std::vector<Partition> out;
  for (auto& p : partitions_up_to(max_weight))
    if (p.length() > 0) out.push_back(p);
  return out;
}

ShapeTuple default_lambda(const Options& o) {
  return o.lambda.empty() ? parse_shape_tuple("2,1;1,0") : parse_shape_tuple(o.lambda);
}

int default_M(const Options& o, int fallback) { return o.Ms.empty() ? fallback : o.Ms.front(); }

std::vector<std::array<int, 3>> cauchy_params(const Options& o, bool explicit_params) {
  if (explicit_params) return {{o.n, o.k, o.degree}};
  if (o.quick) return {{1, 1, 3}, {2, 1, 3}, {1, 2, 3}};
  return {{1, 1, 4}, {2, 1, 4}, {1, 2, 4}, {2, 2, 3}};
}

void run_identity(const std::string& name, const Options& o, bool explicit_params, Reporter& rep) {
  const Engine engine = read_engine(o.engine);
  const YbeMode ybe_mode{o.mode == "numeric", o.seed, o.points};
  if (name == "ybe" || name == "lstar-ybe") {
    std::vector<std::pair<int, bool>> runs;
    if (explicit_params) {
      runs.emplace_back(o.k, o.mode == "numeric");
    } else {
      runs = {{1, false}, {2, false}};
      if (!o.quick) runs.emplace_back(3, true);
    }
    for (auto [k, numeric] : runs) {
      YbeMode m = ybe_mode;
      m.numeric = numeric;
      rep.add(name == "ybe" ? ybe_check(k, m) : lstar_ybe_check(k, m));
    }
  } else if (name == "symmetry" || name == "inv-coinv") {
    for (const auto& [s, n] : shape_cases(o, o.quick ? 5 : 30))
      rep.add(name == "symmetry" ? verify_symmetry(s, n, engine) : verify_inv_coinv(s, n));
  } else if (name == "hl" || name == "modified-hl") {
    const std::vector<int> ns = o.mu.empty() ? std::vector<int>{1, 2, 3} : std::vector<int>{o.n};
    for (int n : ns)
      for (const auto& mu : mu_cases(o, o.quick ? 3 : 5)) rep.add(name == "hl" ? verify_hl(mu, n, engine) : verify_modified_hl(mu, n));
  } else if (name == "box-skew" || name == "complement") {
    const ShapeTuple lam = default_lambda(o);
    const int n = lam.common_length();
    const int M = default_M(o, lam.max_part() + n + 1);
    rep.add(name == "box-skew" ? verify_box_skew(lam, M, n, engine) : verify_complement(lam, M, n, engine));
  } else if (name == "lstar") {
    const ShapeTuple lam = default_lambda(o);
    const int n = lam.common_length();
    std::vector<int> Ms = o.Ms;
    if (Ms.empty())
      for (int j = 0; j < 3; ++j) Ms.push_back(lam.max_part() + n + j);
    rep.add(verify_lstar(lam, n, Ms));
  } else if (name == "cauchy" || name == "cauchy-rot") {
    for (auto [n, k, D] : cauchy_params(o, explicit_params))
      rep.add(name == "cauchy" ? verify_cauchy(n, k, D, engine) : verify_cauchy_rot(n, k, D, engine));
  } else if (name == "skew-cauchy") {
    const int n = explicit_params ? o.n : 2;
    const int k = explicit_params ? o.k : 2;
    const int D = explicit_params ? o.degree : (o.quick ? 2 : 3);
    ShapeTuple mu;
    if (!o.mu.empty()) {
      mu = parse_shape_tuple(o.mu);
    } else {
      mu = ShapeTuple::zeros(k, n);
      std::vector<int> first(n, 0);
      first[0] = 1;
      mu.shapes[0] = Partition(first);
    }
    rep.add(verify_skew_cauchy(mu, n, k, D, engine));
  } else {
    throw ShapeError("unknown identity " + name);
  }
}

int cmd_verify(const Options& o, bool explicit_params) {
  Reporter rep(o.format);
  if (o.identity == "all") {
    for (const char* name : {"ybe", "lstar-ybe", "symmetry", "inv-coinv", "hl", "modified-hl", "box-skew", "complement", "lstar",
                             "cauchy", "skew-cauchy", "cauchy-rot"})
      run_identity(name, o, false, rep);
  } else {
    run_identity(o.identity, o, explicit_params, rep);
  }
  rep.summary();
  return rep.exit_code();
}

int cmd_stats(const Options& o) {
  const SkewShapeTuple s = read_skew(o);
  const ColumnRange cr = column_range(s);
  nlohmann::ordered_json j;
  j["r"] = cr.r;
  j["s"] = cr.s;
  j["band"] = cr.band();
  j["m"] = m_bruteforce(s);
  if (s.is_straight()) j["m_formula"] = m_formula(s.beta());
  bool rows = s.is_straight();
  for (const auto& p : s.beta().shapes) rows = rows && p.length() == 1;
  if (rows) {
    Composition beta;
    for (const auto& p : s.beta().shapes) beta.push_back(p.part(1));
    std::vector<int> sorted = beta;
    std::sort(sorted.rbegin(), sorted.rend());
    j["n_mu"] = n_stat(Partition(sorted));
    j["inv"] = inv_stat(beta);
  }
  bool equal_lengths = true;
  for (const auto& p : s.beta().shapes) equal_lengths = equal_lengths && p.length() == s.beta()[1].length();
  if (s.is_straight() && equal_lengths) {
    j["d"] = d_stat(s.beta());
    if (!o.Ms.empty()) {
      const int M = o.Ms.front();
      const int n = s.beta().common_length();
      if (s.beta().max_part() > M - n) throw ShapeError("shape does not fit in the box for --M");
      j["dtilde"] = dtilde_stat(s.beta(), M);
    }
  }
  std::cout << j.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LLT polynomials: tableaux and lattice engines, identity checks"};
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "Compute an LLT polynomial");
  compute->add_option("--beta", o.beta, "outer shapes, e.g. 3,3;3,1")->required();
  compute->add_option("--gamma", o.gamma, "inner shapes, e.g. 2,1;1,0");
  compute->add_option("--n", o.n, "number of x variables")->check(CLI::NonNegativeNumber);
  compute->add_option("--engine", o.engine)->check(CLI::IsMember({"tableaux", "lattice", "both"}));
  compute->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "Check an identity");
  verify
      ->add_option("identity", o.identity)
      ->required()
      ->check(CLI::IsMember({"ybe", "lstar-ybe", "symmetry", "inv-coinv", "hl", "modified-hl", "box-skew", "complement", "lstar",
                             "cauchy", "skew-cauchy", "cauchy-rot", "all"}));
  verify->add_option("--beta", o.beta);
  verify->add_option("--gamma", o.gamma);
  verify->add_option("--lambda", o.lambda, "tuple of partitions with equal lengths");
  verify->add_option("--mu", o.mu);
  auto* opt_n = verify->add_option("--n", o.n)->check(CLI::PositiveNumber);
  auto* opt_k = verify->add_option("--k", o.k)->check(CLI::Range(1, 4));
  auto* opt_d = verify->add_option("--degree", o.degree)->check(CLI::NonNegativeNumber);
  verify->add_option("--M", o.Ms, "box parameter; repeat for several values")->delimiter(',');
  verify->add_option("--engine", o.engine)->check(CLI::IsMember({"tableaux", "lattice"}));
  auto* opt_mode = verify->add_option("--mode", o.mode)->check(CLI::IsMember({"symbolic", "numeric"}));
  verify->add_option("--seed", o.seed);
  verify->add_option("--points", o.points)->check(CLI::PositiveNumber);
  verify->add_option("--random", o.random, "number of random shapes")->check(CLI::NonNegativeNumber);
  verify->add_flag("--quick", o.quick);
  verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* stats = app.add_subcommand("stats", "Shape statistics");
  stats->add_option("--beta", o.beta)->required();
  stats->add_option("--gamma", o.gamma);
  stats->add_option("--M", o.Ms)->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*compute) return cmd_compute(o);
    if (*verify) {
      const bool explicit_params = opt_n->count() + opt_k->count() + opt_d->count() + opt_mode->count() > 0;
      return cmd_verify(o, explicit_params);
    }
    if (*stats) return cmd_stats(o);
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
