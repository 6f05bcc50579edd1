#pragma once

#include "llt/algebra.hpp"
#include "llt/shapes.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace llt {

enum class Engine { Tableaux, Lattice };

LaurentPoly llt_poly(const SkewShapeTuple& s, int n, Engine engine);

enum class Status { Pass, Fail };

struct IdentityReport {
  std::string name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Status status = Status::Pass;
  // Left and right sides at the first failing instance.
  std::optional<std::pair<LaurentPoly, LaurentPoly>> witness;
  std::string detail;
  long instances = 0;

  bool passed() const { return status == Status::Pass; }
  nlohmann::ordered_json to_json() const;
};

IdentityReport verify_symmetry(const SkewShapeTuple& s, int n, Engine engine);
IdentityReport verify_inv_coinv(const SkewShapeTuple& s, int n);
// L_beta = t^inv(beta) H_mu over all rearrangements beta of mu, including mu reversed.
IdentityReport verify_hl(const Partition& mu, int n, Engine engine);
IdentityReport verify_modified_hl(const Partition& mu, int n);
IdentityReport verify_box_skew(const ShapeTuple& lam, int M, int n, Engine engine);
IdentityReport verify_complement(const ShapeTuple& lam, int M, int n, Engine engine);
IdentityReport verify_lstar(const ShapeTuple& lam, int n, const std::vector<int>& Ms);
IdentityReport verify_cauchy(int n, int k, int D, Engine engine);
IdentityReport verify_skew_cauchy(const ShapeTuple& mu, int n, int k, int D, Engine engine);
IdentityReport verify_cauchy_rot(int n, int k, int D, Engine engine);

// Per-instance bijection checks.
// Complement: x^T x^Phi(T) = (x_1..x_n)^(k(M-n)) and coinv(T) - coinv(Phi(T)) = dtilde.
IdentityReport verify_complement_bijection(const ShapeTuple& lam, int M, int n, std::uint64_t seed, int samples);
// Rotation of the B/lam lattice onto the lam^c lattice: x indices reversed, t shifted by d.
IdentityReport verify_rotation_bijection(const ShapeTuple& lam, int M, int n, std::uint64_t seed, int samples);

// Truncated kernel prod_{i,j} prod_{m<k} 1/(1 - x_i y_j t^m), x-degree <= D.
LaurentPoly cauchy_kernel(int n, int k, int D);

}  // namespace llt
