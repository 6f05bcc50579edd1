#pragma once

#include "llt/algebra.hpp"
#include "llt/shapes.hpp"

#include <cstdint>
#include <random>

namespace llt {

std::uint64_t splitmix64(std::uint64_t& state);

// Independent deterministic stream derived from (seed, stream).
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream);

struct RandomShapeLimits {
  int max_k = 3;
  int max_rows = 3;
  int max_part = 3;
};

// Random skew tuple; all partitions of one tuple share the same row count.
SkewShapeTuple random_skew_tuple(std::mt19937_64& rng, const RandomShapeLimits& limits);

// Nonzero rational p/q with |p|, q <= bound.
Rational random_rational(std::mt19937_64& rng, int bound);

}  // namespace llt
