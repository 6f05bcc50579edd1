#include "llt/random.hpp"

namespace llt {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed;
  std::uint64_t a = splitmix64(state);
  state ^= stream * 0xd1342543de82ef95ULL;
  std::uint64_t b = splitmix64(state);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32), static_cast<std::uint32_t>(b),
                    static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Partition random_partition(std::mt19937_64& rng, int rows, int max_part) {
  std::vector<int> parts(rows);
  int cap = max_part;
  for (int i = 0; i < rows; ++i) {
    parts[i] = uniform(rng, 0, cap);
    cap = parts[i];
  }
  return Partition(std::move(parts));
}

Partition random_subpartition(std::mt19937_64& rng, const Partition& outer) {
  std::vector<int> parts(outer.length());
  int cap = outer.max_part();
  for (int i = 0; i < outer.length(); ++i) {
    parts[i] = uniform(rng, 0, std::min(cap, outer.parts()[i]));
    cap = parts[i];
  }
  return Partition(std::move(parts));
}

}  // namespace

SkewShapeTuple random_skew_tuple(std::mt19937_64& rng, const RandomShapeLimits& limits) {
  const int k = uniform(rng, 1, limits.max_k);
  const int rows = uniform(rng, 1, limits.max_rows);
  ShapeTuple beta;
  ShapeTuple gamma;
  for (int i = 0; i < k; ++i) {
    Partition b = random_partition(rng, rows, limits.max_part);
    Partition g = uniform(rng, 0, 1) == 0 ? Partition::zeros(rows) : random_subpartition(rng, b);
    beta.shapes.push_back(std::move(b));
    gamma.shapes.push_back(std::move(g));
  }
  return SkewShapeTuple(std::move(beta), std::move(gamma));
}

Rational random_rational(std::mt19937_64& rng, int bound) {
  int p = uniform(rng, 1, bound) * (uniform(rng, 0, 1) == 0 ? 1 : -1);
  int q = uniform(rng, 1, bound);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace llt
