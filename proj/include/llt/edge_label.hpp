#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace llt {

inline constexpr int kMaxColors = 16;

// Set of colors on a lattice edge. Color c (1-based) is bit c-1.
class EdgeLabel {
 public:
  EdgeLabel() = default;
  EdgeLabel(int k, std::uint32_t bits) : bits_(bits), k_(k) {
    if (k < 0 || k > kMaxColors) throw std::invalid_argument("color count out of range");
    if (k < 32 && (bits >> k) != 0) throw std::invalid_argument("edge label has bits above k");
  }
  static EdgeLabel empty(int k) { return EdgeLabel(k, 0); }
  static EdgeLabel full(int k) { return EdgeLabel(k, (1u << k) - 1); }

  int k() const { return k_; }
  std::uint32_t bits() const { return bits_; }
  bool has(int color) const { return (bits_ >> (color - 1)) & 1u; }
  int count() const { return std::popcount(bits_); }
  // Number of colors strictly greater than `color`.
  int count_above(int color) const { return std::popcount(bits_ >> color); }
  bool is_empty() const { return bits_ == 0; }

  EdgeLabel with(int color, bool on) const {
    std::uint32_t m = 1u << (color - 1);
    return EdgeLabel(k_, on ? (bits_ | m) : (bits_ & ~m));
  }
  EdgeLabel restrict_to(int k) const { return EdgeLabel(k, bits_ & ((1u << k) - 1)); }
  EdgeLabel reversed() const {
    std::uint32_t r = 0;
    for (int c = 1; c <= k_; ++c)
      if (has(c)) r |= 1u << (k_ - c);
    return EdgeLabel(k_, r);
  }

  std::string to_string() const {
    std::string s;
    for (int c = 1; c <= k_; ++c) s += has(c) ? '1' : '0';
    return s;
  }

  bool operator==(const EdgeLabel&) const = default;
  auto operator<=>(const EdgeLabel&) const = default;

 private:
  std::uint32_t bits_ = 0;
  int k_ = 0;
};

}  // namespace llt
