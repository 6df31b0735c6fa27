#pragma once

#include <stdexcept>
#include <string>

namespace ksep {

// Ground sets are capped at one machine word so a set is a single uint64_t
// and set intersection is one AND.
inline constexpr int kMaxGroundSet = 64;

/// Instance parameters: circle length n, separation gap k, set size r.
struct Params {
  int n;
  int k;
  int r;

  Params(int n_, int k_, int r_) : n(n_), k(k_), r(r_) {
    if (n < 1 || n > kMaxGroundSet)
      throw std::invalid_argument("Params: n must be in [1, " +
                                  std::to_string(kMaxGroundSet) + "], got " +
                                  std::to_string(n));
    if (k < 0) throw std::invalid_argument("Params: k must be >= 0");
    if (r < 0 || r > kMaxGroundSet)
      throw std::invalid_argument("Params: r must be in [0, " +
                                  std::to_string(kMaxGroundSet) + "]");
  }

  /// Smallest circle that admits any k-separated r-set.
  int min_circle() const { return (k + 1) * r; }

  /// Whether [n]^(r)_k has any member at all.
  bool feasible() const { return n >= min_circle(); }

  bool operator==(const Params&) const = default;
};

}  // namespace ksep
