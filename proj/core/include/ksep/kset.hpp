#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ksep/params.hpp"

namespace ksep {

/// True iff `elems` (strictly ascending, all in [1, n]) is k-separated on the
/// n-circle: every consecutive gap exceeds k, including the wrap gap
/// a_1 + n - a_r. The empty list is separated; a singleton is iff n > k.
/// Throws std::invalid_argument on malformed input.
bool is_k_separated(std::span<const int> elems, int n, int k);

/// One r-element subset of the circle [1, n], stored as a bitmask with bit
/// (a - 1) standing for element a. Construction pins popcount(mask) == r and
/// all bits below n; the separation property is a separate query because
/// derived families (traces) legitimately hold non-separated sets.
class KSet {
 public:
  KSet(const Params& params, std::uint64_t mask);

  static KSet from_elements(const Params& params, std::span<const int> elems);

  std::uint64_t mask() const { return mask_; }
  const Params& params() const { return params_; }
  int size() const { return params_.r; }

  bool contains(int a) const {
    return a >= 1 && a <= params_.n && (mask_ >> (a - 1)) & 1u;
  }

  /// Ascending 1-based elements.
  std::vector<int> elements() const;

  /// k-separated on this set's own circle.
  bool separated() const;

  /// Same elements judged on a circle of length m (and within [1, m]).
  bool separated_on(int m, int k) const;

  /// Rotate every element by d (any sign) around the circle.
  KSet rotated(int d) const;

  /// "1 4 7" (ascending, space-separated).
  std::string to_text() const;

  bool operator==(const KSet&) const = default;

  /// Lexicographic order on the ascending element lists. Both sets must have
  /// the same cardinality (as they do inside a family); then the smallest
  /// element whose membership differs decides.
  friend bool lex_less(const KSet& a, const KSet& b) {
    const std::uint64_t d = a.mask_ ^ b.mask_;
    return d != 0 && (a.mask_ & (d & (~d + 1)));
  }

 private:
  std::uint64_t mask_;
  Params params_;
};

}  // namespace ksep
