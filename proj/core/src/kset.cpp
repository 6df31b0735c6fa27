#include "ksep/kset.hpp"

#include <bit>
#include <stdexcept>

namespace ksep {

namespace {

// Gap test on a list already known to be ascending and in range.
bool gaps_exceed(std::span<const int> elems, int n, int k) {
  const auto r = elems.size();
  if (r == 0) return true;
  if (r == 1) return n > k;
  for (std::size_t i = 0; i + 1 < r; ++i)
    if (elems[i + 1] - elems[i] <= k) return false;
  return elems.front() + n - elems.back() > k;
}

}  // namespace

bool is_k_separated(std::span<const int> elems, int n, int k) {
  if (n < 1) throw std::invalid_argument("is_k_separated: n must be >= 1");
  if (k < 0) throw std::invalid_argument("is_k_separated: k must be >= 0");
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1 || elems[i] > n)
      throw std::invalid_argument("is_k_separated: element out of [1, n]");
    if (i > 0 && elems[i] <= elems[i - 1])
      throw std::invalid_argument("is_k_separated: elements must be strictly ascending");
  }
  return gaps_exceed(elems, n, k);
}

KSet::KSet(const Params& params, std::uint64_t mask)
    : mask_(mask), params_(params) {
  if (params.n < kMaxGroundSet && (mask >> params.n) != 0)
    throw std::invalid_argument("KSet: mask has bits outside [1, n]");
  if (std::popcount(mask) != params.r)
    throw std::invalid_argument("KSet: popcount(mask) != r");
}

KSet KSet::from_elements(const Params& params, std::span<const int> elems) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1 || elems[i] > params.n)
      throw std::invalid_argument("KSet: element out of [1, n]");
    if (i > 0 && elems[i] <= elems[i - 1])
      throw std::invalid_argument("KSet: elements must be strictly ascending");
    mask |= std::uint64_t{1} << (elems[i] - 1);
  }
  return KSet(params, mask);
}

std::vector<int> KSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(params_.r));
  std::uint64_t m = mask_;
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

bool KSet::separated() const {
  const auto e = elements();
  return gaps_exceed(e, params_.n, params_.k);
}

bool KSet::separated_on(int m, int k) const {
  const auto e = elements();
  if (!e.empty() && e.back() > m) return false;
  return gaps_exceed(e, m, k);
}

KSet KSet::rotated(int d) const {
  const int n = params_.n;
  int s = d % n;
  if (s < 0) s += n;
  if (s == 0) return *this;
  const std::uint64_t ones = (n == 64) ? ~std::uint64_t{0}
                                       : ((std::uint64_t{1} << n) - 1);
  const std::uint64_t m = ((mask_ << s) | (mask_ >> (n - s))) & ones;
  return KSet(params_, m);
}

std::string KSet::to_text() const {
  std::string out;
  for (const int a : elements()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a);
  }
  return out;
}

}  // namespace ksep
