#include "hdecomp/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace hdecomp {

BigInt binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigInt result = 1;
  for (std::uint64_t i = 0; i < r; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 0; i < r; ++i) {
    // result * (n - i) is divisible by (i + 1) at every step.
    result = result * (n - i) / (i + 1);
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw InvalidArgument("binomial(" + std::to_string(n) + ", " + std::to_string(r) +
                            ") overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

EdgeId rank_subset(std::span<const Vertex> labels, Vertex n) {
  std::uint64_t rank = 0;
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (labels[j] >= n) throw InvalidArgument("edge label out of range");
    if (j > 0 && labels[j] <= labels[j - 1]) throw InvalidArgument("edge labels not strictly ascending");
    rank += binomial_u64(labels[j], j + 1);
  }
  return EdgeId{rank};
}

std::vector<Vertex> unrank_subset(EdgeId id, Vertex n, Vertex r) {
  if (r > n || id.rank >= binomial_u64(n, r)) {
    throw InvalidArgument("rank " + std::to_string(id.rank) + " out of range for C(" + std::to_string(n) +
                          ", " + std::to_string(r) + ")");
  }
  std::vector<Vertex> labels(r);
  std::uint64_t rest = id.rank;
  Vertex bound = n;
  for (Vertex j = r; j >= 1; --j) {
    Vertex v = bound - 1;
    while (binomial_u64(v, j) > rest) --v;
    labels[j - 1] = v;
    rest -= binomial_u64(v, j);
    bound = v;
  }
  return labels;
}

}  // namespace hdecomp
