#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hdecomp/errors.hpp"

namespace hdecomp {

using BigInt = boost::multiprecision::cpp_int;

using Vertex = std::uint32_t;

// Exact C(n, r); zero when r > n.
BigInt binomial(std::uint64_t n, std::uint64_t r);

// C(n, r) as a machine integer. Throws InvalidArgument if the value does not fit.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t r);

/// Colexicographic rank of an r-subset of [0, n).
struct EdgeId {
  std::uint64_t rank = 0;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

// Ranking works on a plain ascending label sequence so it can be shared by
// REdge and by callers holding raw buffers.
EdgeId rank_subset(std::span<const Vertex> labels, Vertex n);
std::vector<Vertex> unrank_subset(EdgeId id, Vertex n, Vertex r);

}  // namespace hdecomp
