#pragma once

#include <cstdint>

#include "hdecomp/combinatorics.hpp"
#include "hdecomp/hypergraph.hpp"
#include "hdecomp/packing.hpp"

namespace hdecomp {

// Threshold kr(k+r-2) + 2r - 1 above which the k-matching formula is proved.
std::int64_t n_zero(std::int64_t k, std::int64_t r);

struct FranklBound {
  BigInt value;     // C(n,r) - C(n-k,r)
  bool applicable;  // n >= (2k+1)r - k
};

/// Maximum edge count of an r-graph on n vertices with matching number k.
FranklBound frankl_bound(std::int64_t n, std::int64_t r, std::int64_t k);

// The leftover of an optimal k-matching packing is H-free: its matching
// number is at most k-1 and, once n >= (2k-1)r - (k-1), it has at most
// C(n,r) - C(n-k+1,r) edges.
bool residual_check(const Hypergraph& g, const PackingCertificate& cert, std::int64_t k);

// C(n,r) - (k-1)[C(n,r) - C(n-k+1,r)]; may be negative.
BigInt lower_bound_e(std::int64_t n, std::int64_t r, std::int64_t k);

// k·C(n-r,r) + (k-1)·C(n-k+1,r) >= (2k-2)·C(n,r)
bool degree_condition_inequality(std::int64_t n, std::int64_t r, std::int64_t k);

/// C(n-t,r)/C(n,r) >= ((n-t-r+1)/(n-r+1))^r >= 1 - rt/(n-r+1), in exact
/// rationals. Requires n >= r + t and r >= t >= 0.
bool ratio_inequality_check(std::int64_t n, std::int64_t r, std::int64_t t);

// C(n,r) with negative n or r treated as 0.
BigInt binomial_signed(std::int64_t n, std::int64_t r);

}  // namespace hdecomp
