#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hdecomp/intersection_graph.hpp"

namespace hdecomp {

struct Matching {
  // Each pair (u, v) has u < v; pairs sorted by u.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> exposed;

  std::size_t size() const noexcept { return pairs.size(); }
};

/// Maximum-cardinality matching by Edmonds' blossom algorithm. A greedy pass
/// seeds the matching; each exposed vertex, in ascending order, then searches
/// for an augmenting path with BFS. Neighbors are scanned in ascending order,
/// so the result is a deterministic function of the adjacency lists.
Matching max_matching(const IntersectionGraph& g);

// Maximum matching that must miss at most one vertex (exactly |V| mod 2).
// Throws TheoryViolation otherwise.
Matching near_perfect_matching(const IntersectionGraph& g);

bool is_valid_matching(const IntersectionGraph& g, const Matching& m);

}  // namespace hdecomp
