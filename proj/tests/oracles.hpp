#pragma once

// Brute-force reference implementations used only by tests. They work on
// plain vectors and std::set and share no code with the library search paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <unordered_map>
#include <vector>

namespace oracle {

using Edge = std::vector<int>;

inline std::set<int> as_set(const Edge& e) { return std::set<int>(e.begin(), e.end()); }

inline std::set<int> meet(const Edge& a, const Edge& b) {
  std::set<int> out;
  for (int x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) out.insert(x);
  }
  return out;
}

// `petals` edges whose pairwise intersections are one common set of size `core`.
inline bool is_sunflower(const std::vector<Edge>& edges, std::size_t petals, std::size_t core) {
  if (edges.size() != petals) return false;
  if (petals < 2) return true;
  const auto first = meet(edges[0], edges[1]);
  if (first.size() != core) return false;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if (as_set(edges[a]) == as_set(edges[b])) return false;
      if (meet(edges[a], edges[b]) != first) return false;
    }
  }
  return true;
}

// All copies as bitmasks over edge positions.
inline std::vector<std::uint32_t> all_copies(const std::vector<Edge>& edges, std::size_t petals, std::size_t core) {
  std::vector<std::uint32_t> out;
  const std::size_t m = edges.size();
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == petals) {
      std::vector<Edge> chosen;
      std::uint32_t mask = 0;
      for (auto p : pick) {
        chosen.push_back(edges[p]);
        mask |= 1U << p;
      }
      if (is_sunflower(chosen, petals, core)) out.push_back(mask);
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Minimum number of parts (single edges or copies) partitioning all edges.
/// Memoized over the set of still-uncovered edges; needs at most 32 edges.
inline int min_partition(const std::vector<Edge>& edges, std::size_t petals, std::size_t core) {
  const auto copies = all_copies(edges, petals, core);
  std::unordered_map<std::uint32_t, int> memo;
  std::function<int(std::uint32_t)> best = [&](std::uint32_t rest) -> int {
    if (rest == 0) return 0;
    if (auto it = memo.find(rest); it != memo.end()) return it->second;
    std::uint32_t low = rest & (~rest + 1);
    int value = 1 + best(rest & ~low);
    for (auto c : copies) {
      if ((c & low) && (c & rest) == c) value = std::min(value, 1 + best(rest & ~c));
    }
    memo.emplace(rest, value);
    return value;
  };
  const std::uint32_t all = edges.size() == 32 ? ~0U : ((1U << edges.size()) - 1);
  return best(all);
}

// Maximum number of edge-disjoint copies.
inline int max_packing(const std::vector<Edge>& edges, std::size_t petals, std::size_t core) {
  const auto copies = all_copies(edges, petals, core);
  int best = 0;
  std::function<void(std::size_t, std::uint32_t, int)> rec = [&](std::size_t from, std::uint32_t used, int count) {
    best = std::max(best, count);
    for (std::size_t i = from; i < copies.size(); ++i) {
      if ((copies[i] & used) == 0) rec(i + 1, used | copies[i], count + 1);
    }
  };
  rec(0, 0, 0);
  return best;
}

// Maximum number of pairwise disjoint edges.
inline int matching_number(const std::vector<Edge>& edges) {
  int best = 0;
  std::vector<Edge> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (std::size_t i = from; i < edges.size(); ++i) {
      bool ok = true;
      for (const auto& c : chosen) ok = ok && meet(c, edges[i]).empty();
      if (!ok) continue;
      chosen.push_back(edges[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return best;
}

/// Maximum matching size of a simple graph given by adjacency lists, by
/// memoized search over the set of unmatched vertices (up to 32 vertices).
inline int max_graph_matching(const std::vector<std::vector<std::size_t>>& adj) {
  std::unordered_map<std::uint32_t, int> memo;
  std::function<int(std::uint32_t)> best = [&](std::uint32_t free) -> int {
    if (free == 0) return 0;
    if (auto it = memo.find(free); it != memo.end()) return it->second;
    int v = __builtin_ctz(free);
    std::uint32_t rest = free & ~(1U << v);
    int value = best(rest);
    for (auto w : adj[v]) {
      if (rest & (1U << w)) value = std::max(value, 1 + best(rest & ~(1U << w)));
    }
    memo.emplace(free, value);
    return value;
  };
  const std::uint32_t all = adj.size() == 32 ? ~0U : ((1U << adj.size()) - 1);
  return best(all);
}

// Johnson-type graph built by definition: all r-subsets of [0,n) in
// lexicographic enumeration, adjacent iff they share exactly k labels.
inline std::vector<Edge> all_subsets(int n, int r) {
  std::vector<Edge> out;
  Edge cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int x = from; x < n; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace oracle
