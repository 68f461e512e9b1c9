#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdecomp/budget.hpp"
#include "hdecomp/decomposition.hpp"
#include "hdecomp/hypergraph.hpp"

namespace hdecomp {

/// One grid point of a verification run. Fields keep insertion order so the
/// JSON form is stable.
struct VerificationReport {
  std::string check;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string pattern;
  std::vector<std::pair<std::string, std::optional<std::int64_t>>> values;
  std::vector<std::pair<std::string, bool>> flags;
  bool budget_exceeded = false;
  std::string note;
  double elapsed_ms = 0.0;

  // All flags hold and no budget ran out.
  bool agree() const;
  std::optional<std::int64_t> value(const std::string& name) const;
  std::optional<bool> flag(const std::string& name) const;
};

struct GridPoint {
  Vertex n;
  Vertex r;
  Vertex k;
};

// (n, r, k) with 2 <= r <= rmax, 0 <= k <= r-1, 2r-k <= n <= nmax.
std::vector<GridPoint> theorem1_grid(Vertex rmax, Vertex nmax);
// n from n0(k, r) (or nmin when given) to nmax.
std::vector<GridPoint> theorem2_grid(Vertex r, Vertex k, Vertex nmax, std::optional<Vertex> nmin = std::nullopt);

struct VerifyOptions {
  SearchBudget budget;
  // Brute-force cross-check on K_n^r when C(n,r) is at most this.
  std::uint64_t oracle_edge_limit = 12;
  unsigned jobs = 1;
};

VerificationReport verify_theorem1_point(const GridPoint& p, const VerifyOptions& options);
std::vector<VerificationReport> verify_theorem1(const std::vector<GridPoint>& grid, const VerifyOptions& options);

VerificationReport verify_theorem2_point(const GridPoint& p, const VerifyOptions& options);
std::vector<VerificationReport> verify_theorem2(const std::vector<GridPoint>& grid, const VerifyOptions& options);

// Degree-condition sweep for n0(k,r) <= n <= n0(k,r) + span, one report per (k, r).
std::vector<VerificationReport> verify_degree_condition(Vertex kmax, Vertex rmax, std::int64_t span, unsigned jobs = 1);
// Ratio inequality for 0 <= t <= r <= rmax and r + t <= n <= nmax, one report per (r, t).
std::vector<VerificationReport> verify_ratio_inequality(Vertex rmax, std::int64_t nmax, unsigned jobs = 1);

/// Draws `samples` random subgraphs G of K_n^r (each edge kept with
/// probability 1/2) and checks φ(G) <= ⌈C(n,r)/2⌉ for the two-edge pattern.
/// The generator is seeded from (seed, n, r, k) only.
VerificationReport verify_monotonicity_point(const GridPoint& p, std::size_t samples, std::uint64_t seed);
std::vector<VerificationReport> verify_monotonicity(const std::vector<GridPoint>& grid, std::size_t samples,
                                                    std::uint64_t seed, unsigned jobs = 1);

// φ(K_n^r) for the common-core pattern against the two-branch k-matching formula.
VerificationReport conjecture_probe(Vertex n, Vertex r, Vertex k, Vertex i, const SearchBudget& budget);

enum class ExtremalFamily {
  AllSubgraphs,   // every spanning subgraph of K_n^r; needs C(n,r) <= 20
  CompleteMinus,  // K_n^r minus its j colex-largest edges, 0 <= j <= max_deleted
};

struct ExtremalSearchResult {
  std::int64_t max_phi = 0;
  std::vector<Hypergraph> maximizers;
  std::size_t searched = 0;
  bool complete = true;
};

ExtremalSearchResult extremal_search(Vertex n, Vertex r, const PatternH& pattern, ExtremalFamily family,
                                     std::size_t max_deleted, const SearchBudget& budget);

}  // namespace hdecomp
