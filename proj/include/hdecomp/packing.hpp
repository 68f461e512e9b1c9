#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hdecomp/budget.hpp"
#include "hdecomp/hypergraph.hpp"
#include "hdecomp/intersection_graph.hpp"

namespace hdecomp {

/// Edge-disjoint copies of H in G together with the edges they leave over.
/// `optimal` is set only when the search proved no larger packing exists.
struct PackingCertificate {
  std::vector<std::vector<REdge>> copies;
  std::vector<REdge> leftover;
  bool optimal = false;

  std::size_t value() const noexcept { return copies.size(); }
};

// Checks the certificate against G alone: copies are H-copies of edges of G,
// pairwise edge-disjoint, and copies ∪ leftover is exactly E(G).
bool validate_certificate(const Hypergraph& g, const PatternH& pattern, const PackingCertificate& cert);

/// p_H(G). Two-edge patterns are solved exactly by maximum matching on the
/// intersection graph; k independent edges go through a K_k-factor search on
/// L_G first; everything else falls back to branch_and_bound_packing. When
/// the budget runs out the best packing found is returned with optimal = false.
PackingCertificate max_edge_disjoint_copies(const Hypergraph& g, const PatternH& pattern, const SearchBudget& budget);

// Exact p_H(G) by branching on the lowest uncovered edge (in some copy, or
// leftover). `seed` is an initial packing used as the incumbent.
PackingCertificate branch_and_bound_packing(const Hypergraph& g, const PatternH& pattern, const SearchBudget& budget,
                                            const std::optional<PackingCertificate>& seed = std::nullopt);

// Certificate whose copies are the given index sets into g.edges(); the rest is leftover.
PackingCertificate certificate_from_cliques(const Hypergraph& g, const std::vector<std::vector<std::size_t>>& copies,
                                            bool optimal);

// Exact route for patterns with two edges.
PackingCertificate matching_packing(const Hypergraph& g, const PatternH& pattern);

enum class FactorStatus { Found, CertifiedExistsNotConstructed, NotFoundWithinBudget };

struct FactorResult {
  // Vertex-disjoint k-cliques, each sorted ascending. May be partial.
  std::vector<std::vector<std::size_t>> cliques;
  FactorStatus status = FactorStatus::NotFoundWithinBudget;
  // Set when an exhaustive search proved no K_k-factor exists.
  bool proven_absent = false;
};

/// K_k-factor search. k = 2 is delegated to max_matching. For k >= 3: greedy
/// clique removal (lowest remaining degree first), then repair that re-solves
/// one or two cliques together with the uncovered vertices exactly, then, on
/// small graphs, full exact backtracking.
FactorResult kk_factor(const IntersectionGraph& g, std::size_t k, const SearchBudget& budget);

// k·δ(g) >= (k-1)·|V|: a K_k-factor exists by the Hajnal–Szemerédi theorem.
bool hajnal_szemeredi_certificate(const IntersectionGraph& g, std::size_t k);

bool is_clique_packing(const IntersectionGraph& g, std::size_t k, const std::vector<std::vector<std::size_t>>& cliques);

// ν(G): exact maximum number of pairwise disjoint edges.
std::size_t matching_number(const Hypergraph& g);
std::size_t matching_number(std::span<const REdge> edges);

std::string to_string(FactorStatus status);

}  // namespace hdecomp
