#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdecomp/budget.hpp"
#include "hdecomp/hypergraph.hpp"
#include "hdecomp/packing.hpp"

namespace hdecomp {

enum class Source { Constructive, Formula, Oracle };

struct Part {
  enum class Kind { Single, Copy };
  Kind kind = Kind::Single;
  std::vector<REdge> edges;

  static Part single(REdge e) { return Part{Kind::Single, {std::move(e)}}; }
  static Part copy(std::vector<REdge> edges) { return Part{Kind::Copy, std::move(edges)}; }
};

/// A partition of E(G) into single edges and copies of H.
struct Decomposition {
  std::vector<Part> parts;
  Source source = Source::Constructive;

  std::size_t size() const noexcept { return parts.size(); }
  std::size_t copy_count() const noexcept;
  std::size_t single_count() const noexcept { return size() - copy_count(); }
};

// Checks only against G and the pattern, independent of how `d` was produced.
bool validate_decomposition(const Hypergraph& g, const PatternH& pattern, const Decomposition& d);

// Copies become Copy parts and leftovers Single parts; a one-edge pattern gives all singles.
Decomposition decomposition_from_packing(const PatternH& pattern, const PackingCertificate& cert, Source source);

struct PhiResult {
  std::int64_t value = 0;
  // False when a search budget ran out; value is then an upper bound.
  bool exact = false;
  Source source = Source::Constructive;
  // Absent only for Source::Formula, when a K_k-factor is certified but not built.
  std::optional<Decomposition> decomposition;
  std::optional<FactorStatus> factor_status;
};

/// φ_H(G) = e(G) - (e(H)-1)·p_H(G).
PhiResult phi(const Hypergraph& g, const PatternH& pattern, const SearchBudget& budget);

// φ through the exact branch-and-bound packing only; tagged Source::Oracle.
PhiResult phi_oracle(const Hypergraph& g, const PatternH& pattern, const SearchBudget& budget);

/// Decomposition of K_n^r into ⌈C(n,r)/2⌉ parts: a near-perfect matching of
/// J(n,r,k) pairs up the edges into copies of the two-edge pattern.
PhiResult phi_two_edge_constructive(Vertex n, Vertex r, Vertex k);

// ⌊C(n,r)/k⌋ + k-1 when C(n,r) = k-1 (mod k), else ⌊C(n,r)/k⌋ + k-2.
BigInt phi_matching_formula(std::int64_t n, std::int64_t r, std::int64_t k);

// ⌈C(n,r)/2⌉
BigInt phi_two_edge_formula(std::int64_t n, std::int64_t r);

std::string to_string(Source source);

}  // namespace hdecomp
