#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hdecomp/hypergraph.hpp"

namespace hdecomp {

enum class GraphKind {
  Johnson,       // J(n, r, k) over all of E(K_n^r)
  Disjointness,  // L_G: edges of G adjacent when disjoint
  Intersection,  // edges of G adjacent when they share exactly k vertices
  Plain,         // no labels, built directly from an adjacency list
};

/// A simple graph whose vertices stand for r-edges. Vertex v carries the
/// label `label(v)`; for graphs built from a Hypergraph, v is the position of
/// the edge in the hypergraph's colex-sorted edge list, so for G = K_n^r it
/// coincides with the edge's EdgeId.
class IntersectionGraph {
 public:
  IntersectionGraph() = default;
  // Symmetrizes, sorts and deduplicates; loops are rejected.
  static IntersectionGraph from_adjacency(std::vector<std::vector<std::size_t>> adjacency);
  // Labelled graph on `labels`, adjacent iff two labels share exactly k vertices.
  static IntersectionGraph from_labels(GraphKind kind, Vertex n, Vertex r, Vertex k, std::vector<REdge> labels);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept;
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  const std::vector<std::vector<std::size_t>>& adjacency() const noexcept { return adjacency_; }
  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  std::size_t min_degree() const;

  const std::vector<REdge>& labels() const noexcept { return labels_; }
  const REdge& label(std::size_t v) const { return labels_.at(v); }

  GraphKind kind() const noexcept { return kind_; }
  Vertex n() const noexcept { return n_; }
  Vertex r() const noexcept { return r_; }
  Vertex k() const noexcept { return k_; }

  friend bool operator==(const IntersectionGraph&, const IntersectionGraph&) = default;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<REdge> labels_;
  GraphKind kind_ = GraphKind::Plain;
  Vertex n_ = 0;
  Vertex r_ = 0;
  Vertex k_ = 0;
};

IntersectionGraph johnson_general(Vertex n, Vertex r, Vertex k);
IntersectionGraph disjointness_graph(const Hypergraph& g);
// Edges of g adjacent iff they share exactly k vertices (k = 0 gives L_G).
IntersectionGraph intersection_graph(const Hypergraph& g, Vertex k);

bool is_connected(const IntersectionGraph& g);
// BFS shortest path (inclusive of both endpoints); nullopt when unreachable.
std::optional<std::vector<std::size_t>> shortest_path(const IntersectionGraph& g, std::size_t from, std::size_t to);

class ConstructionOutOfRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Walk from e to f in J(n, r, k) by downward induction on |e ∩ f|, bridging
/// pairs that share r-1 vertices through an edge using r-k fresh labels.
/// Throws ConstructionOutOfRange when a bridge needs a label >= n.
std::vector<REdge> connecting_walk(const REdge& e, const REdge& f, Vertex n, Vertex r, Vertex k);
// connecting_walk, falling back to a BFS shortest path in J(n, r, k).
std::vector<REdge> connecting_walk_or_path(const REdge& e, const REdge& f, Vertex n, Vertex r, Vertex k);

// Vertex map of J(n, r, k) onto J(n, n-r, n-2r+k) sending e to its complement.
std::vector<std::size_t> complement_isomorphism(Vertex n, Vertex r, Vertex k);
bool is_isomorphism(const IntersectionGraph& a, const IntersectionGraph& b, const std::vector<std::size_t>& map);

// `p edge N M` header, then `e u v` per edge, 1-based.
std::string to_edge_list_text(const IntersectionGraph& g);
std::string kind_name(GraphKind kind);

}  // namespace hdecomp
