#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hdecomp/combinatorics.hpp"

namespace hdecomp {

/// An edge of an r-graph: a strictly ascending list of vertex labels.
class REdge {
 public:
  REdge() = default;
  explicit REdge(std::vector<Vertex> vertices);
  REdge(std::initializer_list<Vertex> vertices) : REdge(std::vector<Vertex>(vertices)) {}

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  Vertex back() const { return vertices_.back(); }
  bool contains(Vertex v) const;

  EdgeId rank() const { return rank_subset(vertices_, vertices_.empty() ? 0 : back() + 1); }

  friend bool operator==(const REdge&, const REdge&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// Colex order: compare the largest differing label.
bool colex_less(const REdge& a, const REdge& b);

std::size_t intersection_size(const REdge& a, const REdge& b);
std::vector<Vertex> intersection(const REdge& a, const REdge& b);
std::vector<Vertex> difference(const REdge& a, const REdge& b);

REdge unrank_edge(EdgeId id, Vertex n, Vertex r);
EdgeId rank_edge(const REdge& e, Vertex n);

/// An r-uniform hypergraph on the labels [0, n). Edges are kept in colex order.
class Hypergraph {
 public:
  Hypergraph(Vertex n, Vertex r) : n_(n), r_(r) {}
  // Validates uniformity and label range; throws on duplicate edges.
  Hypergraph(Vertex n, Vertex r, std::vector<REdge> edges);

  Vertex n() const noexcept { return n_; }
  Vertex r() const noexcept { return r_; }
  const std::vector<REdge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::size_t degree(Vertex v) const;
  std::size_t min_degree() const;
  bool contains(const REdge& e) const;
  // Position of e in edges(), or edge_count() if absent.
  std::size_t index_of(const REdge& e) const;

  Hypergraph without(std::span<const REdge> removed) const;
  Hypergraph subgraph(std::span<const std::size_t> edge_indices) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  Vertex n_ = 0;
  Vertex r_ = 0;
  std::vector<REdge> edges_;
};

enum class PatternKind { TwoEdgeIntersect, IndependentEdges, CommonIntersection };

/// The target r-graph H. Every variant is a sunflower: `edges()` petals
/// pairwise meeting in one common core of `core_size()` vertices.
class PatternH {
 public:
  static PatternH two_edge(Vertex r, Vertex k);
  static PatternH independent_edges(Vertex r, Vertex k);
  static PatternH common_intersection(Vertex r, Vertex k, Vertex i);

  PatternKind kind() const noexcept { return kind_; }
  Vertex r() const noexcept { return r_; }
  Vertex k() const noexcept { return k_; }
  Vertex i() const noexcept { return i_; }

  std::size_t edge_count() const noexcept;
  Vertex core_size() const noexcept;
  Vertex vertex_span() const noexcept;
  std::string name() const;

 private:
  PatternH(PatternKind kind, Vertex r, Vertex k, Vertex i) : kind_(kind), r_(r), k_(k), i_(i) {}

  PatternKind kind_;
  Vertex r_;
  Vertex k_;
  Vertex i_;
};

bool is_copy_of(const PatternH& pattern, std::span<const REdge> edges);

Hypergraph complete_hypergraph(Vertex n, Vertex r);
// The unique l in [0, k-1] with C(n,r) - l = k-1 (mod k).
std::uint64_t ell_value(Vertex n, Vertex r, std::int64_t k);
// K_n^r with its `count` colex-largest edges removed.
Hypergraph complete_minus_top(Vertex n, Vertex r, std::size_t count);
Hypergraph complete_minus(Vertex n, Vertex r, std::span<const REdge> removed);
Hypergraph extremal_candidate(Vertex n, Vertex r, std::int64_t k);

// Keeps each edge independently with probability 1/2, one raw generator bit per edge.
Hypergraph random_subgraph(const Hypergraph& g, std::mt19937_64& rng);

}  // namespace hdecomp
