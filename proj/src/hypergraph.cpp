#include "hdecomp/hypergraph.hpp"

#include <algorithm>
#include <iterator>

namespace hdecomp {

REdge::REdge(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  for (std::size_t j = 1; j < vertices_.size(); ++j) {
    if (vertices_[j] <= vertices_[j - 1]) throw InvalidArgument("edge labels not strictly ascending");
  }
}

bool REdge::contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool colex_less(const REdge& a, const REdge& b) {
  return std::lexicographical_compare(a.vertices().rbegin(), a.vertices().rend(), b.vertices().rbegin(),
                                      b.vertices().rend());
}

std::size_t intersection_size(const REdge& a, const REdge& b) {
  std::size_t count = 0;
  auto i = a.vertices().begin();
  auto j = b.vertices().begin();
  while (i != a.vertices().end() && j != b.vertices().end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<Vertex> intersection(const REdge& a, const REdge& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(),
                        std::back_inserter(out));
  return out;
}

std::vector<Vertex> difference(const REdge& a, const REdge& b) {
  std::vector<Vertex> out;
  std::set_difference(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(),
                      std::back_inserter(out));
  return out;
}

REdge unrank_edge(EdgeId id, Vertex n, Vertex r) { return REdge(unrank_subset(id, n, r)); }

EdgeId rank_edge(const REdge& e, Vertex n) { return rank_subset(e.vertices(), n); }

Hypergraph::Hypergraph(Vertex n, Vertex r, std::vector<REdge> edges) : n_(n), r_(r), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.size() != r_) throw InvalidArgument("edge size differs from uniformity");
    if (r_ > 0 && e.back() >= n_) throw InvalidArgument("edge label out of range");
  }
  std::sort(edges_.begin(), edges_.end(), colex_less);
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidArgument("duplicate edge");
  }
}

std::size_t Hypergraph::degree(Vertex v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const REdge& e) { return e.contains(v); }));
}

std::size_t Hypergraph::min_degree() const {
  if (n_ == 0) return 0;
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_) {
    for (Vertex v : e.vertices()) ++deg[v];
  }
  return *std::min_element(deg.begin(), deg.end());
}

std::size_t Hypergraph::index_of(const REdge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e, colex_less);
  if (it == edges_.end() || *it != e) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Hypergraph::contains(const REdge& e) const { return index_of(e) != edges_.size(); }

Hypergraph Hypergraph::without(std::span<const REdge> removed) const {
  std::vector<REdge> kept;
  kept.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) kept.push_back(e);
  }
  return Hypergraph(n_, r_, std::move(kept));
}

Hypergraph Hypergraph::subgraph(std::span<const std::size_t> edge_indices) const {
  std::vector<REdge> kept;
  kept.reserve(edge_indices.size());
  for (std::size_t idx : edge_indices) kept.push_back(edges_.at(idx));
  return Hypergraph(n_, r_, std::move(kept));
}

PatternH PatternH::two_edge(Vertex r, Vertex k) {
  if (r < 1 || k >= r) throw InvalidArgument("two-edge pattern needs 0 <= k <= r-1");
  return PatternH(PatternKind::TwoEdgeIntersect, r, k, 0);
}

PatternH PatternH::independent_edges(Vertex r, Vertex k) {
  if (r < 1 || k < 1) throw InvalidArgument("independent-edges pattern needs k >= 1");
  return PatternH(PatternKind::IndependentEdges, r, k, 0);
}

PatternH PatternH::common_intersection(Vertex r, Vertex k, Vertex i) {
  if (r < 1 || k < 1 || i >= r) throw InvalidArgument("common-intersection pattern needs k >= 1, 0 <= i <= r-1");
  return PatternH(PatternKind::CommonIntersection, r, k, i);
}

std::size_t PatternH::edge_count() const noexcept { return kind_ == PatternKind::TwoEdgeIntersect ? 2 : k_; }

Vertex PatternH::core_size() const noexcept {
  switch (kind_) {
    case PatternKind::TwoEdgeIntersect:
      return k_;
    case PatternKind::IndependentEdges:
      return 0;
    case PatternKind::CommonIntersection:
      return i_;
  }
  return 0;
}

Vertex PatternH::vertex_span() const noexcept {
  auto petals = static_cast<Vertex>(edge_count());
  return core_size() + petals * (r_ - core_size());
}

std::string PatternH::name() const {
  switch (kind_) {
    case PatternKind::TwoEdgeIntersect:
      return "two-edge(k=" + std::to_string(k_) + ")";
    case PatternKind::IndependentEdges:
      return "k-matching(k=" + std::to_string(k_) + ")";
    case PatternKind::CommonIntersection:
      return "common-i(k=" + std::to_string(k_) + ",i=" + std::to_string(i_) + ")";
  }
  return {};
}

bool is_copy_of(const PatternH& pattern, std::span<const REdge> edges) {
  if (edges.size() != pattern.edge_count()) return false;
  for (const auto& e : edges) {
    if (e.size() != pattern.r()) return false;
  }
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if (edges[a] == edges[b]) return false;
    }
  }
  if (edges.size() < 2) return true;
  const auto core = intersection(edges[0], edges[1]);
  if (core.size() != pattern.core_size()) return false;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if (intersection(edges[a], edges[b]) != core) return false;
    }
  }
  return true;
}

Hypergraph complete_hypergraph(Vertex n, Vertex r) {
  if (r < 1 || n < r) throw InvalidArgument("complete hypergraph needs n >= r >= 1");
  return complete_minus_top(n, r, 0);
}

std::uint64_t ell_value(Vertex n, Vertex r, std::int64_t k) {
  if (k <= 0) throw InvalidArgument("k must be positive");
  const BigInt total = binomial(n, r);
  return static_cast<std::uint64_t>((total + 1) % k);
}

Hypergraph complete_minus_top(Vertex n, Vertex r, std::size_t count) {
  if (r < 1 || n < r) throw InvalidArgument("complete hypergraph needs n >= r >= 1");
  const std::uint64_t total = binomial_u64(n, r);
  if (count > total) throw InvalidArgument("cannot delete more edges than K_n^r has");
  std::vector<REdge> edges;
  edges.reserve(total - count);
  for (std::uint64_t rank = 0; rank < total - count; ++rank) edges.push_back(unrank_edge(EdgeId{rank}, n, r));
  return Hypergraph(n, r, std::move(edges));
}

Hypergraph complete_minus(Vertex n, Vertex r, std::span<const REdge> removed) {
  auto full = complete_hypergraph(n, r);
  for (const auto& e : removed) {
    if (!full.contains(e)) throw InvalidArgument("deleted edge is not an edge of K_n^r");
  }
  return full.without(removed);
}

Hypergraph extremal_candidate(Vertex n, Vertex r, std::int64_t k) {
  return complete_minus_top(n, r, ell_value(n, r, k));
}

Hypergraph random_subgraph(const Hypergraph& g, std::mt19937_64& rng) {
  std::vector<REdge> kept;
  for (const auto& e : g.edges()) {
    if (rng() & 1U) kept.push_back(e);
  }
  return Hypergraph(g.n(), g.r(), std::move(kept));
}

}  // namespace hdecomp
