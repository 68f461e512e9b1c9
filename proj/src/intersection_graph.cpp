#include "hdecomp/intersection_graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace hdecomp {

IntersectionGraph IntersectionGraph::from_adjacency(std::vector<std::vector<std::size_t>> adjacency) {
  const std::size_t count = adjacency.size();
  std::vector<std::vector<std::size_t>> sym(count);
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v : adjacency[u]) {
      if (v >= count) throw InvalidArgument("neighbor index out of range");
      if (v == u) throw InvalidArgument("loops are not allowed");
      sym[u].push_back(v);
      sym[v].push_back(u);
    }
  }
  for (auto& list : sym) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  IntersectionGraph g;
  g.adjacency_ = std::move(sym);
  return g;
}

IntersectionGraph IntersectionGraph::from_labels(GraphKind kind, Vertex n, Vertex r, Vertex k,
                                                 std::vector<REdge> labels) {
  const std::size_t count = labels.size();
  IntersectionGraph g;
  g.adjacency_.assign(count, {});
  g.kind_ = kind;
  g.n_ = n;
  g.r_ = r;
  g.k_ = k;
  if (k < r) {
    if (n <= 64) {
      std::vector<std::uint64_t> masks(count, 0);
      for (std::size_t v = 0; v < count; ++v) {
        for (Vertex x : labels[v].vertices()) masks[v] |= std::uint64_t{1} << x;
      }
      for (std::size_t u = 0; u < count; ++u) {
        for (std::size_t v = u + 1; v < count; ++v) {
          if (static_cast<Vertex>(std::popcount(masks[u] & masks[v])) == k) {
            g.adjacency_[u].push_back(v);
            g.adjacency_[v].push_back(u);
          }
        }
      }
    } else {
      for (std::size_t u = 0; u < count; ++u) {
        for (std::size_t v = u + 1; v < count; ++v) {
          if (intersection_size(labels[u], labels[v]) == k) {
            g.adjacency_[u].push_back(v);
            g.adjacency_[v].push_back(u);
          }
        }
      }
    }
    // Rows are filled in ascending order already: u's lower neighbors arrive
    // before u is scanned, higher ones during.
  }
  g.labels_ = std::move(labels);
  return g;
}

std::size_t IntersectionGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& list : adjacency_) total += list.size();
  return total / 2;
}

bool IntersectionGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::size_t IntersectionGraph::min_degree() const {
  if (adjacency_.empty()) return 0;
  std::size_t best = adjacency_[0].size();
  for (const auto& list : adjacency_) best = std::min(best, list.size());
  return best;
}

IntersectionGraph johnson_general(Vertex n, Vertex r, Vertex k) {
  if (k > r || r > n) throw InvalidArgument("J(n,r,k) needs 0 <= k <= r <= n");
  const std::uint64_t total = binomial_u64(n, r);
  std::vector<REdge> labels;
  labels.reserve(total);
  for (std::uint64_t rank = 0; rank < total; ++rank) labels.push_back(unrank_edge(EdgeId{rank}, n, r));
  return IntersectionGraph::from_labels(GraphKind::Johnson, n, r, k, std::move(labels));
}

IntersectionGraph disjointness_graph(const Hypergraph& g) {
  return IntersectionGraph::from_labels(GraphKind::Disjointness, g.n(), g.r(), 0, g.edges());
}

IntersectionGraph intersection_graph(const Hypergraph& g, Vertex k) {
  if (k == 0) return disjointness_graph(g);
  return IntersectionGraph::from_labels(GraphKind::Intersection, g.n(), g.r(), k, g.edges());
}

namespace {

std::vector<std::size_t> bfs_parents(const IntersectionGraph& g, std::size_t from) {
  constexpr auto kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(g.vertex_count(), kUnseen);
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : g.neighbors(u)) {
      if (parent[v] == kUnseen) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  return parent;
}

}  // namespace

bool is_connected(const IntersectionGraph& g) {
  if (g.vertex_count() == 0) return true;
  const auto parent = bfs_parents(g, 0);
  return std::none_of(parent.begin(), parent.end(), [](std::size_t p) { return p == static_cast<std::size_t>(-1); });
}

std::optional<std::vector<std::size_t>> shortest_path(const IntersectionGraph& g, std::size_t from, std::size_t to) {
  if (from >= g.vertex_count() || to >= g.vertex_count()) throw InvalidArgument("vertex out of range");
  const auto parent = bfs_parents(g, from);
  if (parent[to] == static_cast<std::size_t>(-1)) return std::nullopt;
  std::vector<std::size_t> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

void check_walk_args(const REdge& e, Vertex n, Vertex r) {
  if (e.size() != r) throw InvalidArgument("walk endpoint has wrong size");
  if (r > 0 && e.back() >= n) throw InvalidArgument("walk endpoint label out of range");
}

REdge make_edge(std::vector<Vertex> labels) {
  std::sort(labels.begin(), labels.end());
  return REdge(std::move(labels));
}

}  // namespace

std::vector<REdge> connecting_walk(const REdge& e, const REdge& f, Vertex n, Vertex r, Vertex k) {
  check_walk_args(e, n, r);
  check_walk_args(f, n, r);
  if (e == f) return {e};
  if (k >= r) throw InvalidArgument("J(n,r,r) has no edges; distinct endpoints cannot be joined");

  const auto common = intersection(e, f);
  const auto i = static_cast<Vertex>(common.size());

  if (i + 1 == r) {
    // Bridge h = first k shared labels plus r-k labels outside e ∪ f.
    std::vector<Vertex> h(common.begin(), common.begin() + k);
    for (Vertex x = 0; h.size() < r; ++x) {
      if (x >= n) throw ConstructionOutOfRange("bridge needs a label beyond n");
      if (!e.contains(x) && !f.contains(x)) h.push_back(x);
    }
    return {e, make_edge(std::move(h)), f};
  }

  // h keeps e ∩ f, one more label of e, and r-i-1 labels of f: |e∩h| = i+1, |f∩h| = r-1.
  const auto only_e = difference(e, f);
  const auto only_f = difference(f, e);
  std::vector<Vertex> h = common;
  h.push_back(only_e.front());
  h.insert(h.end(), only_f.begin(), only_f.begin() + (r - i - 1));
  const REdge mid = make_edge(std::move(h));

  auto walk = connecting_walk(e, mid, n, r, k);
  const auto tail = connecting_walk(mid, f, n, r, k);
  walk.insert(walk.end(), tail.begin() + 1, tail.end());
  return walk;
}

std::vector<REdge> connecting_walk_or_path(const REdge& e, const REdge& f, Vertex n, Vertex r, Vertex k) {
  try {
    return connecting_walk(e, f, n, r, k);
  } catch (const ConstructionOutOfRange&) {
    const auto graph = johnson_general(n, r, k);
    const auto path = shortest_path(graph, rank_edge(e, n).rank, rank_edge(f, n).rank);
    if (!path) throw InvalidArgument("endpoints lie in different components of J(n,r,k)");
    std::vector<REdge> walk;
    walk.reserve(path->size());
    for (std::size_t v : *path) walk.push_back(graph.label(v));
    return walk;
  }
}

std::vector<std::size_t> complement_isomorphism(Vertex n, Vertex r, Vertex k) {
  if (!(n >= r && r >= k) || n + k < 2 * r) throw InvalidArgument("complement map needs n >= r >= k and n-2r+k >= 0");
  const std::uint64_t total = binomial_u64(n, r);
  std::vector<std::size_t> map(total);
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    const REdge e = unrank_edge(EdgeId{rank}, n, r);
    std::vector<Vertex> rest;
    rest.reserve(n - r);
    for (Vertex x = 0; x < n; ++x) {
      if (!e.contains(x)) rest.push_back(x);
    }
    map[rank] = rank_subset(rest, n).rank;
  }
  return map;
}

bool is_isomorphism(const IntersectionGraph& a, const IntersectionGraph& b, const std::vector<std::size_t>& map) {
  const std::size_t count = a.vertex_count();
  if (b.vertex_count() != count || map.size() != count) return false;
  std::vector<char> hit(count, 0);
  for (std::size_t v : map) {
    if (v >= count || hit[v]) return false;
    hit[v] = 1;
  }
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v = u + 1; v < count; ++v) {
      if (a.adjacent(u, v) != b.adjacent(map[u], map[v])) return false;
    }
  }
  return true;
}

std::string to_edge_list_text(const IntersectionGraph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v : g.neighbors(u)) {
      if (u < v) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
  }
  return out.str();
}

std::string kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::Johnson:
      return "johnson";
    case GraphKind::Disjointness:
      return "disjointness";
    case GraphKind::Intersection:
      return "intersection";
    case GraphKind::Plain:
      return "plain";
  }
  return "plain";
}

}  // namespace hdecomp
