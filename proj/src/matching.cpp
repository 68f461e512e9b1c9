#include "hdecomp/matching.hpp"

#include <deque>
#include <string>

namespace hdecomp {

namespace {

constexpr int kNone = -1;

class BlossomSearch {
 public:
  explicit BlossomSearch(const IntersectionGraph& g)
      : g_(g),
        count_(static_cast<int>(g.vertex_count())),
        mate_(count_, kNone),
        parent_(count_),
        base_(count_),
        in_tree_(count_),
        in_blossom_(count_),
        lca_mark_(count_) {}

  std::vector<int> run() {
    for (int v = 0; v < count_; ++v) {
      if (mate_[v] != kNone) continue;
      for (std::size_t w : g_.neighbors(v)) {
        if (mate_[w] == kNone) {
          mate_[v] = static_cast<int>(w);
          mate_[w] = v;
          break;
        }
      }
    }
    for (int root = 0; root < count_; ++root) {
      if (mate_[root] != kNone) continue;
      int v = find_augmenting_path(root);
      while (v != kNone) {
        const int pv = parent_[v];
        const int next = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = next;
      }
    }
    return mate_;
  }

 private:
  int lowest_common_ancestor(int a, int b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
    while (true) {
      a = base_[a];
      lca_mark_[a] = 1;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (lca_mark_[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int blossom_base, int child) {
    while (base_[v] != blossom_base) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (int i = 0; i < count_; ++i) base_[i] = i;
    in_tree_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (std::size_t wi : g_.neighbors(v)) {
        const int w = static_cast<int>(wi);
        if (base_[v] == base_[w] || mate_[v] == w) continue;
        if (w == root || (mate_[w] != kNone && parent_[mate_[w]] != kNone)) {
          // Odd cycle: contract the blossom onto its base.
          const int blossom_base = lowest_common_ancestor(v, w);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, blossom_base, w);
          mark_path(w, blossom_base, v);
          for (int i = 0; i < count_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = blossom_base;
              if (!in_tree_[i]) {
                in_tree_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[w] == kNone) {
          parent_[w] = v;
          if (mate_[w] == kNone) return w;
          in_tree_[mate_[w]] = 1;
          queue.push_back(mate_[w]);
        }
      }
    }
    return kNone;
  }

  const IntersectionGraph& g_;
  int count_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
  std::vector<char> lca_mark_;
};

}  // namespace

Matching max_matching(const IntersectionGraph& g) {
  const auto mate = BlossomSearch(g).run();
  Matching m;
  for (std::size_t v = 0; v < mate.size(); ++v) {
    if (mate[v] == kNone) {
      m.exposed.push_back(v);
    } else if (static_cast<std::size_t>(mate[v]) > v) {
      m.pairs.emplace_back(v, static_cast<std::size_t>(mate[v]));
    }
  }
  return m;
}

Matching near_perfect_matching(const IntersectionGraph& g) {
  auto m = max_matching(g);
  if (m.exposed.size() > 1) {
    throw TheoryViolation("maximum matching leaves " + std::to_string(m.exposed.size()) +
                          " vertices exposed; graph is not connected vertex-transitive");
  }
  return m;
}

bool is_valid_matching(const IntersectionGraph& g, const Matching& m) {
  std::vector<char> seen(g.vertex_count(), 0);
  for (const auto& [u, v] : m.pairs) {
    if (u >= g.vertex_count() || v >= g.vertex_count() || u == v) return false;
    if (seen[u] || seen[v] || !g.adjacent(u, v)) return false;
    seen[u] = seen[v] = 1;
  }
  std::vector<char> exposed(g.vertex_count(), 0);
  for (std::size_t v : m.exposed) {
    if (v >= g.vertex_count() || seen[v] || exposed[v]) return false;
    exposed[v] = 1;
  }
  return m.exposed.size() + 2 * m.pairs.size() == g.vertex_count();
}

}  // namespace hdecomp
