#include "hdecomp/packing.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "hdecomp/matching.hpp"

namespace hdecomp {

bool validate_certificate(const Hypergraph& g, const PatternH& pattern, const PackingCertificate& cert) {
  std::vector<char> used(g.edge_count(), 0);
  auto claim = [&](const REdge& e) {
    const std::size_t idx = g.index_of(e);
    if (idx == g.edge_count() || used[idx]) return false;
    used[idx] = 1;
    return true;
  };
  for (const auto& copy : cert.copies) {
    if (!is_copy_of(pattern, copy)) return false;
    for (const auto& e : copy) {
      if (!claim(e)) return false;
    }
  }
  for (const auto& e : cert.leftover) {
    if (!claim(e)) return false;
  }
  return std::all_of(used.begin(), used.end(), [](char c) { return c != 0; });
}

namespace {

std::vector<std::uint64_t> edge_masks(const Hypergraph& g) {
  if (g.n() > 64) throw InvalidArgument("exact packing search supports at most 64 vertices");
  std::vector<std::uint64_t> masks;
  masks.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    std::uint64_t m = 0;
    for (Vertex v : e.vertices()) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  return masks;
}

}  // namespace

PackingCertificate certificate_from_cliques(const Hypergraph& g, const std::vector<std::vector<std::size_t>>& copies,
                                            bool optimal) {
  PackingCertificate cert;
  cert.optimal = optimal;
  std::vector<char> used(g.edge_count(), 0);
  for (const auto& copy : copies) {
    std::vector<REdge> edges;
    for (std::size_t idx : copy) {
      edges.push_back(g.edges()[idx]);
      used[idx] = 1;
    }
    cert.copies.push_back(std::move(edges));
  }
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
    if (!used[idx]) cert.leftover.push_back(g.edges()[idx]);
  }
  return cert;
}

namespace {

// Every size-`size` subset of the bits of `mask`.
std::vector<std::uint64_t> sub_masks(std::uint64_t mask, unsigned size) {
  std::vector<std::uint64_t> bits;
  for (std::uint64_t m = mask; m; m &= m - 1) bits.push_back(m & -m);
  std::vector<std::uint64_t> out;
  if (size > bits.size()) return out;
  std::vector<unsigned> pick(size);
  for (unsigned j = 0; j < size; ++j) pick[j] = j;
  while (true) {
    std::uint64_t s = 0;
    for (unsigned j : pick) s |= bits[j];
    out.push_back(s);
    int j = static_cast<int>(size) - 1;
    while (j >= 0 && pick[j] == bits.size() - size + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (unsigned t = j + 1; t < size; ++t) pick[t] = pick[t - 1] + 1;
  }
  return out;
}

class PackingSearch {
 public:
  PackingSearch(const Hypergraph& g, const PatternH& pattern, const SearchBudget& budget)
      : masks_(edge_masks(g)),
        petals_(pattern.edge_count()),
        core_(pattern.core_size()),
        tracker_(budget),
        state_(masks_.size(), 0),
        free_(masks_.size()),
        upper_(masks_.size() / petals_) {}

  void seed(std::vector<std::vector<std::size_t>> copies) {
    if (copies.size() > best_.size()) best_ = std::move(copies);
    reached_upper_ = best_.size() == upper_;
  }

  void run() {
    if (!reached_upper_) dfs(0);
  }

  bool optimal() const { return reached_upper_ || !tracker_.exhausted(); }
  const std::vector<std::vector<std::size_t>>& best() const { return best_; }

 private:
  void dfs(std::size_t pos) {
    if (reached_upper_ || !tracker_.tick()) return;
    while (pos < masks_.size() && state_[pos] != 0) ++pos;
    if (pos == masks_.size()) {
      if (current_.size() > best_.size()) {
        best_ = current_;
        reached_upper_ = best_.size() == upper_;
      }
      return;
    }
    if (current_.size() + free_ / petals_ <= best_.size()) return;

    for (std::uint64_t core : sub_masks(masks_[pos], core_)) {
      std::vector<std::size_t> candidates;
      for (std::size_t f = pos + 1; f < masks_.size(); ++f) {
        if (state_[f] == 0 && (masks_[f] & masks_[pos]) == core) candidates.push_back(f);
      }
      std::vector<std::size_t> chosen{pos};
      extend(pos, core, candidates, 0, chosen);
      if (reached_upper_ || tracker_.exhausted()) return;
    }

    state_[pos] = 2;
    --free_;
    dfs(pos + 1);
    ++free_;
    state_[pos] = 0;
  }

  // Grow `chosen` into a full copy from candidates[from..], petals meeting only in `core`.
  void extend(std::size_t pos, std::uint64_t core, const std::vector<std::size_t>& candidates, std::size_t from,
              std::vector<std::size_t>& chosen) {
    if (chosen.size() == petals_) {
      for (std::size_t idx : chosen) state_[idx] = 1;
      free_ -= petals_;
      current_.push_back(chosen);
      dfs(pos + 1);
      current_.pop_back();
      free_ += petals_;
      for (std::size_t idx : chosen) state_[idx] = 0;
      return;
    }
    for (std::size_t c = from; c < candidates.size(); ++c) {
      const std::size_t f = candidates[c];
      bool fits = true;
      for (std::size_t j = 1; j < chosen.size() && fits; ++j) fits = (masks_[chosen[j]] & masks_[f]) == core;
      if (!fits) continue;
      chosen.push_back(f);
      extend(pos, core, candidates, c + 1, chosen);
      chosen.pop_back();
      if (reached_upper_ || tracker_.exhausted()) return;
    }
  }

  std::vector<std::uint64_t> masks_;
  std::size_t petals_;
  unsigned core_;
  BudgetTracker tracker_;
  std::vector<std::uint8_t> state_;  // 0 free, 1 in a copy, 2 leftover
  std::size_t free_;
  std::size_t upper_;
  bool reached_upper_ = false;
  std::vector<std::vector<std::size_t>> current_;
  std::vector<std::vector<std::size_t>> best_;
};

void check_uniformity(const Hypergraph& g, const PatternH& pattern) {
  if (pattern.r() != g.r()) throw InvalidArgument("pattern uniformity differs from the hypergraph");
}

}  // namespace

PackingCertificate branch_and_bound_packing(const Hypergraph& g, const PatternH& pattern, const SearchBudget& budget,
                                            const std::optional<PackingCertificate>& seed) {
  check_uniformity(g, pattern);
  PackingSearch search(g, pattern, budget);
  if (seed) {
    std::vector<std::vector<std::size_t>> copies;
    for (const auto& copy : seed->copies) {
      std::vector<std::size_t> idx;
      for (const auto& e : copy) idx.push_back(g.index_of(e));
      std::sort(idx.begin(), idx.end());
      copies.push_back(std::move(idx));
    }
    search.seed(std::move(copies));
  }
  search.run();
  return certificate_from_cliques(g, search.best(), search.optimal());
}

PackingCertificate matching_packing(const Hypergraph& g, const PatternH& pattern) {
  check_uniformity(g, pattern);
  if (pattern.edge_count() != 2) throw InvalidArgument("matching route needs a two-edge pattern");
  const auto graph = intersection_graph(g, pattern.core_size());
  const auto m = max_matching(graph);
  std::vector<std::vector<std::size_t>> copies;
  copies.reserve(m.pairs.size());
  for (const auto& [u, v] : m.pairs) copies.push_back({u, v});
  return certificate_from_cliques(g, copies, true);
}

PackingCertificate max_edge_disjoint_copies(const Hypergraph& g, const PatternH& pattern,
                                            const SearchBudget& budget) {
  check_uniformity(g, pattern);
  if (pattern.edge_count() == 1) {
    std::vector<std::vector<std::size_t>> copies;
    for (std::size_t idx = 0; idx < g.edge_count(); ++idx) copies.push_back({idx});
    return certificate_from_cliques(g, copies, true);
  }
  if (pattern.edge_count() == 2) return matching_packing(g, pattern);
  if (pattern.core_size() == 0) {
    const std::size_t k = pattern.edge_count();
    const auto factor = kk_factor(disjointness_graph(g), k, budget);
    auto cert = certificate_from_cliques(g, factor.cliques, factor.cliques.size() == g.edge_count() / k);
    if (cert.optimal) return cert;
    return branch_and_bound_packing(g, pattern, budget, cert);
  }
  return branch_and_bound_packing(g, pattern, budget);
}

namespace {

class VertexSet {
 public:
  explicit VertexSet(std::size_t size = 0) : words_((size + 63) / 64, 0) {}

  void set(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  VertexSet operator&(const VertexSet& other) const {
    VertexSet out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
    return out;
  }

  // Clears every bit below v.
  void drop_below(std::size_t v) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::size_t lo = i * 64;
      if (lo + 64 <= v) {
        words_[i] = 0;
      } else if (lo < v) {
        words_[i] &= ~std::uint64_t{0} << (v - lo);
      }
    }
  }

  // Lowest set bit at or above `from`, or npos.
  std::size_t next(std::size_t from) const {
    for (std::size_t i = from >> 6; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      if (i == (from >> 6)) w &= ~std::uint64_t{0} << (from & 63);
      if (w) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
    }
    return npos;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint64_t> words_;
};

class CliqueFactorSearch {
 public:
  CliqueFactorSearch(const IntersectionGraph& g, std::size_t k, const SearchBudget& budget)
      : g_(g), k_(k), count_(g.vertex_count()), tracker_(budget), rows_(count_, VertexSet(count_)) {
    for (std::size_t v = 0; v < count_; ++v) {
      for (std::size_t w : g.neighbors(v)) rows_[v].set(w);
    }
  }

  // Greedy pass followed by repair; returns the clique packing reached.
  std::vector<std::vector<std::size_t>> heuristic() {
    greedy();
    repair();
    return cliques_;
  }

  // Maximum set of disjoint k-cliques inside `pool`; complete = search finished.
  std::vector<std::vector<std::size_t>> exact(const std::vector<std::size_t>& pool, bool& complete) {
    VertexSet available(count_);
    for (std::size_t v : pool) available.set(v);
    exact_best_.clear();
    exact_current_.clear();
    exact_upper_ = pool.size() / k_;
    exact_rec(available);
    complete = !tracker_.exhausted();
    return exact_best_;
  }

  bool exhausted() const { return tracker_.exhausted(); }

 private:
  // First k-clique (ascending members) containing v inside `allowed`.
  bool find_clique(std::size_t v, const VertexSet& allowed, std::vector<std::size_t>& clique) {
    clique = {v};
    return grow_first(rows_[v] & allowed, clique);
  }

  bool grow_first(const VertexSet& candidates, std::vector<std::size_t>& clique) {
    if (clique.size() == k_) return true;
    if (!tracker_.tick()) return false;
    if (candidates.count() < k_ - clique.size()) return false;
    for (std::size_t u = candidates.next(0); u != VertexSet::npos; u = candidates.next(u + 1)) {
      VertexSet rest = candidates & rows_[u];
      rest.drop_below(u + 1);
      clique.push_back(u);
      if (grow_first(rest, clique)) return true;
      clique.pop_back();
      if (tracker_.exhausted()) return false;
    }
    return false;
  }

  void greedy() {
    VertexSet unused(count_);
    for (std::size_t v = 0; v < count_; ++v) unused.set(v);
    std::size_t remaining = count_;
    while (remaining > 0 && !tracker_.exhausted()) {
      std::size_t pick = VertexSet::npos;
      std::size_t pick_degree = 0;
      for (std::size_t v = unused.next(0); v != VertexSet::npos; v = unused.next(v + 1)) {
        const std::size_t d = (rows_[v] & unused).count();
        if (pick == VertexSet::npos || d < pick_degree) {
          pick = v;
          pick_degree = d;
        }
      }
      std::vector<std::size_t> clique;
      if (find_clique(pick, unused, clique)) {
        std::sort(clique.begin(), clique.end());
        for (std::size_t v : clique) unused.reset(v);
        remaining -= k_;
        cliques_.push_back(std::move(clique));
      } else {
        unused.reset(pick);
        --remaining;
        residue_.push_back(pick);
      }
    }
    for (std::size_t v = unused.next(0); v != VertexSet::npos; v = unused.next(v + 1)) residue_.push_back(v);
  }

  // Re-solve the chosen cliques plus nearby residue vertices exactly; keep the result if it covers more.
  bool try_pool(const std::vector<std::size_t>& chosen) {
    std::vector<std::size_t> pool;
    VertexSet members(count_);
    for (std::size_t c : chosen) {
      for (std::size_t v : cliques_[c]) {
        pool.push_back(v);
        members.set(v);
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> ranked;
    for (std::size_t v : residue_) ranked.emplace_back((rows_[v] & members).count(), v);
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    const std::size_t cap = std::min(ranked.size(), 2 * k_);
    for (std::size_t j = 0; j < cap; ++j) pool.push_back(ranked[j].second);
    std::sort(pool.begin(), pool.end());

    bool complete = false;
    auto found = exact(pool, complete);
    if (found.size() <= chosen.size()) return false;

    std::vector<std::vector<std::size_t>> next;
    for (std::size_t c = 0; c < cliques_.size(); ++c) {
      if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) next.push_back(cliques_[c]);
    }
    for (auto& clique : found) next.push_back(std::move(clique));
    cliques_ = std::move(next);
    rebuild_residue();
    return true;
  }

  void rebuild_residue() {
    std::vector<char> covered(count_, 0);
    for (const auto& clique : cliques_) {
      for (std::size_t v : clique) covered[v] = 1;
    }
    residue_.clear();
    for (std::size_t v = 0; v < count_; ++v) {
      if (!covered[v]) residue_.push_back(v);
    }
  }

  // Swap a residue vertex into a clique it almost completes; the displaced vertex joins the residue.
  bool kick(std::mt19937_64& rng) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> moves;  // (residue index, clique, slot)
    for (std::size_t ri = 0; ri < residue_.size(); ++ri) {
      const std::size_t x = residue_[ri];
      for (std::size_t c = 0; c < cliques_.size(); ++c) {
        std::size_t missing = 0;
        std::size_t slot = 0;
        for (std::size_t s = 0; s < k_; ++s) {
          if (!rows_[x].test(cliques_[c][s])) {
            ++missing;
            slot = s;
          }
        }
        if (missing == 1) moves.emplace_back(ri, c, slot);
      }
    }
    if (moves.empty()) return false;
    const auto [ri, c, slot] = moves[rng() % moves.size()];
    std::swap(residue_[ri], cliques_[c][slot]);
    std::sort(cliques_[c].begin(), cliques_[c].end());
    return true;
  }

  void repair() {
    const std::size_t target = count_ % k_;
    std::mt19937_64 rng(0x5eed);
    std::size_t stalls = 0;
    const std::size_t max_stalls = 20 * count_ + 100;
    while (residue_.size() > target && !tracker_.exhausted() && stalls < max_stalls) {
      bool improved = false;
      for (std::size_t c = 0; c < cliques_.size() && !improved && !tracker_.exhausted(); ++c) {
        improved = try_pool({c});
      }
      for (std::size_t a = 0; a < cliques_.size() && !improved && !tracker_.exhausted(); ++a) {
        for (std::size_t b = a + 1; b < cliques_.size() && !improved && !tracker_.exhausted(); ++b) {
          improved = try_pool({a, b});
        }
      }
      if (cliques_.empty() && !improved) {
        bool complete = false;
        cliques_ = exact(residue_, complete);
        rebuild_residue();
        return;
      }
      if (improved) {
        stalls = 0;
      } else {
        ++stalls;
        if (!kick(rng)) return;
      }
    }
  }

  void exact_rec(VertexSet& available) {
    if (exact_best_.size() == exact_upper_ || !tracker_.tick()) return;
    const std::size_t v = available.next(0);
    if (v == VertexSet::npos) {
      if (exact_current_.size() > exact_best_.size()) exact_best_ = exact_current_;
      return;
    }
    if (exact_current_.size() + available.count() / k_ <= exact_best_.size()) return;

    std::vector<std::size_t> clique{v};
    VertexSet candidates = rows_[v] & available;
    candidates.drop_below(v + 1);
    for_each_clique(candidates, clique, [&](const std::vector<std::size_t>& found) {
      for (std::size_t u : found) available.reset(u);
      exact_current_.push_back(found);
      exact_rec(available);
      exact_current_.pop_back();
      for (std::size_t u : found) available.set(u);
      return exact_best_.size() != exact_upper_ && !tracker_.exhausted();
    });
    if (exact_best_.size() == exact_upper_ || tracker_.exhausted()) return;

    available.reset(v);
    exact_rec(available);
    available.set(v);
  }

  // Calls visit on every k-clique extending `clique` from `candidates`; visit returns false to stop.
  template <typename Visit>
  bool for_each_clique(const VertexSet& candidates, std::vector<std::size_t>& clique, Visit&& visit) {
    if (clique.size() == k_) return visit(clique);
    if (candidates.count() < k_ - clique.size()) return true;
    for (std::size_t u = candidates.next(0); u != VertexSet::npos; u = candidates.next(u + 1)) {
      VertexSet rest = candidates & rows_[u];
      rest.drop_below(u + 1);
      clique.push_back(u);
      const bool go_on = for_each_clique(rest, clique, visit);
      clique.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const IntersectionGraph& g_;
  std::size_t k_;
  std::size_t count_;
  BudgetTracker tracker_;
  std::vector<VertexSet> rows_;
  std::vector<std::vector<std::size_t>> cliques_;
  std::vector<std::size_t> residue_;
  std::vector<std::vector<std::size_t>> exact_best_;
  std::vector<std::vector<std::size_t>> exact_current_;
  std::size_t exact_upper_ = 0;
};

constexpr std::size_t kExactFactorLimit = 30;

}  // namespace

FactorResult kk_factor(const IntersectionGraph& g, std::size_t k, const SearchBudget& budget) {
  if (k == 0) throw InvalidArgument("clique size must be positive");
  const std::size_t target = g.vertex_count() / k;
  FactorResult result;
  if (k == 1) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) result.cliques.push_back({v});
  } else if (k == 2) {
    const auto m = max_matching(g);
    for (const auto& [u, v] : m.pairs) result.cliques.push_back({u, v});
    result.proven_absent = result.cliques.size() < target;
  } else {
    CliqueFactorSearch search(g, k, budget);
    result.cliques = search.heuristic();
    if (result.cliques.size() < target && g.vertex_count() <= kExactFactorLimit && !search.exhausted()) {
      std::vector<std::size_t> all(g.vertex_count());
      for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
      bool complete = false;
      auto best = search.exact(all, complete);
      if (best.size() > result.cliques.size()) result.cliques = std::move(best);
      result.proven_absent = complete && result.cliques.size() < target;
    }
  }
  std::sort(result.cliques.begin(), result.cliques.end());
  if (result.cliques.size() == target) {
    result.status = FactorStatus::Found;
  } else if (hajnal_szemeredi_certificate(g, k)) {
    result.status = FactorStatus::CertifiedExistsNotConstructed;
  } else {
    result.status = FactorStatus::NotFoundWithinBudget;
  }
  return result;
}

bool hajnal_szemeredi_certificate(const IntersectionGraph& g, std::size_t k) {
  if (k <= 1) return true;
  return k * g.min_degree() >= (k - 1) * g.vertex_count();
}

bool is_clique_packing(const IntersectionGraph& g, std::size_t k, const std::vector<std::vector<std::size_t>>& cliques) {
  std::vector<char> seen(g.vertex_count(), 0);
  for (const auto& clique : cliques) {
    if (clique.size() != k) return false;
    for (std::size_t a = 0; a < clique.size(); ++a) {
      if (clique[a] >= g.vertex_count() || seen[clique[a]]) return false;
      seen[clique[a]] = 1;
      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        if (!g.adjacent(clique[a], clique[b])) return false;
      }
    }
  }
  return true;
}

namespace {

void matching_number_rec(const std::vector<std::uint64_t>& masks, std::size_t r, std::uint64_t universe,
                         std::size_t pos, std::uint64_t used, std::size_t current, std::size_t& best) {
  const auto free_vertices = static_cast<std::size_t>(std::popcount(universe & ~used));
  if (current + std::min(masks.size() - pos, free_vertices / r) <= best) return;
  if (pos == masks.size()) {
    best = current;
    return;
  }
  if ((masks[pos] & used) == 0) {
    matching_number_rec(masks, r, universe, pos + 1, used | masks[pos], current + 1, best);
  }
  matching_number_rec(masks, r, universe, pos + 1, used, current, best);
}

}  // namespace

std::size_t matching_number(std::span<const REdge> edges) {
  std::vector<std::uint64_t> masks;
  for (const auto& e : edges) {
    std::uint64_t m = 0;
    for (Vertex v : e.vertices()) {
      if (v >= 64) throw InvalidArgument("matching number supports labels below 64");
      m |= std::uint64_t{1} << v;
    }
    masks.push_back(m);
  }
  if (masks.empty()) return 0;
  // Ascending masks are colex order.
  std::sort(masks.begin(), masks.end());
  std::uint64_t universe = 0;
  for (auto m : masks) universe |= m;
  const std::size_t r = std::max<std::size_t>(1, edges.front().size());
  std::size_t best = 0;
  matching_number_rec(masks, r, universe, 0, 0, 0, best);
  return best;
}

std::size_t matching_number(const Hypergraph& g) { return matching_number(std::span<const REdge>(g.edges())); }

std::string to_string(FactorStatus status) {
  switch (status) {
    case FactorStatus::Found:
      return "found";
    case FactorStatus::CertifiedExistsNotConstructed:
      return "certified-exists-not-constructed";
    case FactorStatus::NotFoundWithinBudget:
      return "not-found-within-budget";
  }
  return "not-found-within-budget";
}

}  // namespace hdecomp
