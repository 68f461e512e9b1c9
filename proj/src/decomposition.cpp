#include "hdecomp/decomposition.hpp"

#include <algorithm>

#include "hdecomp/matching.hpp"

namespace hdecomp {

std::size_t Decomposition::copy_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(parts.begin(), parts.end(), [](const Part& p) { return p.kind == Part::Kind::Copy; }));
}

bool validate_decomposition(const Hypergraph& g, const PatternH& pattern, const Decomposition& d) {
  std::vector<char> used(g.edge_count(), 0);
  for (const auto& part : d.parts) {
    if (part.kind == Part::Kind::Single) {
      if (part.edges.size() != 1) return false;
    } else if (!is_copy_of(pattern, part.edges)) {
      return false;
    }
    for (const auto& e : part.edges) {
      const std::size_t idx = g.index_of(e);
      if (idx == g.edge_count() || used[idx]) return false;
      used[idx] = 1;
    }
  }
  return std::all_of(used.begin(), used.end(), [](char c) { return c != 0; });
}

Decomposition decomposition_from_packing(const PatternH& pattern, const PackingCertificate& cert, Source source) {
  Decomposition d;
  d.source = source;
  for (const auto& copy : cert.copies) {
    if (pattern.edge_count() == 1) {
      for (const auto& e : copy) d.parts.push_back(Part::single(e));
    } else {
      d.parts.push_back(Part::copy(copy));
    }
  }
  for (const auto& e : cert.leftover) d.parts.push_back(Part::single(e));
  return d;
}

namespace {

PhiResult from_certificate(const Hypergraph& g, const PatternH& pattern, const PackingCertificate& cert,
                           Source source) {
  PhiResult result;
  const auto extra = static_cast<std::int64_t>(pattern.edge_count()) - 1;
  result.value = static_cast<std::int64_t>(g.edge_count()) - extra * static_cast<std::int64_t>(cert.value());
  result.exact = cert.optimal;
  result.source = source;
  result.decomposition = decomposition_from_packing(pattern, cert, source);
  return result;
}

}  // namespace

PhiResult phi(const Hypergraph& g, const PatternH& pattern, const SearchBudget& budget) {
  if (pattern.r() != g.r()) throw InvalidArgument("pattern uniformity differs from the hypergraph");
  const std::size_t petals = pattern.edge_count();
  if (petals <= 2) {
    return from_certificate(g, pattern, max_edge_disjoint_copies(g, pattern, budget), Source::Constructive);
  }
  if (pattern.core_size() != 0) {
    return from_certificate(g, pattern, branch_and_bound_packing(g, pattern, budget), Source::Oracle);
  }

  // k independent edges: a K_k-factor of L_G gives p_H(G) = ⌊e(G)/k⌋.
  const auto factor = kk_factor(disjointness_graph(g), petals, budget);
  const std::size_t target = g.edge_count() / petals;
  const auto partial = certificate_from_cliques(g, factor.cliques, factor.cliques.size() == target);

  PhiResult result;
  if (factor.status == FactorStatus::Found) {
    result = from_certificate(g, pattern, partial, Source::Constructive);
  } else if (factor.status == FactorStatus::CertifiedExistsNotConstructed) {
    result.value = static_cast<std::int64_t>(g.edge_count() - (petals - 1) * target);
    result.exact = true;
    result.source = Source::Formula;
  } else {
    result = from_certificate(g, pattern, branch_and_bound_packing(g, pattern, budget, partial), Source::Oracle);
  }
  result.factor_status = factor.status;
  return result;
}

PhiResult phi_oracle(const Hypergraph& g, const PatternH& pattern, const SearchBudget& budget) {
  return from_certificate(g, pattern, branch_and_bound_packing(g, pattern, budget), Source::Oracle);
}

PhiResult phi_two_edge_constructive(Vertex n, Vertex r, Vertex k) {
  if (r < 1 || k >= r || n < r) throw InvalidArgument("two-edge construction needs 0 <= k < r <= n");
  if (n + k < 2 * r) throw InvalidArgument("two-edge construction needs n >= 2r - k");
  const auto graph = johnson_general(n, r, k);
  const auto m = near_perfect_matching(graph);
  Decomposition d;
  d.source = Source::Constructive;
  for (const auto& [u, v] : m.pairs) d.parts.push_back(Part::copy({graph.label(u), graph.label(v)}));
  for (std::size_t v : m.exposed) d.parts.push_back(Part::single(graph.label(v)));
  PhiResult result;
  result.value = static_cast<std::int64_t>(d.size());
  result.exact = true;
  result.source = Source::Constructive;
  result.decomposition = std::move(d);
  return result;
}

BigInt phi_matching_formula(std::int64_t n, std::int64_t r, std::int64_t k) {
  if (k < 1) throw InvalidArgument("k must be positive");
  const BigInt total = binomial(static_cast<std::uint64_t>(std::max<std::int64_t>(n, 0)),
                                static_cast<std::uint64_t>(std::max<std::int64_t>(r, 0)));
  const BigInt floor = total / k;
  return (total % k == k - 1) ? floor + (k - 1) : floor + (k - 2);
}

BigInt phi_two_edge_formula(std::int64_t n, std::int64_t r) {
  const BigInt total = binomial(static_cast<std::uint64_t>(std::max<std::int64_t>(n, 0)),
                                static_cast<std::uint64_t>(std::max<std::int64_t>(r, 0)));
  return (total + 1) / 2;
}

std::string to_string(Source source) {
  switch (source) {
    case Source::Constructive:
      return "constructive";
    case Source::Formula:
      return "formula";
    case Source::Oracle:
      return "oracle";
  }
  return "constructive";
}

}  // namespace hdecomp
