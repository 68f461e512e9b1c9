#include <numeric>
#include <random>

#include "doctest.h"
#include "hdecomp/bounds.hpp"
#include "hdecomp/io.hpp"
#include "hdecomp/packing.hpp"
#include "test_support.hpp"

using namespace hdecomp;

namespace {

IntersectionGraph complete_graph(std::size_t v) {
  std::vector<std::vector<std::size_t>> adj(v);
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) adj[a].push_back(b);
  }
  return IntersectionGraph::from_adjacency(adj);
}

Hypergraph star(Vertex n) {
  std::vector<REdge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back(REdge{0, v});
  return Hypergraph(n, 2, edges);
}

}  // namespace

TEST_CASE("G = H packs once") {
  const Hypergraph g(5, 3, {REdge{0, 1, 2}, REdge{2, 3, 4}});
  const auto pattern = PatternH::two_edge(3, 1);
  const auto cert = max_edge_disjoint_copies(g, pattern, SearchBudget{});
  CHECK(cert.value() == 1);
  CHECK(cert.leftover.empty());
  CHECK(cert.optimal);
  CHECK(validate_certificate(g, pattern, cert));
}

TEST_CASE("K_11^2 packs 27 pairs of independent edges") {
  const auto g = complete_hypergraph(11, 2);
  const auto pattern = PatternH::independent_edges(2, 2);
  const auto cert = max_edge_disjoint_copies(g, pattern, SearchBudget{});
  CHECK(cert.value() == 27);
  CHECK(cert.leftover.size() == 1);
  CHECK(cert.optimal);
  CHECK(validate_certificate(g, pattern, cert));
  CHECK(residual_check(g, cert, 2));
}

TEST_CASE("a star has no two independent edges") {
  const auto g = star(6);
  const auto cert = max_edge_disjoint_copies(g, PatternH::independent_edges(2, 2), SearchBudget{});
  CHECK(cert.value() == 0);
  CHECK(cert.leftover == g.edges());
  CHECK(cert.optimal);
}

TEST_CASE("certificate validator rejects broken certificates") {
  const auto g = complete_hypergraph(4, 2);
  const auto pattern = PatternH::independent_edges(2, 2);
  auto good = max_edge_disjoint_copies(g, pattern, SearchBudget{});
  REQUIRE(validate_certificate(g, pattern, good));

  auto missing = good;
  missing.leftover.clear();
  missing.copies.pop_back();
  CHECK_FALSE(validate_certificate(g, pattern, missing));

  auto overlapping = good;
  overlapping.leftover.push_back(overlapping.copies[0][0]);
  CHECK_FALSE(validate_certificate(g, pattern, overlapping));

  PackingCertificate wrong_shape;
  wrong_shape.copies = {{REdge{0, 1}, REdge{1, 2}}};
  for (const auto& e : g.edges()) {
    if (e != REdge{0, 1} && e != REdge{1, 2}) wrong_shape.leftover.push_back(e);
  }
  CHECK_FALSE(validate_certificate(g, pattern, wrong_shape));

  PackingCertificate foreign;
  foreign.copies = {{REdge{0, 1}, REdge{2, 4}}};
  CHECK_FALSE(validate_certificate(g, pattern, foreign));
}

TEST_CASE("branch and bound agrees with brute-force packing for e(G) <= 12") {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 240; ++trial) {
    const Vertex r = 2 + static_cast<Vertex>(trial % 2);
    const Vertex n = r == 2 ? 6 : 5;
    auto g = random_subgraph(complete_hypergraph(n, r), rng);
    if (g.edge_count() > 12) {
      std::vector<std::size_t> keep(12);
      std::iota(keep.begin(), keep.end(), 0);
      g = g.subgraph(keep);
    }
    std::vector<PatternH> patterns;
    for (Vertex k = 0; k < r; ++k) patterns.push_back(PatternH::two_edge(r, k));
    patterns.push_back(PatternH::independent_edges(r, 2));
    patterns.push_back(PatternH::common_intersection(r, 3, r == 2 ? 1 : 2));
    if (r == 2) patterns.push_back(PatternH::independent_edges(2, 3));
    for (const auto& pattern : patterns) {
      const auto plain = testing_support::plain_edges(g);
      const int expected = oracle::max_packing(plain, pattern.edge_count(), pattern.core_size());
      const auto bb = branch_and_bound_packing(g, pattern, SearchBudget{});
      REQUIRE(bb.optimal);
      REQUIRE(validate_certificate(g, pattern, bb));
      CHECK(static_cast<int>(bb.value()) == expected);
      const auto routed = max_edge_disjoint_copies(g, pattern, SearchBudget{});
      CHECK(routed.optimal);
      CHECK(validate_certificate(g, pattern, routed));
      CHECK(static_cast<int>(routed.value()) == expected);
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("branch and bound reports an exhausted budget") {
  const auto g = complete_hypergraph(7, 3);
  const auto pattern = PatternH::common_intersection(3, 3, 1);
  const auto cert = branch_and_bound_packing(g, pattern, SearchBudget::nodes(5));
  CHECK_FALSE(cert.optimal);
  CHECK(validate_certificate(g, pattern, cert));
}

TEST_CASE("matching_packing on two-edge patterns") {
  const auto g = complete_hypergraph(7, 3);
  const auto cert = matching_packing(g, PatternH::two_edge(3, 2));
  CHECK(cert.value() == 17);
  CHECK(cert.leftover.size() == 1);
  CHECK(validate_certificate(g, PatternH::two_edge(3, 2), cert));
}

TEST_CASE("kk_factor examples") {
  const auto petersen = johnson_general(5, 3, 1);
  const auto two = kk_factor(petersen, 2, SearchBudget{});
  CHECK(two.status == FactorStatus::Found);
  CHECK(two.cliques.size() == 5);
  CHECK(is_clique_packing(petersen, 2, two.cliques));

  const auto l11 = disjointness_graph(complete_hypergraph(11, 2));
  const auto m = kk_factor(l11, 2, SearchBudget{});
  CHECK(m.status == FactorStatus::Found);
  CHECK(m.cliques.size() == 27);

  const auto k9 = complete_graph(9);
  const auto tri = kk_factor(k9, 3, SearchBudget{});
  CHECK(tri.status == FactorStatus::Found);
  CHECK(tri.cliques.size() == 3);
  CHECK(is_clique_packing(k9, 3, tri.cliques));

  const auto single = kk_factor(petersen, 1, SearchBudget{});
  CHECK(single.cliques.size() == 10);
}

TEST_CASE("kk_factor proves absence on small graphs") {
  // a 6-cycle has no triangle at all
  const auto c6 = IntersectionGraph::from_adjacency({{1, 5}, {2}, {3}, {4}, {5}, {}});
  const auto result = kk_factor(c6, 3, SearchBudget{});
  CHECK(result.status == FactorStatus::NotFoundWithinBudget);
  CHECK(result.proven_absent);
}

TEST_CASE("kk_factor k=3 on disjointness graphs of dense 2-graphs") {
  for (Vertex n = 7; n <= 10; ++n) {
    const auto g = disjointness_graph(complete_hypergraph(n, 2));
    const auto result = kk_factor(g, 3, SearchBudget{});
    CHECK(is_clique_packing(g, 3, result.cliques));
    if (result.status == FactorStatus::Found) CHECK(result.cliques.size() == g.vertex_count() / 3);
  }
}

TEST_CASE("Hajnal-Szemeredi certificate") {
  for (std::size_t k = 1; k <= 6; ++k) CHECK(hajnal_szemeredi_certificate(complete_graph(k), k));
  CHECK(hajnal_szemeredi_certificate(disjointness_graph(complete_hypergraph(11, 2)), 2));
  CHECK_FALSE(hajnal_szemeredi_certificate(johnson_general(5, 3, 1), 2));
}

TEST_CASE("matching number") {
  CHECK(matching_number(complete_hypergraph(5, 2)) == 2);
  CHECK(matching_number(complete_hypergraph(7, 3)) == 2);
  CHECK(matching_number(Hypergraph(9, 3, {REdge{0, 1, 2}, REdge{3, 4, 5}, REdge{6, 7, 8}})) == 3);
  CHECK(matching_number(Hypergraph(4, 2)) == 0);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_subgraph(complete_hypergraph(7, 3), rng);
    CHECK(static_cast<int>(matching_number(g)) == oracle::matching_number(testing_support::plain_edges(g)));
  }
}

TEST_CASE("Frankl bound") {
  const auto a = frankl_bound(11, 2, 1);
  CHECK(a.value == 10);
  CHECK(a.applicable);
  CHECK(frankl_bound(9, 3, 0).value == 0);
  CHECK(frankl_bound(21, 2, 2).value == 39);
  CHECK_FALSE(frankl_bound(6, 3, 2).applicable);
}

TEST_CASE("Frankl bound is saturated by all edges meeting a fixed k-set") {
  for (Vertex r = 2; r <= 3; ++r) {
    for (Vertex k = 1; k <= 2; ++k) {
      for (Vertex n = (2 * k + 1) * r - k; n <= 8; ++n) {
        std::vector<REdge> edges;
        const auto all = complete_hypergraph(n, r);
        for (const auto& e : all.edges()) {
          if (e[0] < k) edges.push_back(e);
        }
        const Hypergraph g(n, r, edges);
        CHECK(BigInt(g.edge_count()) == frankl_bound(n, r, k).value);
        CHECK(matching_number(g) == k);
      }
    }
  }
}

TEST_CASE("residual check") {
  const auto g = complete_hypergraph(6, 2);
  PackingCertificate empty;
  empty.copies = {};
  CHECK(residual_check(Hypergraph(6, 2), empty, 2));

  // a leftover containing two disjoint edges is not H-free
  PackingCertificate bad;
  bad.leftover = {REdge{0, 1}, REdge{2, 3}};
  CHECK_FALSE(residual_check(g, bad, 2));

  // a star is H-free and its 10 edges sit exactly at the bound C(11,2) - C(10,2)
  PackingCertificate star_left;
  for (Vertex v = 1; v < 11; ++v) star_left.leftover.push_back(REdge{0, v});
  CHECK(residual_check(complete_hypergraph(11, 2), star_left, 2));
}

TEST_CASE("lower_bound_e") {
  CHECK(lower_bound_e(9, 3, 1) == binomial(9, 3));
  CHECK(lower_bound_e(11, 2, 2) == 45);
  CHECK(lower_bound_e(21, 2, 3) == 132);
  CHECK(lower_bound_e(6, 3, 4) < 0);
}

TEST_CASE("degree condition inequality") {
  CHECK(degree_condition_inequality(11, 2, 2));
  for (std::int64_t n = 2; n < 40; ++n) CHECK(degree_condition_inequality(n, 2, 1));
  for (std::int64_t k = 2; k <= 6; ++k) {
    for (std::int64_t r = 2; r <= 6; ++r) CHECK(degree_condition_inequality(n_zero(k, r), r, k));
  }
}

TEST_CASE("ratio inequality") {
  for (std::int64_t n = 3; n < 30; ++n) CHECK(ratio_inequality_check(n, 3, 0));
  CHECK(ratio_inequality_check(11, 2, 2));
  CHECK_THROWS_AS(ratio_inequality_check(3, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(ratio_inequality_check(10, 2, 3), InvalidArgument);
}

TEST_CASE("n_zero") {
  CHECK(n_zero(2, 2) == 11);
  CHECK(n_zero(3, 2) == 21);
  for (std::int64_t r = 2; r <= 8; ++r) CHECK(n_zero(1, r) == r * (r - 1) + 2 * r - 1);
}

TEST_CASE("dense graphs satisfy the Hajnal-Szemeredi condition on L_G") {
  // e(G) >= lower_bound_e and n >= n0 force k·δ(L_G) >= (k-1)·e(G)
  std::mt19937_64 rng(23);
  for (Vertex n = 11; n <= 14; ++n) {
    const auto all = complete_hypergraph(n, 2);
    const auto bound = static_cast<std::size_t>(lower_bound_e(n, 2, 2));
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<REdge> removed;
      const std::size_t drop = rng() % (all.edge_count() - bound + 1);
      std::vector<std::size_t> order(all.edge_count());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      for (std::size_t j = 0; j < drop; ++j) removed.push_back(all.edges()[order[j]]);
      const auto g = all.without(removed);
      REQUIRE(g.edge_count() >= bound);
      CHECK(hajnal_szemeredi_certificate(disjointness_graph(g), 2));
    }
  }
}

TEST_CASE("certificate JSON round trip") {
  const auto g = complete_hypergraph(6, 2);
  const auto cert = max_edge_disjoint_copies(g, PatternH::independent_edges(2, 2), SearchBudget{});
  const auto text = to_json(cert).dump();
  const auto back = certificate_from_json(Json::parse(text));
  CHECK(back.copies == cert.copies);
  CHECK(back.leftover == cert.leftover);
  CHECK(back.optimal == cert.optimal);
  CHECK(to_json(back).dump() == text);
  CHECK(Json::parse(text)["value"] == cert.value());
}

TEST_CASE("certificate_from_cliques") {
  const auto g = complete_hypergraph(4, 2);
  // colex: 01 02 12 03 13 23
  const auto cert = certificate_from_cliques(g, {{0, 5}, {1, 4}}, true);
  CHECK(cert.value() == 2);
  CHECK(cert.leftover == std::vector<REdge>{REdge{1, 2}, REdge{0, 3}});
  CHECK(validate_certificate(g, PatternH::independent_edges(2, 2), cert));
}
