#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "lightsout/reductions.hpp"
#include "oracle.hpp"

using namespace lightsout;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng() % 2 == 0) g.add_edge(u, v);
  return g;
}

Graph union_all(std::initializer_list<Graph> parts) {
  Graph out(0);
  for (const Graph& g : parts) out = disjoint_union(out, g);
  return out;
}

Graph copies(const Graph& g, std::size_t k) {
  Graph out(0);
  for (std::size_t i = 0; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

bool oracle_n_aw(const Graph& g, std::int64_t ell) {
  return std::gcd(oracle::cofactor_det(oracle::neighborhood_table(g), ell), ell) == 1;
}

}  // namespace

TEST_CASE("aw predicates agree with cofactor determinants") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      for (const std::int64_t ell : {2, 3, 4, 6}) {
        CHECK(is_n_aw(g, Modulus(ell)) == oracle_n_aw(g, ell));
      }
    }
  }
}

TEST_CASE("dominating vertex reduction") {
  for (std::int64_t ell = 2; ell <= 6; ++ell) {
    const Modulus m(ell);
    const auto m4 = dominating_reduction(matching_graph(4), m);
    CHECK(m4.predicted);
    CHECK(m4.agree());
    CHECK(*m4.transformed == complement(matching_graph(5)));
  }
  const auto c3 = dominating_reduction(cycle_graph(3), Modulus(6));
  CHECK_FALSE(c3.predicted);
  CHECK(c3.agree());
  const auto k1 = dominating_reduction(empty_graph(1), Modulus(2));
  CHECK_FALSE(k1.predicted);
  CHECK(*k1.transformed == complete_graph(2));
  CHECK(k1.agree());

  for (std::size_t n = 0; n <= 5; ++n)
    for (const Graph& g : oracle::all_graphs(n))
      for (const std::int64_t ell : {2, 3, 4, 5, 6}) CHECK(dominating_reduction(g, Modulus(ell)).agree());
}

TEST_CASE("P4 join") {
  const Graph h = p4_join(path_graph(2), VertexSet{0, 1});
  CHECK(h.order() == 6);
  CHECK(h.size() == 1 + 3 + 2);
  CHECK(h.adjacent(0, 2));
  CHECK(h.adjacent(1, 2));
  CHECK(p4_join(path_graph(2), VertexSet{}) == disjoint_union(path_graph(2), path_graph(4)));
  for (std::int64_t ell = 2; ell <= 6; ++ell) {
    CHECK(p4_replacement_equiv(path_graph(2), VertexSet{0, 1}, Modulus(ell)).agree());
    CHECK(p4_replacement_equiv(path_graph(2), VertexSet{}, Modulus(ell)).agree());
  }
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 1 + rng() % 4);
    VertexSet u;
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng() % 2 == 0) u.push_back(v);
    const std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 3);
    const auto out = p4_replacement_equiv(g, u, Modulus(ell));
    CHECK(out.agree());
    CHECK(out.predicted == oracle_n_aw(complement(*out.transformed), ell));
  }
}

TEST_CASE("path restrictions") {
  const auto a = path_restriction_violations(union_all({path_graph(3), path_graph(2)}));
  REQUIRE(a.size() == 1);
  CHECK(a[0].rule == PathRule::kOrderThreeModFour);
  CHECK(path_rules_forbid(a));
  const auto b = path_restriction_violations(union_all({empty_graph(2), path_graph(2)}));
  REQUIRE(b.size() == 2);
  CHECK(b[0].rule == PathRule::kRepeatedOneModFour);
  CHECK(path_rules_forbid(b));
  CHECK(path_restriction_violations(union_all({path_graph(4), path_graph(2)})).empty());
  const auto c = path_restriction_violations(path_graph(6));
  REQUIRE(c.size() == 1);
  CHECK(c[0].rule == PathRule::kLongPath);
  CHECK_FALSE(path_rules_forbid(c));

  // Every forbidding certificate is sound.
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& gbar : oracle::all_graphs(n))
      if (path_rules_forbid(path_restriction_violations(gbar)))
        for (const std::int64_t ell : {2, 3, 4, 5, 6}) CHECK_FALSE(is_n_aw(complement(gbar), Modulus(ell)));
}

TEST_CASE("pendant graph complements") {
  for (std::int64_t ell = 2; ell <= 12; ++ell) {
    const Modulus m(ell);
    for (std::size_t n = 2; n <= 12; n += 2) {
      const auto match = pendant_graph_naw(matching_graph(n), m);
      CHECK(match.agree());
      CHECK(match.predicted == (std::gcd(static_cast<std::int64_t>(n) - 1, ell) == 1));
      if (n >= 4) {
        const auto p4 = pendant_graph_naw(disjoint_union(path_graph(4), copies(path_graph(2), n / 2 - 2)), m);
        CHECK(p4.agree());
        CHECK(p4.predicted == (std::gcd(static_cast<std::int64_t>(n) - 3, ell) == 1));
      }
    }
  }
  CHECK_THROWS_AS((void)pendant_graph_naw(path_graph(3), Modulus(2)), std::invalid_argument);

  for (std::size_t h = 1; h <= 4; ++h)
    for (const Graph& core : oracle::all_graphs(h))
      for (const std::int64_t ell : {2, 3, 4, 5, 6, 7, 8, 9, 10})
        CHECK(pendant_graph_naw(corona_pendant(core), Modulus(ell)).agree());

  // Pendant forests with c components: gcd(2c - 1, ell).
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    Graph forest(1 + rng() % 6);
    for (Vertex v = 1; v < forest.order(); ++v)
      if (rng() % 3 != 0) forest.add_edge(v, rng() % v);
    const Graph g = corona_pendant(forest);
    const auto c = static_cast<std::int64_t>(g.components().size());
    const std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 11);
    const auto out = pendant_graph_naw(g, Modulus(ell));
    CHECK(out.agree());
    CHECK(out.predicted == (std::gcd(2 * c - 1, ell) == 1));
  }
}

TEST_CASE("A-AW graphs with a pendant vertex") {
  for (std::int64_t ell = 2; ell <= 9; ++ell) {
    const Modulus m(ell);
    const auto p4 = subsetjoinaw_check(path_graph(4), m);
    CHECK(p4.detail == "t = " + std::to_string(m.reduce(-2)));
    CHECK(p4.agree());
    if (ell == 2) CHECK(p4.predicted);
    const auto g1 = subsetjoinaw_check(disjoint_union(named_graph("G1"), path_graph(2)), m);
    CHECK(g1.detail == "t = " + std::to_string(m.reduce(-4)));
    CHECK(g1.predicted == (std::gcd(std::int64_t{3}, ell) == 1));
    CHECK(g1.agree());
  }
  CHECK_THROWS_AS((void)subsetjoinaw_check(path_graph(3), Modulus(2)), std::invalid_argument);
  CHECK_THROWS_AS((void)subsetjoinaw_check(cycle_graph(4), Modulus(3)), std::invalid_argument);

  for (std::size_t n = 2; n <= 6; ++n)
    for (const Graph& g : oracle::all_graphs(n))
      for (const std::int64_t ell : {2, 3, 4, 6}) {
        const Modulus m(ell);
        if (pendant_vertices(g).empty() || !is_a_aw(g, m)) continue;
        CHECK(subsetjoinaw_check(g, m).agree());
      }
}

TEST_CASE("pendant removal preserves A-AW") {
  for (std::int64_t ell = 2; ell <= 6; ++ell) {
    const Modulus m(ell);
    const auto p2 = pendantremove_dompen(path_graph(2), 0, m);
    CHECK(p2.predicted);
    CHECK(p2.agree());
    CHECK(pendantremove_dompen(path_graph(4), 0, m).predicted);
    const auto p3 = pendantremove_dompen(path_graph(3), 0, m);
    CHECK_FALSE(p3.predicted);
    CHECK(p3.agree());
    CHECK(p3.direct == oracle::always_winnable(oracle::adjacency_table(path_graph(3)), ell));
  }
  CHECK_THROWS_AS((void)pendantremove_dompen(path_graph(3), 1, Modulus(2)), std::invalid_argument);
  for (std::size_t n = 2; n <= 6; ++n)
    for (const Graph& g : oracle::all_graphs(n))
      for (const Vertex p : pendant_vertices(g))
        for (const std::int64_t ell : {2, 3, 4}) CHECK(pendantremove_dompen(g, p, Modulus(ell)).agree());
}

TEST_CASE("pendant removal conditions") {
  // A-AW: condition (a) is automatic and the check reduces to gcd(1 + t, ell).
  for (const std::int64_t ell : {2, 3, 4, 5, 6}) {
    const Modulus m(ell);
    const auto r = pendantremove_conditions(path_graph(4), 0, m);
    CHECK(r.condition_a);
    CHECK(r.r == 1);
    CHECK(r.null_totals == ToggleCoset::make(m, 0, 0));
    CHECK(r.agree());
    CHECK(r.predicted() == subsetjoinaw_check(path_graph(4), m).predicted);
  }
  // Two cycle components and a pendant edge: (a) fails for even ell.
  const Graph two_cycles = union_all({cycle_graph(3), cycle_graph(3), path_graph(2)});
  const auto tc = pendantremove_conditions(two_cycles, 6, Modulus(2));
  CHECK_FALSE(tc.condition_a);
  REQUIRE(tc.counterexample.has_value());
  CHECK_FALSE(exists_shift_winnable(two_cycles, *tc.counterexample, Modulus(2)).has_value());
  CHECK_FALSE(tc.direct);

  CHECK_THROWS_AS((void)pendantremove_conditions(cycle_graph(3), 0, Modulus(2)), std::invalid_argument);
  ConditionOptions tiny;
  tiny.exhaustive_limit = 8;
  CHECK_THROWS_AS((void)pendantremove_conditions(path_graph(4), 0, Modulus(2), tiny),
                  std::invalid_argument);
  tiny.sample_size = 20;
  tiny.seed = 3;
  const auto sampled = pendantremove_conditions(path_graph(4), 0, Modulus(2), tiny);
  CHECK(sampled.sampled);
  CHECK(sampled.agree());
}

TEST_CASE("dominating-vertex extremality filter") {
  // Complement P3 ∪ P1: the P1 vertex dominates in G.
  CHECK(extdom_filter(complement(union_all({path_graph(3), empty_graph(1)}))));
  CHECK_FALSE(extdom_filter(complement(union_all({path_graph(2), empty_graph(1)}))));
  CHECK_THROWS_AS((void)extdom_filter(cycle_graph(4)), std::invalid_argument);
}

TEST_CASE("component switch") {
  for (const std::int64_t ell : {2, 3, 4, 5, 6, 30}) {
    const Modulus m(ell);
    const Graph g = disjoint_union(named_graph("G1"), path_graph(2));
    const auto a = extswitch_valid(g, VertexSet{0, 1, 2, 3}, path_graph(4), m);
    CHECK(a.valid());
    CHECK(a.same_winnability);
    const Graph h = named_graph("G4");
    const auto b = extswitch_valid(h, VertexSet{0, 1, 2, 3, 4, 5},
                                   disjoint_union(path_graph(4), path_graph(2)), m);
    CHECK(b.valid());
    CHECK(b.same_winnability);
    const auto c = extswitch_valid(g, VertexSet{0, 1, 2, 3}, named_graph("G1"), m);
    CHECK_FALSE(c.valid());
    CHECK_FALSE(c.smaller_size);
  }
  CHECK_THROWS_AS((void)extswitch_valid(path_graph(4), VertexSet{0, 1}, path_graph(2), Modulus(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)extswitch_valid(cycle_graph(4), VertexSet{0, 1, 2, 3}, path_graph(4), Modulus(2)),
                  std::invalid_argument);
}

TEST_CASE("no-shift witnesses") {
  for (const std::int64_t ell : {2, 4, 6}) {
    const Modulus m(ell);
    const auto a = notswin_witness(disjoint_union(cycle_graph(4), path_graph(2)), m);
    REQUIRE(a.has_value());
    CHECK(a->verified);
    CHECK(a->labeling == Labeling{1, 0, 0, 0, 0, 0});
    const auto b = notswin_witness(disjoint_union(cycle_graph(3), cycle_graph(5)), m);
    REQUIRE(b.has_value());
    CHECK(b->verified);
    CHECK_FALSE(notswin_witness(disjoint_union(cycle_graph(5), path_graph(2)), m).has_value());
    for (std::size_t k = 3; k <= 9; ++k) CHECK_FALSE(is_a_aw(cycle_graph(k), m));
  }
  CHECK_THROWS_AS((void)notswin_witness(cycle_graph(4), Modulus(3)), std::invalid_argument);
}

TEST_CASE("twins are never always winnable") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const Graph& g : oracle::all_graphs(n))
      for (const std::int64_t ell : {2, 3, 4}) {
        const Modulus m(ell);
        for (const bool use_n : {true, false}) {
          const auto mat = use_n ? neighborhood_matrix(g, m) : adjacency_matrix(g, m);
          if (!find_twins(mat).empty()) CHECK_FALSE(is_invertible(mat));
        }
      }
}
