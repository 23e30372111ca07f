#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "lightsout/toggling.hpp"
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

ZModMatrix random_matrix(std::mt19937_64& rng, std::size_t n, std::int64_t ell) {
  ZModMatrix m(n, n, Modulus(ell));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<std::int64_t>(rng() % ell));
  return m;
}

VertexSet random_subset(std::mt19937_64& rng, std::size_t n) {
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (rng() % 2 == 0) out.push_back(v);
  return out;
}

VertexSet all_vertices(std::size_t n) {
  VertexSet out(n);
  std::iota(out.begin(), out.end(), Vertex{0});
  return out;
}

std::set<std::int64_t> as_set(const ToggleCoset& c) {
  const auto m = c.members();
  return {m.begin(), m.end()};
}

/// Random forest with every component a tree on >= 1 vertex.
Graph random_forest(std::mt19937_64& rng, std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v)
    if (rng() % 4 != 0) g.add_edge(v, rng() % v);
  return g;
}

}  // namespace

TEST_CASE("coset basics") {
  const Modulus six(6);
  const auto c = ToggleCoset::make(six, 5, 4);
  CHECK(c.generator == 2);
  CHECK(c.base == 1);
  CHECK(c.members() == std::vector<Residue>{1, 3, 5});
  CHECK(c.contains(-1));
  CHECK_FALSE(c.contains(2));
  CHECK(c.to_string() == "1 + 2Z");
  CHECK(ToggleCoset::make(six, 2, 6).to_string() == "{2}");
  CHECK(ToggleCoset::none(six).to_string() == "{}");
  CHECK(ToggleCoset::none(six).size() == 0);
}

TEST_CASE("toggling number examples") {
  for (std::int64_t ell = 2; ell <= 8; ++ell) {
    const Modulus m(ell);
    CHECK(toggling_numbers(ZModMatrix::identity(3, m), all_vertices(3), 0) ==
          ToggleCoset::make(m, 0, 0));
    // P4 is a pendant graph with n = 4, m = 3.
    CHECK(toggling_numbers(adjacency_matrix(path_graph(4), m), all_vertices(4), 1) ==
          ToggleCoset::make(m, -2, 0));
  }
  // N(K2) over Z_4, labeling 1 on both vertices: x1 + x2 = 3 is forced.
  const Modulus four(4);
  const auto k2 = neighborhood_matrix(path_graph(2), four);
  const auto t = toggling_numbers(k2, all_vertices(2), 1);
  CHECK(as_set(t) == oracle::toggle_set(oracle::to_table(k2), {0, 1}, 1, 4));
  CHECK(as_set(t) == std::set<std::int64_t>{3});
  CHECK(minimal_nonempty_r(k2, all_vertices(2)) == 1);
  CHECK(minimal_nonempty_r(ZModMatrix::identity(2, four), all_vertices(2)) == 1);
}

TEST_CASE("toggling numbers equal brute force") {
  std::mt19937_64 rng(31);
  for (std::int64_t ell = 2; ell <= 6; ++ell) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + rng() % (ell <= 4 ? 4 : 3);
      const auto m = random_matrix(rng, n, ell);
      const auto u = random_subset(rng, n);
      const auto table = oracle::to_table(m);
      const LinearSystem system(m);
      const Residue r_min = minimal_nonempty_r(system, u);
      CHECK(ell % (r_min == 0 ? ell : r_min) == 0);
      const auto zero = toggling_numbers(system, u, 0);
      for (Residue r = 0; r < ell; ++r) {
        const auto got = toggling_numbers(system, u, r);
        const auto brute = oracle::toggle_set(table, u, r, ell);
        CHECK(as_set(got) == brute);
        // Nonempty exactly on the multiples of r_min.
        const bool expect_nonempty = r_min == 0 ? r == 0 : r % r_min == 0;
        CHECK(!got.empty == expect_nonempty);
        // Each nonempty set is a coset of T(0), which is closed under negation.
        for (const Residue a : brute)
          for (const Residue b : brute) CHECK(zero.contains(a - b));
      }
      for (const Residue q : zero.members()) CHECK(zero.contains(-q));
    }
  }
}

TEST_CASE("composition over components") {
  const Modulus m(10);
  const auto a = ToggleCoset::make(m, 7, 0);
  const auto z = ToggleCoset::make(m, 0, 0);
  const std::vector<ToggleCoset> az{a, z};
  CHECK(compose_components(az) == a);
  const std::vector<ToggleCoset> with_empty{a, ToggleCoset::none(m)};
  CHECK(compose_components(with_empty).empty);
  const std::vector<ToggleCoset> mixed{a, ToggleCoset::make(Modulus(5), 0, 0)};
  CHECK_THROWS_AS((void)compose_components(mixed), std::invalid_argument);

  const auto p4 = toggling_numbers(adjacency_matrix(path_graph(4), m), all_vertices(4), 1);
  const auto p2 = toggling_numbers(adjacency_matrix(path_graph(2), m), all_vertices(2), 1);
  const std::vector<ToggleCoset> parts{p4, p2};
  CHECK(compose_components(parts) == ToggleCoset::make(m, -4, 0));
  CHECK(toggling_numbers(adjacency_matrix(disjoint_union(path_graph(4), path_graph(2)), m),
                         all_vertices(6), 1) == ToggleCoset::make(m, -4, 0));

  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 80; ++trial) {
    const std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 5);
    const Modulus mod(ell);
    const Graph g = random_graph(rng, 1 + rng() % 6);
    const bool use_n = rng() % 2 == 0;
    const auto mat = [&](const Graph& x) {
      return use_n ? neighborhood_matrix(x, mod) : adjacency_matrix(x, mod);
    };
    const auto u = random_subset(rng, g.order());
    const Residue r = static_cast<Residue>(rng() % ell);
    std::vector<ToggleCoset> pieces;
    for (const VertexSet& comp : g.components()) {
      VertexSet local;
      for (Vertex i = 0; i < comp.size(); ++i)
        if (std::find(u.begin(), u.end(), comp[i]) != u.end()) local.push_back(i);
      pieces.push_back(toggling_numbers(mat(g.induced(comp)), local, r));
    }
    const auto direct = toggling_numbers(mat(g), u, r);
    CHECK(compose_components(pieces) == direct);
    if (g.order() <= 4 && ell <= 4) {
      CHECK(as_set(direct) == oracle::toggle_set(use_n ? oracle::neighborhood_table(g)
                                                       : oracle::adjacency_table(g),
                                                 u, r, ell));
    }
  }
}

TEST_CASE("pendant graphs have T(1) = {2(m - n)}") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph h = random_graph(rng, 1 + rng() % 6);
    const Graph g = corona_pendant(h);
    const std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 7);
    const Modulus m(ell);
    const auto n = static_cast<std::int64_t>(g.order());
    const auto size = static_cast<std::int64_t>(g.size());
    CHECK(is_invertible(adjacency_matrix(g, m)));
    CHECK(toggling_numbers(adjacency_matrix(g, m), all_vertices(g.order()), 1) ==
          ToggleCoset::make(m, 2 * (size - n), 0));
  }
}

TEST_CASE("pendant forests have T(1) = {-2c}") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = corona_pendant(random_forest(rng, 1 + rng() % 6));
    const std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 7);
    const Modulus m(ell);
    const auto c = static_cast<std::int64_t>(g.components().size());
    CHECK(toggling_numbers(adjacency_matrix(g, m), all_vertices(g.order()), 1) ==
          ToggleCoset::make(m, -2 * c, 0));
  }
}

TEST_CASE("pendant transfer") {
  for (const std::int64_t ell : {2, 3, 4, 5, 6}) {
    const Modulus m(ell);
    for (Residue s = 0; s < ell; ++s) {
      const auto p4 = noU_transfer(path_graph(4), 0, s, m);
      CHECK(p4.holds());
      CHECK(as_set(p4.whole) ==
            oracle::toggle_set(oracle::adjacency_table(path_graph(4)), {0, 1, 2, 3}, s, ell));
    }
    const auto p2 = noU_transfer(path_graph(2), 0, 0, m);
    CHECK(p2.whole == ToggleCoset::make(m, 0, 0));
    CHECK(p2.holds());
  }
  CHECK_THROWS_AS((void)noU_transfer(path_graph(3), 1, 0, Modulus(2)), std::invalid_argument);

  std::mt19937_64 rng(47);
  int tested = 0;
  while (tested < 50) {
    const Graph g = random_graph(rng, 2 + rng() % 5);
    const auto pend = pendant_vertices(g);
    if (pend.empty()) continue;
    ++tested;
    const std::int64_t ell = rng() % 2 == 0 ? 2 : 4;
    const Modulus m(ell);
    const Vertex p = pend[rng() % pend.size()];
    const Residue s = static_cast<Residue>(rng() % ell);
    const auto t = noU_transfer(g, p, s, m);
    CHECK(t.holds());
    CHECK(as_set(t.whole) ==
          oracle::toggle_set(oracle::adjacency_table(g), all_vertices(g.order()), s, ell));
    Labeling pi(g.order());
    for (auto& x : pi) x = static_cast<Residue>(rng() % ell);
    const auto lt = pendant_labeling_transfer(g, p, pi, m);
    CHECK(lt.holds());
    CHECK(as_set(lt.whole) ==
          oracle::toggle_set_for(oracle::adjacency_table(g), all_vertices(g.order()), pi, ell));
  }
}
