#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lightsout/game.hpp"
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

Labeling random_labeling(std::mt19937_64& rng, std::size_t n, std::int64_t ell) {
  Labeling out(n);
  for (auto& v : out) v = static_cast<Residue>(rng() % ell);
  return out;
}

}  // namespace

TEST_CASE("apply toggles") {
  const Modulus two(2);
  const auto n3 = neighborhood_matrix(path_graph(3), two);
  CHECK(apply_toggles(n3, Labeling{1, 0, 1}, ToggleVector{0, 0, 0}) == Labeling{1, 0, 1});
  CHECK(apply_toggles(n3, Labeling{0, 0, 0}, ToggleVector{0, 1, 0}) == Labeling{1, 1, 1});
  CHECK_THROWS_AS((void)apply_toggles(n3, Labeling{0, 0}, ToggleVector{0, 1, 0}),
                  std::invalid_argument);

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 7);
    const Modulus m(ell);
    const Graph g = random_graph(rng, 1 + rng() % 6);
    const auto a = adjacency_matrix(g, m);
    const auto pi = random_labeling(rng, g.order(), ell);
    const auto x1 = random_labeling(rng, g.order(), ell);
    const auto x2 = random_labeling(rng, g.order(), ell);
    ToggleVector sum(g.order());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = m.add(x1[i], x2[i]);
    CHECK(apply_toggles(a, pi, sum) == apply_toggles(a, apply_toggles(a, pi, x1), x2));
  }
}

TEST_CASE("winnable examples") {
  for (std::int64_t ell = 2; ell <= 6; ++ell) {
    const Modulus m(ell);
    const auto n2 = neighborhood_matrix(path_graph(2), m);
    CHECK(winnable(n2, Labeling{0, 0}) == ToggleVector{0, 0});
    CHECK_FALSE(winnable(n2, Labeling{1, 0}).has_value());
    const auto n4 = neighborhood_matrix(path_graph(4), m);
    CHECK(is_always_winnable(n4));
    oracle::for_each_vector(4, ell, [&](const oracle::Vec& pi) {
      const auto x = winnable(n4, pi);
      REQUIRE(x.has_value());
      CHECK(apply_toggles(n4, pi, *x) == Labeling(4, 0));
    });
  }
}

TEST_CASE("always winnable examples") {
  for (std::int64_t ell = 2; ell <= 6; ++ell) {
    const Modulus m(ell);
    for (std::size_t n = 2; n <= 5; ++n)
      CHECK_FALSE(is_always_winnable(neighborhood_matrix(complete_graph(n), m)));
    CHECK(is_always_winnable(neighborhood_matrix(complement(matching_graph(5)), m)));
    CHECK(is_always_winnable(adjacency_matrix(cycle_graph(3), m)) == (ell % 2 == 1));
  }
}

TEST_CASE("always winnable agrees with brute force for n <= 3, ell <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      for (std::int64_t ell = 2; ell <= 3; ++ell) {
        const Modulus m(ell);
        CHECK(is_always_winnable(neighborhood_matrix(g, m)) ==
              oracle::always_winnable(oracle::neighborhood_table(g), ell));
        CHECK(is_always_winnable(adjacency_matrix(g, m)) ==
              oracle::always_winnable(oracle::adjacency_table(g), ell));
      }
    }
  }
}

TEST_CASE("winnable is componentwise") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 5);
    const Modulus m(ell);
    const Graph g = random_graph(rng, 1 + rng() % 4);
    const Graph h = random_graph(rng, 1 + rng() % 4);
    const Graph gh = disjoint_union(g, h);
    const auto pi = random_labeling(rng, gh.order(), ell);
    const Labeling pg(pi.begin(), pi.begin() + static_cast<std::ptrdiff_t>(g.order()));
    const Labeling ph(pi.begin() + static_cast<std::ptrdiff_t>(g.order()), pi.end());
    for (const bool use_n : {true, false}) {
      const auto mat = [&](const Graph& x) {
        return use_n ? neighborhood_matrix(x, m) : adjacency_matrix(x, m);
      };
      const bool whole = winnable(mat(gh), pi).has_value();
      const bool parts = winnable(mat(g), pg).has_value() && winnable(mat(h), ph).has_value();
      CHECK(whole == parts);
    }
  }
}

TEST_CASE("shift labeling") {
  const Modulus five(5);
  const Labeling pi{1, 2, 3};
  CHECK(shift_labeling(pi, VertexSet{}, 4, five) == pi);
  CHECK(shift_labeling(Labeling{0, 0, 0}, 1, five) == Labeling{1, 1, 1});
  const VertexSet u{0, 2};
  CHECK(shift_labeling(shift_labeling(pi, u, 2, five), u, 3, five) == pi);
  CHECK(shift_labeling(pi, u, 2, five) == Labeling{3, 2, 0});
  CHECK_THROWS_AS((void)shift_labeling(pi, VertexSet{3}, 1, five), std::invalid_argument);
}

TEST_CASE("lambda labelings") {
  CHECK(lambda_labeling(4, 0, 0, Modulus(4)) == Labeling(4, 0));
  CHECK(lambda_labeling(4, 1, 0, Modulus(4)) == Labeling{1, 0, 0, 0});
  CHECK(lambda_labeling(5, 2, 3, Modulus(4)) == Labeling{2, 3, 0, 0, 0});
  CHECK_THROWS_AS((void)lambda_labeling(2, 0, 0, Modulus(4)), std::invalid_argument);
}

TEST_CASE("cycle closed forms") {
  CHECK(cycle_lambda_winnable(4, 0, 0, Modulus(2)));
  CHECK_FALSE(cycle_lambda_winnable(4, 1, 0, Modulus(2)));
  CHECK(cycle_lambda_winnable(5, 1, 1, Modulus(2)));
  CHECK(cycle_lambda_winnable(6, 2, 0, Modulus(4)));
  CHECK_FALSE(cycle_lambda_winnable(6, 1, 1, Modulus(4)));
  CHECK_THROWS_AS((void)cycle_lambda_winnable(5, 0, 0, Modulus(3)), std::invalid_argument);

  const Modulus four(4);
  CHECK(cycle_shift_canonical(8, 1, 2, 3, four) == std::pair<Residue, Residue>{1, 2});
  CHECK(cycle_shift_canonical(6, 1, 1, 2, four) == std::pair<Residue, Residue>{3, 3});
  for (std::size_t k = 3; k <= 9; ++k)
    CHECK(cycle_shift_canonical(k, 1, 3, 0, four) == std::pair<Residue, Residue>{1, 3});
  CHECK_THROWS_AS((void)cycle_shift_canonical(5, 0, 0, 1, Modulus(5)), std::invalid_argument);
}

TEST_CASE("shift winnability") {
  for (const std::int64_t ell : {2, 4, 6}) {
    const Modulus m(ell);
    // P2 is A-AW, so s = 0 always works.
    CHECK(exists_shift_winnable(path_graph(2), Labeling{1, 0}, m) == Residue{0});
    CHECK_FALSE(exists_shift_winnable(cycle_graph(4), lambda_labeling(4, 1, 0, m), m).has_value());
    const Graph c3c5 = disjoint_union(cycle_graph(3), cycle_graph(5));
    Labeling pi(8, 0);
    pi[0] = 1;
    CHECK_FALSE(exists_shift_winnable(c3c5, pi, m).has_value());
  }
  // ell odd: A(C3) invertible.
  CHECK(exists_shift_winnable(cycle_graph(3), Labeling{1, 2, 0}, Modulus(3)) == Residue{0});
}
