#pragma once

// Simple undirected graphs on vertices 0..n-1, stored as one adjacency
// bitset per vertex.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lightsout/zmod.hpp"

namespace lightsout {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

class Graph {
 public:
  static constexpr std::size_t kMaxOrder = 64;

  explicit Graph(std::size_t order = 0);
  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  /// Repeated edges collapse.
  Graph(std::size_t order, std::span<const Edge> edges);
  Graph(std::size_t order, std::initializer_list<Edge> edges);

  [[nodiscard]] std::size_t order() const noexcept { return adj_.size(); }
  [[nodiscard]] std::size_t size() const noexcept;

  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const noexcept { return (adj_[u] >> v) & 1U; }
  [[nodiscard]] std::uint64_t neighbors(Vertex v) const noexcept { return adj_[v]; }
  [[nodiscard]] std::size_t degree(Vertex v) const noexcept;
  [[nodiscard]] std::size_t max_degree() const noexcept;
  /// Non-increasing.
  [[nodiscard]] std::vector<std::size_t> degree_sequence() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Sorted (u < v) edge list.
  [[nodiscard]] std::vector<Edge> edges() const;
  /// Vertex sets of connected components, each sorted, ordered by least vertex.
  [[nodiscard]] std::vector<VertexSet> components() const;
  /// Induced subgraph; vertex vertices[i] becomes i.
  [[nodiscard]] Graph induced(std::span<const Vertex> vertices) const;
  /// Induced subgraph on the complement of `removed`, order preserved.
  [[nodiscard]] Graph without(std::span<const Vertex> removed) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::uint64_t> adj_;
};

[[nodiscard]] Graph complement(const Graph& g);
/// H's vertices are shifted up by g.order().
[[nodiscard]] Graph disjoint_union(const Graph& g, const Graph& h);
/// H ⊙ K1: vertex v of H gets a new pendant neighbour numbered order(H) + v.
[[nodiscard]] Graph corona_pendant(const Graph& h);

[[nodiscard]] Graph empty_graph(std::size_t n);
[[nodiscard]] Graph path_graph(std::size_t k);
[[nodiscard]] Graph cycle_graph(std::size_t k);
[[nodiscard]] Graph complete_graph(std::size_t n);
/// Perfect matching for even n; one uncovered vertex (n - 1) for odd n.
[[nodiscard]] Graph matching_graph(std::size_t n);
[[nodiscard]] Graph complete_bipartite(std::size_t a, std::size_t b);
[[nodiscard]] Graph star_graph(std::size_t leaves);

/// Named constructors: path<k>, cycle<k>, matching<n>, complete<n>, empty<n>
/// (also P<k>, C<k>, M<n>, K<n>), star (K13), K23, bowtie, house, G1..G8,
/// Gd9, Gd9prime, figure_d9_2. Letter-labelled drawings map a=0, b=1, ...
/// Throws std::invalid_argument for unknown names or bad parameters.
[[nodiscard]] Graph named_graph(std::string_view name);

[[nodiscard]] ZModMatrix neighborhood_matrix(const Graph& g, Modulus modulus);
[[nodiscard]] ZModMatrix adjacency_matrix(const Graph& g, Modulus modulus);

/// Pairs (i, j), i < j, whose rows or whose columns of M coincide.
[[nodiscard]] std::vector<Edge> find_twins(const ZModMatrix& m);

/// Witness for G ≅ H ⊙ K1: pendants[i] is the unique pendant attached to cores[i].
struct PendantPartition {
  VertexSet pendants;
  VertexSet cores;
};

/// Deterministic witness; in a P2 component the lower vertex is the pendant.
[[nodiscard]] std::optional<PendantPartition> pendant_partition(const Graph& g);
[[nodiscard]] bool is_pendant_graph(const Graph& g);

/// Degree-1 vertices.
[[nodiscard]] VertexSet pendant_vertices(const Graph& g);
/// True iff the component is a path (P1 included).
[[nodiscard]] bool is_path_component(const Graph& g, std::span<const Vertex> component);
/// True iff the component is a cycle (connected, 2-regular, order >= 3).
[[nodiscard]] bool is_cycle_component(const Graph& g, std::span<const Vertex> component);

/// Standard graph6 (header-less, n <= 62).
[[nodiscard]] std::string to_graph6(const Graph& g);
/// Throws std::invalid_argument on malformed input or n > 62.
[[nodiscard]] Graph from_graph6(std::string_view text);

/// "n: u-v, u-v, ..." (also accepts "n:u-v,u-v"); throws std::invalid_argument.
[[nodiscard]] Graph parse_edge_list(std::string_view text);
[[nodiscard]] std::string to_edge_list(const Graph& g);

}  // namespace lightsout
