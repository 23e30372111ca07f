#include "lightsout/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <stdexcept>
#include <string>

namespace lightsout {

Graph::Graph(std::size_t order) : adj_(order, 0) {
  if (order > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(order) + " exceeds 64");
  }
}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : Graph(order) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

Graph::Graph(std::size_t order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(order()));
  }
}

std::size_t Graph::size() const noexcept {
  std::size_t twice = 0;
  for (const std::uint64_t row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

std::size_t Graph::degree(Vertex v) const noexcept {
  return static_cast<std::size_t>(std::popcount(adj_[v]));
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> out(order());
  for (Vertex v = 0; v < order(); ++v) out[v] = degree(v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = u + 1; v < order(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  std::uint64_t seen = 0;
  for (Vertex start = 0; start < order(); ++start) {
    if ((seen >> start) & 1U) continue;
    std::uint64_t comp = std::uint64_t{1} << start;
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj_[std::countr_zero(f)];
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    VertexSet vs;
    for (std::uint64_t c = comp; c != 0; c &= c - 1) vs.push_back(std::countr_zero(c));
    out.push_back(std::move(vs));
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
  }
  return out;
}

Graph Graph::without(std::span<const Vertex> removed) const {
  VertexSet keep;
  for (Vertex v = 0; v < order(); ++v)
    if (std::find(removed.begin(), removed.end(), v) == removed.end()) keep.push_back(v);
  return induced(keep);
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) out.add_edge(u + g.order(), v + g.order());
  return out;
}

Graph corona_pendant(const Graph& h) {
  const std::size_t n = h.order();
  Graph out = disjoint_union(h, empty_graph(n));
  for (Vertex v = 0; v < n; ++v) out.add_edge(v, n + v);
  return out;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph path_graph(std::size_t k) {
  Graph g(k);
  for (Vertex v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(std::size_t k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(k);
  g.add_edge(k - 1, 0);
  return g;
}

Graph complete_graph(std::size_t n) { return complement(Graph(n)); }

Graph matching_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; v += 2) g.add_edge(v, v + 1);
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(std::size_t leaves) { return complete_bipartite(1, leaves); }

namespace {

std::optional<std::size_t> parse_count(std::string_view text) {
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

// Edges given as letter pairs, a = 0.
Graph lettered(std::size_t n, std::initializer_list<std::string_view> pairs) {
  Graph g(n);
  for (const std::string_view p : pairs) g.add_edge(p[0] - 'a', p[1] - 'a');
  return g;
}

}  // namespace

Graph named_graph(std::string_view name) {
  // Replacement components.
  if (name == "G1") return lettered(4, {"ab", "ad", "bd", "bc"});
  if (name == "G2") return lettered(6, {"ab", "ae", "be", "bc", "cd", "bf"});
  if (name == "G3") return lettered(6, {"bc", "be", "cf", "ef", "cd", "ba"});
  if (name == "G4") return lettered(6, {"ab", "ae", "be", "bc", "cd", "ef"});
  if (name == "G5") return lettered(8, {"ab", "bc", "be", "cd", "ef", "fg", "gh"});
  if (name == "G6") return lettered(6, {"ab", "bc", "be", "cd", "ef", "fd"});
  if (name == "G7") return lettered(6, {"cd", "de", "df", "cb", "ef", "ab"});
  if (name == "G8") return lettered(8, {"cd", "de", "dg", "ef", "gh", "cb", "ba"});
  // Centre 0 joined to two triangles {0,1,2} and {0,3,4}.
  if (name == "bowtie") return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {3, 4}, {1, 2}});
  // Square 0-1-3-2 with roof vertex 4 on 2 and 3.
  if (name == "house") return Graph(5, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {2, 4}, {3, 4}});
  if (name == "K23") return complete_bipartite(2, 3);
  if (name == "star" || name == "K13" || name == "star(1,3)") return star_graph(3);
  // Twins v = 1 and w = 2 in both.
  if (name == "Gd9") return Graph(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {0, 5}});
  if (name == "Gd9prime") return Graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}});
  if (name == "figure_d9_2") {
    return Graph(8, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 5}, {5, 6}, {4, 7}});
  }

  struct Family {
    std::string_view prefix;
    Graph (*make)(std::size_t);
    std::size_t min;
  };
  static constexpr Family kFamilies[] = {
      {"path", path_graph, 1},         {"cycle", cycle_graph, 3},   {"matching", matching_graph, 0},
      {"complete", complete_graph, 1}, {"empty", empty_graph, 0},   {"P", path_graph, 1},
      {"C", cycle_graph, 3},           {"M", matching_graph, 0},    {"K", complete_graph, 1},
  };
  for (const Family& f : kFamilies) {
    if (!name.starts_with(f.prefix)) continue;
    const auto k = parse_count(name.substr(f.prefix.size()));
    if (!k) continue;
    if (*k < f.min || *k > Graph::kMaxOrder) {
      throw std::invalid_argument("invalid parameter for named graph '" + std::string(name) + "'");
    }
    return f.make(*k);
  }
  throw std::invalid_argument("unknown graph name '" + std::string(name) + "'");
}

ZModMatrix neighborhood_matrix(const Graph& g, Modulus modulus) {
  ZModMatrix m = adjacency_matrix(g, modulus);
  for (Vertex v = 0; v < g.order(); ++v) m.set(v, v, 1);
  return m;
}

ZModMatrix adjacency_matrix(const Graph& g, Modulus modulus) {
  ZModMatrix m(g.order(), g.order(), modulus);
  for (const auto& [u, v] : g.edges()) {
    m.set(u, v, 1);
    m.set(v, u, 1);
  }
  return m;
}

std::vector<Edge> find_twins(const ZModMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("find_twins: matrix is not square");
  const ZModMatrix t = m.transpose();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.rows(); ++j) {
      const bool rows_equal = std::ranges::equal(m.row(i), m.row(j));
      const bool cols_equal = std::ranges::equal(t.row(i), t.row(j));
      if (rows_equal || cols_equal) out.emplace_back(i, j);
    }
  }
  return out;
}

std::optional<PendantPartition> pendant_partition(const Graph& g) {
  const std::size_t n = g.order();
  if (n % 2 != 0) return std::nullopt;
  // A degree-1 vertex whose neighbour has degree >= 2 must be a pendant;
  // in a P2 component either end works and we take the lower one.
  std::uint64_t pendant_mask = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 1) continue;
    const Vertex w = std::countr_zero(g.neighbors(v));
    if (g.degree(w) >= 2 || v < w) pendant_mask |= std::uint64_t{1} << v;
  }
  PendantPartition out;
  for (Vertex q = 0; q < n; ++q) {
    if ((pendant_mask >> q) & 1U) continue;
    const std::uint64_t attached = g.neighbors(q) & pendant_mask;
    if (std::popcount(attached) != 1) return std::nullopt;
    out.cores.push_back(q);
    out.pendants.push_back(std::countr_zero(attached));
  }
  if (out.cores.size() * 2 != n) return std::nullopt;
  return out;
}

bool is_pendant_graph(const Graph& g) { return pendant_partition(g).has_value(); }

VertexSet pendant_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

bool is_path_component(const Graph& g, std::span<const Vertex> component) {
  std::size_t ends = 0;
  for (const Vertex v : component) {
    const std::size_t d = g.degree(v);
    if (d > 2) return false;
    if (d <= 1) ++ends;
  }
  // Connected with max degree 2: a path iff it is acyclic.
  return component.size() == 1 || ends == 2;
}

bool is_cycle_component(const Graph& g, std::span<const Vertex> component) {
  if (component.size() < 3) return false;
  return std::ranges::all_of(component, [&](Vertex v) { return g.degree(v) == 2; });
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 62) throw std::invalid_argument("graph6 short form supports n <= 62");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty graph6 string");
  const int first = static_cast<unsigned char>(text[0]);
  if (first == 126) throw std::invalid_argument("graph6 with n > 62 is not supported");
  if (first < 63 || first > 125) throw std::invalid_argument("malformed graph6 header byte");
  const std::size_t n = static_cast<std::size_t>(first - 63);
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() != 1 + nbytes) {
    throw std::invalid_argument("graph6 length mismatch: expected " + std::to_string(1 + nbytes) +
                                " bytes, got " + std::to_string(text.size()));
  }
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]);
      if (byte < 63 || byte > 126) throw std::invalid_argument("malformed graph6 data byte");
      if (((byte - 63) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero for a canonical string.
  if (nbits % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    if (last < 0 || last > 63 || (last & ((1 << (6 - nbits % 6)) - 1)) != 0) {
      throw std::invalid_argument("graph6 padding bits are not zero");
    }
  }
  return g;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

std::size_t parse_index(std::string_view s) {
  s = trim(s);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer '" + std::string(s) + "' in edge list");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("edge list needs 'n:' prefix");
  Graph g(parse_index(text.substr(0, colon)));
  std::string_view rest = trim(text.substr(colon + 1));
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw std::invalid_argument("edge '" + std::string(item) + "' is not of the form u-v");
    }
    g.add_edge(parse_index(item.substr(0, dash)), parse_index(item.substr(dash + 1)));
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + ":";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    out += first ? " " : ", ";
    out += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace lightsout
