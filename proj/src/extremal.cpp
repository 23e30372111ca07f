#include "lightsout/extremal.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "lightsout/zmod.hpp"

namespace lightsout {

namespace {

std::size_t choose2(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::int64_t odd_part_gcd(std::int64_t a, std::int64_t ell) { return std::gcd(a < 0 ? -a : a, ell); }

// Binomial coefficients up to C(66, *), saturating well below overflow for
// the ranges we use.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// The combination of rank `rank` (lexicographic) of k items from m.
std::vector<std::size_t> unrank(std::uint64_t rank, std::size_t m, std::size_t k) {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    while (true) {
      const std::uint64_t with = binomial(m - next - 1, k - slot - 1);
      if (rank < with) break;
      rank -= with;
      ++next;
    }
    out.push_back(next++);
  }
  return out;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t m) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == m - k + i - 1) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

struct RangeResult {
  std::vector<std::uint64_t> winners;  // complement edge sets as pair masks
  std::uint64_t candidates = 0;
  std::uint64_t skipped = 0;
};

}  // namespace

std::string to_string(ProofStatus status) {
  return status == ProofStatus::kProven ? "proven" : "conjectured";
}

ConjecturedMax conjectured_max(std::size_t n, std::int64_t ell) {
  if (n < 2) throw std::invalid_argument("conjectured_max needs n >= 2");
  if (ell < 2) throw std::invalid_argument("conjectured_max needs ell >= 2");
  const std::size_t total = choose2(n);
  const auto sn = static_cast<std::int64_t>(n);
  if (n % 2 == 1) return {total - n / 2, "odd-order-matching", 0, ProofStatus::kProven};
  if (std::gcd(sn - 1, ell) == 1) return {total - n / 2, "even-order-matching", 0, ProofStatus::kProven};
  if (ell % 2 == 1) return {total - (n / 2 + 1), "triangle-family", 1, ProofStatus::kProven};
  std::size_t k = 0;
  while (odd_part_gcd(sn - 2 * static_cast<std::int64_t>(k) - 1, ell) != 1) ++k;
  return {total - (n / 2 + k), "pendant-complement", k,
          k <= 3 ? ProofStatus::kProven : ProofStatus::kConjectured};
}

bool operator==(const ExtremalReport& a, const ExtremalReport& b) {
  const auto key = [](const ExtremalReport& r) {
    return std::tie(r.n, r.ell, r.max_size, r.extremal_graphs, r.labelled_count, r.search_method,
                    r.complement_cap, r.pruned, r.conjectured.size, r.conjectured.rule,
                    r.conjectured.k, r.conjectured.status, r.agree, r.candidates,
                    r.skipped_by_degree);
  };
  return key(a) == key(b);
}

bool degree_bound_prune(std::size_t e_complement, std::size_t n, const Graph& gbar) {
  if (n % 2 != 0 || e_complement <= n / 2) return false;
  const std::size_t t = e_complement - n / 2;
  return gbar.max_degree() > t + 1;
}

std::int64_t integer_det(std::vector<std::int64_t> m, std::size_t n) {
  // Fraction-free elimination keeps every intermediate a minor of m.
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap * n + k] == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[swap * n + j]);
      sign = -sign;
    }
    const std::int64_t pivot = m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i * n + j] = (m[i * n + j] * pivot - m[i * n + k] * m[k * n + j]) / prev;
      }
      m[i * n + k] = 0;
    }
    prev = pivot;
  }
  return n == 0 ? 1 : sign * m[(n - 1) * n + (n - 1)];
}

bool complement_is_n_aw(const Graph& gbar, std::int64_t ell) {
  const std::size_t n = gbar.order();
  std::vector<std::int64_t> m(n * n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) m[i * n + j] = gbar.adjacent(i, j) ? 0 : 1;
  const std::int64_t det = integer_det(std::move(m), n);
  return std::gcd(det < 0 ? -det : det, ell) == 1;
}

ExtremalReport max_size_search(std::size_t n, std::int64_t ell, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (n < 2) throw std::invalid_argument("search needs n >= 2");
  if (ell < 2) throw std::invalid_argument("search needs ell >= 2");
  const bool bounded = options.complement_cap.has_value();
  if (!bounded && n > kMaxFullOrder) {
    throw std::invalid_argument("full enumeration supports n <= " + std::to_string(kMaxFullOrder) +
                                "; use bounded mode");
  }
  if (n > kMaxBoundedOrder) {
    throw std::invalid_argument("search supports n <= " + std::to_string(kMaxBoundedOrder));
  }

  ExtremalReport report;
  report.n = n;
  report.ell = ell;
  report.search_method = bounded ? "bounded" : "full";
  report.complement_cap = options.complement_cap;
  report.pruned = options.prune;
  report.conjectured = conjectured_max(n, ell);

  std::vector<Edge> pairs;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) pairs.emplace_back(u, v);
  const std::size_t m = pairs.size();
  // A pendant tree has an N-AW complement, so n - 1 edges always suffice.
  std::size_t last = n - 1;
  if (bounded) last = std::min(last, *options.complement_cap);
  const unsigned jobs = std::max(1U, options.jobs);

  std::vector<std::uint64_t> winners;
  std::size_t found_e = 0;
  for (std::size_t e = n / 2; e <= last && winners.empty(); ++e) {
    const std::uint64_t count = binomial(m, e);
    std::vector<RangeResult> results(jobs);
    const auto work = [&](unsigned w) {
      const std::uint64_t lo = count * w / jobs;
      const std::uint64_t hi = count * (w + 1) / jobs;
      if (lo >= hi) return;
      RangeResult& out = results[w];
      auto combo = unrank(lo, m, e);
      for (std::uint64_t r = lo; r < hi; ++r) {
        Graph gbar(n);
        std::uint64_t mask = 0;
        for (const std::size_t p : combo) {
          gbar.add_edge(pairs[p].first, pairs[p].second);
          mask |= std::uint64_t{1} << p;
        }
        ++out.candidates;
        if (options.prune && degree_bound_prune(e, n, gbar)) {
          ++out.skipped;
        } else if (complement_is_n_aw(gbar, ell)) {
          out.winners.push_back(mask);
        }
        next_combination(combo, m);
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    for (const RangeResult& r : results) {
      report.candidates += r.candidates;
      report.skipped_by_degree += r.skipped;
      winners.insert(winners.end(), r.winners.begin(), r.winners.end());
    }
    found_e = e;
  }

  std::sort(winners.begin(), winners.end());
  if (!winners.empty()) {
    report.max_size = choose2(n) - found_e;
    report.labelled_count = winners.size();
    std::vector<Graph> graphs;
    const Modulus modulus(ell);
    for (const std::uint64_t mask : winners) {
      Graph gbar(n);
      for (std::size_t p = 0; p < m; ++p)
        if ((mask >> p) & 1U) gbar.add_edge(pairs[p].first, pairs[p].second);
      Graph g = complement(gbar);
      // Independent confirmation over Z_ell.
      if (!is_invertible(neighborhood_matrix(g, modulus))) {
        throw std::logic_error("integer determinant and Z_ell solver disagree on " + to_graph6(g));
      }
      graphs.push_back(std::move(g));
    }
    report.extremal_graphs = dedup_isomorphism(graphs);
  }
  report.agree = report.max_size == report.conjectured.size;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

// Per-vertex signature: degree, then sorted neighbour degrees.
std::vector<std::vector<std::size_t>> signatures(const Graph& g) {
  std::vector<std::vector<std::size_t>> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    out[v].push_back(g.degree(v));
    std::vector<std::size_t> nd;
    for (std::uint64_t b = g.neighbors(v); b != 0; b &= b - 1) nd.push_back(g.degree(std::countr_zero(b)));
    std::sort(nd.begin(), nd.end());
    out[v].insert(out[v].end(), nd.begin(), nd.end());
  }
  return out;
}

std::size_t triangles(const Graph& g) {
  std::size_t t = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (std::uint64_t b = g.neighbors(u) >> (u + 1); b != 0; b &= b - 1) {
      const Vertex v = u + 1 + static_cast<Vertex>(std::countr_zero(b));
      t += static_cast<std::size_t>(std::popcount(g.neighbors(u) & g.neighbors(v) & ~((std::uint64_t{2} << v) - 1)));
    }
  return t;
}

struct Invariant {
  std::size_t order;
  std::size_t size;
  std::size_t triangle_count;
  std::vector<std::vector<std::size_t>> sorted_signatures;
  auto operator<=>(const Invariant&) const = default;
};

Invariant invariant(const Graph& g) {
  auto sig = signatures(g);
  std::sort(sig.begin(), sig.end());
  return {g.order(), g.size(), triangles(g), std::move(sig)};
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()), cur_(n_), order_(n_) {}

  Graph run() {
    if (n_ == 0) return Graph(0);
    search(0, 0);
    Graph out(n_);
    for (Vertex j = 0; j < n_; ++j)
      for (Vertex i = 0; i < j; ++i)
        if (g_.adjacent(best_order_[i], best_order_[j])) out.add_edge(i, j);
    return out;
  }

 private:
  std::uint64_t column(Vertex v, std::size_t depth) const {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < depth; ++i) c = (c << 1) | (g_.adjacent(order_[i], v) ? 1U : 0U);
    return c;
  }

  // Compares cur_[0..depth] with the best string found so far.
  int compare_prefix(std::size_t depth) const {
    for (std::size_t i = 0; i <= depth; ++i) {
      if (cur_[i] != best_[i]) return cur_[i] < best_[i] ? -1 : 1;
    }
    return 0;
  }

  void search(std::size_t depth, std::uint64_t used) {
    if (depth == n_) {
      if (!have_best_ || compare_prefix(n_ - 1) < 0) {
        best_ = cur_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    std::uint64_t min_col = ~std::uint64_t{0};
    for (Vertex v = 0; v < n_; ++v)
      if (!((used >> v) & 1U)) min_col = std::min(min_col, column(v, depth));
    for (Vertex v = 0; v < n_; ++v) {
      if ((used >> v) & 1U || column(v, depth) != min_col) continue;
      cur_[depth] = min_col;
      order_[depth] = v;
      // best_ may have improved in an earlier sibling.
      if (have_best_ && compare_prefix(depth) > 0) return;
      search(depth + 1, used | (std::uint64_t{1} << v));
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::uint64_t> cur_;
  std::vector<std::uint64_t> best_;
  std::vector<Vertex> order_;
  std::vector<Vertex> best_order_;
  bool have_best_ = false;
};

bool extend_iso(const Graph& g, const Graph& h, const std::vector<std::vector<std::size_t>>& sg,
                const std::vector<std::vector<std::size_t>>& sh, std::vector<Vertex>& map,
                std::uint64_t used, Vertex v) {
  if (v == g.order()) return true;
  for (Vertex w = 0; w < h.order(); ++w) {
    if ((used >> w) & 1U || sg[v] != sh[w]) continue;
    bool ok = true;
    for (Vertex u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == h.adjacent(map[u], w);
    if (!ok) continue;
    map[v] = w;
    if (extend_iso(g, h, sg, sh, map, used | (std::uint64_t{1} << w), v + 1)) return true;
  }
  return false;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.order() > kMaxBoundedOrder) {
    throw std::invalid_argument("canonical form supports n <= " + std::to_string(kMaxBoundedOrder));
  }
  return Canonizer(g).run();
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  const auto sg = signatures(g);
  const auto sh = signatures(h);
  auto a = sg;
  auto b = sh;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  std::vector<Vertex> map(g.order());
  return extend_iso(g, h, sg, sh, map, 0, 0);
}

std::vector<std::string> dedup_isomorphism(std::span<const Graph> graphs) {
  std::map<Invariant, std::vector<const Graph*>> buckets;
  for (const Graph& g : graphs) {
    if (g.order() > kMaxBoundedOrder) {
      throw std::invalid_argument("dedup supports n <= " + std::to_string(kMaxBoundedOrder));
    }
    auto& reps = buckets[invariant(g)];
    const bool seen = std::any_of(reps.begin(), reps.end(),
                                  [&](const Graph* r) { return isomorphic(*r, g); });
    if (!seen) reps.push_back(&g);
  }
  std::vector<std::string> out;
  for (const auto& [key, reps] : buckets)
    for (const Graph* r : reps) out.push_back(canonical_graph6(*r));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> pendant_complements(std::size_t n, std::size_t size) {
  if (n % 2 != 0 || size < n / 2) return {};
  const std::size_t h = n / 2;
  const std::size_t core_edges = size - h;
  std::vector<Edge> pairs;
  for (Vertex v = 1; v < h; ++v)
    for (Vertex u = 0; u < v; ++u) pairs.emplace_back(u, v);
  if (core_edges > pairs.size()) return {};
  std::vector<Graph> graphs;
  if (core_edges == 0) {
    graphs.push_back(complement(corona_pendant(empty_graph(h))));
  } else {
    std::vector<std::size_t> combo(core_edges);
    std::iota(combo.begin(), combo.end(), std::size_t{0});
    do {
      Graph core(h);
      for (const std::size_t p : combo) core.add_edge(pairs[p].first, pairs[p].second);
      graphs.push_back(complement(corona_pendant(core)));
    } while (next_combination(combo, pairs.size()));
  }
  return dedup_isomorphism(graphs);
}

bool ConjectureCheck::ok() const noexcept {
  const bool proven = report.conjectured.status == ProofStatus::kProven;
  const auto holds = [](const std::optional<bool>& b) { return !b.has_value() || *b; };
  if (!sandwich) return false;
  if (proven && !report.agree) return false;
  if (!holds(triangle_family_present) || !holds(lower_bound_witness) ||
      !holds(max_degree_two_components) || !holds(unique_as_expected)) {
    return false;
  }
  if (proven && (!holds(all_pendant_complements) || !holds(pendant_set_matches))) return false;
  return true;
}

namespace {

Graph matching_copies(std::size_t k, const Graph& g) {
  Graph out(0);
  for (std::size_t i = 0; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

}  // namespace

ConjectureCheck verify_conjecture(std::size_t n, std::int64_t ell, const SearchOptions& options) {
  ConjectureCheck check;
  check.report = max_size_search(n, ell, options);
  const ExtremalReport& r = check.report;
  const std::size_t total = choose2(n);
  const auto sn = static_cast<std::int64_t>(n);
  check.sandwich = r.max_size.has_value() && total - (n - 1) <= *r.max_size &&
                   *r.max_size <= total - n / 2;
  if (!r.max_size) return check;

  std::vector<Graph> graphs;
  for (const std::string& s : r.extremal_graphs) graphs.push_back(from_graph6(s));

  if (n % 2 == 0) {
    bool all = true;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (!is_pendant_graph(complement(graphs[i]))) {
        all = false;
        check.non_pendant.push_back(r.extremal_graphs[i]);
      }
    }
    // The triangle family is the known exception for odd ell.
    const bool triangle_case = ell % 2 == 1 && std::gcd(sn - 1, ell) != 1;
    if (!triangle_case) check.all_pendant_complements = all;
    if (triangle_case && n >= 4) {
      const Graph tri = complement(disjoint_union(
          disjoint_union(cycle_graph(3), matching_copies((n - 4) / 2, path_graph(2))), empty_graph(1)));
      const std::string key = canonical_graph6(tri);
      check.triangle_family_present =
          std::find(r.extremal_graphs.begin(), r.extremal_graphs.end(), key) != r.extremal_graphs.end();
    }
  }

  if (n % 2 == 0 && ell % 2 == 0) {
    const std::size_t e = total - *r.max_size;
    check.pendant_set_matches = pendant_complements(n, e) == r.extremal_graphs;

    const std::size_t k = r.conjectured.k;
    Graph witness(0);
    if (2 * k <= n / 2) {
      witness = disjoint_union(matching_copies(k, path_graph(4)),
                               matching_copies(n / 2 - 2 * k, path_graph(2)));
    } else {
      witness = disjoint_union(corona_pendant(path_graph(k + 1)),
                               matching_copies(n / 2 - k - 1, path_graph(2)));
    }
    check.lower_bound_witness = witness.size() == n / 2 + k && is_pendant_graph(witness) &&
                                is_invertible(neighborhood_matrix(complement(witness), Modulus(ell)));

    bool components_ok = true;
    for (const Graph& g : graphs) {
      const Graph gbar = complement(g);
      if (gbar.max_degree() > 2) continue;
      for (const VertexSet& comp : gbar.components()) {
        const bool p2_or_p4 = is_path_component(gbar, comp) && (comp.size() == 2 || comp.size() == 4);
        components_ok = components_ok && p2_or_p4;
      }
    }
    check.max_degree_two_components = components_ok;
  }

  // Known unique extremal graphs.
  std::optional<Graph> unique;
  if (n % 2 == 1 || std::gcd(sn - 1, ell) == 1) {
    unique = complement(matching_graph(n));
  } else if (ell % 2 == 0 && r.conjectured.k == 1 && n >= 4) {
    unique = complement(disjoint_union(path_graph(4), matching_copies(n / 2 - 2, path_graph(2))));
  }
  if (unique) {
    check.unique_as_expected = r.extremal_graphs == std::vector<std::string>{canonical_graph6(*unique)};
  }
  return check;
}

std::string csv_header() { return "n,ell,max,extremal_count,method,conjectured,rule,agree"; }

std::string csv_row(const ExtremalReport& report) {
  std::string out = std::to_string(report.n) + "," + std::to_string(report.ell) + ",";
  out += report.max_size ? std::to_string(*report.max_size) : "";
  out += "," + std::to_string(report.extremal_graphs.size()) + ",";
  out += report.search_method;
  if (report.complement_cap) out += "(" + std::to_string(*report.complement_cap) + ")";
  out += "," + std::to_string(report.conjectured.size) + "," + report.conjectured.rule + ",";
  out += report.agree ? "true" : "false";
  return out;
}

}  // namespace lightsout
