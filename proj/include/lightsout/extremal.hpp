#pragma once

// Exhaustive search for the densest N-AW graphs on n vertices over Z_ell.
// Complements are enumerated by edge count, cheapest first; the first edge
// count with an N-AW complement gives max(n, ell).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lightsout/graph.hpp"

namespace lightsout {

enum class ProofStatus { kProven, kConjectured };

struct ConjecturedMax {
  std::size_t size = 0;
  /// Which closed form produced the size.
  std::string rule;
  /// Excess of complement edges over n/2 (even n) or floor(n/2) (odd n).
  std::size_t k = 0;
  ProofStatus status = ProofStatus::kProven;
};

/// Throws std::invalid_argument for n < 2 or ell < 2.
[[nodiscard]] ConjecturedMax conjectured_max(std::size_t n, std::int64_t ell);
[[nodiscard]] std::string to_string(ProofStatus status);

struct SearchOptions {
  /// Bounded mode: never look at complements with more edges than this.
  std::optional<std::size_t> complement_cap;
  /// Skip complements whose maximum degree rules out N-AW.
  bool prune = true;
  unsigned jobs = 1;
};

struct ExtremalReport {
  std::size_t n = 0;
  std::int64_t ell = 2;
  /// nullopt when a bounded search found nothing within its cap.
  std::optional<std::size_t> max_size;
  /// Canonical graph6 strings of the extremal graphs, one per isomorphism
  /// class, sorted.
  std::vector<std::string> extremal_graphs;
  /// Number of labelled extremal graphs before isomorphism reduction.
  std::uint64_t labelled_count = 0;
  /// "full" or "bounded".
  std::string search_method = "full";
  std::optional<std::size_t> complement_cap;
  bool pruned = true;
  ConjecturedMax conjectured;
  bool agree = false;
  std::uint64_t candidates = 0;
  std::uint64_t skipped_by_degree = 0;
  double elapsed_ms = 0.0;

  friend bool operator==(const ExtremalReport& a, const ExtremalReport& b);
};

inline constexpr std::size_t kMaxFullOrder = 10;
inline constexpr std::size_t kMaxBoundedOrder = 12;

/// Throws std::invalid_argument when n is out of scope for the chosen mode.
[[nodiscard]] ExtremalReport max_size_search(std::size_t n, std::int64_t ell,
                                             const SearchOptions& options = {});

/// True when the complement-edge count e = n/2 + t (n even, t >= 1) forbids
/// a vertex of degree above t + 1 in the complement and gbar has one.
[[nodiscard]] bool degree_bound_prune(std::size_t e_complement, std::size_t n,
                                      const Graph& gbar);

/// N(complement) is invertible mod ell, via an exact integer determinant.
[[nodiscard]] bool complement_is_n_aw(const Graph& gbar, std::int64_t ell);
/// Exact integer determinant (Bareiss); entries must be small.
[[nodiscard]] std::int64_t integer_det(std::vector<std::int64_t> m, std::size_t n);

/// Relabelling with the lexicographically least upper-triangle bit string
/// (column-major, as in graph6). Throws for n > kMaxBoundedOrder.
[[nodiscard]] Graph canonical_form(const Graph& g);
[[nodiscard]] std::string canonical_graph6(const Graph& g);
[[nodiscard]] bool isomorphic(const Graph& g, const Graph& h);
/// One canonical graph6 string per isomorphism class, sorted.
[[nodiscard]] std::vector<std::string> dedup_isomorphism(std::span<const Graph> graphs);

struct ConjectureCheck {
  ExtremalReport report;
  /// C(n,2) - (n-1) <= max <= C(n,2) - floor(n/2).
  bool sandwich = false;
  /// Every extremal graph is the complement of a pendant graph (even n).
  std::optional<bool> all_pendant_complements;
  /// Extremal graphs whose complements are not pendant graphs.
  std::vector<std::string> non_pendant;
  /// Even n, odd ell, gcd(n-1, ell) > 1: the triangle-family graph is extremal.
  std::optional<bool> triangle_family_present;
  /// Even n and ell: the extremal set equals the complements of all pendant
  /// graphs of that size.
  std::optional<bool> pendant_set_matches;
  /// Even n and ell: the pendant lower-bound construction is N-AW.
  std::optional<bool> lower_bound_witness;
  /// Even n and ell: extremal complements with max degree <= 2 consist of P2
  /// and P4 components only.
  std::optional<bool> max_degree_two_components;
  /// Cases with a known unique extremal graph: it is the only one found.
  std::optional<bool> unique_as_expected;

  [[nodiscard]] bool ok() const noexcept;
};

[[nodiscard]] ConjectureCheck verify_conjecture(std::size_t n, std::int64_t ell,
                                                const SearchOptions& options = {});

/// Complements of all pendant graphs H ⊙ K1 of order n with `size` edges,
/// one canonical graph6 string per class, sorted.
[[nodiscard]] std::vector<std::string> pendant_complements(std::size_t n, std::size_t size);

[[nodiscard]] std::string csv_header();
[[nodiscard]] std::string csv_row(const ExtremalReport& report);

}  // namespace lightsout
