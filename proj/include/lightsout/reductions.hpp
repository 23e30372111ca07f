#pragma once

// Closed-form winnability criteria and graph reductions, each paired with a
// direct matrix computation so that disagreements surface immediately.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lightsout/game.hpp"
#include "lightsout/graph.hpp"
#include "lightsout/toggling.hpp"

namespace lightsout {

struct ReductionOutcome {
  std::string rule;
  Graph input;
  std::optional<Graph> transformed;
  bool predicted = false;
  bool direct = false;
  /// Rule-specific extras, e.g. the toggling number used.
  std::string detail;

  [[nodiscard]] bool agree() const noexcept { return predicted == direct; }
};

/// N(G) is invertible (the N-game on G is always winnable).
[[nodiscard]] bool is_n_aw(const Graph& g, Modulus modulus);
/// A(G) is invertible.
[[nodiscard]] bool is_a_aw(const Graph& g, Modulus modulus);

/// Predicted: G is A-AW. Direct: complement(G ∪ K1) is N-AW.
[[nodiscard]] ReductionOutcome dominating_reduction(const Graph& g, Modulus modulus);

/// G ∪ P4 with P4 on vertices n..n+3 and its end vertex n joined to U.
[[nodiscard]] Graph p4_join(const Graph& g, std::span<const Vertex> subset);
/// Predicted: complement(p4_join(G, U)) is N-AW. Direct: complement(G ∪ P4) is N-AW.
[[nodiscard]] ReductionOutcome p4_replacement_equiv(const Graph& g,
                                                    std::span<const Vertex> subset,
                                                    Modulus modulus);

enum class PathRule {
  /// A path component of order 3 mod 4: the complement is never N-AW.
  kOrderThreeModFour,
  /// Two or more path components of order 1 mod 4: never N-AW.
  kRepeatedOneModFour,
  /// A path component longer than 4: only rules out extremality.
  kLongPath,
};

struct PathViolation {
  PathRule rule;
  VertexSet component;
};

/// Path-component obstructions in the complement graph Gbar.
[[nodiscard]] std::vector<PathViolation> path_restriction_violations(const Graph& gbar);
/// True iff some violation certifies that complement(gbar) is not N-AW.
[[nodiscard]] bool path_rules_forbid(const std::vector<PathViolation>& violations);
[[nodiscard]] std::string to_string(PathRule rule);

/// Predicted: gcd(2(n - m) - 1, ell) = 1. Direct: complement(G) is N-AW.
/// Throws std::invalid_argument unless G is a pendant graph.
[[nodiscard]] ReductionOutcome pendant_graph_naw(const Graph& g, Modulus modulus);

/// Predicted: gcd(1 + t, ell) = 1 with {t} = T_{V(G)}^{A(G)}(1). Direct:
/// complement(G) is N-AW. Throws unless G is A-AW with a pendant vertex.
[[nodiscard]] ReductionOutcome subsetjoinaw_check(const Graph& g, Modulus modulus);

/// Predicted: G - {p, v} is A-AW. Direct: G is A-AW. Throws unless p is pendant.
[[nodiscard]] ReductionOutcome pendantremove_dompen(const Graph& g, Vertex p, Modulus modulus);

struct ConditionOptions {
  /// Labelings scanned exhaustively when ell^n is at most this.
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 20;
  /// Beyond the limit: sample this many labelings, or throw when zero.
  std::uint64_t sample_size = 0;
  std::uint64_t seed = 0;
};

struct PendantRemoveResult {
  explicit PendantRemoveResult(Modulus modulus) : null_totals(ToggleCoset::none(modulus)) {}

  bool condition_a = false;
  bool condition_b = false;
  /// Condition (a) was checked on a random sample only.
  bool sampled = false;
  Residue r = 0;
  Residue t = 0;
  ToggleCoset null_totals;
  /// complement(G) is N-AW.
  bool direct = false;
  /// A labeling with no winnable shift, when condition (a) fails.
  std::optional<Labeling> counterexample;

  [[nodiscard]] bool predicted() const noexcept { return condition_a && condition_b; }
  [[nodiscard]] bool agree() const noexcept { return predicted() == direct; }
};

/// Both conditions of the pendant-removal criterion for N-AW of complement(G).
/// Throws std::invalid_argument unless p is pendant, or when the instance
/// exceeds the exhaustive limit and no sample size is given.
[[nodiscard]] PendantRemoveResult pendantremove_conditions(const Graph& g, Vertex p,
                                                           Modulus modulus,
                                                           const ConditionOptions& options = {});

/// For G with a dominating vertex: true iff complement(G) has a pendant
/// vertex outside every P2 component, which rules G out as extremal.
/// Throws std::invalid_argument if G has no dominating vertex.
[[nodiscard]] bool extdom_filter(const Graph& g);

struct ExtSwitchCheck {
  bool component_aw = false;
  bool replacement_aw = false;
  bool same_toggling = false;
  bool same_order = false;
  bool smaller_size = false;
  /// G with C replaced by C'.
  Graph switched;
  /// complement(switched) is N-AW exactly when complement(G) is.
  bool same_winnability = false;

  [[nodiscard]] bool valid() const noexcept {
    return component_aw && replacement_aw && same_toggling && same_order && smaller_size;
  }
};

/// Checks the component-switch hypotheses for component C of G and
/// replacement C'. Throws unless C is a component of G and G has a pendant vertex.
[[nodiscard]] ExtSwitchCheck extswitch_valid(const Graph& g, std::span<const Vertex> component,
                                             const Graph& replacement, Modulus modulus);

struct NotSWinWitness {
  Labeling labeling;
  /// No shift of the labeling is A-winnable (checked directly).
  bool verified = false;
};

/// For even ell: lambda_{1,0} on an even cycle component, or lambda_{1,0} and
/// lambda_{0,0} on two cycle components, zero elsewhere. nullopt when G has
/// neither. Throws std::invalid_argument for odd ell.
[[nodiscard]] std::optional<NotSWinWitness> notswin_witness(const Graph& g, Modulus modulus);

/// Vertices of a cycle component in cyclic order, starting at its least
/// vertex and continuing to the smaller neighbour.
[[nodiscard]] VertexSet cycle_order(const Graph& g, std::span<const Vertex> component);

}  // namespace lightsout
