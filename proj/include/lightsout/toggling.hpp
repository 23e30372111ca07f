#pragma once

// U-toggling numbers: the totals, over a vertex subset U, of winning toggle
// vectors for the labeling that is r on U and 0 elsewhere. Each nonempty set
// is a coset of the subgroup of null-toggle totals.

#include <span>
#include <string>
#include <vector>

#include "lightsout/game.hpp"
#include "lightsout/graph.hpp"
#include "lightsout/zmod.hpp"

namespace lightsout {

/// {base + k * generator : k in Z} in Z_ell. generator divides ell; 0 means
/// the trivial subgroup. base is reduced mod generator when generator > 0.
struct ToggleCoset {
  Modulus modulus;
  bool empty = true;
  Residue base = 0;
  Residue generator = 0;

  [[nodiscard]] static ToggleCoset none(Modulus modulus);
  /// Normalizes the generator to gcd(generator, ell) and the base into range.
  [[nodiscard]] static ToggleCoset make(Modulus modulus, Residue base, Residue generator);

  [[nodiscard]] bool contains(Residue t) const noexcept;
  [[nodiscard]] std::int64_t size() const noexcept;
  /// Sorted members.
  [[nodiscard]] std::vector<Residue> members() const;
  /// "{}", "{3}", or "1 + 2Z".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ToggleCoset&, const ToggleCoset&) = default;
};

/// {sum_{u in U} x_u : M x = -labeling}.
[[nodiscard]] ToggleCoset toggle_sum_coset(const LinearSystem& system,
                                           std::span<const Vertex> subset,
                                           std::span<const Residue> labeling);

/// T_U^M(r). Throws std::invalid_argument if U leaves the vertex range.
[[nodiscard]] ToggleCoset toggling_numbers(const LinearSystem& system,
                                           std::span<const Vertex> subset, Residue r);
[[nodiscard]] ToggleCoset toggling_numbers(const ZModMatrix& m, std::span<const Vertex> subset,
                                           Residue r);

/// Least r >= 1 with T_U^M(r) nonempty; it divides ell. Returns 0 when only
/// r = 0 works.
[[nodiscard]] Residue minimal_nonempty_r(const LinearSystem& system,
                                         std::span<const Vertex> subset);
[[nodiscard]] Residue minimal_nonempty_r(const ZModMatrix& m, std::span<const Vertex> subset);

/// Sumset of per-component cosets. Throws on a modulus mismatch or empty input.
[[nodiscard]] ToggleCoset compose_components(std::span<const ToggleCoset> parts);

/// Both sides of the pendant transfer relation for pendant p of G:
/// T_{V(G)}^{A(G)}(s) and {t - 2s : t in T_{V(G')-U}^{A(G')}(s)} with
/// G' = G - {p, v} and U = N(v) - {p}.
struct PendantTransfer {
  ToggleCoset whole;
  ToggleCoset reduced;
  [[nodiscard]] bool holds() const { return whole == reduced; }
};
/// Throws std::invalid_argument unless p has degree 1.
[[nodiscard]] PendantTransfer noU_transfer(const Graph& g, Vertex p, Residue s, Modulus modulus);

/// Counting variant: solutions of A(G') x = -pi' tallied over
/// V(G') - U only, against solutions of A(G) x = -pi tallied over V(G) and
/// minus pi(v) + pi(p). Both sides as cosets.
[[nodiscard]] PendantTransfer pendant_labeling_transfer(const Graph& g, Vertex p,
                                                        std::span<const Residue> labeling,
                                                        Modulus modulus);

}  // namespace lightsout
