#pragma once

// The M-Lights Out game: toggling element j adds column j of M to the
// labeling. The labeling b is won by x exactly when M x = -b.

#include <optional>
#include <span>
#include <utility>

#include "lightsout/graph.hpp"
#include "lightsout/zmod.hpp"

namespace lightsout {

/// Vertex labels in Z_ell.
using Labeling = ResidueVector;
/// x[j] is the number of times element j is toggled.
using ToggleVector = ResidueVector;

/// pi + M x. Throws std::invalid_argument on a dimension mismatch.
[[nodiscard]] Labeling apply_toggles(const ZModMatrix& m, std::span<const Residue> labeling,
                                     std::span<const Residue> toggles);

/// A toggle vector winning `labeling`, or nullopt. Unique when M is invertible.
[[nodiscard]] std::optional<ToggleVector> winnable(const LinearSystem& system,
                                                   std::span<const Residue> labeling);
[[nodiscard]] std::optional<ToggleVector> winnable(const ZModMatrix& m,
                                                   std::span<const Residue> labeling);

/// Every labeling is winnable.
[[nodiscard]] bool is_always_winnable(const ZModMatrix& m);

/// Adds r to the labels in `subset`.
[[nodiscard]] Labeling shift_labeling(std::span<const Residue> labeling,
                                      std::span<const Vertex> subset, Residue r, Modulus modulus);
/// Adds r to every label.
[[nodiscard]] Labeling shift_labeling(std::span<const Residue> labeling, Residue r,
                                      Modulus modulus);

/// Label a on vertex 0 of C_k, b on vertex 1, 0 elsewhere. Throws for k < 3.
[[nodiscard]] Labeling lambda_labeling(std::size_t k, Residue a, Residue b, Modulus modulus);

/// Closed-form A-winnability of lambda_{a,b} on C_k for even ell.
/// Throws std::invalid_argument for odd ell or k < 3.
[[nodiscard]] bool cycle_lambda_winnable(std::size_t k, Residue a, Residue b, Modulus modulus);

/// The (a', b') such that lambda_{a,b} shifted by s can be toggled into
/// lambda_{a',b'} on C_k. Same preconditions as cycle_lambda_winnable.
[[nodiscard]] std::pair<Residue, Residue> cycle_shift_canonical(std::size_t k, Residue a,
                                                                Residue b, Residue s,
                                                                Modulus modulus);

/// Each labeling can be toggled into the other (their difference lies in the
/// column space of the system's matrix).
[[nodiscard]] bool mutually_reachable(const LinearSystem& system, std::span<const Residue> from,
                                      std::span<const Residue> to);

/// Least s in [0, ell) with (labeling + s) A-winnable, scanning upward.
[[nodiscard]] std::optional<Residue> exists_shift_winnable(const LinearSystem& adjacency,
                                                           std::span<const Residue> labeling);
[[nodiscard]] std::optional<Residue> exists_shift_winnable(const Graph& g,
                                                           std::span<const Residue> labeling,
                                                           Modulus modulus);

}  // namespace lightsout
