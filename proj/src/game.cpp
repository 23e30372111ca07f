#include "lightsout/game.hpp"

#include <stdexcept>
#include <string>

namespace lightsout {

namespace {

void require_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw std::invalid_argument(std::string(what) + " has length " + std::to_string(got) +
                                ", expected " + std::to_string(want));
  }
}

void require_even_cycle_setting(std::size_t k, Modulus modulus) {
  if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (modulus.value() % 2 != 0) throw std::invalid_argument("cycle closed forms need even ell");
}

ResidueVector negated(std::span<const Residue> v, Modulus modulus) {
  ResidueVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = modulus.neg(modulus.reduce(v[i]));
  return out;
}

}  // namespace

Labeling apply_toggles(const ZModMatrix& m, std::span<const Residue> labeling,
                       std::span<const Residue> toggles) {
  require_length(labeling.size(), m.rows(), "labeling");
  require_length(toggles.size(), m.cols(), "toggle vector");
  ResidueVector reduced(toggles.size());
  for (std::size_t j = 0; j < toggles.size(); ++j) reduced[j] = m.modulus().reduce(toggles[j]);
  Labeling out = m * std::span<const Residue>(reduced);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = m.modulus().add(out[i], m.modulus().reduce(labeling[i]));
  return out;
}

std::optional<ToggleVector> winnable(const LinearSystem& system,
                                     std::span<const Residue> labeling) {
  const auto& m = system.matrix();
  if (!m.is_square()) throw std::invalid_argument("game matrix must be square");
  require_length(labeling.size(), m.rows(), "labeling");
  auto solutions = system.solve(negated(labeling, m.modulus()));
  if (!solutions) return std::nullopt;
  return std::move(solutions->particular);
}

std::optional<ToggleVector> winnable(const ZModMatrix& m, std::span<const Residue> labeling) {
  return winnable(LinearSystem(m), labeling);
}

bool is_always_winnable(const ZModMatrix& m) { return is_invertible(m); }

Labeling shift_labeling(std::span<const Residue> labeling, std::span<const Vertex> subset,
                        Residue r, Modulus modulus) {
  Labeling out(labeling.begin(), labeling.end());
  for (auto& v : out) v = modulus.reduce(v);
  for (const Vertex u : subset) {
    if (u >= out.size()) {
      throw std::invalid_argument("vertex " + std::to_string(u) + " outside the labeling");
    }
    out[u] = modulus.add(out[u], modulus.reduce(r));
  }
  return out;
}

Labeling shift_labeling(std::span<const Residue> labeling, Residue r, Modulus modulus) {
  Labeling out(labeling.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = modulus.add(modulus.reduce(labeling[i]), modulus.reduce(r));
  return out;
}

Labeling lambda_labeling(std::size_t k, Residue a, Residue b, Modulus modulus) {
  if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
  Labeling out(k, 0);
  out[0] = modulus.reduce(a);
  out[1] = modulus.reduce(b);
  return out;
}

bool cycle_lambda_winnable(std::size_t k, Residue a, Residue b, Modulus modulus) {
  require_even_cycle_setting(k, modulus);
  // Parity of a residue is well defined because ell is even.
  const bool a_even = modulus.reduce(a) % 2 == 0;
  const bool b_even = modulus.reduce(b) % 2 == 0;
  switch (k % 4) {
    case 0:
      return modulus.reduce(a) == 0 && modulus.reduce(b) == 0;
    case 2:
      return a_even && b_even;
    default:
      return a_even == b_even;
  }
}

std::pair<Residue, Residue> cycle_shift_canonical(std::size_t k, Residue a, Residue b, Residue s,
                                                  Modulus modulus) {
  require_even_cycle_setting(k, modulus);
  const Residue ra = modulus.reduce(a);
  const Residue rb = modulus.reduce(b);
  const Residue rs = modulus.reduce(s);
  switch (k % 4) {
    case 0:
      return {ra, rb};
    case 1:
      return {ra, modulus.sub(rb, rs)};
    case 2:
      return {modulus.sub(ra, rs), modulus.sub(rb, rs)};
    default:
      return {modulus.sub(ra, rs), rb};
  }
}

bool mutually_reachable(const LinearSystem& system, std::span<const Residue> from,
                        std::span<const Residue> to) {
  const Modulus& modulus = system.matrix().modulus();
  require_length(from.size(), system.matrix().rows(), "labeling");
  require_length(to.size(), system.matrix().rows(), "labeling");
  ResidueVector diff(from.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = modulus.sub(modulus.reduce(to[i]), modulus.reduce(from[i]));
  return system.is_solvable(diff);
}

std::optional<Residue> exists_shift_winnable(const LinearSystem& adjacency,
                                             std::span<const Residue> labeling) {
  const Modulus& modulus = adjacency.matrix().modulus();
  require_length(labeling.size(), adjacency.matrix().rows(), "labeling");
  for (Residue s = 0; s < modulus.value(); ++s) {
    const Labeling shifted = shift_labeling(labeling, s, modulus);
    if (adjacency.is_solvable(negated(shifted, modulus))) return s;
  }
  return std::nullopt;
}

std::optional<Residue> exists_shift_winnable(const Graph& g, std::span<const Residue> labeling,
                                             Modulus modulus) {
  return exists_shift_winnable(LinearSystem(adjacency_matrix(g, modulus)), labeling);
}

}  // namespace lightsout
