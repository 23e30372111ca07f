#include "lightsout/toggling.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace lightsout {

ToggleCoset ToggleCoset::none(Modulus modulus) { return ToggleCoset{modulus, true, 0, 0}; }

ToggleCoset ToggleCoset::make(Modulus modulus, Residue base, Residue generator) {
  Residue d = std::gcd(modulus.reduce(generator), modulus.value());
  if (d == modulus.value()) d = 0;
  const Residue b = modulus.reduce(base);
  return ToggleCoset{modulus, false, d == 0 ? b : b % d, d};
}

bool ToggleCoset::contains(Residue t) const noexcept {
  if (empty) return false;
  const Residue r = modulus.reduce(t);
  return generator == 0 ? r == base : r % generator == base;
}

std::int64_t ToggleCoset::size() const noexcept {
  if (empty) return 0;
  return generator == 0 ? 1 : modulus.value() / generator;
}

std::vector<Residue> ToggleCoset::members() const {
  std::vector<Residue> out;
  if (empty) return out;
  if (generator == 0) return {base};
  for (Residue t = base; t < modulus.value(); t += generator) out.push_back(t);
  return out;
}

std::string ToggleCoset::to_string() const {
  if (empty) return "{}";
  if (generator == 0) return "{" + std::to_string(base) + "}";
  return std::to_string(base) + " + " + std::to_string(generator) + "Z";
}

namespace {

void check_subset(std::span<const Vertex> subset, std::size_t n) {
  for (const Vertex u : subset) {
    if (u >= n) throw std::invalid_argument("vertex " + std::to_string(u) + " out of range");
  }
}

Residue subset_sum(std::span<const Residue> x, std::span<const Vertex> subset, Modulus modulus) {
  Residue s = 0;
  for (const Vertex u : subset) s = modulus.add(s, x[u]);
  return s;
}

}  // namespace

ToggleCoset toggle_sum_coset(const LinearSystem& system, std::span<const Vertex> subset,
                             std::span<const Residue> labeling) {
  const ZModMatrix& m = system.matrix();
  const Modulus modulus = m.modulus();
  check_subset(subset, m.cols());
  if (labeling.size() != m.rows()) throw std::invalid_argument("labeling length mismatch");
  ResidueVector target(labeling.size());
  for (std::size_t i = 0; i < target.size(); ++i) target[i] = modulus.neg(modulus.reduce(labeling[i]));
  const auto solutions = system.solve(target);
  if (!solutions) return ToggleCoset::none(modulus);
  // The image of the null toggles under the U-sum is cyclic, generated by
  // the images of the generators.
  Residue d = 0;
  for (const auto& g : solutions->null_generators) d = std::gcd(d, subset_sum(g, subset, modulus));
  return ToggleCoset::make(modulus, subset_sum(solutions->particular, subset, modulus), d);
}

ToggleCoset toggling_numbers(const LinearSystem& system, std::span<const Vertex> subset,
                             Residue r) {
  const ZModMatrix& m = system.matrix();
  check_subset(subset, m.rows());
  Labeling labeling(m.rows(), 0);
  for (const Vertex u : subset) labeling[u] = m.modulus().reduce(r);
  return toggle_sum_coset(system, subset, labeling);
}

ToggleCoset toggling_numbers(const ZModMatrix& m, std::span<const Vertex> subset, Residue r) {
  return toggling_numbers(LinearSystem(m), subset, r);
}

Residue minimal_nonempty_r(const LinearSystem& system, std::span<const Vertex> subset) {
  const ZModMatrix& m = system.matrix();
  const std::int64_t ell = m.modulus().value();
  check_subset(subset, m.rows());
  // M x = -r e_U is solvable iff each d_i divides r * w_i, w = u_inv e_U
  // (a zero diagonal entry acts as ell).
  const NormalForm& nf = system.normal_form();
  const ResidueVector diag = nf.diagonal();
  ResidueVector e(m.rows(), 0);
  for (const Vertex u : subset) e[u] = 1;
  const ResidueVector w = nf.u_inv * std::span<const Residue>(e);
  std::int64_t r = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::int64_t g = i < diag.size() && diag[i] != 0 ? diag[i] : ell;
    r = std::lcm(r, g / std::gcd(g, w[i]));
  }
  return r == ell ? 0 : r;
}

Residue minimal_nonempty_r(const ZModMatrix& m, std::span<const Vertex> subset) {
  return minimal_nonempty_r(LinearSystem(m), subset);
}

ToggleCoset compose_components(std::span<const ToggleCoset> parts) {
  if (parts.empty()) throw std::invalid_argument("compose_components needs at least one coset");
  const Modulus modulus = parts.front().modulus;
  Residue base = 0;
  Residue d = 0;
  bool empty = false;
  for (const ToggleCoset& c : parts) {
    if (c.modulus != modulus) throw std::invalid_argument("cosets over different moduli");
    empty = empty || c.empty;
    base = modulus.add(base, c.base);
    d = std::gcd(d, c.generator);
  }
  if (empty) return ToggleCoset::none(modulus);
  return ToggleCoset::make(modulus, base, d);
}

namespace {

struct PendantSplit {
  Vertex v;
  Graph reduced;
  VertexSet old_index;  // old_index[new vertex] = vertex of G
  VertexSet rest;       // V(G') - U in G' numbering
};

PendantSplit split_pendant(const Graph& g, Vertex p) {
  if (p >= g.order() || g.degree(p) != 1) {
    throw std::invalid_argument("vertex " + std::to_string(p) + " is not a pendant vertex");
  }
  PendantSplit out;
  out.v = static_cast<Vertex>(std::countr_zero(g.neighbors(p)));
  for (Vertex w = 0; w < g.order(); ++w)
    if (w != p && w != out.v) out.old_index.push_back(w);
  out.reduced = g.induced(out.old_index);
  for (Vertex i = 0; i < out.old_index.size(); ++i)
    if (!g.adjacent(out.old_index[i], out.v)) out.rest.push_back(i);
  return out;
}

ToggleCoset shifted(const ToggleCoset& c, Residue delta) {
  if (c.empty) return c;
  return ToggleCoset::make(c.modulus, c.base + delta, c.generator);
}

}  // namespace

PendantTransfer noU_transfer(const Graph& g, Vertex p, Residue s, Modulus modulus) {
  const PendantSplit split = split_pendant(g, p);
  VertexSet all(g.order());
  std::iota(all.begin(), all.end(), Vertex{0});
  const ToggleCoset whole = toggling_numbers(adjacency_matrix(g, modulus), all, s);
  const ToggleCoset part =
      toggling_numbers(adjacency_matrix(split.reduced, modulus), split.rest, s);
  return {whole, shifted(part, -2 * modulus.reduce(s))};
}

PendantTransfer pendant_labeling_transfer(const Graph& g, Vertex p,
                                          std::span<const Residue> labeling, Modulus modulus) {
  if (labeling.size() != g.order()) throw std::invalid_argument("labeling length mismatch");
  const PendantSplit split = split_pendant(g, p);
  Labeling reduced_labeling(split.old_index.size());
  for (Vertex i = 0; i < split.old_index.size(); ++i) {
    const Vertex w = split.old_index[i];
    const Residue delta = g.adjacent(w, split.v) ? labeling[p] : 0;
    reduced_labeling[i] = modulus.sub(modulus.reduce(labeling[w]), modulus.reduce(delta));
  }
  VertexSet all(g.order());
  std::iota(all.begin(), all.end(), Vertex{0});
  const ToggleCoset whole =
      toggle_sum_coset(LinearSystem(adjacency_matrix(g, modulus)), all, labeling);
  const ToggleCoset part = toggle_sum_coset(LinearSystem(adjacency_matrix(split.reduced, modulus)),
                                            split.rest, reduced_labeling);
  return {whole, shifted(part, -(modulus.reduce(labeling[split.v]) + modulus.reduce(labeling[p])))};
}

}  // namespace lightsout
