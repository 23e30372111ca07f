#include "lightsout/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>

namespace lightsout {

namespace {

VertexSet all_vertices(std::size_t n) {
  VertexSet out(n);
  std::iota(out.begin(), out.end(), Vertex{0});
  return out;
}

std::int64_t gcd_abs(std::int64_t a, std::int64_t ell) { return std::gcd(std::abs(a), ell); }

bool has_pendant(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) return true;
  return false;
}

}  // namespace

bool is_n_aw(const Graph& g, Modulus modulus) {
  return is_invertible(neighborhood_matrix(g, modulus));
}

bool is_a_aw(const Graph& g, Modulus modulus) { return is_invertible(adjacency_matrix(g, modulus)); }

ReductionOutcome dominating_reduction(const Graph& g, Modulus modulus) {
  ReductionOutcome out{"dominating-vertex", g, complement(disjoint_union(g, empty_graph(1))),
                       false, false, ""};
  out.predicted = is_a_aw(g, modulus);
  out.direct = is_n_aw(*out.transformed, modulus);
  return out;
}

Graph p4_join(const Graph& g, std::span<const Vertex> subset) {
  Graph h = disjoint_union(g, path_graph(4));
  const Vertex end = g.order();
  for (const Vertex u : subset) {
    if (u >= g.order()) throw std::invalid_argument("subset vertex out of range");
    h.add_edge(u, end);
  }
  return h;
}

ReductionOutcome p4_replacement_equiv(const Graph& g, std::span<const Vertex> subset,
                                      Modulus modulus) {
  ReductionOutcome out{"p4-join", g, p4_join(g, subset), false, false, ""};
  out.predicted = is_n_aw(complement(*out.transformed), modulus);
  out.direct = is_n_aw(complement(disjoint_union(g, path_graph(4))), modulus);
  return out;
}

std::vector<PathViolation> path_restriction_violations(const Graph& gbar) {
  std::vector<PathViolation> out;
  std::vector<VertexSet> one_mod_four;
  for (const VertexSet& comp : gbar.components()) {
    if (!is_path_component(gbar, comp)) continue;
    const std::size_t k = comp.size();
    if (k % 4 == 3) out.push_back({PathRule::kOrderThreeModFour, comp});
    if (k % 4 == 1) one_mod_four.push_back(comp);
    if (k > 4) out.push_back({PathRule::kLongPath, comp});
  }
  if (one_mod_four.size() >= 2) {
    for (VertexSet& comp : one_mod_four) out.push_back({PathRule::kRepeatedOneModFour, std::move(comp)});
  }
  return out;
}

bool path_rules_forbid(const std::vector<PathViolation>& violations) {
  return std::any_of(violations.begin(), violations.end(),
                     [](const PathViolation& v) { return v.rule != PathRule::kLongPath; });
}

std::string to_string(PathRule rule) {
  switch (rule) {
    case PathRule::kOrderThreeModFour:
      return "path-order-3-mod-4";
    case PathRule::kRepeatedOneModFour:
      return "repeated-path-order-1-mod-4";
    case PathRule::kLongPath:
      return "path-longer-than-4";
  }
  return "unknown";
}

ReductionOutcome pendant_graph_naw(const Graph& g, Modulus modulus) {
  if (!is_pendant_graph(g)) throw std::invalid_argument("graph is not a pendant graph");
  const auto n = static_cast<std::int64_t>(g.order());
  const auto m = static_cast<std::int64_t>(g.size());
  ReductionOutcome out{"pendant-complement", g, complement(g), false, false, ""};
  out.predicted = gcd_abs(2 * (n - m) - 1, modulus.value()) == 1;
  out.direct = is_n_aw(*out.transformed, modulus);
  out.detail = "2(n-m)-1 = " + std::to_string(2 * (n - m) - 1);
  return out;
}

ReductionOutcome subsetjoinaw_check(const Graph& g, Modulus modulus) {
  if (!has_pendant(g)) throw std::invalid_argument("graph has no pendant vertex");
  const LinearSystem system(adjacency_matrix(g, modulus));
  if (!is_invertible(system.matrix())) {
    throw std::invalid_argument("graph is not A-AW");
  }
  const ToggleCoset t1 = toggling_numbers(system, all_vertices(g.order()), 1);
  // A(G) invertible: the coset is a single value.
  const Residue t = t1.base;
  ReductionOutcome out{"aw-pendant-complement", g, complement(g), false, false, ""};
  out.predicted = std::gcd(modulus.add(1, t), modulus.value()) == 1;
  out.direct = is_n_aw(*out.transformed, modulus);
  out.detail = "t = " + std::to_string(t);
  return out;
}

ReductionOutcome pendantremove_dompen(const Graph& g, Vertex p, Modulus modulus) {
  if (p >= g.order() || g.degree(p) != 1) throw std::invalid_argument("vertex is not pendant");
  const auto v = static_cast<Vertex>(std::countr_zero(g.neighbors(p)));
  const VertexSet removed{p, v};
  ReductionOutcome out{"pendant-removal", g, g.without(removed), false, false, ""};
  out.predicted = is_a_aw(*out.transformed, modulus);
  out.direct = is_a_aw(g, modulus);
  return out;
}

PendantRemoveResult pendantremove_conditions(const Graph& g, Vertex p, Modulus modulus,
                                             const ConditionOptions& options) {
  if (p >= g.order() || g.degree(p) != 1) throw std::invalid_argument("vertex is not pendant");
  const std::size_t n = g.order();
  const std::int64_t ell = modulus.value();
  const LinearSystem system(adjacency_matrix(g, modulus));
  const VertexSet all = all_vertices(n);

  PendantRemoveResult out(modulus);
  out.direct = is_n_aw(complement(g), modulus);

  // Condition (a): every labeling has a winnable shift.
  std::uint64_t total = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < n && exhaustive; ++i) {
    if (total > options.exhaustive_limit / static_cast<std::uint64_t>(ell)) exhaustive = false;
    total *= static_cast<std::uint64_t>(ell);
  }
  exhaustive = exhaustive && total <= options.exhaustive_limit;
  out.condition_a = true;
  Labeling pi(n, 0);
  const auto check = [&]() {
    if (!exists_shift_winnable(system, pi)) {
      out.condition_a = false;
      out.counterexample = pi;
    }
  };
  if (exhaustive) {
    while (out.condition_a) {
      check();
      std::size_t i = 0;
      while (i < n && ++pi[i] == ell) pi[i++] = 0;
      if (i == n) break;
    }
  } else {
    if (options.sample_size == 0) {
      throw std::invalid_argument("too many labelings for an exhaustive scan; give a sample size");
    }
    out.sampled = true;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Residue> label(0, ell - 1);
    for (std::uint64_t k = 0; k < options.sample_size && out.condition_a; ++k) {
      for (auto& x : pi) x = label(rng);
      check();
    }
  }

  // Condition (b): (r + t) x = z + q is solvable for every z, some q in T(0).
  out.r = minimal_nonempty_r(system, all);
  const ToggleCoset tr = toggling_numbers(system, all, out.r);
  out.t = tr.empty ? 0 : tr.base;
  out.null_totals = toggling_numbers(system, all, 0);
  const std::int64_t step = std::gcd(modulus.add(out.r, out.t), ell);
  const auto members = out.null_totals.members();
  out.condition_b = true;
  for (Residue z = 0; z < ell && out.condition_b; ++z) {
    out.condition_b = std::any_of(members.begin(), members.end(), [&](Residue q) {
      return modulus.add(z, q) % step == 0;
    });
  }
  return out;
}

bool extdom_filter(const Graph& g) {
  bool dominating = false;
  for (Vertex v = 0; v < g.order(); ++v) dominating = dominating || g.degree(v) + 1 == g.order();
  if (!dominating) throw std::invalid_argument("graph has no dominating vertex");
  const Graph gbar = complement(g);
  for (Vertex p = 0; p < gbar.order(); ++p) {
    if (gbar.degree(p) != 1) continue;
    const auto v = static_cast<Vertex>(std::countr_zero(gbar.neighbors(p)));
    if (gbar.degree(v) != 1) return true;
  }
  return false;
}

ExtSwitchCheck extswitch_valid(const Graph& g, std::span<const Vertex> component,
                               const Graph& replacement, Modulus modulus) {
  VertexSet comp(component.begin(), component.end());
  std::sort(comp.begin(), comp.end());
  const auto comps = g.components();
  if (std::find(comps.begin(), comps.end(), comp) == comps.end()) {
    throw std::invalid_argument("vertex set is not a connected component");
  }
  if (!has_pendant(g)) throw std::invalid_argument("graph has no pendant vertex");

  const Graph c = g.induced(comp);
  ExtSwitchCheck out;
  out.component_aw = is_a_aw(c, modulus);
  out.replacement_aw = is_a_aw(replacement, modulus);
  out.same_order = c.order() == replacement.order();
  out.smaller_size = replacement.size() < c.size();
  out.same_toggling =
      toggling_numbers(adjacency_matrix(c, modulus), all_vertices(c.order()), 1) ==
      toggling_numbers(adjacency_matrix(replacement, modulus), all_vertices(replacement.order()), 1);
  out.switched = disjoint_union(g.without(comp), replacement);
  out.same_winnability =
      is_n_aw(complement(g), modulus) == is_n_aw(complement(out.switched), modulus);
  return out;
}

VertexSet cycle_order(const Graph& g, std::span<const Vertex> component) {
  if (!is_cycle_component(g, component)) throw std::invalid_argument("component is not a cycle");
  const Vertex start = *std::min_element(component.begin(), component.end());
  VertexSet out{start};
  Vertex prev = start;
  auto cur = static_cast<Vertex>(std::countr_zero(g.neighbors(start)));
  while (cur != start) {
    out.push_back(cur);
    const std::uint64_t next = g.neighbors(cur) & ~(std::uint64_t{1} << prev);
    prev = cur;
    cur = static_cast<Vertex>(std::countr_zero(next));
  }
  return out;
}

std::optional<NotSWinWitness> notswin_witness(const Graph& g, Modulus modulus) {
  if (modulus.value() % 2 != 0) throw std::invalid_argument("witness needs even ell");
  std::vector<VertexSet> cycles;
  for (const VertexSet& comp : g.components())
    if (is_cycle_component(g, comp)) cycles.push_back(cycle_order(g, comp));
  const auto even = std::find_if(cycles.begin(), cycles.end(),
                                 [](const VertexSet& c) { return c.size() % 2 == 0; });
  const VertexSet* chosen = nullptr;
  if (even != cycles.end()) {
    chosen = &*even;
  } else if (cycles.size() >= 2) {
    // lambda_{0,0} on the second cycle is the zero labeling there.
    chosen = &cycles.front();
  } else {
    return std::nullopt;
  }
  NotSWinWitness out;
  out.labeling.assign(g.order(), 0);
  out.labeling[chosen->front()] = 1;
  out.verified = !exists_shift_winnable(g, out.labeling, modulus).has_value();
  return out;
}

}  // namespace lightsout
