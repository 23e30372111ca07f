#include "lightsout/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "lightsout/game.hpp"
#include "lightsout/reductions.hpp"
#include "oracle.hpp"

namespace lightsout {

namespace {

class Checker {
 public:
  Checker(SuiteResult& result, std::size_t keep) : result_(result), keep_(keep) {}

  void check(bool ok, const std::function<Json()>& describe) {
    ++result_.checks;
    if (ok) return;
    ++result_.failures;
    if (result_.counterexamples.size() < keep_) result_.counterexamples.push_back(describe());
  }

 private:
  SuiteResult& result_;
  std::size_t keep_;
};

using Suite = std::function<void(Checker&, const VerifyOptions&)>;

std::string edges(const Graph& g) { return to_edge_list(g); }

Json vec_json(std::span<const Residue> v) { return Json(std::vector<Residue>(v.begin(), v.end())); }

VertexSet all_vertices(std::size_t n) {
  VertexSet v(n);
  std::iota(v.begin(), v.end(), Vertex{0});
  return v;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng() % 2 == 0) g.add_edge(u, v);
  return g;
}

Graph random_forest(std::mt19937_64& rng, std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v)
    if (rng() % 4 != 0) g.add_edge(v, rng() % v);
  return g;
}

VertexSet random_subset(std::mt19937_64& rng, std::size_t n) {
  VertexSet u;
  for (Vertex v = 0; v < n; ++v)
    if (rng() % 2 == 0) u.push_back(v);
  return u;
}

Graph union_of(std::initializer_list<Graph> parts) {
  Graph out(0);
  for (const Graph& g : parts) out = disjoint_union(out, g);
  return out;
}

bool oracle_n_aw(const Graph& g, std::int64_t ell) {
  return std::gcd(oracle::cofactor_det(oracle::neighborhood_table(g), ell), ell) == 1;
}

std::vector<std::int64_t> to_vector(const std::set<std::int64_t>& s) { return {s.begin(), s.end()}; }

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

// Every labeling of every small graph, both games: solver vs exhaustive toggling.
void suite_oracle(Checker& c, const VerifyOptions&) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      for (const std::int64_t ell : {2, 3, 4}) {
        const Modulus m(ell);
        for (const bool use_n : {true, false}) {
          const oracle::Table table = use_n ? oracle::neighborhood_table(g) : oracle::adjacency_table(g);
          // Exhaustive image: every toggle vector applied to the zero labeling.
          std::size_t total = 1;
          for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(ell);
          std::vector<bool> image(total, false);
          oracle::for_each_vector(n, ell, [&](const oracle::Vec& x) {
            image[oracle::encode(oracle::apply(table, x, ell), ell)] = true;
          });
          const LinearSystem system(use_n ? neighborhood_matrix(g, m) : adjacency_matrix(g, m));
          oracle::for_each_vector(n, ell, [&](const oracle::Vec& b) {
            oracle::Vec neg(b.size());
            for (std::size_t i = 0; i < b.size(); ++i) neg[i] = oracle::mod(-b[i], ell);
            const bool brute = image[oracle::encode(neg, ell)];
            const auto cert = winnable(system, b);
            bool ok = cert.has_value() == brute;
            if (ok && cert) {
              const Labeling after = apply_toggles(system.matrix(), b, *cert);
              ok = std::all_of(after.begin(), after.end(), [](Residue r) { return r == 0; });
            }
            c.check(ok, [&] {
              return Json{{"graph", edges(g)}, {"ell", ell}, {"game", use_n ? "neighborhood" : "adjacency"},
                          {"labeling", b}, {"solver", cert.has_value()}, {"brute_force", brute}};
            });
          });
        }
      }
    }
  }
}

void suite_twins(Checker& c, const VerifyOptions&) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const Graph& g : oracle::all_graphs(n))
      for (const std::int64_t ell : {2, 3, 4, 6}) {
        const Modulus m(ell);
        for (const bool use_n : {true, false}) {
          const ZModMatrix mat = use_n ? neighborhood_matrix(g, m) : adjacency_matrix(g, m);
          const auto twins = find_twins(mat);
          if (twins.empty()) continue;
          const bool det_unit = std::gcd(oracle::cofactor_det(oracle::to_table(mat), ell), ell) == 1;
          c.check(!is_invertible(mat) && !det_unit, [&] {
            return Json{{"graph", edges(g)}, {"ell", ell}, {"game", use_n ? "neighborhood" : "adjacency"},
                        {"twin", {twins[0].first, twins[0].second}}};
          });
        }
      }
}

void suite_dominating(Checker& c, const VerifyOptions&) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const Graph& g : oracle::all_graphs(n))
      for (std::int64_t ell = 2; ell <= 6; ++ell) {
        const auto out = dominating_reduction(g, Modulus(ell));
        const bool direct = oracle_n_aw(*out.transformed, ell);
        c.check(out.agree() && out.direct == direct, [&] {
          return Json{{"graph", edges(g)}, {"ell", ell}, {"a_aw", out.predicted}, {"complement_union_n_aw", direct}};
        });
      }
}

void suite_p4_join(Checker& c, const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 1 + rng() % 4);
    const VertexSet u = random_subset(rng, g.order());
    const std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 3);
    const auto out = p4_replacement_equiv(g, u, Modulus(ell));
    const bool joined = oracle_n_aw(complement(*out.transformed), ell);
    const bool plain = oracle_n_aw(complement(disjoint_union(g, path_graph(4))), ell);
    c.check(out.agree() && out.predicted == joined && out.direct == plain, [&] {
      return Json{{"graph", edges(g)}, {"subset", u}, {"ell", ell}, {"joined", joined}, {"plain", plain}};
    });
  }
}

void suite_path_restrictions(Checker& c, const VerifyOptions&) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& gbar : oracle::all_graphs(n)) {
      const auto violations = path_restriction_violations(gbar);
      if (!path_rules_forbid(violations)) continue;
      for (std::int64_t ell = 2; ell <= 6; ++ell) {
        const bool aw = is_n_aw(complement(gbar), Modulus(ell)) || complement_is_n_aw(gbar, ell);
        c.check(!aw, [&] {
          return Json{{"complement", edges(gbar)}, {"ell", ell}, {"rule", to_string(violations[0].rule)}};
        });
      }
    }
}

void suite_divisibility(Checker& c, const VerifyOptions& options) {
  const auto check_one = [&](const ZModMatrix& mat, const VertexSet& u) {
    const std::int64_t ell = mat.modulus().value();
    const Residue r = minimal_nonempty_r(mat, u);
    const std::int64_t step = r == 0 ? ell : r;
    const oracle::Table table = oracle::to_table(mat);
    bool ok = ell % step == 0;
    for (Residue s = 0; s < ell && ok; ++s) {
      const ToggleCoset t = toggling_numbers(mat, u, s);
      const auto brute = oracle::toggle_set(table, u, s, ell);
      ok = t.members() == to_vector(brute) && (!t.empty == (s % step == 0));
    }
    c.check(ok, [&] { return Json{{"matrix", table}, {"subset", u}, {"ell", ell}, {"r", r}}; });
  };
  // Exhaustive over small graphs and subsets.
  for (std::size_t n = 1; n <= 3; ++n)
    for (const Graph& g : oracle::all_graphs(n))
      for (std::int64_t ell = 2; ell <= 6; ++ell)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          VertexSet u;
          for (Vertex v = 0; v < n; ++v)
            if ((mask >> v) & 1U) u.push_back(v);
          check_one(neighborhood_matrix(g, Modulus(ell)), u);
          check_one(adjacency_matrix(g, Modulus(ell)), u);
        }
  // Random matrices up to order 4.
  std::mt19937_64 rng(options.seed);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 5);
    ZModMatrix mat(n, n, Modulus(ell));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mat.set(i, j, static_cast<std::int64_t>(rng() % ell));
    check_one(mat, random_subset(rng, n));
  }
}

void suite_pendant_transfer(Checker& c, const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  int tested = 0;
  while (tested < 80) {
    const Graph g = random_graph(rng, 2 + rng() % 5);
    const auto pend = pendant_vertices(g);
    if (pend.empty()) continue;
    ++tested;
    const std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 3);
    const Modulus m(ell);
    const Vertex p = pend[rng() % pend.size()];
    const Residue s = static_cast<Residue>(rng() % ell);
    const auto table = oracle::adjacency_table(g);
    const VertexSet all = all_vertices(g.order());
    const auto t = noU_transfer(g, p, s, m);
    c.check(t.holds() && t.whole.members() == to_vector(oracle::toggle_set(table, all, s, ell)), [&] {
      return Json{{"graph", edges(g)}, {"pendant", p}, {"s", s}, {"ell", ell},
                  {"whole", t.whole.to_string()}, {"reduced", t.reduced.to_string()}};
    });
    Labeling pi(g.order());
    for (auto& x : pi) x = static_cast<Residue>(rng() % ell);
    const auto lt = pendant_labeling_transfer(g, p, pi, m);
    c.check(lt.holds() && lt.whole.members() == to_vector(oracle::toggle_set_for(table, all, pi, ell)), [&] {
      return Json{{"graph", edges(g)}, {"pendant", p}, {"labeling", pi}, {"ell", ell},
                  {"whole", lt.whole.to_string()}, {"reduced", lt.reduced.to_string()}};
    });
  }
  // Larger pendant graphs, both sides from the solver.
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = corona_pendant(random_graph(rng, 1 + rng() % 6));
    const std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 7);
    const Modulus m(ell);
    const auto pend = pendant_vertices(g);
    const Vertex p = pend[rng() % pend.size()];
    const Residue s = static_cast<Residue>(rng() % ell);
    const auto t = noU_transfer(g, p, s, m);
    c.check(t.holds(), [&] { return Json{{"graph", edges(g)}, {"pendant", p}, {"s", s}, {"ell", ell}}; });
  }
}

void suite_pendant_removal(Checker& c, const VerifyOptions&) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const Graph& g : oracle::all_graphs(n))
      for (const Vertex p : pendant_vertices(g))
        for (const std::int64_t ell : {2, 4}) {
          const Modulus m(ell);
          const auto r = pendantremove_conditions(g, p, m);
          const bool direct = oracle_n_aw(complement(g), ell);
          c.check(r.agree() && r.direct == direct, [&] {
            return Json{{"graph", edges(g)}, {"pendant", p}, {"ell", ell}, {"condition_a", r.condition_a},
                        {"condition_b", r.condition_b}, {"complement_n_aw", direct}};
          });
          const auto d = pendantremove_dompen(g, p, m);
          c.check(d.agree(), [&] {
            return Json{{"graph", edges(g)}, {"pendant", p}, {"ell", ell}, {"rule", d.rule},
                        {"predicted", d.predicted}, {"direct", d.direct}};
          });
        }
}

void suite_aw_pendant(Checker& c, const VerifyOptions&) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const Graph& g : oracle::all_graphs(n)) {
      if (pendant_vertices(g).empty()) continue;
      for (const std::int64_t ell : {2, 3, 4, 6}) {
        const Modulus m(ell);
        if (!is_a_aw(g, m)) continue;
        const auto out = subsetjoinaw_check(g, m);
        c.check(out.agree(), [&] {
          return Json{{"graph", edges(g)}, {"ell", ell}, {"detail", out.detail}, {"predicted", out.predicted}};
        });
      }
    }
}

void suite_pendant_toggling(Checker& c, const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = corona_pendant(random_graph(rng, 1 + rng() % 6));
    const std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 7);
    const Modulus m(ell);
    const auto n = static_cast<std::int64_t>(g.order());
    const auto size = static_cast<std::int64_t>(g.size());
    const auto t = toggling_numbers(adjacency_matrix(g, m), all_vertices(g.order()), 1);
    bool ok = is_invertible(adjacency_matrix(g, m)) && t == ToggleCoset::make(m, 2 * (size - n), 0);
    if (ok && g.order() <= 6 && ell <= 4) {
      ok = t.members() == to_vector(oracle::toggle_set(oracle::adjacency_table(g), all_vertices(g.order()), 1, ell));
    }
    c.check(ok, [&] { return Json{{"graph", edges(g)}, {"ell", ell}, {"toggling", t.to_string()}}; });
  }
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = corona_pendant(random_forest(rng, 1 + rng() % 6));
    const std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 7);
    const Modulus m(ell);
    const auto comps = static_cast<std::int64_t>(g.components().size());
    const auto t = toggling_numbers(adjacency_matrix(g, m), all_vertices(g.order()), 1);
    c.check(t == ToggleCoset::make(m, -2 * comps, 0),
            [&] { return Json{{"graph", edges(g)}, {"ell", ell}, {"toggling", t.to_string()}}; });
  }
}

void suite_pendant_complement(Checker& c, const VerifyOptions& options) {
  for (std::size_t h = 1; h <= 4; ++h)
    for (const Graph& core : oracle::all_graphs(h))
      for (std::int64_t ell = 2; ell <= 10; ++ell) {
        const Graph g = corona_pendant(core);
        const auto out = pendant_graph_naw(g, Modulus(ell));
        const bool bareiss = complement_is_n_aw(g, ell);
        c.check(out.agree() && out.direct == bareiss, [&] {
          return Json{{"graph", edges(g)}, {"ell", ell}, {"detail", out.detail}, {"predicted", out.predicted}};
        });
      }
  std::mt19937_64 rng(options.seed);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = corona_pendant(random_graph(rng, 1 + rng() % 6));
    const std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 11);
    const auto out = pendant_graph_naw(g, Modulus(ell));
    c.check(out.agree() && out.direct == complement_is_n_aw(g, ell), [&] {
      return Json{{"graph", edges(g)}, {"ell", ell}, {"detail", out.detail}, {"predicted", out.predicted}};
    });
  }
}

void suite_pendant_forests(Checker& c, const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph gbar = corona_pendant(random_forest(rng, 1 + rng() % 6));
    const std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 11);
    const auto comps = static_cast<std::int64_t>(gbar.components().size());
    const bool predicted = std::gcd(2 * comps - 1, ell) == 1;
    const bool direct = is_n_aw(complement(gbar), Modulus(ell));
    c.check(predicted == direct && direct == complement_is_n_aw(gbar, ell), [&] {
      return Json{{"complement", edges(gbar)}, {"ell", ell}, {"components", comps}, {"predicted", predicted},
                  {"direct", direct}};
    });
  }
}

struct Replacement {
  std::string name;
  Graph replacement;
};

std::vector<Replacement> replacements() {
  const Graph p2 = path_graph(2);
  const Graph p4 = path_graph(4);
  const Graph p3k1 = corona_pendant(path_graph(3));
  return {{"G1", p4},
          {"G2", p3k1},
          {"G3", p3k1},
          {"G4", disjoint_union(p4, p2)},
          {"G5", disjoint_union(p4, p4)},
          {"G6", p3k1},
          {"G7", disjoint_union(p4, p2)},
          {"G8", union_of({p4, p2, p2})}};
}

void suite_component_switch(Checker& c, const VerifyOptions&) {
  for (const auto& [name, replacement] : replacements()) {
    const Graph comp = named_graph(name);
    const Graph g = disjoint_union(comp, path_graph(2));
    const VertexSet vertices = all_vertices(comp.order());
    for (const std::int64_t ell : {2, 3, 4, 5, 6, 30}) {
      const auto out = extswitch_valid(g, vertices, replacement, Modulus(ell));
      c.check(out.valid() && out.same_winnability, [&] {
        return Json{{"component", name}, {"replacement", edges(replacement)}, {"ell", ell},
                    {"component_aw", out.component_aw}, {"replacement_aw", out.replacement_aw},
                    {"same_toggling", out.same_toggling}, {"same_order", out.same_order},
                    {"smaller_size", out.smaller_size}, {"same_winnability", out.same_winnability}};
      });
    }
  }
}

void suite_degree_prune(Checker& c, const VerifyOptions& options) {
  for (const std::size_t n : {4, 6, 8})
    for (const std::int64_t ell : {2, 3, 4, 5, 6, 10, 15, 30, 210}) {
      SearchOptions pruned;
      pruned.jobs = options.jobs;
      SearchOptions plain = pruned;
      plain.prune = false;
      const auto a = max_size_search(n, ell, pruned);
      const auto b = max_size_search(n, ell, plain);
      c.check(a.max_size == b.max_size && a.extremal_graphs == b.extremal_graphs &&
                  a.labelled_count == b.labelled_count,
              [&] {
                return Json{{"n", n}, {"ell", ell}, {"pruned", to_json(a)}, {"unpruned", to_json(b)}};
              });
    }
}

std::map<std::pair<std::size_t, std::int64_t>, std::vector<bool>> cycle_images() {
  std::map<std::pair<std::size_t, std::int64_t>, std::vector<bool>> out;
  for (std::size_t k = 3; k <= 9; ++k)
    for (const std::int64_t ell : {2, 4, 6})
      out[{k, ell}] = oracle::image_bitmap(oracle::adjacency_table(cycle_graph(k)), ell);
  return out;
}

void suite_lambda(Checker& c, const VerifyOptions&) {
  for (const auto& [key, image] : cycle_images()) {
    const auto [k, ell] = key;
    const Modulus m(ell);
    for (Residue a = 0; a < ell; ++a)
      for (Residue b = 0; b < ell; ++b) {
        const Labeling lambda = lambda_labeling(k, a, b, m);
        const bool brute = image[oracle::encode(lambda, ell)];
        const bool closed = cycle_lambda_winnable(k, a, b, m);
        c.check(brute == closed, [&] {
          return Json{{"k", k}, {"ell", ell}, {"a", a}, {"b", b}, {"closed_form", closed}, {"brute_force", brute}};
        });
      }
  }
}

void suite_lambda_shift(Checker& c, const VerifyOptions&) {
  for (const auto& [key, image] : cycle_images()) {
    const auto [k, ell] = key;
    const Modulus m(ell);
    for (Residue a = 0; a < ell; ++a)
      for (Residue b = 0; b < ell; ++b)
        for (Residue s = 0; s < ell; ++s) {
          const Labeling shifted = shift_labeling(lambda_labeling(k, a, b, m), s, m);
          const auto [a2, b2] = cycle_shift_canonical(k, a, b, s, m);
          const Labeling target = lambda_labeling(k, a2, b2, m);
          oracle::Vec diff(k);
          for (std::size_t i = 0; i < k; ++i) diff[i] = oracle::mod(target[i] - shifted[i], ell);
          c.check(image[oracle::encode(diff, ell)], [&] {
            return Json{{"k", k}, {"ell", ell}, {"a", a}, {"b", b}, {"s", s}, {"claimed", {a2, b2}}};
          });
        }
  }
}

void suite_no_shift(Checker& c, const VerifyOptions&) {
  const std::vector<std::pair<Graph, bool>> cases = {
      {cycle_graph(4), true},
      {cycle_graph(6), true},
      {disjoint_union(cycle_graph(4), path_graph(2)), true},
      {disjoint_union(cycle_graph(6), path_graph(2)), true},
      {disjoint_union(cycle_graph(3), cycle_graph(3)), true},
      {disjoint_union(cycle_graph(3), cycle_graph(5)), true},
      {union_of({cycle_graph(3), cycle_graph(3), path_graph(2)}), true},
      {disjoint_union(cycle_graph(3), cycle_graph(4)), true},
      {disjoint_union(cycle_graph(5), path_graph(2)), false},
      {cycle_graph(3), false},
      {path_graph(4), false},
  };
  for (const auto& [g, expected] : cases)
    for (const std::int64_t ell : {2, 4, 6}) {
      const Modulus m(ell);
      const auto w = notswin_witness(g, m);
      bool ok = w.has_value() == expected;
      if (ok && w) {
        const auto image = oracle::image_bitmap(oracle::adjacency_table(g), ell);
        ok = w->verified;
        for (Residue s = 0; s < ell && ok; ++s) ok = !image[oracle::encode(shift_labeling(w->labeling, s, m), ell)];
      }
      c.check(ok, [&] {
        Json j{{"graph", edges(g)}, {"ell", ell}, {"expected_witness", expected}};
        if (w) j["labeling"] = vec_json(w->labeling);
        return j;
      });
    }
}

void suite_max_degree_two(Checker& c, const VerifyOptions& options) {
  SearchOptions search;
  search.jobs = options.jobs;
  for (const std::size_t n : {4, 6, 8})
    for (const std::int64_t ell : {2, 4, 6, 8, 10, 12, 14, 30}) {
      const auto check = verify_conjecture(n, ell, search);
      c.check(check.max_degree_two_components == true && check.ok(), [&] {
        return Json{{"n", n}, {"ell", ell}, {"report", to_json(check.report)}};
      });
    }
}

void suite_extremal(Checker& c, const VerifyOptions& options) {
  SearchOptions search;
  search.jobs = options.jobs;
  const auto expect = [&](std::size_t n, std::int64_t ell, const SearchOptions& opts, std::size_t max,
                          const std::vector<Graph>& graphs, bool exact) {
    const auto r = max_size_search(n, ell, opts);
    std::vector<std::string> keys;
    for (const Graph& g : graphs) keys.push_back(canonical_graph6(g));
    std::sort(keys.begin(), keys.end());
    bool ok = r.max_size == max && r.agree;
    if (exact) {
      ok = ok && r.extremal_graphs == keys;
    } else {
      for (const auto& key : keys)
        ok = ok && std::find(r.extremal_graphs.begin(), r.extremal_graphs.end(), key) != r.extremal_graphs.end();
    }
    c.check(ok, [&] { return Json{{"expected_max", max}, {"expected", keys}, {"report", to_json(r)}}; });
  };
  for (const std::size_t n : {3, 5, 7})
    for (std::int64_t ell = 2; ell <= 6; ++ell)
      expect(n, ell, search, choose2(n) - n / 2, {complement(matching_graph(n))}, true);
  expect(4, 2, search, 4, {cycle_graph(4)}, true);
  expect(6, 4, search, 12, {complement(matching_graph(6))}, true);
  expect(6, 5, search, 11, {complement(union_of({cycle_graph(3), path_graph(2), empty_graph(1)}))}, false);
  expect(4, 6, search, 3, {path_graph(4)}, true);
  expect(6, 10, search, 11, {complement(disjoint_union(path_graph(4), path_graph(2)))}, true);
  expect(6, 30, search, 10, {complement(corona_pendant(path_graph(3)))}, true);
  SearchOptions capped = search;
  capped.complement_cap = 7;
  expect(8, 210, capped, 21,
         {complement(disjoint_union(corona_pendant(cycle_graph(3)), path_graph(2))),
          complement(corona_pendant(path_graph(4))), complement(corona_pendant(star_graph(3)))},
         true);
  // Sandwich bounds and agreement with the closed forms.
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::int64_t ell = 2; ell <= 12; ++ell) {
      const auto check = verify_conjecture(n, ell, search);
      c.check(check.ok(), [&] {
        Json j{{"n", n}, {"ell", ell}, {"sandwich", check.sandwich}, {"report", to_json(check.report)}};
        if (!check.non_pendant.empty()) j["non_pendant"] = check.non_pendant;
        return j;
      });
    }
}

struct AppendixEntry {
  std::string name;
  std::vector<std::int64_t> toggles;
  std::int64_t total;
};

const std::vector<AppendixEntry>& appendix_entries() {
  static const std::vector<AppendixEntry> entries = {
      {"G1", {0, -1, -1, 0}, -2},
      {"G2", {0, -1, -1, 0, 0, 0}, -2},
      {"G3", {0, -1, -1, 0, 0, 0}, -2},
      {"G4", {1, 0, -1, -1, -1, -2}, -4},
      {"G5", {0, -1, -1, 0, 0, 0, -1, -1}, -4},
      {"G6", {1, -1, -1, 0, -1, 0}, -2},
      {"G7", {-2, -1, 1, 0, -1, -1}, -4},
      {"G8", {-2, -1, 1, 0, -1, -1, -1, -1}, -6},
  };
  return entries;
}

void suite_appendix(Checker& c, const VerifyOptions&) {
  for (const auto& entry : appendix_entries()) {
    const Graph g = named_graph(entry.name);
    for (const std::int64_t ell : {2, 3, 5, 6}) {
      const Modulus m(ell);
      const ZModMatrix a = adjacency_matrix(g, m);
      const Labeling ones(g.order(), 1);
      const auto x = winnable(a, ones);
      std::vector<Residue> expected;
      for (const auto t : entry.toggles) expected.push_back(m.reduce(t));
      const auto t1 = toggling_numbers(a, all_vertices(g.order()), 1);
      const bool ok = is_invertible(a) && x && *x == expected && t1 == ToggleCoset::make(m, entry.total, 0);
      c.check(ok, [&] {
        Json j{{"graph", entry.name}, {"ell", ell}, {"expected_toggles", expected}, {"toggling", t1.to_string()}};
        if (x) j["toggles"] = vec_json(*x);
        return j;
      });
    }
  }
}

struct SuiteEntry {
  std::string name;
  std::string description;
  Suite run;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries = {
      {"oracle", "solver winnability vs exhaustive toggling, n <= 4, ell in {2,3,4}, both games", suite_oracle},
      {"twins", "twin rows or columns force a singular matrix", suite_twins},
      {"thm-2-4", "complement(G + K1) is N-AW iff G is A-AW", suite_dominating},
      {"thm-3-1", "joining a P4 end to U preserves N-AW of the complement", suite_p4_join},
      {"cor-3-2", "path-component obstructions in the complement are sound", suite_path_restrictions},
      {"lemma-3-4", "minimal nonempty r divides ell and T(s) is nonempty iff r | s", suite_divisibility},
      {"lemma-3-5", "pendant transfer of toggling numbers", suite_pendant_transfer},
      {"thm-3-6", "pendant-removal conditions vs direct N-AW of the complement", suite_pendant_removal},
      {"cor-3-7", "A-AW graph with a pendant: complement N-AW iff gcd(1 + t, ell) = 1", suite_aw_pendant},
      {"lemma-3-9", "pendant graphs have T(1) = {2(m - n)}; pendant forests {-2c}", suite_pendant_toggling},
      {"lemma-3-10", "pendant graph complement N-AW iff gcd(2(n - m) - 1, ell) = 1", suite_pendant_complement},
      {"cor-3-11", "complement of a pendant forest with c trees is N-AW iff gcd(2c - 1, ell) = 1",
       suite_pendant_forests},
      {"cor-3-12", "replacement components satisfy the switch hypotheses", suite_component_switch},
      {"lemma-4-6", "degree pruning leaves the extremal set unchanged", suite_degree_prune},
      {"lemma-4-7", "closed-form winnability of lambda labelings on cycles", suite_lambda},
      {"lemma-4-8", "shifted lambda labelings reduce to the stated lambda labelings", suite_lambda_shift},
      {"lemma-4-9", "cycle components yield labelings with no winnable shift", suite_no_shift},
      {"thm-4-10", "even-even extremal complements with max degree 2 use only P2 and P4", suite_max_degree_two},
      {"props-4-x", "extremal sizes and graphs for the closed-form cases", suite_extremal},
      {"appendix", "toggle tables and T(1) of the replacement components", suite_appendix},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(std::string_view name, const VerifyOptions& options) {
  for (const auto& entry : registry()) {
    if (entry.name != name) continue;
    SuiteResult result;
    result.name = entry.name;
    result.description = entry.description;
    Checker checker(result, options.max_counterexamples);
    entry.run(checker, options);
    return result;
  }
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

std::vector<SuiteResult> run_suites(std::string_view name, const VerifyOptions& options) {
  if (name != "all") return {run_suite(name, options)};
  std::vector<SuiteResult> out;
  for (const auto& suite : suite_names()) out.push_back(run_suite(suite, options));
  return out;
}

Json to_json(const SuiteResult& result) {
  Json j;
  j["suite"] = result.name;
  j["description"] = result.description;
  j["checks"] = result.checks;
  j["failures"] = result.failures;
  j["passed"] = result.passed();
  j["counterexamples"] = result.counterexamples;
  return j;
}

}  // namespace lightsout
