// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "lightsout/extremal.hpp"
#include "lightsout/report.hpp"
#include "lightsout/verify.hpp"

using namespace lightsout;

namespace {

Graph union_of(std::initializer_list<Graph> parts) {
  Graph out(0);
  for (const Graph& g : parts) out = disjoint_union(out, g);
  return out;
}

std::vector<std::string> keys(const std::vector<Graph>& graphs) {
  std::vector<std::string> out;
  for (const Graph& g : graphs) out.push_back(canonical_graph6(g));
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<std::string>& set, const std::string& key) {
  return std::find(set.begin(), set.end(), key) != set.end();
}

bool extremal_is(std::size_t n, std::int64_t ell, std::size_t max, const std::vector<Graph>& graphs,
                 const SearchOptions& options = {}) {
  const ExtremalReport r = max_size_search(n, ell, options);
  const bool ok = r.max_size == max && r.extremal_graphs == keys(graphs);
  if (!ok) std::cerr << to_json(r).dump() << "\n";
  return ok;
}

bool suites_pass(std::initializer_list<const char*> names) {
  bool ok = true;
  for (const char* name : names) {
    const SuiteResult r = run_suite(name);
    if (!r.passed()) std::cerr << to_json(r).dump() << "\n";
    ok = ok && r.passed();
  }
  return ok;
}

bool full_search_unique_matching() {
  for (const std::size_t n : {3, 5, 7})
    for (std::int64_t ell = 2; ell <= 6; ++ell)
      if (!extremal_is(n, ell, n * (n - 1) / 2 - n / 2, {complement(matching_graph(n))})) return false;
  return true;
}

bool even_order_matching() {
  return extremal_is(4, 2, 4, {cycle_graph(4)}) && extremal_is(6, 4, 12, {complement(matching_graph(6))});
}

bool triangle_family() {
  const ExtremalReport r = max_size_search(6, 5, {});
  const std::string tri = canonical_graph6(complement(union_of({cycle_graph(3), path_graph(2), empty_graph(1)})));
  return r.max_size == 11 && contains(r.extremal_graphs, tri);
}

bool one_p4() {
  return extremal_is(4, 6, 3, {path_graph(4)}) &&
         extremal_is(6, 10, 11, {complement(disjoint_union(path_graph(4), path_graph(2)))});
}

bool two_excess() { return extremal_is(6, 30, 10, {complement(corona_pendant(path_graph(3)))}); }

bool three_excess_bounded() {
  SearchOptions options;
  options.complement_cap = 7;
  return extremal_is(8, 210, 21,
                     {complement(disjoint_union(corona_pendant(cycle_graph(3)), path_graph(2))),
                      complement(corona_pendant(path_graph(4))), complement(corona_pendant(star_graph(3)))},
                     options);
}

bool deterministic_reports() {
  const std::vector<std::pair<std::size_t, std::int64_t>> cases = {{5, 4}, {6, 30}, {7, 6}, {8, 6}, {8, 210}};
  for (const auto& [n, ell] : cases) {
    SearchOptions one;
    SearchOptions eight;
    eight.jobs = 8;
    if (n == 8 && ell == 210) one.complement_cap = eight.complement_cap = 7;
    const std::string a = make_report("maxsize", {{"n", n}}, to_json(max_size_search(n, ell, one)), 1).dump(2);
    const std::string b = make_report("maxsize", {{"n", n}}, to_json(max_size_search(n, ell, eight)), 1).dump(2);
    if (a != b) return false;
  }
  VerifyOptions one;
  VerifyOptions eight;
  eight.jobs = 8;
  return to_json(run_suite("lemma-4-6", one)).dump() == to_json(run_suite("lemma-4-6", eight)).dump();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
      {"oracle equivalence, n <= 4, both games, ell in {2,3,4}", [] { return suites_pass({"oracle"}); }},
      {"odd n: unique extremal graph is the matching complement", full_search_unique_matching},
      {"even n, gcd(n-1, ell) = 1: (4,2) -> C4, (6,4) -> complement(M6)", even_order_matching},
      {"(6,5): max 11 with complement(C3 u P2 u K1) extremal", triangle_family},
      {"(4,6) -> P4 and (6,10) -> complement(P4 u P2), unique", one_p4},
      {"(6,30): max 10, extremal set {complement(P3 o K1)}", two_excess},
      {"(8,210) bounded by 7: max 21, three pendant complements", three_excess_bounded},
      {"replacement components: toggle tables and T(1)", [] { return suites_pass({"appendix"}); }},
      {"lambda labelings on cycles: closed forms vs brute force",
       [] { return suites_pass({"lemma-4-7", "lemma-4-8"}); }},
      {"P4 join sweep: 100 random (G, U)", [] { return suites_pass({"thm-3-1"}); }},
      {"pendant removal conditions, n <= 5, ell in {2,4}", [] { return suites_pass({"thm-3-6"}); }},
      {"toggling-number property suites",
       [] {
         return suites_pass({"lemma-3-4", "lemma-3-5", "cor-3-7", "lemma-3-9", "lemma-3-10", "cor-3-11"});
       }},
      {"reports identical for 1 and 8 jobs", deterministic_reports},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      std::cerr << "exception: " << e.what() << "\n";
    }
    std::cout << (ok ? "PASS " : "FAIL ") << (i + 1) << " " << criteria[i].first << std::endl;
    if (!ok) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
